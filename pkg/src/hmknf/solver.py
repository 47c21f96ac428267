"""DPLL search over partitions, model checking, and guess-and-verify enumeration."""

from __future__ import annotations

from dataclasses import dataclass, field

from hmknf.kb import KnowledgeBase, Partition
from hmknf.kernels import bits
from hmknf.propagation import propagate
from hmknf.unfounded import SizeGuardError

BRUTE_FORCE_LIMIT = 20


@dataclass
class SolveStats:
    decisions: int = 0
    conflicts: int = 0
    checks: int = 0


@dataclass(frozen=True)
class SolveOutcome:
    found: bool
    models: tuple[Partition, ...] = ()
    stats: SolveStats = field(default_factory=SolveStats)


def _check_model_masks(k: KnowledgeBase, t: int, f: int) -> bool:
    oracle = k.oracle
    if not oracle.consistent(t):
        return False
    # every K-atom entailed by OB_T must be in T
    if oracle.closure(t) & f:
        return False
    for r in k.rules:
        if not r.pos_mask & ~t and not r.neg_mask & ~f and not r.head_mask & t:
            return False
    # minimality: no S ⊆ T whose models strictly extend M and still satisfy the rules
    # (negative bodies are evaluated against M, i.e. against F)
    relevant = [r for r in k.rules if not r.neg_mask & ~f]
    sub = 0
    while sub != t:
        known = oracle.closure(sub)
        if t & ~known:
            if all(r.pos_mask & ~known or r.head_mask & known for r in relevant):
                return False
        sub = (sub - t) & t
    return True


def check_model(k: KnowledgeBase, p: Partition) -> bool:
    """Whether ``{I | I ⊨ OB_T}`` is an MKNF model of ``k``.  ``p`` must be total."""
    if p.decided != k.ka:
        raise ValueError("check_model needs a total partition of KA(K)")
    return _check_model_masks(k, p.tmask, p.fmask)


def solve(k: KnowledgeBase, p: Partition | None = None, all_models: bool = False) -> SolveOutcome:
    """Propagate, branch on the smallest undecided atom (true first), check total partitions."""
    p = p or Partition()
    if not p.decided <= k.ka:
        raise ValueError("partition mentions atoms outside KA(K)")
    stats = SolveStats()
    models: list[Partition] = []

    def search(current: Partition) -> bool:
        result = propagate(k, current)
        if result.conflict is not None:
            stats.conflicts += 1
            return False
        node = result.partition
        undecided = k.ka_mask & ~(node.tmask | node.fmask)
        if not undecided:
            stats.checks += 1
            if _check_model_masks(k, node.tmask, node.fmask):
                assert node not in models, "branches are disjoint"
                models.append(node)
                return True
            return False
        atom = next(bits(undecided))
        stats.decisions += 1
        found = search(Partition(node.t | {atom}, node.f))
        if found and not all_models:
            return True
        return search(Partition(node.t, node.f | {atom})) or found

    search(p)
    return SolveOutcome(bool(models), tuple(models), stats)


def brute_force_models(k: KnowledgeBase) -> list[Partition]:
    """Check every total partition; ordered by the true set read as a bitmask."""
    if len(k.ka) > BRUTE_FORCE_LIMIT:
        raise SizeGuardError(f"brute force is limited to {BRUTE_FORCE_LIMIT} K-atoms")
    ka = k.ka_mask
    out = []
    t = 0
    while True:
        if _check_model_masks(k, t, ka & ~t):
            out.append(Partition.from_masks(t, ka & ~t))
        if t == ka:
            break
        t = (t - ka) & ka
    return out
