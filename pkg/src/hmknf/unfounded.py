"""Unfounded sets: exact head-cut machinery and the polynomial approximation.

The exact routines enumerate head-cuts and are exponential in the number of
rules; they refuse head-cut spaces above ``HEADCUT_LIMIT``.  ``atmost`` and
``unfounded_approx`` are polynomial (modulo ontology calls).

A head-cut R *defeats* the unfoundedness of ``a`` w.r.t. X when
``head(R) ∪ OB_T ⊨ a``, ``(T ∪ head(R), F)`` is dependable, and no pair
``(r, h)`` of R has ``body⁺(r) ∩ (F ∪ X) ≠ ∅``, ``body⁻(r) ∩ T ≠ ∅`` or
``head(r) ∩ T ≠ ∅``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import prod

from hmknf import kernels
from hmknf.kb import HeadCut, KnowledgeBase, Partition
from hmknf.kernels import bits, to_mask

HEADCUT_LIMIT = 1 << 24


class SizeGuardError(ValueError):
    """The instance is too large for an exponential desk-scale oracle."""


@dataclass(frozen=True)
class UnfoundedReport:
    set: frozenset[int]
    exact: bool
    witness: HeadCut | None = None
    dependable: bool = True


@dataclass(frozen=True)
class Verdict:
    """Answer of the membership test; falsy answers carry a defeating head-cut."""

    holds: bool
    witness: HeadCut | None = None

    def __bool__(self):
        return self.holds


def _check_partition(k: KnowledgeBase, p: Partition) -> None:
    if not p.decided <= k.ka:
        raise ValueError("partition mentions atoms outside KA(K)")


def headcut_space(k: KnowledgeBase) -> int:
    return prod(1 + len(r.head) for r in k.rules)


def _guard(k: KnowledgeBase) -> None:
    space = headcut_space(k)
    if space > HEADCUT_LIMIT:
        raise SizeGuardError(f"head-cut space {space} exceeds the limit {HEADCUT_LIMIT}")


def _rule_can_support(rule, t: int, f: int) -> bool:
    # a pair on any other rule always satisfies one of the defeating conditions
    return not (rule.neg_mask & t or rule.head_mask & t or rule.pos_mask & f)


def constraints(k: KnowledgeBase, p: Partition, backend: str | None = None) -> list[tuple[int, int]]:
    """``(entailed, body)`` masks of every head-cut that can ever support an atom.

    X is unfounded iff for each pair, ``X ∩ entailed ≠ ∅`` implies
    ``X ∩ body ≠ ∅``.  Only meaningful for dependable partitions.
    """
    key = ("constraints", p.tmask, p.fmask, backend)
    hit = k._memo.get(key)
    if hit is not None:
        return hit
    _guard(k)
    t, f = p.tmask, p.fmask
    width = len(k.atoms)
    usable = [r for r in k.rules if _rule_can_support(r, t, f)]
    raw = kernels.headcut_constraints(
        [tuple(1 << h for h in sorted(r.head)) for r in usable],
        [r.pos_mask for r in usable],
        width,
        backend,
    )
    oracle = k.oracle
    out = set()
    for h, b in raw:
        if not oracle.dependable(t | h, f):
            continue
        e = oracle.closure(t | h)
        if e:
            out.add((e, b))
    result = sorted(out)
    k._memo[key] = result
    return result


def iter_headcuts(k: KnowledgeBase):
    """All head-cuts as tuples of (rule index, atom), in canonical order.

    Rules vary in input order (first rule slowest); each rule is first
    skipped, then paired with its head atoms by increasing id.
    """
    options = [[None] + sorted(r.head) for r in k.rules]
    for combo in product(*options):
        yield tuple((i, h) for i, h in enumerate(combo) if h is not None)


def _find_witness(k: KnowledgeBase, p: Partition, x: int) -> HeadCut:
    t, f = p.tmask, p.fmask
    oracle = k.oracle
    for cut in iter_headcuts(k):
        h = to_mask(a for _, a in cut)
        if not oracle.dependable(t | h, f):
            continue
        if not oracle.closure(t | h) & x:
            continue
        if any(
            k.rules[r].pos_mask & (f | x) or k.rules[r].neg_mask & t or k.rules[r].head_mask & t
            for r, _ in cut
        ):
            continue
        return HeadCut(frozenset(cut))
    raise AssertionError("no defeating head-cut found for a non-unfounded set")


def is_unfounded_set(k: KnowledgeBase, p: Partition, x, backend: str | None = None) -> Verdict:
    """Decide whether ``x`` is an unfounded set of ``k`` w.r.t. ``p``."""
    _check_partition(k, p)
    x = frozenset(x)
    if not x <= k.ka:
        raise ValueError("candidate set must be a subset of KA(K)")
    if not k.oracle.dependable(p.tmask, p.fmask):
        return Verdict(True)
    xm = to_mask(x)
    cs = constraints(k, p, backend)
    if kernels.is_unfounded(xm, cs, len(k.atoms), backend):
        return Verdict(True)
    return Verdict(False, _find_witness(k, p, xm))


def greatest_unfounded_set(k: KnowledgeBase, p: Partition, backend: str | None = None) -> UnfoundedReport:
    """U_K(T,F) as the greatest fixpoint of deleting supported atoms."""
    _check_partition(k, p)
    if not k.oracle.dependable(p.tmask, p.fmask):
        return UnfoundedReport(k.ka, exact=True, dependable=False)
    start = k.ka_mask & ~p.tmask
    cs = constraints(k, p, backend)
    x = kernels.gus_fixpoint(start, cs, len(k.atoms), backend)
    return UnfoundedReport(frozenset(bits(x)), exact=True)


def all_unfounded_sets(k: KnowledgeBase, p: Partition, backend: str | None = None) -> list[frozenset[int]]:
    """Every unfounded subset of KA(K), by full subset enumeration."""
    _check_partition(k, p)
    if len(k.ka) > 20:
        raise SizeGuardError("subset enumeration is limited to 20 K-atoms")
    if not k.oracle.dependable(p.tmask, p.fmask):
        masks = kernels.unfounded_family(k.ka_mask, [], len(k.atoms), backend)
    else:
        masks = kernels.unfounded_family(k.ka_mask, constraints(k, p, backend), len(k.atoms), backend)
    return [frozenset(bits(m)) for m in masks]


def _z_mask(k: KnowledgeBase, t: int, f: int, x: int) -> int:
    oracle = k.oracle
    out = t | oracle.closure(x)
    for r in k.rules:
        if r.pos_mask & ~x or r.pos_mask & f or r.neg_mask & t or r.head_mask & t:
            continue
        for a in bits(r.head_mask & ~out):
            # {a} ∪ OB_T must stay dependable w.r.t. F (plain consistency when F is empty)
            if oracle.dependable(t | 1 << a, f):
                out |= 1 << a
    return out


def z_step(k: KnowledgeBase, p: Partition, x) -> frozenset[int]:
    x = frozenset(x)
    if not x <= k.ka:
        raise ValueError("argument must be a subset of KA(K)")
    return frozenset(bits(_z_mask(k, p.tmask, p.fmask, to_mask(x))))


def atmost_mask(k: KnowledgeBase, t: int, f: int) -> int:
    key = ("atmost", t, f)
    hit = k._memo.get(key)
    if hit is not None:
        return hit
    x = 0
    for _ in range(len(k.ka) + 2):
        nxt = _z_mask(k, t, f, x)
        if nxt == x:
            break
        x = nxt
    else:
        raise AssertionError("Z iteration failed to stabilise")
    k._memo[key] = x
    return x


def atmost(k: KnowledgeBase, p: Partition) -> frozenset[int]:
    """Least fixpoint of ``z_step(k, p, ·)``."""
    _check_partition(k, p)
    return frozenset(bits(atmost_mask(k, p.tmask, p.fmask)))


def unfounded_approx(k: KnowledgeBase, p: Partition) -> UnfoundedReport:
    """KA(K) minus Atmost: a subset of the greatest unfounded set."""
    _check_partition(k, p)
    x = k.ka_mask & ~atmost_mask(k, p.tmask, p.fmask)
    return UnfoundedReport(frozenset(bits(x)), exact=False)


def _submasks(mask: int):
    sub = 0
    while True:
        yield sub
        if sub == mask:
            return
        sub = (sub - mask) & mask


def is_head_independent(k: KnowledgeBase, p: Partition) -> bool:
    """Whether every atom derivable from a weak head-cut is derivable from a head-cut inside it."""
    _check_partition(k, p)
    if not k.oracle.dependable(p.tmask, p.fmask):
        raise ValueError("head-independence is defined for dependable partitions only")
    if k.is_normal:
        return True
    space = prod(1 << len(r.head) for r in k.rules)
    if space > HEADCUT_LIMIT:
        raise SizeGuardError(f"weak head-cut space {space} exceeds the limit {HEADCUT_LIMIT}")
    t = p.tmask
    oracle = k.oracle
    heads = [r.head_mask for r in k.rules]
    for selection in product(*(list(_submasks(h)) for h in heads)):
        if all(s & (s - 1) == 0 for s in selection):
            continue  # already a head-cut
        union = 0
        for s in selection:
            union |= s
        needed = oracle.closure(t | union)
        reached = 0
        for cut in product(*([1 << a for a in bits(s)] for s in selection if s)):
            h = 0
            for bit in cut:
                h |= bit
            reached |= oracle.closure(t | h)
            if not needed & ~reached:
                break
        if needed & ~reached:
            return False
    return True
