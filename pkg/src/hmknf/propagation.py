"""Well-founded propagation: the T and W operators and their fixpoint."""

from __future__ import annotations

from dataclasses import dataclass

from hmknf.kb import KnowledgeBase, Partition
from hmknf.kernels import bits
from hmknf.unfounded import atmost_mask


@dataclass(frozen=True)
class PropagationConflict:
    """Why propagation failed.

    ``kind == "overlap"``: ``atoms`` were derived both true and false.
    ``kind == "violated"``: a rule has its body satisfied and every head
    atom false; ``atoms`` is that head.
    ``kind == "undependable"``: ``atoms`` holds the ``b`` in F with
    ``OB_T ∪ {¬b}`` inconsistent, or is empty when ``OB_T`` itself is.
    """

    kind: str
    atoms: frozenset[int]


@dataclass(frozen=True)
class PropagationResult:
    partition: Partition
    conflict: PropagationConflict | None = None
    rounds: int = 0

    @property
    def ok(self) -> bool:
        return self.conflict is None


def _t_mask(k: KnowledgeBase, t: int, f: int) -> int:
    out = k.oracle.closure(t)
    for r in k.rules:
        if r.pos_mask & ~t or r.neg_mask & ~f:
            continue
        rest = r.head_mask & ~f
        if rest and rest & (rest - 1) == 0:
            out |= rest
    return out


def _w_masks(k: KnowledgeBase, base: Partition, t: int, f: int) -> tuple[int, int]:
    true = _t_mask(k, t, f) | base.tmask
    false = (k.ka_mask & ~atmost_mask(k, t, f)) | base.fmask
    return true, false


def t_step(k: KnowledgeBase, base: Partition, acc: Partition) -> frozenset[int]:
    """Atoms entailed by ``OB_{acc.t}`` or forced by a rule whose other heads are false."""
    return frozenset(bits(_t_mask(k, acc.tmask, acc.fmask)))


def w_step(k: KnowledgeBase, base: Partition, acc: Partition) -> tuple[frozenset[int], frozenset[int]]:
    """One W application; the returned pair may overlap."""
    true, false = _w_masks(k, base, acc.tmask, acc.fmask)
    return frozenset(bits(true)), frozenset(bits(false))


def propagate(k: KnowledgeBase, p: Partition) -> PropagationResult:
    """Join W into the partition until nothing changes or a conflict shows up."""
    if not p.decided <= k.ka:
        raise ValueError("partition mentions atoms outside KA(K)")
    t, f = p.tmask, p.fmask
    limit = 2 * len(k.ka) + 2
    rounds = 0
    while True:
        rounds += 1
        if rounds > limit:
            raise AssertionError("propagation exceeded its iteration bound")
        wt, wf = _w_masks(k, p, t, f)
        nt, nf = t | wt, f | wf
        if nt & nf:
            return PropagationResult(
                Partition.from_masks(t, f),
                PropagationConflict("overlap", frozenset(bits(nt & nf))),
                rounds,
            )
        # head \ F shrinking to nothing blocks T, so catch it here; otherwise
        # the outcome would depend on whether T or W fires first
        for r in k.rules:
            if not (r.pos_mask & ~nt or r.neg_mask & ~nf or r.head_mask & ~nf):
                return PropagationResult(
                    Partition.from_masks(t, f),
                    PropagationConflict("violated", frozenset(bits(r.head_mask))),
                    rounds,
                )
        if (nt, nf) == (t, f):
            break
        t, f = nt, nf
    result = Partition.from_masks(t, f)
    witness = k.oracle.dependability_witness(t, f)
    if witness is not None:
        atoms = frozenset() if witness < 0 else frozenset([witness])
        return PropagationResult(result, PropagationConflict("undependable", atoms), rounds)
    return PropagationResult(result, None, rounds)
