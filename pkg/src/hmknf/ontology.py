"""Propositional clausal ontologies and the objective-knowledge oracle.

``OB_S`` is the ontology plus the atoms of ``S`` as unit facts.  All
consistency and entailment questions reduce to satisfiability of the clause
set under a set of assumption literals, decided by a complete DPLL search.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from functools import cached_property
from typing import TYPE_CHECKING, Iterable, NamedTuple

from hmknf import kernels
from hmknf.kernels import UNSAT, bits

if TYPE_CHECKING:
    from hmknf.kb import KnowledgeBase, Partition


class Literal(NamedTuple):
    atom: int
    positive: bool = True

    def __neg__(self):
        return Literal(self.atom, not self.positive)


@dataclass(frozen=True)
class Clause:
    literals: frozenset[Literal]

    def __post_init__(self):
        object.__setattr__(self, "literals", frozenset(Literal(*l) for l in self.literals))
        if not self.literals:
            raise ValueError("empty clause")
        atoms = [l.atom for l in self.literals]
        if len(set(atoms)) != len(atoms):
            raise ValueError("tautological clause: an atom occurs with both polarities")

    @cached_property
    def pos_mask(self) -> int:
        return kernels.to_mask(l.atom for l in self.literals if l.positive)

    @cached_property
    def neg_mask(self) -> int:
        return kernels.to_mask(l.atom for l in self.literals if not l.positive)


@dataclass(frozen=True)
class ClausalOntology:
    clauses: tuple[Clause, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "clauses", tuple(self.clauses))

    @cached_property
    def vocabulary(self) -> frozenset[int]:
        return frozenset(l.atom for c in self.clauses for l in c.literals)

    @cached_property
    def width(self) -> int:
        return max(self.vocabulary, default=-1) + 1

    def clause_set(self, width: int | None = None, backend: str | None = None):
        width = max(self.width, width or 0)
        return kernels.clause_set(
            [c.pos_mask for c in self.clauses],
            [c.neg_mask for c in self.clauses],
            width,
            backend,
        )


class Oracle:
    """Memoizing consistency/entailment oracle for one ontology.

    Entailment is only ever asked about the K-atom universe ``ka_mask``.
    The caches are guarded by a lock; results never depend on interleaving.
    """

    def __init__(self, ontology: ClausalOntology, ka_mask: int, width: int, backend: str | None = None):
        self.ontology = ontology
        self.ka_mask = ka_mask
        self.width = max(width, ontology.width, ka_mask.bit_length())
        self._clauses = ontology.clause_set(self.width, backend)
        self._consistent: dict[tuple[int, int], bool] = {}
        self._closure: dict[int, int] = {}
        self._lock = threading.Lock()

    def model(self, t: int = 0, f: int = 0) -> int | None:
        m = self._clauses.model(t, f)
        return None if m == UNSAT else m

    def consistent(self, t: int = 0, f: int = 0) -> bool:
        """Is the ontology plus ``t`` true and ``f`` false satisfiable?"""
        key = (t, f)
        with self._lock:
            hit = self._consistent.get(key)
        if hit is None:
            hit = self._clauses.model(t, f) != UNSAT
            with self._lock:
                self._consistent[key] = hit
        return hit

    def closure(self, s: int) -> int:
        """K-atoms ``a`` with ``OB_s ⊨ a`` (all of them if ``OB_s`` is inconsistent)."""
        with self._lock:
            hit = self._closure.get(s)
        if hit is None:
            hit = self._clauses.closure(s, self.ka_mask)
            with self._lock:
                self._closure[s] = hit
        return hit

    def entails(self, s: int, atom: int) -> bool:
        return not self.consistent(s, 1 << atom)

    def dependable(self, t: int, f: int) -> bool:
        if not f:
            return self.consistent(t)
        return all(self.consistent(t, 1 << b) for b in bits(f))

    def dependability_witness(self, t: int, f: int):
        """First ``b`` in ``f`` with ``OB_t ∪ {¬b}`` inconsistent.

        Returns ``None`` when dependable and ``-1`` when ``f`` is empty and
        ``OB_t`` itself is inconsistent.
        """
        if not f:
            return None if self.consistent(t) else -1
        for b in bits(f):
            if not self.consistent(t, 1 << b):
                return b
        return None


def _assumption_masks(assumptions: Iterable[Literal]) -> tuple[int, int]:
    t = f = 0
    for lit in assumptions:
        lit = Literal(*lit)
        if lit.positive:
            t |= 1 << lit.atom
        else:
            f |= 1 << lit.atom
    return t, f


def sat(o: ClausalOntology, assumptions: Iterable[Literal] = ()) -> bool:
    t, f = _assumption_masks(assumptions)
    if t & f:
        return False
    width = max(o.width, t.bit_length(), f.bit_length())
    return o.clause_set(width).model(t, f) != UNSAT


def entails(o: ClausalOntology, s: Iterable[int], a: int) -> bool:
    """``OB_s ⊨ a``, decided by refutation."""
    return not sat(o, [Literal(x, True) for x in s] + [Literal(a, False)])


def is_dependable(k: KnowledgeBase, p: Partition) -> bool:
    return k.oracle.dependable(p.tmask, p.fmask)
