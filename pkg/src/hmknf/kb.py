"""Ground disjunctive MKNF rules, knowledge bases, partitions and head-cuts.

Atoms are interned to dense integer ids.  Atom sets are exposed as
``frozenset[int]``; bitmask views (bit ``i`` for atom ``i``) are cached on
each object for the fixpoint code.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence

from hmknf.kernels import bits, to_mask
from hmknf.ontology import ClausalOntology, Clause, Literal, Oracle

ATOM_NAME = re.compile(r"[a-z][A-Za-z0-9_]*\Z")


class Atom(NamedTuple):
    id: int
    name: str


@dataclass(frozen=True)
class Rule:
    """``head_1 ; ... ; head_k :- body_pos..., not body_neg...``"""

    head: frozenset[int]
    body_pos: frozenset[int] = frozenset()
    body_neg: frozenset[int] = frozenset()

    def __post_init__(self):
        for name in ("head", "body_pos", "body_neg"):
            object.__setattr__(self, name, frozenset(getattr(self, name)))
        if not self.head:
            raise ValueError("a rule needs at least one head atom")

    @cached_property
    def head_mask(self) -> int:
        return to_mask(self.head)

    @cached_property
    def pos_mask(self) -> int:
        return to_mask(self.body_pos)

    @cached_property
    def neg_mask(self) -> int:
        return to_mask(self.body_neg)

    @property
    def atoms(self) -> frozenset[int]:
        return self.head | self.body_pos | self.body_neg


@dataclass(frozen=True)
class Conflict:
    """Overlap produced by joining two partitions."""

    atoms: frozenset[int]

    def __bool__(self):
        return False


@dataclass(frozen=True)
class Partition:
    """A non-overlapping pair (T, F) of K-atom sets."""

    t: frozenset[int] = frozenset()
    f: frozenset[int] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "t", frozenset(self.t))
        object.__setattr__(self, "f", frozenset(self.f))
        if self.t & self.f:
            raise ValueError(f"partition overlaps on {sorted(self.t & self.f)}")

    @classmethod
    def from_masks(cls, t: int, f: int) -> Partition:
        return cls(frozenset(bits(t)), frozenset(bits(f)))

    @cached_property
    def tmask(self) -> int:
        return to_mask(self.t)

    @cached_property
    def fmask(self) -> int:
        return to_mask(self.f)

    @property
    def decided(self) -> frozenset[int]:
        return self.t | self.f

    def leq(self, other: Partition) -> bool:
        """Componentwise inclusion, written (T,F) ⊑ (T',F')."""
        return self.t <= other.t and self.f <= other.f

    def is_total(self, ka: Iterable[int]) -> bool:
        return self.decided == frozenset(ka)


@dataclass(frozen=True)
class HeadCut:
    """Set of (rule index, head atom) pairs.

    ``weak=True`` drops the at-most-one-pair-per-rule restriction.
    """

    pairs: frozenset[tuple[int, int]] = frozenset()
    weak: bool = False

    def __post_init__(self):
        object.__setattr__(self, "pairs", frozenset(self.pairs))
        if not self.weak:
            seen = set()
            for r, _ in self.pairs:
                if r in seen:
                    raise ValueError(f"rule {r} occurs twice in a head-cut")
                seen.add(r)

    @property
    def heads(self) -> frozenset[int]:
        return frozenset(h for _, h in self.pairs)

    def validate(self, kb: KnowledgeBase) -> None:
        for r, h in self.pairs:
            if not 0 <= r < len(kb.rules) or h not in kb.rules[r].head:
                raise ValueError(f"pair ({r}, {h}) is not a rule/head-atom pair")


def ka_of(rules: Iterable[Rule]) -> frozenset[int]:
    """All atoms occurring in a head or body (positive or negative)."""
    out: set[int] = set()
    for r in rules:
        out |= r.atoms
    return frozenset(out)


def applicable(rule: Rule, p: Partition) -> bool:
    return rule.body_pos <= p.t and rule.body_neg <= p.f


def partition_join(p1: Partition, p2: Partition) -> Partition | Conflict:
    t = p1.t | p2.t
    f = p1.f | p2.f
    if t & f:
        return Conflict(t & f)
    return Partition(t, f)


@dataclass(frozen=True)
class KnowledgeBase:
    """K = (O, P) over an interned atom table.

    ``atoms[i].id == i``.  Atoms occurring in rules get the low ids; atoms
    that only occur in the ontology come after them.
    """

    rules: tuple[Rule, ...]
    ontology: ClausalOntology
    atoms: tuple[Atom, ...]
    _memo: dict = field(default_factory=dict, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "rules", tuple(self.rules))
        object.__setattr__(self, "atoms", tuple(Atom(*a) for a in self.atoms))
        names = set()
        for i, atom in enumerate(self.atoms):
            if atom.id != i:
                raise ValueError("atom ids must be contiguous and ordered")
            if not ATOM_NAME.match(atom.name) or atom.name == "not":
                raise ValueError(f"invalid atom name {atom.name!r}")
            if atom.name in names:
                raise ValueError(f"duplicate atom name {atom.name!r}")
            names.add(atom.name)
        n = len(self.atoms)
        used = ka_of(self.rules) | self.ontology.vocabulary
        if any(a >= n or a < 0 for a in used):
            raise ValueError("rule or clause mentions an atom missing from the table")

    @classmethod
    def from_names(
        cls,
        rules: Iterable[tuple[Sequence[str], Sequence[str], Sequence[str]]] = (),
        clauses: Iterable[Iterable[str]] = (),
    ) -> KnowledgeBase:
        """Build from ``(head, body_pos, body_neg)`` name triples and clauses.

        Clause literals are names with an optional ``-`` prefix for negation.
        """
        rules = [tuple(map(tuple, r)) for r in rules]
        clauses = [tuple(c) for c in clauses]
        index: dict[str, int] = {}

        def intern(name):
            if name not in index:
                index[name] = len(index)
            return index[name]

        built = [
            Rule(
                frozenset(map(intern, head)),
                frozenset(map(intern, pos)),
                frozenset(map(intern, neg)),
            )
            for head, pos, neg in rules
        ]
        built_clauses = []
        for clause in clauses:
            lits = []
            for lit in clause:
                positive = not lit.startswith("-")
                lits.append(Literal(intern(lit.lstrip("-")), positive))
            built_clauses.append(Clause(frozenset(lits)))
        table = tuple(Atom(i, name) for name, i in index.items())
        return cls(tuple(built), ClausalOntology(tuple(built_clauses)), table)

    @cached_property
    def ka(self) -> frozenset[int]:
        return ka_of(self.rules)

    @cached_property
    def ka_mask(self) -> int:
        return to_mask(self.ka)

    @cached_property
    def index(self) -> dict[str, int]:
        return {a.name: a.id for a in self.atoms}

    @cached_property
    def oracle(self) -> Oracle:
        return Oracle(self.ontology, self.ka_mask, len(self.atoms))

    @property
    def is_normal(self) -> bool:
        return all(len(r.head) == 1 for r in self.rules)

    def id_of(self, name: str) -> int:
        try:
            return self.index[name]
        except KeyError:
            raise KeyError(f"unknown atom {name!r}") from None

    def name_of(self, atom: int) -> str:
        return self.atoms[atom].name

    def names(self, atoms: Iterable[int]) -> list[str]:
        return sorted(self.atoms[a].name for a in atoms)

    def ids(self, names: Iterable[str]) -> frozenset[int]:
        return frozenset(self.id_of(n) for n in names)

    def partition(self, true: Iterable[str] = (), false: Iterable[str] = ()) -> Partition:
        return Partition(self.ids(true), self.ids(false))

    def canonical(self) -> tuple:
        """Name-level structure, independent of id assignment."""
        rules = tuple(
            (
                tuple(self.names(r.head)),
                tuple(self.names(r.body_pos)),
                tuple(self.names(r.body_neg)),
            )
            for r in self.rules
        )
        clauses = tuple(
            sorted(
                tuple(sorted(("" if l.positive else "-") + self.name_of(l.atom) for l in c.literals))
                for c in self.ontology.clauses
            )
        )
        return rules, clauses
