"""Seeded random instances for property tests and benchmarks."""

from __future__ import annotations

import itertools
import random

from hmknf.kb import KnowledgeBase, Partition
from hmknf.reduction import CnfInstance


def random_kb(
    rng: random.Random,
    max_atoms: int = 6,
    max_rules: int = 5,
    max_clauses: int = 4,
    extra_atoms: int = 2,
    max_head: int = 3,
) -> KnowledgeBase:
    """A random KB with at most ``max_atoms`` K-atoms.

    Ontology clauses range over the rule atoms plus up to ``extra_atoms``
    ontology-only atoms.
    """
    pool = [f"p{i}" for i in range(rng.randint(1, max_atoms))]
    rules = []
    for _ in range(rng.randint(1, max_rules)):
        head = rng.sample(pool, rng.randint(1, min(max_head, len(pool))))
        pos = rng.sample(pool, rng.choice([0, 0, 1, 1, 2]) if len(pool) > 1 else 0)
        neg = rng.sample(pool, rng.choice([0, 0, 1, 1, 2]) if len(pool) > 1 else 0)
        rules.append((head, pos, neg))
    used = sorted({a for r in rules for part in r for a in part})
    vocab = used + [f"o{i}" for i in range(rng.randint(0, extra_atoms))]
    clauses = []
    for _ in range(rng.randint(0, max_clauses)):
        atoms = rng.sample(vocab, rng.randint(1, min(3, len(vocab))))
        clauses.append([a if rng.random() < 0.5 else f"-{a}" for a in atoms])
    return KnowledgeBase.from_names(rules, clauses)


def random_partition(rng: random.Random, kb: KnowledgeBase, p_decided: float = 0.5) -> Partition:
    t, f = set(), set()
    for a in sorted(kb.ka):
        if rng.random() < p_decided:
            (t if rng.random() < 0.5 else f).add(a)
    return Partition(frozenset(t), frozenset(f))


def random_dependable_partition(rng: random.Random, kb: KnowledgeBase, tries: int = 50) -> Partition:
    """Rejection-sample a dependable partition; (∅, ∅) if none turns up."""
    oracle = kb.oracle
    for _ in range(tries):
        p = random_partition(rng, kb, rng.choice([0.0, 0.3, 0.5, 0.8]))
        if oracle.dependable(p.tmask, p.fmask):
            return p
    return Partition()


def sub_partitions(rng: random.Random, p: Partition, limit: int = 16) -> list[Partition]:
    """Up to ``limit`` distinct partitions ⊑ ``p``, always including (∅,∅) and ``p``."""
    decided = sorted(p.decided)
    n = len(decided)
    if 2**n <= limit:
        masks = range(2**n)
    else:
        masks = {0, 2**n - 1} | {rng.randrange(2**n) for _ in range(limit * 4)}
        masks = sorted(masks)[: limit - 1] + [2**n - 1]
    out = []
    for m in masks:
        keep = {decided[i] for i in range(n) if m >> i & 1}
        out.append(Partition(p.t & keep, p.f & keep))
    return out[:limit]


def cnf_family(seed: int = 0, count: int = 200) -> list[CnfInstance]:
    """CNF instances with ≤ 3 variables and ≤ 4 clauses of 1-3 literals.

    All single-clause instances over one and two variables come first, then
    seeded random instances fill up to ``count``.
    """
    out: list[CnfInstance] = []
    seen = set()

    def add(n, clauses):
        key = (n, tuple(clauses))
        if key not in seen:
            seen.add(key)
            out.append(CnfInstance(n, tuple(clauses)))

    for n in (1, 2):
        lits = [l for v in range(1, n + 1) for l in (v, -v)]
        for size in range(1, n + 1):
            for clause in itertools.combinations(lits, size):
                add(n, [clause])
    add(1, [(1,), (-1,)])
    rng = random.Random(seed)
    while len(out) < count:
        n = rng.randint(1, 3)
        clauses = []
        for _ in range(rng.randint(1, 4)):
            vs = rng.sample(range(1, n + 1), rng.randint(1, n))
            clauses.append(tuple(v if rng.random() < 0.5 else -v for v in vs))
        add(n, clauses)
    return out
