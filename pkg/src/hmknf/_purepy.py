"""Pure-Python implementations of the hot kernels.

Atom sets are plain ``int`` bitmasks (bit ``i`` set means atom id ``i`` is a
member).  Every function here has a twin in ``_speedups.pyx`` with the same
signature and results; ``hmknf.kernels`` picks one of the two at import.
"""

from __future__ import annotations

from itertools import product

UNSAT = -1


def _unit_propagate(pos, neg, t, f):
    while True:
        changed = False
        for p, n in zip(pos, neg):
            if p & t or n & f:
                continue
            assigned = t | f
            free_p = p & ~assigned
            free_n = n & ~assigned
            if not free_p:
                if not free_n:
                    return None
                if free_n & (free_n - 1) == 0:
                    f |= free_n
                    changed = True
            elif not free_n and free_p & (free_p - 1) == 0:
                t |= free_p
                changed = True
        if not changed:
            return t, f


class ClauseSet:
    """CNF over bitmask literals with a complete DPLL decision procedure."""

    def __init__(self, pos, neg):
        if len(pos) != len(neg):
            raise ValueError("pos and neg must have the same length")
        self.pos = list(pos)
        self.neg = list(neg)

    def __len__(self):
        return len(self.pos)

    def model(self, t=0, f=0):
        """Return the true-atom mask of some model extending ``(t, f)``, or -1."""
        if t & f:
            return UNSAT
        pos, neg = self.pos, self.neg
        stack = [(t, f)]
        while stack:
            t, f = stack.pop()
            state = _unit_propagate(pos, neg, t, f)
            if state is None:
                continue
            t, f = state
            branch = 0
            for p, n in zip(pos, neg):
                if p & t or n & f:
                    continue
                free = (p | n) & ~(t | f)
                branch = free & -free
                break
            if not branch:
                return t
            stack.append((t, f | branch))
            stack.append((t | branch, f))
        return UNSAT

    def closure(self, s, candidates):
        """Atoms of ``candidates`` true in every model containing ``s``.

        An unsatisfiable ``s`` entails every candidate.
        """
        m = self.model(s, 0)
        if m == UNSAT:
            return candidates
        entailed = candidates & s
        unknown = candidates & ~s & m
        while unknown:
            bit = unknown & -unknown
            unknown ^= bit
            witness = self.model(s, bit)
            if witness == UNSAT:
                entailed |= bit
            else:
                unknown &= witness
        return entailed


def headcut_constraints(choices, bodies):
    """Distinct ``(head_mask, body_mask)`` pairs over all head-cuts.

    ``choices[i]`` lists the head-atom bits rule ``i`` may contribute and
    ``bodies[i]`` is its positive body mask.  Each rule is either skipped or
    contributes exactly one head atom.
    """
    options = [
        [(0, 0)] + [(bit, body) for bit in heads]
        for heads, body in zip(choices, bodies)
    ]
    seen = set()
    for combo in product(*options):
        h = b = 0
        for hb, bb in combo:
            h |= hb
            b |= bb
        seen.add((h, b))
    return sorted(seen)


def is_unfounded(x, constraints):
    for e, b in constraints:
        if x & e and not x & b:
            return False
    return True


def gus_fixpoint(start, constraints):
    x = start
    changed = True
    while changed:
        changed = False
        for e, b in constraints:
            if x & e and not x & b:
                x &= ~e
                changed = True
    return x


def unfounded_family(universe, constraints):
    """Every submask of ``universe`` satisfying all constraints, ascending."""
    bits = []
    u = universe
    while u:
        bit = u & -u
        bits.append(bit)
        u ^= bit
    out = []
    for k in range(1 << len(bits)):
        x = 0
        for i, bit in enumerate(bits):
            if k >> i & 1:
                x |= bit
        if is_unfounded(x, constraints):
            out.append(x)
    return sorted(out)
