"""Backend selection for the hot kernels.

The compiled ``_speedups`` extension is used when it imports and the atom
universe fits in 63 bits; otherwise the pure-Python twins in ``_purepy``
run.  Set ``HMKNF_PURE_PYTHON=1`` to force the fallback.
"""

from __future__ import annotations

import os

from hmknf import _purepy

NATIVE_WIDTH = 63

_native = None
if not os.environ.get("HMKNF_PURE_PYTHON"):
    try:
        from hmknf import _speedups as _native
    except ImportError:
        _native = None

BACKEND = "cython" if _native is not None else "python"
UNSAT = -1


def _pick(width, force=None):
    if force == "python":
        return _purepy
    if force == "cython":
        if _native is None:
            raise RuntimeError("compiled kernels are not available")
        if width > NATIVE_WIDTH:
            raise ValueError(f"mask width {width} exceeds {NATIVE_WIDTH} bits")
        return _native
    if _native is not None and width <= NATIVE_WIDTH:
        return _native
    return _purepy


def available_backends():
    return ["python"] + (["cython"] if _native is not None else [])


def clause_set(pos, neg, width, backend=None):
    return _pick(width, backend).ClauseSet(pos, neg)


def headcut_constraints(choices, bodies, width, backend=None):
    return _pick(width, backend).headcut_constraints(choices, bodies)


def is_unfounded(x, constraints, width, backend=None):
    return _pick(width, backend).is_unfounded(x, constraints)


def gus_fixpoint(start, constraints, width, backend=None):
    return _pick(width, backend).gus_fixpoint(start, constraints)


def unfounded_family(universe, constraints, width, backend=None):
    return _pick(width, backend).unfounded_family(universe, constraints)


def bits(mask):
    """Yield the indices of set bits, lowest first."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(ids):
    m = 0
    for i in ids:
        m |= 1 << i
    return m
