# cython: language_level=3
"""Compiled twins of the kernels in ``_purepy``.

Masks must fit in 63 bits so that -1 stays free as the UNSAT sentinel.
"""

from libc.stdint cimport uint64_t
from libc.stdlib cimport malloc, free, qsort

cdef long long UNSAT = -1
DEF STACK = 160


ctypedef struct _Pair:
    uint64_t h
    uint64_t b


cdef int _pair_cmp(const void* x, const void* y) noexcept nogil:
    cdef const _Pair* p = <const _Pair*> x
    cdef const _Pair* q = <const _Pair*> y
    if p.h != q.h:
        return -1 if p.h < q.h else 1
    if p.b != q.b:
        return -1 if p.b < q.b else 1
    return 0


cdef inline uint64_t _lowbit(uint64_t x) nogil:
    return x & (~x + 1)


cdef inline bint _single(uint64_t x) nogil:
    return x != 0 and (x & (x - 1)) == 0


cdef class ClauseSet:
    cdef uint64_t* pos
    cdef uint64_t* neg
    cdef Py_ssize_t n

    def __cinit__(self, pos, neg):
        if len(pos) != len(neg):
            raise ValueError("pos and neg must have the same length")
        self.n = len(pos)
        self.pos = <uint64_t*> malloc(max(self.n, 1) * sizeof(uint64_t))
        self.neg = <uint64_t*> malloc(max(self.n, 1) * sizeof(uint64_t))
        if self.pos == NULL or self.neg == NULL:
            raise MemoryError()
        cdef Py_ssize_t i
        for i in range(self.n):
            self.pos[i] = pos[i]
            self.neg[i] = neg[i]

    def __dealloc__(self):
        free(self.pos)
        free(self.neg)

    def __len__(self):
        return self.n

    cdef bint _propagate(self, uint64_t* t, uint64_t* f) nogil:
        cdef Py_ssize_t i
        cdef uint64_t p, q, assigned, fp, fn
        cdef bint changed = True
        while changed:
            changed = False
            for i in range(self.n):
                p = self.pos[i]
                q = self.neg[i]
                if (p & t[0]) or (q & f[0]):
                    continue
                assigned = t[0] | f[0]
                fp = p & ~assigned
                fn = q & ~assigned
                if fp == 0:
                    if fn == 0:
                        return False
                    if _single(fn):
                        f[0] |= fn
                        changed = True
                elif fn == 0 and _single(fp):
                    t[0] |= fp
                    changed = True
        return True

    cdef long long _model(self, uint64_t t0, uint64_t f0) nogil:
        cdef uint64_t st[STACK]
        cdef uint64_t sf[STACK]
        cdef int top = 0
        cdef uint64_t t, f, branch, p, q
        cdef Py_ssize_t i
        if t0 & f0:
            return UNSAT
        st[0] = t0
        sf[0] = f0
        top = 1
        while top > 0:
            top -= 1
            t = st[top]
            f = sf[top]
            if not self._propagate(&t, &f):
                continue
            branch = 0
            for i in range(self.n):
                p = self.pos[i]
                q = self.neg[i]
                if (p & t) or (q & f):
                    continue
                branch = _lowbit((p | q) & ~(t | f))
                break
            if branch == 0:
                return <long long> t
            st[top] = t
            sf[top] = f | branch
            st[top + 1] = t | branch
            sf[top + 1] = f
            top += 2
        return UNSAT

    def model(self, uint64_t t=0, uint64_t f=0):
        cdef long long m = self._model(t, f)
        if m == UNSAT:
            return -1
        return <uint64_t> m

    def closure(self, uint64_t s, uint64_t candidates):
        cdef long long m = self._model(s, 0)
        cdef uint64_t entailed, unknown, bit
        cdef long long w
        if m == UNSAT:
            return candidates
        entailed = candidates & s
        unknown = candidates & ~s & (<uint64_t> m)
        while unknown:
            bit = _lowbit(unknown)
            unknown ^= bit
            w = self._model(s, bit)
            if w == UNSAT:
                entailed |= bit
            else:
                unknown &= <uint64_t> w
        return entailed


def headcut_constraints(choices, bodies):
    cdef Py_ssize_t nrules = len(choices)
    cdef Py_ssize_t i, j, total = 0, count = 1, n = 0
    cdef Py_ssize_t* radix = NULL
    cdef Py_ssize_t* offset = NULL
    cdef Py_ssize_t* digit = NULL
    cdef uint64_t* hbits = NULL
    cdef uint64_t* bmask = NULL
    cdef _Pair* pairs = NULL
    cdef uint64_t h, b
    for i in range(nrules):
        total += len(choices[i])
        count *= len(choices[i]) + 1
    try:
        radix = <Py_ssize_t*> malloc((nrules + 1) * sizeof(Py_ssize_t))
        offset = <Py_ssize_t*> malloc((nrules + 1) * sizeof(Py_ssize_t))
        digit = <Py_ssize_t*> malloc((nrules + 1) * sizeof(Py_ssize_t))
        hbits = <uint64_t*> malloc((total + 1) * sizeof(uint64_t))
        bmask = <uint64_t*> malloc((nrules + 1) * sizeof(uint64_t))
        pairs = <_Pair*> malloc(count * sizeof(_Pair))
        if not (radix and offset and digit and hbits and bmask and pairs):
            raise MemoryError()
        j = 0
        for i in range(nrules):
            radix[i] = len(choices[i]) + 1
            offset[i] = j
            digit[i] = 0
            bmask[i] = bodies[i]
            for bit in choices[i]:
                hbits[j] = bit
                j += 1
        with nogil:
            while True:
                h = 0
                b = 0
                for i in range(nrules):
                    if digit[i]:
                        h |= hbits[offset[i] + digit[i] - 1]
                        b |= bmask[i]
                pairs[n].h = h
                pairs[n].b = b
                n += 1
                i = nrules - 1
                while i >= 0:
                    digit[i] += 1
                    if digit[i] < radix[i]:
                        break
                    digit[i] = 0
                    i -= 1
                if i < 0:
                    break
            qsort(pairs, n, sizeof(_Pair), _pair_cmp)
        out = []
        for i in range(n):
            if i == 0 or pairs[i].h != pairs[i - 1].h or pairs[i].b != pairs[i - 1].b:
                out.append((pairs[i].h, pairs[i].b))
        return out
    finally:
        free(radix)
        free(offset)
        free(digit)
        free(hbits)
        free(bmask)
        free(pairs)


cdef class _Constraints:
    cdef uint64_t* e
    cdef uint64_t* b
    cdef Py_ssize_t n

    def __cinit__(self, constraints):
        self.n = len(constraints)
        self.e = <uint64_t*> malloc(max(self.n, 1) * sizeof(uint64_t))
        self.b = <uint64_t*> malloc(max(self.n, 1) * sizeof(uint64_t))
        if self.e == NULL or self.b == NULL:
            raise MemoryError()
        cdef Py_ssize_t i
        for i in range(self.n):
            self.e[i] = constraints[i][0]
            self.b[i] = constraints[i][1]

    def __dealloc__(self):
        free(self.e)
        free(self.b)

    cdef bint check(self, uint64_t x) nogil:
        cdef Py_ssize_t i
        for i in range(self.n):
            if (x & self.e[i]) and not (x & self.b[i]):
                return False
        return True

    cdef uint64_t fixpoint(self, uint64_t x) nogil:
        cdef Py_ssize_t i
        cdef bint changed = True
        while changed:
            changed = False
            for i in range(self.n):
                if (x & self.e[i]) and not (x & self.b[i]):
                    x &= ~self.e[i]
                    changed = True
        return x


def is_unfounded(uint64_t x, constraints):
    return _Constraints(constraints).check(x)


def gus_fixpoint(uint64_t start, constraints):
    return _Constraints(constraints).fixpoint(start)


def unfounded_family(uint64_t universe, constraints):
    cdef _Constraints cs = _Constraints(constraints)
    cdef uint64_t x = 0
    out = []
    # enumerate submasks of universe in ascending order
    while True:
        if cs.check(x):
            out.append(x)
        if x == universe:
            break
        x = (x - universe) & universe
    return out
