# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled exact arithmetic kernels.

Same interface as ``_kernels_py``: Stirling numbers, Newton power sums and
reduced binomial sums of the Chern roots.  The hot paths run on C int64
with explicit overflow checks; any overflow (or an input outside the fast
range) falls back to the arbitrary-precision reference implementation, so
results are always exact.
"""

from libc.stdint cimport int64_t, INT64_MIN

from . import _kernels_py as _py

cdef extern from *:
    """
    #include <stdint.h>
    static int bc_add_ovf(int64_t a, int64_t b, int64_t *out)
    { return __builtin_add_overflow(a, b, out); }
    static int bc_mul_ovf(int64_t a, int64_t b, int64_t *out)
    { return __builtin_mul_overflow(a, b, out); }
    """
    int bc_add_ovf(int64_t a, int64_t b, int64_t* out) noexcept nogil
    int bc_mul_ovf(int64_t a, int64_t b, int64_t* out) noexcept nogil

DEF MAX_COEFFS = 64      # widest fast-path polynomial
DEF MAX_PSUMS = 128      # deepest fast-path power-sum run
DEF MAX_FACT = 20        # 20! is the largest factorial fitting in int64

# int64 copies of the Stirling triangle and factorials for r <= MAX_FACT,
# filled from the reference implementation at import.
cdef int64_t _S64[MAX_FACT + 1][MAX_FACT + 1]
cdef int64_t _FACT64[MAX_FACT + 1]

def _init_tables():
    cdef int r, k
    fact = 1
    for r in range(MAX_FACT + 1):
        row = _py.stirling_row(r)
        for k in range(r + 1):
            _S64[r][k] = row[k]
        if r > 0:
            fact *= r
        _FACT64[r] = fact

_init_tables()
del _init_tables


cdef int _fill_i64(object seq, int64_t* buf, int cap) except -2:
    """Copy a sequence of Python ints into ``buf``; -1 if it does not fit."""
    cdef Py_ssize_t n = len(seq)
    cdef Py_ssize_t i
    if n > cap:
        return -1
    for i in range(n):
        try:
            buf[i] = seq[i]
        except OverflowError:
            return -1
    return <int> n


cdef bint _power_sums_i64(const int64_t* e, int n, int R, int64_t* p) noexcept nogil:
    """Newton recurrence on int64; False as soon as anything overflows."""
    cdef int k, i, top
    cdef int64_t acc, t
    for k in range(1, R + 1):
        acc = 0
        top = k if k < n + 1 else n + 1
        for i in range(1, top):
            if bc_mul_ovf(e[i - 1], p[k - i - 1], &t):
                return False
            if i % 2 == 0:
                if t == INT64_MIN:
                    return False
                t = -t
            if bc_add_ovf(acc, t, &acc):
                return False
        if k <= n:
            if bc_mul_ovf(<int64_t> k, e[k - 1], &t):
                return False
            if k % 2 == 0:
                if t == INT64_MIN:
                    return False
                t = -t
            if bc_add_ovf(acc, t, &acc):
                return False
        p[k - 1] = acc
    return True


cdef bint _weighted_num_i64(int r, const int64_t* p, int64_t* out) noexcept nogil:
    """sum_k s(r,k) p_k on int64; False on overflow."""
    cdef int k
    cdef int64_t acc = 0, t
    for k in range(1, r + 1):
        if bc_mul_ovf(_S64[r][k], p[k - 1], &t):
            return False
        if bc_add_ovf(acc, t, &acc):
            return False
    out[0] = acc
    return True


cdef int64_t _gcd_i64(int64_t a, int64_t b) noexcept nogil:
    cdef int64_t t
    if a < 0:
        a = -a
    while b != 0:
        t = a % b
        a = b
        b = t
    return a


def stirling_row(r):
    return _py.stirling_row(r)


def stirling_first(r, k):
    return _py.stirling_first(r, k)


def power_sums(coeffs, R):
    cdef int64_t e[MAX_COEFFS]
    cdef int64_t p[MAX_PSUMS]
    cdef int n, k
    cdef int R_c
    if not isinstance(R, int) or R < 0:
        return _py.power_sums(coeffs, R)
    if R <= MAX_PSUMS:
        R_c = R
        n = _fill_i64(coeffs, e, MAX_COEFFS)
        if n >= 0 and _power_sums_i64(e, n, R_c, p):
            return [p[k] for k in range(R_c)]
    return _py.power_sums(coeffs, R)


def binomial_sum_num_den(coeffs, r):
    cdef int64_t e[MAX_COEFFS]
    cdef int64_t p[MAX_PSUMS]
    cdef int64_t num, den, g
    cdef int n
    cdef int r_c
    if not isinstance(r, int) or r < 1:
        return _py.binomial_sum_num_den(coeffs, r)
    if r <= MAX_FACT:
        r_c = r
        n = _fill_i64(coeffs, e, MAX_COEFFS)
        if n >= 0 and _power_sums_i64(e, n, r_c, p) and _weighted_num_i64(r_c, p, &num):
            den = _FACT64[r_c]
            g = _gcd_i64(num, den)
            return (num // g, den // g)
    return _py.binomial_sum_num_den(coeffs, r)


def schwarz_terms(coeffs, N):
    cdef int64_t e[MAX_COEFFS]
    cdef int64_t p[MAX_PSUMS]
    cdef int64_t num, den, g
    cdef int n, r
    cdef int N_c
    if not isinstance(N, int) or N < 1 or len(coeffs) != N:
        return _py.schwarz_terms(coeffs, N)  # shared validation errors
    if N <= MAX_FACT:
        N_c = N
        n = _fill_i64(coeffs, e, MAX_COEFFS)
        if n >= 0 and _power_sums_i64(e, n, N_c, p):
            out = []
            for r in range(2, N_c + 1):
                if not _weighted_num_i64(r, p, &num):
                    return _py.schwarz_terms(coeffs, N)
                den = _FACT64[r]
                g = _gcd_i64(num, den)
                out.append((r, num // g, den // g))
            return out
    return _py.schwarz_terms(coeffs, N)
