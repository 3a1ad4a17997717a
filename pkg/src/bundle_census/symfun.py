"""Exact symmetric-function arithmetic on Chern data.

Converts a class vector (the elementary symmetric functions of its Chern
roots) into power sums and binomial-coefficient sums of the roots without
ever materializing a root: Newton's identities give the power sums, the
Stirling expansion of the falling factorial gives the binomial sums.  All
arithmetic is exact; the only non-integer values are the binomial sums,
returned as Fractions in lowest terms.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from . import kernels
from .chern import ChernVector

ClassData = Union[ChernVector, Sequence[int]]


@dataclass(frozen=True)
class PowerSums:
    """Power sums p_k = sum_j delta_j^k of the Chern roots, k = 1..R.

    Each p_k is an exact integer: the roots are the roots of a monic
    integer polynomial, so their power sums are integers even when the
    roots themselves are irrational.
    """

    n: int
    values: tuple[int, ...]

    def p(self, k: int) -> int:
        if not 1 <= k <= len(self.values):
            raise ValueError(f"p_{k} not computed (have k = 1..{len(self.values)})")
        return self.values[k - 1]


def coefficients(c: ClassData) -> tuple[int, ...]:
    """Monic-polynomial coefficients (c_1, ..., c_n) of the class data.

    A ChernVector contributes its full rank-length classes (vanishing
    entries restored as zeros); a plain sequence is taken as-is.
    """
    if isinstance(c, ChernVector):
        return c.full_classes
    return tuple(operator.index(x) for x in c)


def stirling_first(r: int, k: int) -> int:
    """Signed Stirling number of the first kind s(r,k).

    Defined by x(x-1)...(x-r+1) = sum_k s(r,k) x^k; requires 0 <= k <= r.
    """
    return kernels.stirling_first(operator.index(r), operator.index(k))


def newton_power_sums(c: ClassData, R: int) -> PowerSums:
    """Power sums p_1..p_R of the roots of y^n + c_1 y^(n-1) + ... + c_n."""
    coeffs = coefficients(c)
    R = operator.index(R)
    if R < 1:
        raise ValueError(f"need R >= 1, got {R}")
    return PowerSums(n=len(coeffs), values=tuple(kernels.power_sums(coeffs, R)))


def binomial_sum(c: ClassData, r: int) -> Fraction:
    """B_r = sum_j C(delta_j, r) over the Chern roots, as an exact Fraction.

    Computed as (1/r!) sum_{k=1}^{r} s(r,k) p_k; integrality of these
    values is the content of the Schwarzenberger conditions.
    """
    coeffs = coefficients(c)
    r = operator.index(r)
    if r < 1:
        raise ValueError(f"need r >= 1, got {r}")
    num, den = kernels.binomial_sum_num_den(coeffs, r)
    return Fraction(num, den)
