"""Chern class arithmetic in the truncated cohomology ring of CP^m.

The cohomology ring of CP^m is Z[t]/(t^(m+1)) with t the hyperplane class,
so a total Chern class is a polynomial 1 + c_1 t + ... + c_m t^m and the
Whitney formula is plain truncated multiplication.  ``ChernVector`` is the
public representation of a bundle's class data; ``ChernPolynomial`` is the
ring element used for products.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from math import comb
from typing import Iterable, Sequence


@dataclass(frozen=True)
class ChernVector:
    """Chern classes (c_1, ..., c_n) of a rank-n bundle on CP^dim.

    Only classes up to min(rank, dim) are stored: c_i = 0 for i > rank
    because the bundle has no higher Chern classes, and for i > dim because
    H^(2i)(CP^dim) vanishes.  A full rank-length tuple is accepted and its
    vanishing tail dropped.
    """

    rank: int
    dim: int
    classes: tuple[int, ...]

    def __post_init__(self):
        if self.rank < 1:
            raise ValueError(f"rank must be >= 1, got {self.rank}")
        if self.dim < 1:
            raise ValueError(f"ambient dimension must be >= 1, got {self.dim}")
        stored = min(self.rank, self.dim)
        entries = tuple(operator.index(c) for c in self.classes)
        if len(entries) == self.rank:
            entries = entries[:stored]
        elif len(entries) != stored:
            raise ValueError(
                f"expected {stored} classes for rank {self.rank} on CP^{self.dim}"
                f" (or all {self.rank}), got {len(entries)}"
            )
        object.__setattr__(self, "classes", entries)

    def padded(self, length: int) -> tuple[int, ...]:
        """Classes zero-extended to the given length."""
        if length < len(self.classes):
            raise ValueError(f"cannot pad {len(self.classes)} classes to length {length}")
        return self.classes + (0,) * (length - len(self.classes))

    @property
    def full_classes(self) -> tuple[int, ...]:
        """All rank-many classes (c_1, ..., c_n), zeros where they vanish."""
        return self.padded(self.rank)


@dataclass(frozen=True)
class ChernPolynomial:
    """Total Chern class 1 + c_1 t + ... + c_m t^m in Z[t]/(t^(m+1))."""

    dim: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if self.dim < 0:
            raise ValueError(f"ambient dimension must be >= 0, got {self.dim}")
        coeffs = tuple(operator.index(c) for c in self.coeffs)
        if len(coeffs) != self.dim + 1:
            raise ValueError(
                f"need exactly {self.dim + 1} coefficients on CP^{self.dim}, got {len(coeffs)}"
            )
        if coeffs[0] != 1:
            raise ValueError("a total Chern class has constant term 1")
        object.__setattr__(self, "coeffs", coeffs)

    def __mul__(self, other: "ChernPolynomial") -> "ChernPolynomial":
        return whitney_sum(self, other)

    def __str__(self) -> str:
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0 and i > 0:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                mono = "t" if i == 1 else f"t^{i}"
                parts.append(f"{c}{mono}" if c >= 0 else f"({c}){mono}")
        return " + ".join(parts)


def total_chern(v: ChernVector) -> ChernPolynomial:
    """Embed a class vector as 1 + sum c_i t^i, truncated at t^(dim+1)."""
    m = v.dim
    body = v.classes[:m]
    coeffs = (1,) + body + (0,) * (m - len(body))
    return ChernPolynomial(m, coeffs)


def whitney_sum(a: ChernPolynomial, b: ChernPolynomial) -> ChernPolynomial:
    """Product of total Chern classes (the class of a direct sum)."""
    if a.dim != b.dim:
        raise ValueError(
            f"cannot multiply classes on CP^{a.dim} and CP^{b.dim}; "
            "re-embed in a common ambient space first"
        )
    m = a.dim
    out = [0] * (m + 1)
    for i, ai in enumerate(a.coeffs):
        if ai == 0:
            continue
        for j in range(0, m + 1 - i):
            out[i + j] += ai * b.coeffs[j]
    return ChernPolynomial(m, tuple(out))


def twist_by_line(v: ChernVector, d: int) -> ChernVector:
    """Chern classes of E tensor O(d) for E with the classes of ``v``.

    c_k' = sum_{i=0}^{k} C(rank - i, k - i) c_i d^(k-i), with c_0 = 1.
    Twisting shifts every Chern root by d.
    """
    d = operator.index(d)
    n = v.rank
    c = (1,) + v.classes
    new = []
    for k in range(1, len(v.classes) + 1):
        acc = 0
        for i in range(0, k + 1):
            w = comb(n - i, k - i)
            if w:
                acc += w * c[i] * d ** (k - i)
        new.append(acc)
    return ChernVector(v.rank, v.dim, tuple(new))


def dual(v: ChernVector) -> ChernVector:
    """Chern classes of the dual bundle: c_i -> (-1)^i c_i."""
    return ChernVector(
        v.rank, v.dim, tuple(-c if i % 2 == 0 else c for i, c in enumerate(v.classes))
    )


def from_line_bundles(degrees: Iterable[int], dim: int) -> ChernVector:
    """Class vector of O(d_1) + ... + O(d_n) on CP^dim."""
    ds = [operator.index(d) for d in degrees]
    if not ds:
        raise ValueError("need at least one line bundle")
    return ChernVector(len(ds), dim, elementary_symmetric(ds))


def elementary_symmetric(values: Sequence[int]) -> tuple[int, ...]:
    """(e_1, ..., e_n) of the given integers, by incremental expansion."""
    e = [1]
    for d in values:
        e.append(0)
        for k in range(len(e) - 1, 0, -1):
            e[k] += d * e[k - 1]
    return tuple(e[1:])
