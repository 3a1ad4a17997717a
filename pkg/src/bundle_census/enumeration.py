"""Existence and counting of bundle isomorphism classes.

The decision engine.  Integers (c_1, ..., c_N) are the Chern classes of a
rank-N bundle on CP^N exactly when every binomial sum B_r of their Chern
roots, 2 <= r <= N, is an integer (the Schwarzenberger condition S_N); a
rank-n bundle on CP^(n+1) exists for (c_1, ..., c_n) exactly when
(c_1, ..., c_n, 0) satisfies S_(n+1).  On top of the existence predicate,
``count_bundles`` resolves the number of isomorphism classes in the three
regimes where the answer is known in full:

* rank 1: a unique line bundle for every first Chern class;
* rank >= dim (stable range): a unique bundle when S_rank holds, else none;
* dim == rank + 1 (corank one): none unless S_(rank+1) holds for the
  zero-extended classes; one class if rank or c_1 is odd; two if rank and
  c_1 are both even, in which case exactly one of the two extends to the
  next projective space.

Everything else is honestly reported as unknown.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional, Sequence

from . import kernels
from .chern import ChernVector

LINE_BUNDLE = "line_bundle"
STABLE_RANGE = "stable_range"
CORANK_ONE = "corank_one"
UNSUPPORTED = "unsupported"


class BinomialTerm(NamedTuple):
    """One tested value B_r with its integrality verdict."""

    r: int
    value: Fraction
    integral: bool


@dataclass(frozen=True)
class SchwarzenbergerReport:
    """Outcome of testing S_N: every B_r for r in [2, N], exactly."""

    n_condition: int
    values: tuple[BinomialTerm, ...]
    satisfied: bool

    def failing(self) -> tuple[BinomialTerm, ...]:
        return tuple(t for t in self.values if not t.integral)


@dataclass(frozen=True)
class BundleCount:
    """Number of isomorphism classes with the given Chern classes.

    ``count`` is 0, 1 or 2 when the regime is resolved, None when the
    (rank, dim) pair is outside the supported regimes.  ``extension_note``
    is set exactly when two classes exist: precisely one of them extends
    to CP^(dim+1).
    """

    count: Optional[int]
    regime: str
    extension_note: Optional[str] = None
    report: Optional[SchwarzenbergerReport] = None

    @property
    def known(self) -> bool:
        return self.count is not None


def check_schwarzenberger(classes: Sequence[int], N: int) -> SchwarzenbergerReport:
    """Test S_N for integers (c_1, ..., c_N).

    The classes must already have length N; callers whose rank is smaller
    pad with zeros themselves (zero-extension changes the condition being
    tested, so it is never done implicitly here).
    """
    N = operator.index(N)
    if N < 1:
        raise ValueError(f"condition order must be >= 1, got {N}")
    coeffs = tuple(operator.index(c) for c in classes)
    if len(coeffs) != N:
        raise ValueError(f"S_{N} needs exactly {N} classes, got {len(coeffs)}")
    terms = tuple(
        BinomialTerm(r, Fraction(num, den), den == 1)
        for r, num, den in kernels.schwarz_terms(coeffs, N)
    )
    return SchwarzenbergerReport(
        n_condition=N,
        values=terms,
        satisfied=all(t.integral for t in terms),
    )


def exists_rank_n_on_cp_n_plus_1(v: ChernVector) -> SchwarzenbergerReport:
    """Existence test for a rank-n bundle on CP^(n+1): S_(n+1) on (c, 0)."""
    if v.dim != v.rank + 1:
        raise ValueError(
            f"corank-one test needs dim == rank + 1, got rank {v.rank} on CP^{v.dim}"
        )
    return check_schwarzenberger(v.classes + (0,), v.rank + 1)


def count_bundles(v: ChernVector) -> BundleCount:
    """Count isomorphism classes of rank-``v.rank`` bundles on CP^``v.dim``."""
    if v.rank == 1:
        # every integer is the first Chern class of exactly one line bundle
        return BundleCount(count=1, regime=LINE_BUNDLE)
    if v.rank >= v.dim:
        report = check_schwarzenberger(v.padded(v.rank), v.rank)
        return BundleCount(
            count=1 if report.satisfied else 0,
            regime=STABLE_RANGE,
            report=report,
        )
    if v.dim == v.rank + 1:
        report = exists_rank_n_on_cp_n_plus_1(v)
        if not report.satisfied:
            return BundleCount(count=0, regime=CORANK_ONE, report=report)
        if v.rank % 2 == 1 or v.classes[0] % 2 == 1:
            return BundleCount(count=1, regime=CORANK_ONE, report=report)
        return BundleCount(
            count=2,
            regime=CORANK_ONE,
            extension_note=(
                f"exactly one of the two isomorphism classes extends to CP^{v.dim + 1}"
            ),
            report=report,
        )
    return BundleCount(count=None, regime=UNSUPPORTED)


def reduce_stable(classes: Sequence[int], rank: int, dim: int) -> bool:
    """Whether a stable class on CP^(rank+1) has a rank-``rank`` representative.

    Takes the classes up to degree dim == rank + 1 and answers by the
    vanishing of c_(rank+1), which is the exact obstruction.
    """
    rank = operator.index(rank)
    dim = operator.index(dim)
    if dim != rank + 1:
        raise ValueError(f"rank reduction rule applies on CP^(rank+1); got rank {rank}, dim {dim}")
    coeffs = tuple(operator.index(c) for c in classes)
    if len(coeffs) != dim:
        raise ValueError(f"need classes up to degree {dim}, got {len(coeffs)}")
    return coeffs[rank] == 0
