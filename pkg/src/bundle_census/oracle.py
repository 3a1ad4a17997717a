"""Floating-point verification path for the exact engine.

Finds the Chern roots delta_j numerically (companion-matrix eigenvalues
via numpy, then Newton polishing), evaluates sum_j C(delta_j, r) directly,
and compares against the exact symmetric-function route.  This catches
sign-convention and recurrence bugs, but it never decides integrality:
that is exactly the question floating point cannot answer, so near-integer
values are reported with diagnostics only.

Results carry reliability flags instead of silently degrading: a large
root residual, a conditioning estimate beyond the trustworthy range, or an
imaginary part above tolerance marks the value unreliable rather than
letting it masquerade as a disagreement.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Optional, Sequence

import numpy as np

from .symfun import ClassData, binomial_sum, coefficients

# residual / imaginary-part tolerances scale with the coefficient size;
# the agreement tolerance scales with (1 + max|delta|)^r since that is the
# conditioning of the falling factorial at the roots
RESIDUAL_SCALE = 1e-8
IMAG_SCALE = 1e-8
AGREE_TOL = 1e-6
CONDITION_CAP = 1e12


@dataclass(frozen=True)
class NumericRoots:
    """Numerically computed Chern roots delta_j with a residual certificate.

    The roots satisfy prod(y + delta_j) = y^n + c_1 y^(n-1) + ... + c_n,
    i.e. they are the negatives of the polynomial's zeros.  ``residual``
    is the max absolute value of the polynomial at the computed zeros;
    ``reliable`` is False when it exceeds RESIDUAL_SCALE * (1 + max|c_i|),
    and also when a coefficient exceeds 2^53: past that the polynomial
    being solved is no longer the polynomial that was asked about.
    """

    roots: tuple[complex, ...]
    residual: float
    reliable: bool


@dataclass(frozen=True)
class AgreementRow:
    """Exact-vs-numeric comparison of one binomial sum B_r."""

    r: int
    exact: Fraction
    numeric: complex
    difference: float
    tolerance: float
    flagged: bool

    @property
    def agrees(self) -> bool:
        return self.flagged or self.difference < self.tolerance

    @property
    def nearest_integer_distance(self) -> float:
        """How far the numeric value sits from the closest integer.

        Diagnostic only: a small distance never certifies integrality,
        which is decided exclusively by the exact path.
        """
        real = self.numeric.real
        if real != real or abs(real) == float("inf"):
            return float("inf")
        return abs(real - round(real))


def find_roots(c: ClassData, polish_steps: int = 4) -> NumericRoots:
    """All n roots delta_j of y^n + c_1 y^(n-1) + ... + c_n, with residual.

    numpy's companion-matrix eigenvalues are refined by damped Newton steps
    (a step is kept only when it does not increase |P|), so clustered roots
    cannot make polishing diverge.  Non-convergence is reported through the
    ``reliable`` flag, never as a silent answer.
    """
    coeffs = coefficients(c)
    n = len(coeffs)
    if n < 1:
        raise ValueError("need a polynomial of degree >= 1")
    if any(abs(x) > 2**1000 for x in coeffs):
        # beyond double range there is nothing to compute, only to flag
        return NumericRoots(
            roots=(complex(float("nan"), 0.0),) * n,
            residual=float("inf"),
            reliable=False,
        )
    poly = np.array((1,) + coeffs, dtype=np.float64)
    dpoly = np.polyder(poly)
    with np.errstate(over="ignore", invalid="ignore", divide="ignore"):
        zeros = np.roots(poly).astype(np.complex128)
        values = np.polyval(poly, zeros)
        for _ in range(polish_steps):
            derivs = np.polyval(dpoly, zeros)
            ok = np.abs(derivs) > 0
            step = np.zeros_like(zeros)
            step[ok] = values[ok] / derivs[ok]
            candidate = zeros - step
            cand_values = np.polyval(poly, candidate)
            better = np.abs(cand_values) <= np.abs(values)
            zeros = np.where(better, candidate, zeros)
            values = np.where(better, cand_values, values)
    residual = float(np.max(np.abs(values)))
    limit = RESIDUAL_SCALE * (1.0 + max(abs(x) for x in coeffs))
    representable = all(abs(x) <= 2**53 for x in coeffs)
    deltas = sorted((-z for z in zeros.tolist()), key=lambda w: (w.real, w.imag))
    return NumericRoots(
        roots=tuple(deltas),
        residual=residual,
        reliable=representable and residual <= limit,
    )


def binomial_sum_numeric(c: ClassData, r: int, roots: Optional[NumericRoots] = None) -> complex:
    """sum_j delta_j (delta_j - 1) ... (delta_j - r + 1) / r! in floating point.

    The sum is real up to rounding (roots come in conjugate pairs); the
    imaginary part is left in place so callers can check it against
    tolerance instead of trusting a silent projection.
    """
    if r < 1:
        raise ValueError(f"need r >= 1, got {r}")
    if roots is None:
        roots = find_roots(c)
    total = 0j
    for delta in roots.roots:
        term = 1 + 0j
        for i in range(r):
            term *= delta - i
        total += term
    return total / float(factorial(r))


def _saturating_float(x: int) -> float:
    try:
        return float(x)
    except OverflowError:
        return float("inf")


def compare_exact_numeric(c: ClassData, r_values: Sequence[int]) -> tuple[NumericRoots, list[AgreementRow]]:
    """Exact and numeric B_r side by side for each requested r."""
    coeffs = coefficients(c)
    roots = find_roots(coeffs)
    max_root = max((abs(d) for d in roots.roots), default=0.0)
    imag_limit = IMAG_SCALE * (1.0 + _saturating_float(sum(abs(x) for x in coeffs)))
    rows = []
    for r in r_values:
        exact = binomial_sum(coeffs, r)
        numeric = binomial_sum_numeric(coeffs, r, roots)
        kappa = (1.0 + max_root) ** r
        flagged = (
            not roots.reliable
            or kappa > CONDITION_CAP
            or abs(numeric.imag) > imag_limit
        )
        try:
            difference = abs(numeric - float(exact))
        except OverflowError:
            difference = float("inf")
            flagged = True
        rows.append(
            AgreementRow(
                r=r,
                exact=exact,
                numeric=numeric,
                difference=difference,
                tolerance=AGREE_TOL * kappa,
                flagged=flagged,
            )
        )
    return roots, rows
