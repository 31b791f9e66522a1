"""Degree-based upper bound on the Wiener index and its spectral ingredient.

``F(x) = x^T C x / 2`` with ``C[i][j] = |i - j|``, so ``F <= lambda_1(C)/2 * |x|^2``
and ``lambda_1(C) <= k(k-1)/2`` give

    W(T) <= (n-1)^2 + k(k-1)/4 * sum_i (d_i - 1)^2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import NoConvergence, UnsupportedK
from .graph import DegreeSequence, check_int64


@dataclass(frozen=True)
class BoundReport:
    """Exact bound plus the numerically computed top eigenvalue of ``C``."""

    bound: Fraction
    tight: bool
    k: int
    lambda1: float
    lambda_cap: Fraction

    def to_dict(self) -> dict:
        return {
            "bound": [self.bound.numerator, self.bound.denominator],
            "tight": self.tight,
            "k": self.k,
            "lambda1": self.lambda1,
            "lambda_cap": [self.lambda_cap.numerator, self.lambda_cap.denominator],
        }


def upper_bound(d: DegreeSequence, tol: float = 1e-10) -> BoundReport:
    """Upper bound on ``W`` over all trees with degree sequence ``d``.

    ``tight`` is set when the bound is attained, i.e. ``k == 2`` and ``d1 == d2``.
    """
    k = d.k
    if k < 1:
        raise UnsupportedK("the degree bound needs at least one internal vertex")
    w = d.internal_weights
    squares = check_int64(sum(x * x for x in w), "sum of squares")
    bound = (d.n - 1) ** 2 + Fraction(k * (k - 1), 4) * squares
    check_int64(bound.numerator, "bound numerator")
    lam = spectral_radius_C(k, tol) if k >= 2 else 0.0
    return BoundReport(
        bound=bound,
        tight=k == 2 and d.degrees[0] == d.degrees[1],
        k=k,
        lambda1=lam,
        lambda_cap=Fraction(k * (k - 1), 2),
    )


def apply_C(z: np.ndarray) -> np.ndarray:
    """Multiply by ``C[i][j] = |i - j|`` in O(k) via prefix sums."""
    idx = np.arange(z.size, dtype=float)
    p = np.cumsum(z)
    q = np.cumsum(idx * z)
    below = idx * p - q
    above = (q[-1] - q) - idx * (p[-1] - p)
    return below + above


def spectral_radius_C(k: int, tol: float = 1e-10, max_iter: int = 100_000) -> float:
    """Largest eigenvalue of the ``k x k`` matrix ``|i - j|`` by power iteration.

    Starts from the all-ones vector and stops once the residual
    ``|Cx - lambda x|`` falls below ``tol * lambda``.
    """
    if not 2 <= k <= 10_000:
        raise ValueError(f"k must lie in 2..10000, got {k}")
    if tol <= 0:
        raise ValueError("tol must be positive")
    x = np.full(k, 1.0 / np.sqrt(k))
    for _ in range(max_iter):
        y = apply_C(x)
        lam = float(x @ y)
        if np.linalg.norm(y - lam * x) <= tol * abs(lam):
            return lam
        x = y / np.linalg.norm(y)
    raise NoConvergence(f"power iteration for k={k} did not reach tol={tol} in {max_iter} steps")
