"""Caterpillars ``T(y_1, ..., y_k)`` and the spine objective ``F``.

Spine vertex ``v_i`` has degree ``y_i + 1``.  Every caterpillar with spine
weights ``y`` has ``n = sum(y) + 2`` vertices and Wiener index
``(n - 1)**2 + F(y)`` where

    F(y) = sum_{i=1}^{k-1} (y_1 + ... + y_i) * (y_{i+1} + ... + y_k).

Indices in this module follow the 1-based convention of that formula wherever
a function takes a position argument.
"""

from __future__ import annotations

from collections.abc import Sequence
from itertools import accumulate

from .errors import UnsupportedK
from .graph import Tree, check_int64

SpineWeights = tuple[int, ...]


def as_spine_weights(y: Sequence[int]) -> SpineWeights:
    """Return ``y`` as a tuple after checking every weight is a positive integer."""
    out = tuple(int(v) for v in y)
    for v in out:
        if v < 1:
            raise ValueError(f"spine weights must be >= 1, got {v}")
    return out


def parse_spine_weights(text: str) -> SpineWeights:
    """Parse the comma-separated text form, e.g. ``"12,2,3,4,4,4"``."""
    text = text.strip()
    if not text:
        return ()
    try:
        return as_spine_weights(int(tok) for tok in text.split(","))
    except ValueError as exc:
        raise ValueError(f"bad spine weights {text!r}: {exc}") from None


def f_value(y: Sequence[int]) -> int:
    """Evaluate ``F`` in O(k) using prefix sums.

    >>> f_value((12, 2, 3, 4, 4, 4))
    886
    """
    total = sum(y)
    value = sum(p * (total - p) for p in accumulate(y[:-1]))
    return check_int64(value, "F")


def n_vertices(y: Sequence[int]) -> int:
    return sum(y) + 2


def build_caterpillar(y: Sequence[int]) -> Tree:
    """Construct ``T(y)``: spine ``0..k-1`` followed by the pendant vertices.

    Spine endpoints carry ``y_1`` (resp. ``y_k``) pendants and interior spine
    vertices ``y_i - 1``, so each spine vertex has degree ``y_i + 1``.  With
    ``k == 1`` the lone spine vertex is a star centre with ``y_1 + 1`` leaves;
    with ``k == 0`` the result is a single edge.
    """
    y = as_spine_weights(y)
    k = len(y)
    if k == 0:
        return Tree(2, ((0, 1),))
    n = n_vertices(y)
    edges = [(i, i + 1) for i in range(k - 1)]
    nxt = k
    for i, yi in enumerate(y):
        pendants = yi + 1 - (i > 0) - (i < k - 1)
        for _ in range(pendants):
            edges.append((i, nxt))
            nxt += 1
    assert nxt == n
    return Tree(n, tuple(edges))


def caterpillar_wiener(y: Sequence[int]) -> int:
    """Wiener index of ``T(y)`` from the closed formula ``(n-1)^2 + F(y)``."""
    n = n_vertices(y)
    return check_int64((n - 1) ** 2 + f_value(y), "Wiener index")


def swapped(z: Sequence[int], i: int) -> SpineWeights:
    """Copy of ``z`` with 1-based positions ``i`` and ``i + 1`` exchanged."""
    out = list(z)
    out[i - 1], out[i] = out[i], out[i - 1]
    return tuple(out)


def swap_delta(z: Sequence[int], i: int) -> int:
    """``F(z) - F(z with positions i, i+1 exchanged)`` without evaluating ``F``.

    Equals ``(z_{i+1} - z_i) * (sum_{j<i} z_j - sum_{j>i+1} z_j)``.
    """
    k = len(z)
    if not 1 <= i <= k - 1:
        raise ValueError(f"swap position must lie in 1..{k - 1}, got {i}")
    left = sum(z[: i - 1])
    right = sum(z[i + 1 :])
    return (z[i] - z[i - 1]) * (left - right)


def lemma34_deltas(w: Sequence[int]) -> tuple[int, int, int, int]:
    """Closed forms for the F-gaps between consecutive six-vertex candidates.

    For nonincreasing ``w`` of length 6, with the candidate spines

        P1 = (w1,w6,w5,w4,w3,w2)   P2 = (w1,w5,w6,w4,w3,w2)
        P3 = (w1,w4,w6,w5,w3,w2)   P4 = (w1,w4,w5,w6,w3,w2)
        P5 = (w1,w3,w6,w5,w4,w2)

    returns ``F(P1)-F(P2)``, ``F(P2)-F(P3)``, ``F(P3)-F(P4)`` and ``F(P4)-F(P5)``.
    """
    if len(w) != 6:
        raise UnsupportedK(f"expected six weights, got {len(w)}")
    w1, w2, w3, w4, w5, w6 = w
    if not all(a >= b for a, b in zip(w, w[1:])) or w6 < 1:
        raise ValueError(f"weights must be nonincreasing and positive: {tuple(w)}")
    return (
        (w1 - w2 - w3 - w4) * (w5 - w6),
        2 * (w1 - w2 - w3) * (w4 - w5),
        (w1 + w4 - w2 - w3) * (w5 - w6),
        (3 * w3 - 3 * w4 - w5 + w6) * (w1 - w2),
    )


def pivot_balance(z: Sequence[int], p: int) -> int:
    """``sum_{i <= p-2} z_i - sum_{i >= p+1} z_i`` (1-based ``p``)."""
    return sum(z[: max(p - 2, 0)]) - sum(z[p:])


def find_pivot(z: Sequence[int]) -> int:
    """Return the pivot ``t`` in ``2..k-2`` with balance(t) <= 0 < balance(t+1).

    Needs ``k >= 5``.  Existence is guaranteed for maximizing arrangements;
    for an arbitrary ``z`` whose balance never turns positive a ``ValueError``
    is raised.
    """
    k = len(z)
    if k < 5:
        raise UnsupportedK(f"pivot is defined for k >= 5, got k={k}")
    for t in range(2, k - 1):
        if pivot_balance(z, t) <= 0 < pivot_balance(z, t + 1):
            return t
    raise ValueError(f"no pivot exists for {tuple(z)}")


def is_valley(z: Sequence[int]) -> bool:
    """True iff ``z`` is nonincreasing up to some index and nondecreasing after."""
    k = len(z)
    m = 0
    while m + 1 < k and z[m] >= z[m + 1]:
        m += 1
    return all(z[j] <= z[j + 1] for j in range(m, k - 1))


def canonicalize(z: Sequence[int]) -> SpineWeights:
    """Pick the lexicographically larger of ``z`` and its reversal."""
    z = tuple(z)
    return max(z, z[::-1])
