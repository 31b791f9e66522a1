"""Maximize ``F`` over arrangements of the internal-vertex weights.

A tree with degree sequence ``d`` and ``k`` internal vertices attains the
largest Wiener index exactly when it is a caterpillar whose spine weights
maximize ``F`` over all arrangements of ``w_i = d_i - 1``.  Three solvers are
offered, from general to specialised:

* :func:`brute_force_max` - every distinct arrangement; the reference oracle.
* :func:`valley_max` - only valley-shaped arrangements (at most ``2**(k-2)``).
* :func:`closed_form_max` - the published case analysis for ``2 <= k <= 6``.

:func:`greedy_caterpillar` is the alternating end-placement construction kept
as a baseline; it is not always optimal.
"""

from __future__ import annotations

import os
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from itertools import groupby
from typing import Literal

from .caterpillar import SpineWeights, canonicalize, f_value
from .errors import InstanceTooLarge, UnsupportedK
from .graph import DegreeSequence, check_int64

Method = Literal["oracle", "valley", "closed_form", "greedy"]

DEFAULT_ORACLE_CAP = 9
DEFAULT_VALLEY_CAP = 25
CLOSED_FORM_MAX_K = 6


def default_oracle_cap() -> int:
    """Oracle cap from ``WIENER_ORACLE_CAP``, else 9."""
    raw = os.environ.get("WIENER_ORACLE_CAP")
    if raw is None or not raw.strip():
        return DEFAULT_ORACLE_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise ValueError(f"WIENER_ORACLE_CAP must be an integer, got {raw!r}") from None
    if cap < 0:
        raise ValueError(f"WIENER_ORACLE_CAP must be >= 0, got {cap}")
    return cap


def as_weight_multiset(w: Iterable[int]) -> tuple[int, ...]:
    """Sort weights nonincreasingly and check they are positive integers."""
    out = tuple(sorted((int(v) for v in w), reverse=True))
    if out and out[-1] < 1:
        raise ValueError(f"internal weights must be >= 1, got {out}")
    return out


@dataclass(frozen=True)
class MaxResult:
    """Optimal ``F``, the matching Wiener index, and every optimal spine.

    ``argmax`` holds canonical arrangements (the lexicographically larger of
    each mirror pair), sorted ascending.  ``case`` names the closed-form
    branch that produced the result, when there is one.
    """

    f_star: int
    w_star: int
    n: int
    argmax: tuple[SpineWeights, ...]
    method: Method
    case: str | None = None

    def to_dict(self) -> dict:
        d = {
            "method": self.method,
            "n": self.n,
            "f_star": self.f_star,
            "w_star": self.w_star,
            "argmax": [list(a) for a in self.argmax],
        }
        if self.case is not None:
            d["case"] = self.case
        return d


def _result(w: Sequence[int], f_star: int, arrangements: Iterable[SpineWeights], method: Method, case: str | None = None) -> MaxResult:
    n = sum(w) + 2
    argmax = tuple(sorted({canonicalize(a) for a in arrangements}))
    return MaxResult(f_star, check_int64((n - 1) ** 2 + f_star, "Wiener index"), n, argmax, method, case)


def multiset_permutations(items: Iterable[int]) -> Iterator[tuple[int, ...]]:
    """Yield each distinct permutation of ``items`` once, in lexicographic order."""
    a = sorted(items)
    n = len(a)
    while True:
        yield tuple(a)
        j = n - 2
        while j >= 0 and a[j] >= a[j + 1]:
            j -= 1
        if j < 0:
            return
        m = n - 1
        while a[m] <= a[j]:
            m -= 1
        a[j], a[m] = a[m], a[j]
        a[j + 1 :] = a[: j : -1]


def brute_force_max(w: Iterable[int], cap: int | None = None) -> MaxResult:
    """Exhaustive maximization over all distinct arrangements of ``w``."""
    w = as_weight_multiset(w)
    cap = default_oracle_cap() if cap is None else cap
    if len(w) > cap:
        raise InstanceTooLarge(f"k={len(w)} exceeds the oracle cap {cap}")
    best = -1
    winners: list[SpineWeights] = []
    for perm in multiset_permutations(w):
        if perm[0] < perm[-1]:
            continue  # mirror image of a permutation that is visited
        value = f_value(perm)
        if value > best:
            best, winners = value, [perm]
        elif value == best:
            winners.append(perm)
    return _result(w, best, winners, "oracle")


def _valley_walk(w: tuple[int, ...], keep_all: bool = False) -> tuple[int, list[SpineWeights]]:
    """Search valley arrangements of nonincreasing ``w``.

    Returns the best ``F`` and the arrangements attaining it, or with
    ``keep_all`` every valley arrangement visited (best ``F`` still first).

    Weights are placed from largest to smallest, each on the next free slot
    from the left or from the right, so the left part is nonincreasing and the
    right part nondecreasing; the smallest weight fills the last slot.  Equal
    weights are treated as a block (only the split count matters) and the
    largest weight is pinned to the left end, which covers every valley shape
    up to reversal.  ``F = sum_{i<j} y_i y_j (j - i)`` is accumulated one
    placement at a time, so each leaf costs O(1) unless it is kept.
    """
    k = len(w)
    if k <= 2:
        return f_value(w), [w]
    runs = [(v, len(list(g))) for v, g in groupby(w[1:-1])]
    n_runs = len(runs)
    last = w[-1]
    left: list[int] = [w[0]]
    right: list[int] = []
    best = -1
    kept: list[SpineWeights] = []

    def rec(r: int, f: int, s_l: int, m_l: int, s_r: int, m_r: int) -> None:
        nonlocal best, kept
        if r == n_runs:
            pos = len(left) + 1
            value = f + last * (pos * s_l - m_l + m_r - pos * s_r)
            if keep_all or value >= best:
                z = (*left, last, *reversed(right))
                if value > best:
                    best = value
                    if not keep_all:
                        kept = []
                kept.append(z)
            return
        v, m = runs[r]
        # start with the whole block on the right, then move one element at a time left
        f2, sl, ml, sr, mr = f, s_l, m_l, s_r, m_r
        for _ in range(m):
            pos = k - len(right)
            f2 += v * (pos * sl - ml + mr - pos * sr)
            sr += v
            mr += v * pos
            right.append(v)
        rec(r + 1, f2, sl, ml, sr, mr)
        for _ in range(m):
            pos_r = k - len(right) + 1
            right.pop()
            sr -= v
            mr -= v * pos_r
            f2 -= v * (pos_r * sl - ml + mr - pos_r * sr)
            pos = len(left) + 1
            f2 += v * (pos * sl - ml + mr - pos * sr)
            sl += v
            ml += v * pos
            left.append(v)
            rec(r + 1, f2, sl, ml, sr, mr)
        del left[len(left) - m :]

    rec(0, 0, w[0], w[0], 0, 0)
    return best, kept


def valley_arrangements(w: Iterable[int]) -> list[SpineWeights]:
    """Every valley-shaped arrangement of ``w``, canonical and sorted."""
    w = as_weight_multiset(w)
    return sorted({canonicalize(z) for z in _valley_walk(w, keep_all=True)[1]})


def valley_max(w: Iterable[int]) -> MaxResult:
    """Maximize ``F`` over valley-shaped arrangements only."""
    w = as_weight_multiset(w)
    best, winners = _valley_walk(w)
    return _result(w, check_int64(best, "F"), winners, "valley")


def k6_candidates(w: Sequence[int]) -> list[SpineWeights]:
    """The five six-vertex spines among which every maximizer lies."""
    w = as_weight_multiset(w)
    if len(w) != 6:
        raise UnsupportedK(f"k6_candidates needs k=6, got k={len(w)}")
    w1, w2, w3, w4, w5, w6 = w
    return [
        (w1, w6, w5, w4, w3, w2),
        (w1, w5, w6, w4, w3, w2),
        (w1, w4, w6, w5, w3, w2),
        (w1, w4, w5, w6, w3, w2),
        (w1, w3, w6, w5, w4, w2),
    ]


def k5_case(w: Sequence[int]) -> int:
    """Branch 1-3 of the five-vertex case split, as stated on degrees.

    The statement compares ``d1`` with ``d2 + d3``; with ``d = w + 1`` that is
    ``w1`` against ``w2 + w3 + 1``.
    """
    w1, w2, w3 = w[0], w[1], w[2]
    pivot = w2 + w3 + 1
    if w1 > pivot:
        return 1
    if w1 == pivot:
        return 2
    return 3


def k6_case(w: Sequence[int]) -> int:
    """Branch 1-11 of the six-vertex case split, evaluated on weights.

    The fractional threshold ``w2 + (w5 - w6)/3`` is compared after scaling by
    three, so every test is exact integer arithmetic.
    """
    w1, w2, w3, w4, w5, w6 = w
    if w1 > w2 + w3 + w4:
        return 1
    if w1 == w2 + w3 + w4:
        return 2
    if w1 > w2 + w3:
        return 3
    if w1 == w2 + w3:
        return 4
    a3 = 3 * w1
    c3 = 3 * (w2 + w3 - w4)
    d3 = 3 * w2 + w5 - w6  # 3 * (w2 + (w5 - w6)/3)
    if a3 > max(c3, d3):
        return 5
    if a3 == c3 and c3 > d3:
        return 6
    if a3 == d3 and d3 > c3:
        return 7
    if a3 == c3 == d3:
        return 8
    if d3 <= a3 < c3 or a3 <= d3 < c3:
        return 9
    if c3 <= a3 < d3 or a3 <= c3 < d3:
        return 10
    if a3 < d3 == c3:
        return 11
    raise AssertionError(f"no six-vertex case matched {tuple(w)}")  # unreachable: cases are exhaustive


_K6_CASE_MEMBERS: dict[int, tuple[int, ...]] = {
    1: (0,),
    2: (0, 1),
    3: (1,),
    4: (1, 2),
    5: (2,),
    6: (2, 3),
    7: (2, 4),
    8: (2, 3, 4),
    9: (3,),
    10: (4,),
    11: (3, 4),
}


def closed_form_claim(w: Iterable[int]) -> tuple[str, list[SpineWeights]]:
    """The case label and the optimal spines claimed by the published case analysis.

    Arrangements are returned exactly as stated (not canonicalized, possibly
    with repeats when weights coincide); use :func:`closed_form_max` for a
    validated result.
    """
    w = as_weight_multiset(w)
    k = len(w)
    if not 2 <= k <= CLOSED_FORM_MAX_K:
        raise UnsupportedK(f"closed forms cover 2 <= k <= 6, got k={k}")
    if k == 2:
        return "k2", [w]
    if k == 3:
        w1, w2, w3 = w
        return "k3", [(w1, w3, w2)]
    if k == 4:
        w1, w2, w3, w4 = w
        return "k4", [(w1, w4, w3, w2)]
    if k == 5:
        w1, w2, w3, w4, w5 = w
        a = (w1, w5, w4, w3, w2)
        b = (w1, w4, w5, w3, w2)
        case = k5_case(w)
        return f"k5.{case}", {1: [a], 2: [a, b], 3: [b]}[case]
    case = k6_case(w)
    cands = k6_candidates(w)
    return f"k6.{case}", [cands[i] for i in _K6_CASE_MEMBERS[case]]


def closed_form_max(w: Iterable[int]) -> MaxResult:
    """Closed-form optimum for ``2 <= k <= 6``.

    ``f_star`` is the best ``F`` among the claimed spines and ``argmax`` keeps
    the claimed spines attaining it.  The audit compares these claims with the
    exhaustive oracle.
    """
    w = as_weight_multiset(w)
    case, claimed = closed_form_claim(w)
    values = {z: f_value(z) for z in claimed}
    best = max(values.values())
    return _result(w, best, [z for z, v in values.items() if v == best], "closed_form", case)


def greedy_arrangement(w: Iterable[int]) -> SpineWeights:
    """Alternate nonincreasing weights between the two spine ends, moving inward.

    Produces ``y_1 >= y_k >= y_2 >= y_{k-1} >= ...``.
    """
    w = as_weight_multiset(w)
    left, right = list(w[0::2]), list(w[1::2])
    return (*left, *reversed(right))


def greedy_caterpillar(d: DegreeSequence) -> SpineWeights:
    """Spine weights of the greedy caterpillar for degree sequence ``d``."""
    return greedy_arrangement(d.internal_weights)


def solve(
    d: DegreeSequence,
    method: str = "auto",
    *,
    oracle_cap: int | None = None,
    valley_cap: int = DEFAULT_VALLEY_CAP,
    closed_max_k: int = CLOSED_FORM_MAX_K,
) -> MaxResult:
    """Maximum Wiener index over all trees with degree sequence ``d``.

    ``method="auto"`` uses closed forms for ``k <= closed_max_k``, the valley
    search up to ``valley_cap`` and the exhaustive oracle beyond that when the
    oracle cap allows it.
    """
    w = d.internal_weights
    k = len(w)
    if method not in ("auto", "oracle", "valley", "closed"):
        raise ValueError(f"unknown method {method!r}")
    if k <= 1:
        tag: Method = {"valley": "valley", "closed": "closed_form"}.get(method, "oracle")  # type: ignore[assignment]
        return _result(w, 0, [w], tag, "k<=1" if tag == "closed_form" else None)
    if method == "oracle":
        return brute_force_max(w, oracle_cap)
    if method == "valley":
        return valley_max(w)
    if method == "closed":
        return closed_form_max(w)
    if k <= min(closed_max_k, CLOSED_FORM_MAX_K):
        return closed_form_max(w)
    if k <= valley_cap:
        return valley_max(w)
    cap = default_oracle_cap() if oracle_cap is None else oracle_cap
    if k <= cap:
        return brute_force_max(w, cap)
    raise InstanceTooLarge(f"k={k} exceeds the valley cap {valley_cap} and the oracle cap {cap}")
