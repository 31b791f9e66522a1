import math
from fractions import Fraction

import numpy as np
import pytest

from maxwiener.bounds import apply_C, spectral_radius_C, upper_bound
from maxwiener.errors import NoConvergence, UnsupportedK
from maxwiener.graph import validate_degree_sequence
from maxwiener.solvers import brute_force_max


def test_bound_equality_case():
    rep = upper_bound(validate_degree_sequence([3, 3, 1, 1, 1, 1]))
    assert rep.bound == 29 and rep.tight
    assert brute_force_max((2, 2)).w_star == 29


def test_bound_strict_case():
    d = validate_degree_sequence([3, 2, 2, 1, 1, 1])
    rep = upper_bound(d)
    assert rep.bound == 34 and not rep.tight
    assert brute_force_max(d.internal_weights).w_star == 32


def test_bound_is_exact_rational():
    rep = upper_bound(validate_degree_sequence([3, 2, 1, 1, 1]))
    assert rep.bound == Fraction(16) + Fraction(2, 4) * 5
    assert rep.bound.denominator == 2
    assert rep.to_dict()["bound"] == [37, 2]


def test_bound_star():
    rep = upper_bound(validate_degree_sequence([5, 1, 1, 1, 1, 1]))
    assert rep.bound == 25 and rep.lambda1 == 0.0 and not rep.tight
    with pytest.raises(UnsupportedK):
        upper_bound(validate_degree_sequence([1, 1]))


def test_apply_C_matches_dense():
    rng = np.random.default_rng(0)
    for k in (1, 2, 5, 40):
        z = rng.normal(size=k)
        dense = np.abs(np.subtract.outer(np.arange(k), np.arange(k)))
        np.testing.assert_allclose(apply_C(z), dense @ z, rtol=1e-12, atol=1e-9)


def test_spectral_k2():
    assert abs(spectral_radius_C(2) - 1.0) < 1e-9


def test_spectral_k3_characteristic_polynomial():
    # det(x I - C) = x^3 - 6x - 4 = (x + 2)(x^2 - 2x - 2) for C = |i - j|, k = 3
    roots = np.roots([1, 0, -6, -4])
    top = max(roots.real)
    assert abs(top - (1 + math.sqrt(3))) < 1e-12
    assert abs(spectral_radius_C(3) - (1 + math.sqrt(3))) < 1e-8
    assert spectral_radius_C(3) < 3


@pytest.mark.parametrize("k", [4, 10, 57, 200])
def test_spectral_against_dense_eigensolver(k):
    dense = np.abs(np.subtract.outer(np.arange(k), np.arange(k))).astype(float)
    expected = np.linalg.eigvalsh(dense)[-1]
    got = spectral_radius_C(k)
    assert abs(got - expected) <= 1e-8 * expected
    assert got < k * (k - 1) / 2


def test_spectral_errors():
    with pytest.raises(ValueError):
        spectral_radius_C(1)
    with pytest.raises(ValueError):
        spectral_radius_C(3, tol=0)
    with pytest.raises(NoConvergence):
        spectral_radius_C(50, tol=1e-15, max_iter=2)
