from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sandwich_rm import analysis
from sandwich_rm.analysis.ms import LocatorPoly
from sandwich_rm.analysis.subspaces import Subspace
from sandwich_rm.errors import BadShape, TooMany
from sandwich_rm.exponents import exponent_space
from sandwich_rm.field import field_for_q

from oracles import FROZEN

GF81 = field_for_q(3, 4)
GF16 = field_for_q(2, 4)
E34 = exponent_space(3, 4)


def test_counts():
    assert len(analysis.enumerate_subspaces(GF81, 2, 1)) == FROZEN["subspaces_f9_dim1"]
    for k, n in FROZEN["subspaces_f3"].items():
        subs = analysis.enumerate_subspaces(GF81, 1, k)
        assert len(subs) == n == analysis.gaussian_binomial(4, k, 3)
        assert len({V.key() for V in subs}) == n
    assert len(analysis.enumerate_subspaces(GF81, 1, 0)) == 1
    assert len(analysis.enumerate_subspaces(GF16, 2, 1)) == FROZEN["f4_lines"]


def test_subspaces_are_closed():
    for V in analysis.enumerate_subspaces(GF81, 2, 1) + analysis.enumerate_subspaces(GF81, 1, 2)[:20]:
        assert V.is_closed() and V.size == V.base_order**V.dim


def test_cap():
    with pytest.raises(TooMany):
        analysis.enumerate_subspaces(GF81, 1, 2, cap=100)


def test_indicators():
    V = analysis.enumerate_subspaces(GF81, 2, 1)[0]
    x = V.indicator(2, extended=False)
    assert np.count_nonzero(x) == 8 and set(x[x != 0]) == {2}
    y = V.indicator(1, h=5)
    assert np.count_nonzero(y) == 9 and y[80] == 0
    assert np.count_nonzero(V.indicator()) == 9 and V.indicator()[80] == 1


def test_subspace_from_roots():
    F9 = Subspace(GF81, 1, (0, 10))
    assert analysis.subspace_from_roots(GF81, F9.elements).key() == F9.key()
    assert analysis.subspace_from_roots(GF81, [0, 1, 2]) is None


def test_affine_split_f9():
    x = np.zeros(80, dtype=np.int64)
    x[::10] = 1
    res = analysis.affine_split_check(analysis.locator_poly(GF81, x))
    assert res["splits"] and res["k"] == 2
    assert res["subspace"].key() == Subspace(GF81, 1, (0, 10)).key()


def test_affine_split_line():
    g = 7
    x = np.zeros(80, dtype=np.int64)
    x[[g, (g + 40) % 80]] = 1  # F_3^* g
    loc = analysis.locator_poly(GF81, x)
    assert set(loc.support().tolist()) == {0, 2}
    res = analysis.affine_split_check(loc)
    assert res["splits"] and res["k"] == 1 and res["subspace"].dim == 1


def test_affine_split_failure_exists():
    rng = np.random.default_rng(0)
    Z = GF81.ZERO
    found = False
    for _ in range(200):
        coeffs = np.full(9, Z, dtype=np.int64)
        coeffs[0] = 0
        coeffs[6], coeffs[8] = rng.integers(0, 80, 2)
        if not analysis.affine_split_check(LocatorPoly(GF81, coeffs))["splits"]:
            found = True
            break
    assert found


def test_affine_split_shape_errors():
    coeffs = np.full(8, GF81.ZERO, dtype=np.int64)
    coeffs[0], coeffs[7] = 0, 3
    with pytest.raises(BadShape):
        analysis.affine_split_check(LocatorPoly(GF81, coeffs))
    coeffs = np.full(9, GF81.ZERO, dtype=np.int64)
    coeffs[0], coeffs[5], coeffs[8] = 0, 1, 1
    with pytest.raises(BadShape):
        analysis.affine_split_check(LocatorPoly(GF81, coeffs))


def test_power_sum_exhaustive_dim2():
    exps = np.arange(1, 81)
    wts = E34.weights[exps]
    for V in analysis.enumerate_subspaces(GF81, 1, 2):
        sums = analysis.power_sums(GF81, V, exps)
        assert np.all(sums[wts < 4] == GF81.ZERO)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(min_value=0, max_value=79), min_size=1, max_size=3), st.integers(min_value=1, max_value=80))
def test_power_sums_vanish_below_threshold(basis, i):
    V = analysis.subspace_from_roots(GF81, Subspace(GF81, 1, tuple(basis)).elements)
    k = V.dim
    s = analysis.power_sums(GF81, V, [i])[0]
    if E34.wt(i) < k * 2:
        assert s == GF81.ZERO
    # direct evaluation of the same sum
    nz = V.elements[V.elements != GF81.ZERO]
    assert s == GF81.sum((i * nz) % 80)


@pytest.mark.parametrize("n,k,Q,expect", [(4, 2, 3, 130), (2, 1, 9, 10), (4, 0, 3, 1), (3, 4, 2, 0), (6, 3, 2, 1395)])
def test_gaussian_binomial(n, k, Q, expect):
    assert analysis.gaussian_binomial(n, k, Q) == expect
