"""End-to-end acceptance criteria; one summary line per criterion is printed
by the conftest terminal hook."""

from __future__ import annotations

import time

import numpy as np
import pytest

from sandwich_rm import analysis, linalg, verify
from sandwich_rm.codes import affine_perm, dual, dual_defining_set, puncture, reed_muller, sandwich
from sandwich_rm.exponents import exponent_space
from sandwich_rm.field import field_for_q
from sandwich_rm.tables import TABLE_EVEN, TABLE_ODD, all_entries, entries

from oracles import FROZEN

GF81 = field_for_q(3, 4)
GF16 = field_for_q(2, 4)
E34 = exponent_space(3, 4)


def crit(n, title):
    return pytest.mark.criterion(n, title)


def _rows_in(G, code) -> bool:
    return all(code.contains(row) for row in G)


# 1 -------------------------------------------------------------------------


@crit(1, "example reproduction")
def test_example():
    t0 = time.perf_counter()
    assert E34.dim_rm(4) == 50
    assert E34.dim_rm(5) == 66
    th = E34.theta(5, 3)
    assert E34.count_theta(5, 3) == 4 and th.as_set() == {11, 33, 19, 57}
    c = sandwich(GF81, 5, {1})
    assert E34.dim_sandwich(5, {1}) == 62 == c.rank_dimension
    lo, mid, hi = reed_muller(GF81, 4).punctured(), c.punctured(), reed_muller(GF81, 5).punctured()
    assert _rows_in(lo.generator_matrix, mid) and _rows_in(mid.generator_matrix, hi)
    assert not _rows_in(mid.generator_matrix, lo) and not _rows_in(hi.generator_matrix, mid)
    assert time.perf_counter() - t0 < 1.0


# 2 -------------------------------------------------------------------------

_TABLE_TIME = {"total": 0.0}


@crit(2, "reference parameter tables")
@pytest.mark.parametrize("t,I,nkd", entries(TABLE_EVEN) + entries(TABLE_ODD))
def test_table_entry(t, I, nkd):
    t0 = time.perf_counter()
    c = verify.table_code(t, I)
    R = t + 1
    k_formula = E34.dim_sandwich(R, I)
    assert k_formula == c.rank_dimension
    rep = analysis.min_distance(c)
    assert [c.length, k_formula, rep.exact] == list(nkd)
    assert c.contains(rep.witness) and np.count_nonzero(rep.witness) == rep.exact
    if nkd in ((81, 27, 18), (81, 39, 16)):
        assert "bz" in rep.strategy
    _TABLE_TIME["total"] += time.perf_counter() - t0


@crit(2, "reference parameter tables")
def test_table_runtime():
    assert len(entries(TABLE_EVEN)) == 12 and len(entries(TABLE_ODD)) == 21
    assert _TABLE_TIME["total"] < 600


# 3 -------------------------------------------------------------------------


@crit(3, "duality")
@pytest.mark.parametrize("t,I,nkd", all_entries())
def test_duality(t, I, nkd):
    c = verify.table_code(t, I)
    R = t + 1
    d = dual(c, verify=False)
    F = c.ctx.fq
    assert c.dimension + d.dimension == 81
    assert not np.any(linalg.matmul(c.generator_matrix, d.generator_matrix.T, F))
    expect = sandwich(GF81, 8 - R, E34.M(R) - set(I))
    assert d.defining_set == expect.defining_set
    assert d.defining_set.as_set() == dual_defining_set(c)


@crit(3, "duality")
def test_duality_spot():
    c = sandwich(GF81, 5, {1})
    d = dual(c)
    assert d.label() == "C_3(3,{3},4)" and (c.dimension, d.dimension) == (62, 19)


# 4 -------------------------------------------------------------------------


@crit(4, "affine invariance")
@pytest.mark.parametrize("t,I,nkd", all_entries())
def test_affine_invariance(t, I, nkd):
    c = verify.table_code(t, I)
    assert E34.is_delta_closed(c.defining_set)
    rng = np.random.default_rng(1000 * t + sum(I))
    for _ in range(100):
        x = c.random_codeword(rng)
        u, v = int(rng.integers(0, 80)), int(rng.integers(0, 81))
        assert c.contains(affine_perm(GF81, x, u, v))


@crit(4, "affine invariance")
def test_affine_counterexample():
    T = [0, 4, 12, 36, 28]
    assert not E34.is_delta_closed(T)
    assert E34.delta_closure(T).as_set() > set(T)


# 5 -------------------------------------------------------------------------


def _affine_f4_lines():
    """Indicators of g + F_4 h for the 5 lines through 0, built from field sums."""
    ctx = GF16
    f4 = [ctx.ZERO, 0, 5, 10]
    lines = {frozenset(int(ctx.mul(h, a)) for a in f4) for h in range(15)}
    words = set()
    for line in lines:
        for g in range(16):
            x = np.zeros(16, dtype=np.int64)
            x[[int(ctx.add(g, p)) for p in line]] = 1
            words.add(tuple(x))
    return lines, words


@crit(5, "binary case-(ii) completeness")
def test_binary_case_ii():
    t0 = time.perf_counter()
    c = sandwich(GF16, 2, {0})
    G = c.generator_matrix
    coeffs = np.array(np.meshgrid(*[[0, 1]] * G.shape[0], indexing="ij")).reshape(G.shape[0], -1).T
    W = coeffs @ G % 2
    assert len({tuple(w) for w in W}) == FROZEN["c2_2_0_4_size"] == 512
    wts = np.count_nonzero(W, axis=1)
    assert wts[wts > 0].min() == 4
    w4 = {tuple(w) for w in W[wts == 4]}
    lines, expect = _affine_f4_lines()
    assert len(lines) == 5 and len(w4) == 20 and w4 == expect
    assert analysis.min_distance(c).exact == 4
    Wp = W[:, :15]
    pw = np.count_nonzero(Wp, axis=1)
    assert pw[pw > 0].min() == 3
    p3 = {tuple(w) for w in Wp[pw == 3]}
    lines_p = set()
    for line in lines:
        x = np.zeros(15, dtype=np.int64)
        x[[p for p in line if p != GF16.ZERO]] = 1
        lines_p.add(tuple(x))
    assert p3 == lines_p and len(p3) == 5
    assert analysis.min_distance(c.punctured()).exact == 3
    assert time.perf_counter() - t0 < 1.0


# 6 -------------------------------------------------------------------------


@crit(6, "distance-theorem branches")
def test_branches():
    b = analysis.distance_bounds(sandwich(GF81, 5, {3}))["sandwich"]
    assert b["exact"] and b["value"] == 9
    assert analysis.min_distance(sandwich(GF81, 5, {3})).exact == 9
    b = analysis.distance_bounds(sandwich(GF81, 6, {0}))["sandwich"]
    assert b["branch"] == "lower" and not b["exact"] and b["value"] == 5
    assert analysis.min_distance(sandwich(GF81, 6, {0})).exact == 5


@crit(6, "distance-theorem branches")
@pytest.mark.parametrize("r", range(8))
def test_rm_distance(r):
    rho, s = divmod(r, 2)
    expect = (3 - s) * 3 ** (4 - rho - 1)
    assert analysis.rm_distance(3, 4, r) == expect
    assert analysis.min_distance(reed_muller(GF81, r)).exact == expect


# 7 -------------------------------------------------------------------------


@crit(7, "Newton, MS and locator suite")
def test_newton_sampled():
    rng = np.random.default_rng(7)
    codes = [verify.table_code(t, I).punctured() for t, I, _ in all_entries()]
    tested = 0
    for i in range(1100):
        x = codes[i % len(codes)].random_codeword(rng)
        if not np.any(x):
            continue
        rep = analysis.newton_check(GF81, x)
        assert rep["ok"] and rep["violations"] == 0
        tested += 1
    assert tested >= 1000


@crit(7, "Newton, MS and locator suite")
def test_newton_and_sc_on_binary_min_vectors():
    c = sandwich(GF16, 2, {0})
    cp = c.punctured()
    ext = analysis.min_weight_codewords(c, 4)
    punct = analysis.min_weight_codewords(cp, 3)
    assert len(ext) == 20 and len(punct) == 5
    for x in list(punct) + [puncture(GF16, y) for y in ext]:
        assert analysis.newton_check(GF16, x)["ok"]
    for x in punct:
        ms, loc = analysis.ms_coefficients(GF16, x), analysis.locator_poly(GF16, x)
        assert analysis.sc_system_check(cp, 3, ms, loc)
        for j in range(15):
            y = x.copy()
            y[j] ^= 1
            assert not analysis.sc_system_check(cp, 3, analysis.ms_coefficients(GF16, y), loc)


@crit(7, "Newton, MS and locator suite")
def test_locator_shape_clauses():
    c = reed_muller(GF16, 1)
    words = analysis.min_weight_codewords(c.punctured(), 7)
    assert len(words) == 15
    assert all(analysis.locator_shape_check(c, x) for x in words)
    ctx4 = field_for_q(4, 4)
    c4 = sandwich(ctx4, 4, {6})
    pred = analysis.predicted_min_vectors(c4)
    assert pred["case"] == "i" and pred["members_ok"] and pred["weights_ok"]
    assert analysis.locator_shape_check(c4, pred["punctured_set"][0])


# 8 -------------------------------------------------------------------------


@crit(8, "power-sum theorem")
def test_power_sums():
    exps = np.arange(1, 81)
    wts = E34.weights[exps]
    above = False
    for k in (1, 2, 3):
        subs = analysis.enumerate_subspaces(GF81, 1, k)
        assert len(subs) == FROZEN["subspaces_f3"][k]
        for V in subs:
            sums = analysis.power_sums(GF81, V, exps)
            assert np.all(sums[wts < 2 * k] == GF81.ZERO)
            above = above or bool(np.any(sums[wts >= 2 * k] != GF81.ZERO))
    assert above


# 9 -------------------------------------------------------------------------


@crit(9, "counting-formula equivalence")
@pytest.mark.parametrize("q,n", [(2, 4), (2, 6), (3, 4), (4, 4)])
def test_count_theta(q, n):
    E = exponent_space(q, n)
    for r in range(E.top + 1):
        for k in range(n // 2 * (q - 1) + 1):
            assert E.count_theta(r, k) == len(E.build_theta(r, k))
