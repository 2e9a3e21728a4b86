from __future__ import annotations

import json

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sandwich_rm import analysis
from sandwich_rm.codes import PUNCTURED, from_digits, reed_muller, sandwich, weight
from sandwich_rm.errors import BudgetExceeded, Unsupported
from sandwich_rm.exponents import exponent_space
from sandwich_rm.field import field_for_q

from oracles import FROZEN, gf4_tables, min_distance_brute, weight_distribution, words_of_weight

GF81 = field_for_q(3, 4)
GF16 = field_for_q(2, 4)


def _all_sandwich(q, n, max_k=16):
    E = exponent_space(q, n)
    ctx = field_for_q(q, n)
    out = []
    for r in range(E.top):
        Ms = sorted(E.M(r))
        for mask in range(1 << len(Ms)):
            I = [k for i, k in enumerate(Ms) if mask >> i & 1]
            c = sandwich(ctx, r, I)
            if 0 < c.dimension and q ** min(c.dimension, c.length - c.dimension) <= 2**max_k:
                out.append((r, tuple(I)))
    return out


def _brute(c):
    G = c.generator_matrix
    if c.q == 4:
        add, mul = gf4_tables()
        return min_distance_brute(G, 4, add, mul)
    return min_distance_brute(G, c.q)


SMALL = (
    [(2, 4, r, I) for r, I in _all_sandwich(2, 4)]
    + [(3, 2, r, I) for r, I in _all_sandwich(3, 2)]
    + [(4, 2, r, I) for r, I in _all_sandwich(4, 2, 16)]
    + [(2, 6, r, I) for r, I in _all_sandwich(2, 6, 14)]
)


@pytest.mark.parametrize("q,n,r,I", [s for s in SMALL if field_for_q(s[0], s[1]).q ** sandwich(field_for_q(s[0], s[1]), s[2], s[3]).dimension <= 2**16])
@pytest.mark.parametrize("kind", ["extended", "punctured"])
def test_min_distance_matches_brute_force(q, n, r, I, kind):
    ctx = field_for_q(q, n)
    c = sandwich(ctx, r, I)
    if kind == "punctured":
        c = c.punctured()
    d = _brute(c)
    for strategy in ("auto", "bz", "exhaustive"):
        rep = analysis.min_distance(c, strategy)
        assert rep.exact == d, (c.label(), strategy)
        assert weight(rep.witness) == d and c.contains(rep.witness)
        assert rep.lower_bound <= d


def test_frozen_rm_weight_distribution():
    c = reed_muller(GF16, 1)
    assert dict(weight_distribution(c.generator_matrix, 2)) == FROZEN["rm2_1_4"]
    rep = analysis.min_distance(c)
    assert (rep.length, rep.dimension, rep.exact) == (16, 5, 8)


def test_spec_examples():
    assert analysis.min_distance(sandwich(GF81, 1, {1})).exact == 54
    rep = analysis.min_distance(sandwich(GF81, 3, {3}), "bz")
    assert rep.exact == 27 and "bz" in rep.strategy
    rep = analysis.min_distance(sandwich(GF16, 2, {0}), "exhaustive")
    assert rep.exact == 4 and rep.strategy == "exhaustive"


@pytest.mark.parametrize("r", range(8))
def test_rm_distances(r):
    c = reed_muller(GF81, r)
    assert analysis.min_distance(c).exact == analysis.rm_distance(3, 4, r)
    assert analysis.min_distance(c.punctured()).exact == analysis.rm_distance(3, 4, r) - 1


def test_bounds_examples():
    b = analysis.distance_bounds(reed_muller(GF81, 4, kind=PUNCTURED))
    assert b["bch"] == 8
    sb = analysis.distance_bounds(sandwich(GF81, 5, {3}))["sandwich"]
    assert sb["exact"] and sb["value"] == 9 and sb["branch"] == "equal"
    b6 = analysis.distance_bounds(sandwich(GF81, 6, {0}))
    assert b6["sandwich"]["branch"] == "lower" and b6["sandwich"]["value"] == 5
    assert b6["lower"] == 5
    assert analysis.sandwich_bound(3, 4, 9, ()) is None


def test_bch_bound_plain():
    assert analysis.bch_bound({1, 2, 3}, 15) == (4, 1)
    bound, step = analysis.bch_bound({1, 2, 4, 8}, 15)
    assert bound == 3


def test_sandwich_bound_never_exceeds_true_distance():
    for r, I in _all_sandwich(3, 4, 40):
        c = sandwich(GF81, r, I)
        if c.dimension > 12:
            continue
        d = analysis.min_distance(c).exact
        b = analysis.distance_bounds(c)
        assert b["lower"] <= d
        sb = b["sandwich"]
        if sb is not None and sb["exact"] and not sb["degenerate"]:
            assert sb["value"] == d, c.label()


def test_budget_exceeded_carries_report():
    c = sandwich(GF81, 4, {2})
    with pytest.raises(BudgetExceeded) as exc:
        analysis.min_distance(c, "bz", budget=1000)
    rep = exc.value.report
    assert rep is not None and rep.exact is None
    assert rep.lower_bound <= 16 <= rep.upper_bound


def test_zero_and_full_codes():
    with pytest.raises(Unsupported):
        analysis.min_distance(reed_muller(GF81, -1))
    rep = analysis.min_distance(reed_muller(GF81, 8))
    assert rep.exact == 1 and rep.strategy == "trivial"


def test_report_json_roundtrip():
    rep = analysis.min_distance(sandwich(GF16, 2, {0}))
    d = json.loads(rep.to_json())
    assert d["exact"] == 4 and weight(from_digits(d["witness"])) == 4


def test_support_strategy():
    c = sandwich(GF16, 2, {0})
    assert analysis.min_distance(c, "support").exact == 4
    assert analysis.min_distance(c.punctured(), "support").exact == 3


def test_unknown_strategy():
    with pytest.raises(ValueError):
        analysis.min_distance(sandwich(GF16, 2, {0}), "magic")


# -- minimum-weight codewords -----------------------------------------------


def test_min_weight_codewords_c2():
    c = sandwich(GF16, 2, {0})
    oracle = words_of_weight(c.generator_matrix, 2, 4)
    assert len(oracle) == FROZEN["c2_2_0_4_w4"]
    for strategy in ("exhaustive", "support", "orbit"):
        found = analysis.min_weight_codewords(c, 4, strategy)
        assert {tuple(x) for x in found} == oracle, strategy
    assert len(analysis.min_weight_codewords(c, 0)) == 0
    p = c.punctured()
    for strategy in ("exhaustive", "support", "orbit"):
        assert len(analysis.min_weight_codewords(p, 3, strategy)) == 5


def test_min_weight_codewords_newton():
    words = analysis.min_weight_codewords(sandwich(GF81, 1, {1}), 54)
    assert len(words) > 0
    for x in words:
        assert analysis.newton_check(GF81, x[:80])["ok"]


@pytest.mark.parametrize("q,n,r,I", [(3, 2, 2, (0,)), (3, 2, 1, (1,)), (4, 2, 3, (1,)), (2, 4, 3, (1,))])
def test_orbit_matches_exhaustive(q, n, r, I):
    c = sandwich(field_for_q(q, n), r, I)
    d = analysis.min_distance(c).exact
    a = analysis.min_weight_codewords(c, d, "exhaustive")
    b = analysis.min_weight_codewords(c, d, "orbit")
    assert np.array_equal(a, b)


@settings(max_examples=25, deadline=None)
@given(st.sampled_from([s for s in SMALL if s[0] in (2, 3) and s[1] <= 4]), st.sampled_from(["extended", "punctured"]))
def test_distance_property(code, kind):
    q, n, r, I = code
    c = sandwich(field_for_q(q, n), r, I)
    if kind == "punctured":
        c = c.punctured()
    rep = analysis.min_distance(c)
    b = analysis.distance_bounds(c)
    assert b["lower"] <= rep.exact <= c.length - c.dimension + 1
    words = analysis.min_weight_codewords(c, rep.exact)
    assert len(words) > 0 and all(c.contains(x) for x in words)
