"""Verification suites behind ``sandwich-rm verify``.

Each suite returns a list of check dicts ``{name, expected, computed, ok}``.
Suites only read state; the field and code caches are the only side effects.
"""

from __future__ import annotations

import numpy as np

from . import analysis
from .codes import affine_perm, dual, dual_defining_set, reed_muller, sandwich
from .errors import BudgetExceeded
from .exponents import exponent_space
from .field import field_for_q
from .tables import TABLE_EVEN, TABLE_ODD, all_entries, entries

SUITES = ("example", "table1", "table2", "duality", "affine", "newton", "minvectors", "powersums")


def _check(name, expected, computed, ok=None) -> dict:
    if ok is None:
        ok = expected == computed
    return {"name": name, "expected": expected, "computed": computed, "ok": bool(ok)}


def _gf81():
    return field_for_q(3, 4)


def table_code(t: int, I):
    """C_3(t+1, I, 4), extended."""
    return sandwich(_gf81(), t + 1, I)


def suite_example(**_) -> list[dict]:
    ctx = _gf81()
    E = exponent_space(3, 4)
    c = sandwich(ctx, 5, {1})
    return [
        _check("dim R_3(4,4)", 50, E.dim_rm(4)),
        _check("dim R_3(5,4)", 66, E.dim_rm(5)),
        _check("dim C_3(5,{1},4) formula/rank", [62, 62], [E.dim_sandwich(5, {1}), c.rank_dimension]),
        _check("Theta^(5)_3 coset", [11, 19, 33, 57], list(E.theta(5, 3).elements)),
    ]


def _table_checks(table, budget=None, strategy="auto") -> list[dict]:
    E = exponent_space(3, 4)
    out = []
    for t, I, nkd in entries(table):
        c = table_code(t, I)
        k_formula = E.dim_sandwich(t + 1, I) if t + 1 < E.top else c.dimension
        k_rank = c.rank_dimension
        try:
            rep = analysis.min_distance(c, strategy, budget)
            d = rep.exact
        except BudgetExceeded as exc:
            d = None if exc.report is None else f">={exc.report.lower_bound}"
        label = f"C_3({t + 1},{{{','.join(map(str, I))}}},4)"
        computed = [c.length, k_formula, d]
        ok = list(nkd) == computed and k_rank == k_formula
        out.append(_check(label, list(nkd), computed, ok))
    return out


def suite_table1(budget=None, strategy="auto", **_) -> list[dict]:
    return _table_checks(TABLE_EVEN, budget, strategy)


def suite_table2(budget=None, strategy="auto", **_) -> list[dict]:
    return _table_checks(TABLE_ODD, budget, strategy)


def suite_duality(**_) -> list[dict]:
    out = []
    E = exponent_space(3, 4)
    for t, I, _nkd in all_entries():
        c = table_code(t, I)
        if t + 1 >= E.top:
            continue
        try:
            d = dual(c, verify=True)
            ok = (
                c.dimension + d.dimension == c.length
                and d.defining_set.as_set() == dual_defining_set(c)
                and dual(d, verify=False).defining_set == c.defining_set
            )
            computed = [d.r, sorted(d.I)]
        except AssertionError as exc:
            ok, computed = False, str(exc)
        expected = [E.top - (t + 1), sorted(E.M(t + 1) - set(I))]
        out.append(_check(f"dual {c.label()}", expected, computed, ok and computed == expected))
    c = sandwich(_gf81(), 5, {1})
    out.append(_check("dual C_3(5,{1},4)", "C_3(3,{3},4)", dual(c).label()))
    return out


def suite_affine(samples: int = 20, seed: int = 0, **_) -> list[dict]:
    ctx = _gf81()
    E = exponent_space(3, 4)
    rng = np.random.default_rng(seed)
    out = []
    for t, I, _nkd in all_entries():
        c = table_code(t, I)
        closed = E.is_delta_closed(c.defining_set)
        preserved = True
        for _ in range(samples):
            x = c.random_codeword(rng)
            u = int(rng.integers(0, ctx.N))
            v = int(rng.integers(0, ctx.N + 1))
            if not c.contains(affine_perm(ctx, x, u, v)):
                preserved = False
                break
        out.append(_check(f"affine {c.label()}", [True, True], [closed, preserved]))
    bad = [0, 4, 12, 36, 28]
    out.append(_check("non-closed set {0,4,12,36,28}", False, E.is_delta_closed(bad)))
    return out


def suite_newton(samples: int = 1000, seed: int = 0, **_) -> list[dict]:
    ctx = _gf81()
    rng = np.random.default_rng(seed)
    codes = [table_code(t, I).punctured() for t, I, _ in all_entries()]
    bad = frob = tested = 0
    for i in range(samples):
        c = codes[i % len(codes)]
        x = c.random_codeword(rng)
        if not np.any(x):
            continue
        tested += 1
        if not analysis.newton_check(ctx, x)["ok"]:
            bad += 1
        if not analysis.ms_coefficients(ctx, x).frobenius_ok():
            frob += 1
    out = [
        _check("sampled codewords with Newton violations", 0, bad),
        _check("sampled codewords breaking Frobenius closure", 0, frob),
    ]
    ctx2 = field_for_q(2, 4)
    c = sandwich(ctx2, 2, {0}).punctured()
    words = analysis.min_weight_codewords(c, 3)
    ok_sc = all(
        analysis.sc_system_check(c, 3, analysis.ms_coefficients(ctx2, x), analysis.locator_poly(ctx2, x))
        for x in words
    )
    out.append(_check("S_C(3) holds on minimum vectors of C_2(2,{0},4)*", True, ok_sc))
    return out


def suite_minvectors(**_) -> list[dict]:
    out = []
    ctx2 = field_for_q(2, 4)
    c = sandwich(ctx2, 2, {0})
    pred = analysis.predicted_min_vectors(c)
    found = analysis.min_weight_codewords(c, 4)
    same = {x.tobytes() for x in found} == {x.tobytes() for x in pred["extended_set"]}
    out.append(_check("C_2(2,{0},4) weight-4 words", [20, True], [len(found), same]))
    found_p = analysis.min_weight_codewords(c.punctured(), 3)
    same_p = {x.tobytes() for x in found_p} == {x.tobytes() for x in pred["punctured_set"]}
    out.append(_check("C_2(2,{0},4)* weight-3 words", [5, True], [len(found_p), same_p]))
    c3 = sandwich(_gf81(), 4, {0})
    pred3 = analysis.predicted_min_vectors(c3)
    found3 = analysis.min_weight_codewords(c3, 9)
    same3 = {x.tobytes() for x in found3} == {x.tobytes() for x in pred3["extended_set"]}
    out.append(_check("C_3(4,{0},4) weight-9 words", [pred3["count_extended"], True], [len(found3), same3]))
    ctx4 = field_for_q(4, 4)
    c4 = sandwich(ctx4, 4, {6})
    pred4 = analysis.predicted_min_vectors(c4)
    out.append(
        _check(
            "C_4(4,{6},4) predicted words are members of weight 64/63",
            ["i", 255, True, True],
            [pred4["case"], pred4["count_punctured"], pred4["members_ok"], pred4["weights_ok"]],
        )
    )
    out.append(_check("C_3(5,{1},4) case", "none", analysis.predicted_min_vectors(sandwich(_gf81(), 5, {1}))["case"]))
    return out


def suite_powersums(**_) -> list[dict]:
    ctx = _gf81()
    E = exponent_space(3, 4)
    exps = np.arange(1, ctx.N + 1)
    wts = E.weights[exps]
    out = []
    for k in (1, 2, 3):
        subs = analysis.enumerate_subspaces(ctx, 1, k)
        below_ok, above_nonzero = True, False
        for V in subs:
            sums = analysis.power_sums(ctx, V, exps)
            if np.any(sums[wts < 2 * k] != ctx.ZERO):
                below_ok = False
            if np.any(sums[wts >= 2 * k] != ctx.ZERO):
                above_nonzero = True
        out.append(
            _check(
                f"dim {k}: {len(subs)} subspaces",
                [analysis.gaussian_binomial(4, k, 3), True, True],
                [len(subs), below_ok, above_nonzero],
            )
        )
    return out


def run_suite(name: str, **kwargs) -> list[dict]:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    return globals()[f"suite_{name}"](**kwargs)


def rm_distance_checks(q: int = 3, n: int = 4) -> list[dict]:
    """Distances of R_q(r, n) against (q - s) q^(n - rho - 1)."""
    ctx = field_for_q(q, n)
    out = []
    for r in range(n * (q - 1)):
        rep = analysis.min_distance(reed_muller(ctx, r))
        out.append(_check(f"R_{q}({r},{n})", analysis.rm_distance(q, n, r), rep.exact))
    return out


__all__ = ["SUITES", "rm_distance_checks", "run_suite", "table_code"]
