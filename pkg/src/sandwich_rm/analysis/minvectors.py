"""Predicted minimum vectors for the two subspace-indicator families.

case "i":  C_q(r, I, n) with r = rho(q-1) + 1; minimum vectors are
           lambda * 1_{V*} for F_q-subspaces V of dimension n - rho.
case "ii": C_q(r, I, n) with r = rho(q-1), rho = 2 rho' even and
           {0, 2} & I = {0}; V ranges over F_{q^2}-subspaces of
           dimension m - rho'.
Extended minimum vectors are lambda * 1_{h+V} for every offset h.
"""

from __future__ import annotations

import numpy as np

from ..codes import EXTENDED, Code, weight
from ..errors import IneligibleCode, LengthMismatch
from ..exponents import exponent_space
from .ms import MSCoefficients, locator_poly, ms_coefficients
from .subspaces import enumerate_subspaces, gaussian_binomial


def _case_for(q: int, n: int, r: int, I) -> dict | None:
    """Eligibility of C_q(r, I, n); None when neither case applies."""
    I = frozenset(I)
    top = n * (q - 1)
    if not 0 < r <= top:
        return None
    m = n // 2
    rho, s = divmod(r - 1, q - 1)
    if s == 0 and rho <= n - 1:
        bad = {q, q - 2, abs(q - 4)} if rho % 2 else {1, 3}
        if not bad & I:
            return {"case": "i", "rho": rho, "base_degree": 1, "dim": n - rho}
    rho, s = divmod(r, q - 1)
    if s == 0 and rho % 2 == 0 and rho <= n - 1 and I & {0, 2} == {0}:
        return {"case": "ii", "rho": rho, "base_degree": 2, "dim": m - rho // 2}
    return None


def min_vector_case(c: Code) -> dict | None:
    """Which subspace family (if any) describes the minimum vectors of c."""
    q, n = c.q, c.n
    if c.r is None:
        return None
    if c.family == "sandwich":
        return _case_for(q, n, c.r, c.I)
    if c.family == "rm":
        E = exponent_space(q, n)
        # R_q(r) = C_q(r+1, {}) = C_q(r, M_r)
        found = _case_for(q, n, c.r + 1, ())
        if found is None and 0 < c.r < E.top:
            found = _case_for(q, n, c.r, E.M(c.r))
        return found
    return None


def predicted_min_vectors(c: Code, with_words: bool = True, check: bool = True) -> dict:
    """The minimum vectors predicted by the subspace description.

    Returns a dict with ``case`` ("i", "ii" or "none"), weights, counts and
    (with ``with_words``) the punctured and extended word arrays.  With
    ``check`` every emitted word is tested for membership.
    """
    info = min_vector_case(c)
    if info is None:
        return {"case": "none", "punctured_set": [], "extended_set": []}
    ctx = c.ctx
    q, n = c.q, c.n
    subs = enumerate_subspaces(ctx, info["base_degree"], info["dim"])
    Q = q ** info["base_degree"]
    size = Q ** info["dim"]
    scalars = range(1, q)
    out = {
        "case": info["case"],
        "rho": info["rho"],
        "base_degree": info["base_degree"],
        "dim": info["dim"],
        "weight_punctured": size - 1,
        "weight_extended": size,
        "subspaces": len(subs),
        "gaussian_binomial": gaussian_binomial(n // info["base_degree"], info["dim"], Q),
        "count_punctured": len(subs) * (q - 1),
        "count_extended": None,
    }
    punct, ext = [], []
    seen = set()
    for V in subs:
        for lam in scalars:
            punct.append(V.indicator(lam, extended=False))
        for h in range(ctx.N + 1):
            key = tuple(V.coset(h).tolist())
            if key in seen:
                continue
            seen.add(key)
            for lam in scalars:
                ext.append(V.indicator(lam, h))
    out["count_extended"] = len(ext)
    P = np.array(punct, dtype=np.int64).reshape(len(punct), ctx.N)
    X = np.array(ext, dtype=np.int64).reshape(len(ext), ctx.N + 1)
    if check:
        cp = c.punctured() if c.kind == EXTENDED else c
        ce = c if c.kind == EXTENDED else c.extended()
        out["members_ok"] = bool(all(cp.contains(x) for x in P) and all(ce.contains(x) for x in X))
        out["weights_ok"] = bool(
            all(weight(x) == size - 1 for x in P) and all(weight(x) == size for x in X)
        )
    if with_words:
        out["punctured_set"] = P
        out["extended_set"] = X
    return out


def _case_i_params(c: Code):
    info = min_vector_case(c)
    if info is None or info["case"] != "i":
        raise IneligibleCode(f"{c.label()} is not covered by the case-(i) description")
    q, n = c.q, c.n
    k = n - info["rho"]
    delta = q**k - 1
    I_k = sorted({q**k - q**j for j in range(k)})
    return delta, I_k


def locator_shape_check(c: Code, x, ms: MSCoefficients | None = None) -> bool:
    """Verify the three locator/MS clauses on a minimum-weight punctured word.

    (i)   Lambda_1 = ... = Lambda_{delta-1} = 0;
    (ii)  for u in [1, delta-1]: off I_k, Lambda_{delta+u} = 0 = sigma_u,
          on I_k, sigma_u = -Lambda_{delta+u} / Lambda_delta;
    (iii) sigma(X) = 1 - sum_{u in I_k} (Lambda_{delta+u}/Lambda_delta) X^u.

    ``ms`` may override the word's own coefficients (to test perturbations).
    """
    delta, I_k = _case_i_params(c)
    ctx = c.ctx
    x = np.asarray(x, dtype=np.int64)
    if len(x) == ctx.N + 1:
        x = x[: ctx.N]
    if len(x) != ctx.N:
        raise LengthMismatch("expected a word of the code's length")
    if weight(x) != delta:
        raise ValueError(f"word weight {weight(x)} != {delta}")
    lam = ms_coefficients(ctx, x) if ms is None else ms
    sigma = locator_poly(ctx, x).coeffs
    Z = ctx.ZERO
    L = lambda i: int(lam[i])
    # (i)
    if any(L(u) != Z for u in range(1, delta)):
        return False
    ld = L(delta)
    if ld == Z:
        return False
    Ik = set(I_k)
    # (ii)
    for u in range(1, delta):
        if u in Ik:
            if sigma[u] != ctx.neg(ctx.div(L(delta + u), ld)):
                return False
        elif L(delta + u) != Z or sigma[u] != Z:
            return False
    # (iii)
    expect = np.full(delta + 1, Z, dtype=np.int64)
    expect[0] = 0
    for u in I_k:
        expect[u] = ctx.neg(ctx.div(L(delta + u), ld))
    return bool(np.array_equal(expect, sigma))
