"""Mattson-Solomon coefficients, locator polynomials and Newton identities.

All big-field values are logs in a :class:`~sandwich_rm.field.FieldCtx`
(``ctx.ZERO`` is zero, 0 is one).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..codes import EXTENDED, Code, rho_many
from ..errors import DegreeMismatch, LengthMismatch, ZeroCodeword
from ..field import FieldCtx


@dataclass
class MSCoefficients:
    """Lambda_0..Lambda_N with Lambda_s = rho_s(x)."""

    ctx: FieldCtx
    values: np.ndarray

    def __getitem__(self, s):
        return self.values[np.asarray(s) % self.ctx.N]

    @property
    def periodic(self) -> bool:
        return bool(self.values[0] == self.values[self.ctx.N])

    def frobenius_ok(self) -> bool:
        ctx = self.ctx
        i = np.arange(ctx.N)
        lhs = self.values[(ctx.q * i) % ctx.N]
        rhs = ctx.pow(self.values[:ctx.N], ctx.q)
        return bool(np.all(lhs == rhs))

    def vanishes_on(self, T) -> bool:
        T = np.asarray(list(T), dtype=np.int64)
        return bool(np.all(self[T] == self.ctx.ZERO)) if len(T) else True

    def copy(self) -> "MSCoefficients":
        return MSCoefficients(self.ctx, self.values.copy())


@dataclass
class LocatorPoly:
    """sigma(X) = prod (1 - g X) over the support; coeffs[j] = sigma_j."""

    ctx: FieldCtx
    coeffs: np.ndarray

    @property
    def degree(self) -> int:
        nz = np.nonzero(self.coeffs != self.ctx.ZERO)[0]
        return int(nz[-1]) if len(nz) else -1

    def support(self) -> np.ndarray:
        """Exponents j with sigma_j != 0."""
        return np.nonzero(self.coeffs != self.ctx.ZERO)[0]

    def __call__(self, X):
        """Evaluate at one or many points (logs)."""
        ctx = self.ctx
        X = np.atleast_1d(np.asarray(X, dtype=np.int64))
        j = self.support()
        powers = np.where(X[:, None] == ctx.ZERO, np.where(j[None, :] == 0, 0, ctx.ZERO), (X[:, None] * j[None, :]) % ctx.N)
        vals = ctx.sum(ctx.mul(self.coeffs[j][None, :], powers), axis=1)
        return np.asarray(vals, dtype=np.int64)

    def roots(self) -> np.ndarray:
        ctx = self.ctx
        pts = np.arange(ctx.N)
        return pts[self(pts) == ctx.ZERO]


def _punctured_word(ctx: FieldCtx, x) -> np.ndarray:
    x = np.asarray(x, dtype=np.int64)
    if len(x) == ctx.N + 1:
        raise LengthMismatch("expected a punctured word; puncture extended words first")
    if len(x) != ctx.N:
        raise LengthMismatch(f"word length {len(x)} != {ctx.N}")
    return x


def ms_coefficients(ctx: FieldCtx, x) -> MSCoefficients:
    x = _punctured_word(ctx, x)
    return MSCoefficients(ctx, rho_many(ctx, x, range(ctx.N + 1)))


def ms_poly_eval(ms: MSCoefficients, X) -> np.ndarray:
    """M_x(X) = sum_{s<N} Lambda_{N-s} X^s at the points X (nonzero logs)."""
    ctx = ms.ctx
    X = np.atleast_1d(np.asarray(X, dtype=np.int64))
    s = np.arange(ctx.N)
    lam = ms.values[ctx.N - s]
    terms = ctx.mul(lam[None, :], (X[:, None] * s[None, :]) % ctx.N)
    return np.asarray(ctx.sum(terms, axis=1), dtype=np.int64)


def ms_consistent(ctx: FieldCtx, x, ms: MSCoefficients | None = None) -> bool:
    """M_x(alpha^j) = -x_j for every position (the inverse transform)."""
    x = _punctured_word(ctx, x)
    ms = ms_coefficients(ctx, x) if ms is None else ms
    vals = ms_poly_eval(ms, np.arange(ctx.N))
    expect = ctx.neg(ctx.fq.logs[x])
    return bool(np.all(vals == expect))


def locator_poly(ctx: FieldCtx, x) -> LocatorPoly:
    x = _punctured_word(ctx, x)
    supp = np.nonzero(x)[0]
    if len(supp) == 0:
        raise ZeroCodeword("the zero word has no locator polynomial")
    Z = ctx.ZERO
    coeffs = np.full(len(supp) + 1, Z, dtype=np.int64)
    coeffs[0] = 0
    for t, g in enumerate(supp, start=1):
        shifted = ctx.mul(coeffs[:t], ctx.neg(int(g)))
        coeffs[1:t + 1] = ctx.add(coeffs[1:t + 1], shifted)
    return LocatorPoly(ctx, coeffs)


def _newton_residuals(ms: MSCoefficients, loc: LocatorPoly, shifts) -> np.ndarray:
    """sum_i sigma_i Lambda_{j+w-i} for each j in ``shifts``."""
    ctx = ms.ctx
    w = len(loc.coeffs) - 1
    j = np.asarray(shifts, dtype=np.int64)
    i = np.arange(w + 1)
    idx = (j[:, None] + w - i[None, :]) % ctx.N
    terms = ctx.mul(loc.coeffs[None, :], ms.values[idx])
    return np.asarray(ctx.sum(terms, axis=1), dtype=np.int64)


def newton_check(ctx: FieldCtx, x) -> dict:
    """Evaluate the generalized Newton identities for j = 0..N-1."""
    ms = ms_coefficients(ctx, x)
    loc = locator_poly(ctx, x)
    res = _newton_residuals(ms, loc, range(ctx.N))
    bad = int(np.count_nonzero(res != ctx.ZERO))
    return {"weight": loc.degree, "checked": ctx.N, "violations": bad, "ok": bad == 0}


def sc_system_check(c: Code, w: int, ms: MSCoefficients, loc: LocatorPoly) -> bool:
    """Whether (Lambda, sigma) satisfies every equation of the system S_C(w)
    attached to the cyclic code underlying ``c``."""
    if loc.degree != w or len(loc.coeffs) != w + 1:
        raise DegreeMismatch(f"locator has degree {loc.degree}, expected {w}")
    ctx = c.ctx
    if loc.coeffs[0] != 0:
        return False
    T = c.punctured().defining_set if c.kind == EXTENDED else c.defining_set
    newton = _newton_residuals(ms, loc, range(1, ctx.N + 1))
    return bool(
        np.all(newton == ctx.ZERO)
        and ms.frobenius_ok()
        and ms.periodic
        and ms.vanishes_on(T)
    )
