"""Subspaces of F_{q^n} over F_q or F_{q^2}, power sums, affine polynomials."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations, product

import numpy as np

from ..errors import BadShape, TooMany
from ..field import FieldCtx
from .ms import LocatorPoly

SUBSPACE_CAP = 200_000


def gaussian_binomial(n: int, k: int, Q: int) -> int:
    """Number of k-dimensional subspaces of GF(Q)^n."""
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= Q ** (n - i) - 1
        den *= Q ** (i + 1) - 1
    return num // den


@dataclass(frozen=True)
class Subspace:
    """Span over F_{q^b} (b = ``base_degree``) of ``basis`` (logs in ctx)."""

    ctx: FieldCtx
    base_degree: int
    basis: tuple

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def base_order(self) -> int:
        return self.ctx.q**self.base_degree

    @cached_property
    def elements(self) -> np.ndarray:
        """Sorted logs of all elements (ZERO included, last)."""
        ctx = self.ctx
        if not self.basis:
            return np.array([ctx.ZERO], dtype=np.int64)
        B = ctx.subfield(self.base_degree)
        coeffs = np.array(list(product(range(B.order), repeat=self.dim)), dtype=np.int64)
        terms = ctx.mul(B.logs[coeffs], np.asarray(self.basis, dtype=np.int64)[None, :])
        return np.unique(np.asarray(ctx.sum(terms, axis=1), dtype=np.int64))

    @property
    def size(self) -> int:
        return len(self.elements)

    def __contains__(self, a) -> bool:
        return bool(np.isin(a, self.elements))

    def key(self) -> tuple:
        return tuple(int(e) for e in self.elements)

    def coset(self, h: int) -> np.ndarray:
        return np.unique(self.ctx.add(self.elements, h))

    def indicator(self, scalar: int = 1, h: int | None = None, extended: bool = True) -> np.ndarray:
        """lambda * 1_{h + V} (extended) or lambda * 1_{V \\ 0} (punctured)."""
        ctx = self.ctx
        if extended:
            pts = self.elements if h is None else self.coset(h)
            x = np.zeros(ctx.N + 1, dtype=np.int64)
        else:
            if h is not None:
                raise ValueError("punctured indicators use h = 0")
            pts = self.elements[self.elements != ctx.ZERO]
            x = np.zeros(ctx.N, dtype=np.int64)
        x[pts] = scalar
        return x

    def is_closed(self) -> bool:
        """Closed under addition and base-field scaling."""
        ctx = self.ctx
        E = set(int(e) for e in self.elements)
        sums = ctx.add(self.elements[:, None], self.elements[None, :])
        B = ctx.subfield(self.base_degree)
        scaled = ctx.mul(B.logs[:, None], self.elements[None, :])
        return set(np.unique(sums).tolist()) <= E and set(np.unique(scaled).tolist()) <= E


def _rref_shapes(n: int, k: int, Q: int):
    """All k x n reduced row-echelon matrices of rank k over GF(Q) (encodings)."""
    for pivots in combinations(range(n), k):
        pset = set(pivots)
        free = [(i, j) for i, p in enumerate(pivots) for j in range(p + 1, n) if j not in pset]
        for vals in product(range(Q), repeat=len(free)):
            M = np.zeros((k, n), dtype=np.int64)
            for i, p in enumerate(pivots):
                M[i, p] = 1
            for (i, j), v in zip(free, vals):
                M[i, j] = v
            yield M


def enumerate_subspaces(ctx: FieldCtx, base_degree: int, dim: int, cap: int = SUBSPACE_CAP) -> list[Subspace]:
    """Every ``dim``-dimensional F_{q^b}-subspace of F_{q^n}, b = base_degree.

    Coordinates are taken in the basis 1, alpha, ..., alpha^(n/b - 1).
    """
    if base_degree not in (1, 2) or ctx.n % base_degree:
        raise ValueError("base must be F_q or F_{q^2} inside F_{q^n}")
    n_b = ctx.n // base_degree
    B = ctx.subfield(base_degree)
    total = gaussian_binomial(n_b, dim, B.order)
    if total == 0:
        return []
    if total > cap:
        raise TooMany(f"{total} subspaces exceed the cap {cap}")
    powers = np.arange(n_b, dtype=np.int64)
    out = []
    for M in _rref_shapes(n_b, dim, B.order):
        basis = ctx.sum(ctx.mul(B.logs[M], powers[None, :]), axis=1)
        out.append(Subspace(ctx, base_degree, tuple(int(b) for b in np.atleast_1d(basis))))
    return out


def power_sums(ctx: FieldCtx, V: Subspace, exps) -> np.ndarray:
    """sum_{v in V} v^i for each i in ``exps`` (i >= 1, so 0^i = 0)."""
    exps = np.asarray(list(exps), dtype=np.int64)
    if np.any(exps < 1):
        raise ValueError("exponents must be positive")
    nz = V.elements[V.elements != ctx.ZERO]
    if len(nz) == 0:
        return np.full(len(exps), ctx.ZERO, dtype=np.int64)
    return np.asarray(ctx.sum((exps[:, None] * nz[None, :]) % ctx.N, axis=1), dtype=np.int64)


def subspace_from_roots(ctx: FieldCtx, pts, base_degree: int = 1) -> Subspace | None:
    """The subspace whose elements are exactly ``pts`` (logs), or None."""
    pts = np.unique(np.asarray(pts, dtype=np.int64))
    B = ctx.subfield(base_degree)
    size = len(pts)
    k, s = 0, 1
    while s < size:
        s *= B.order
        k += 1
    if s != size or ctx.ZERO not in pts:
        return None
    basis: list[int] = []
    span = np.array([ctx.ZERO], dtype=np.int64)
    for g in pts:
        if g in span:
            continue
        basis.append(int(g))
        span = Subspace(ctx, base_degree, tuple(basis)).elements
        if len(span) > size:
            return None
    V = Subspace(ctx, base_degree, tuple(basis))
    if V.dim != k or not np.array_equal(V.elements, pts):
        return None
    return V


def affine_split_check(sigma: LocatorPoly) -> dict:
    """Recognise sigma(X) = 1 + sum_{i in I_k} sigma_i X^i as the locator of a
    subspace indicator.

    Returns ``{"splits": bool, "subspace": Subspace | None, "k": k}``.
    """
    ctx = sigma.ctx
    q = ctx.q
    delta = sigma.degree
    k, s = 0, 1
    while s - 1 < delta:
        s *= q
        k += 1
    if delta < 1 or s - 1 != delta:
        raise BadShape(f"degree {delta} is not of the form q^k - 1")
    allowed = {0} | {q**k - q**j for j in range(k)}
    off = set(int(j) for j in sigma.support()) - allowed
    if off:
        raise BadShape(f"coefficients outside I_k at {sorted(off)}")
    if sigma.coeffs[0] != 0:
        raise BadShape("sigma_0 must be 1")
    roots = sigma.roots()
    if len(roots) != delta:
        return {"splits": False, "subspace": None, "k": k}
    pts = np.append(ctx.inv(roots), ctx.ZERO)
    V = subspace_from_roots(ctx, pts, 1)
    if V is None or V.dim != k:
        raise AssertionError("split affine polynomial whose roots are not a subspace")
    return {"splits": True, "subspace": V, "k": k}
