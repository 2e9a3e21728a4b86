"""Table-driven arithmetic in the tower F_p <= F_q <= F_{q^2} <= F_{q^n}.

Elements of F_{q^n} are handled as discrete logarithms relative to a fixed
primitive element alpha: an integer in ``[0, N-1]`` for ``alpha**k`` and the
sentinel ``ctx.ZERO == N`` for zero.  Internally every element also has a
"poly-int" encoding, the base-p integer whose digits are the coefficients of
its polynomial representation modulo the defining polynomial.
"""

from __future__ import annotations

import itertools
from functools import cached_property

import numpy as np

from .errors import (
    DivisionByZero,
    FieldTooLarge,
    NonPrime,
    NonPrimitiveModulus,
    OddExtension,
    ReducibleModulus,
)

MAX_ORDER = 2**26

# Conway polynomials, little-endian coefficient lists, keyed by (p, degree).
CONWAY = {
    (2, 1): (1, 1),
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 5): (1, 0, 1, 0, 0, 1),
    (2, 6): (1, 1, 0, 1, 1, 0, 1),
    (2, 7): (1, 1, 0, 0, 0, 0, 0, 1),
    (2, 8): (1, 0, 1, 1, 1, 0, 0, 0, 1),
    (2, 9): (1, 0, 0, 0, 1, 0, 0, 0, 0, 1),
    (2, 10): (1, 1, 1, 1, 0, 1, 1, 0, 0, 0, 1),
    (2, 12): (1, 1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 0, 1),
    (3, 1): (1, 1),
    (3, 2): (2, 2, 1),
    (3, 3): (1, 2, 0, 1),
    (3, 4): (2, 0, 0, 2, 1),
    (3, 5): (1, 2, 0, 0, 0, 1),
    (3, 6): (2, 2, 1, 0, 2, 0, 1),
    (3, 8): (2, 2, 2, 0, 1, 2, 0, 0, 1),
    (5, 1): (3, 1),
    (5, 2): (2, 4, 1),
    (5, 4): (2, 4, 4, 0, 1),
    (7, 1): (4, 1),
    (7, 2): (3, 6, 1),
    (7, 4): (3, 4, 5, 0, 1),
}


# ---------------------------------------------------------------------------
# integer helpers


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    for d in range(2, int(p**0.5) + 1):
        if p % d == 0:
            return False
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def prime_power(q: int) -> tuple[int, int]:
    """Split ``q = p**l``; raises NonPrime when q is not a prime power."""
    if q < 2:
        raise NonPrime(f"{q} is not a prime power")
    fs = prime_factors(q)
    if len(fs) != 1:
        raise NonPrime(f"{q} is not a prime power")
    p = fs[0]
    l, t = 0, q
    while t > 1:
        t //= p
        l += 1
    return p, l


# ---------------------------------------------------------------------------
# polynomials over F_p (little-endian coefficient lists)


def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def poly_mulmod(a, b, f, p):
    d = len(f) - 1
    res = [0] * (len(a) + len(b) - 1 if a and b else 0)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                res[i + j] = (res[i + j] + x * y) % p
    inv_lead = pow(f[-1], p - 2, p)
    for i in range(len(res) - 1, d - 1, -1):
        c = res[i] * inv_lead % p
        if c:
            for j in range(d + 1):
                res[i - d + j] = (res[i - d + j] - c * f[j]) % p
    return _trim(res[:d])


def poly_powmod(a, e, f, p):
    result = [1]
    base = list(a)
    while e:
        if e & 1:
            result = poly_mulmod(result, base, f, p)
        base = poly_mulmod(base, base, f, p)
        e >>= 1
    return result


def poly_divmod(a, b, p):
    a = _trim(list(a))
    b = _trim(list(b))
    if not b:
        raise DivisionByZero("polynomial division by zero")
    q = [0] * max(len(a) - len(b) + 1, 0)
    inv = pow(b[-1], p - 2, p)
    while len(a) >= len(b) and a:
        c = a[-1] * inv % p
        shift = len(a) - len(b)
        q[shift] = c
        for j, y in enumerate(b):
            a[shift + j] = (a[shift + j] - c * y) % p
        _trim(a)
    return _trim(q), a


def poly_gcd(a, b, p):
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        _, r = poly_divmod(a, b, p)
        a, b = b, r
    if a:
        inv = pow(a[-1], p - 2, p)
        a = [x * inv % p for x in a]
    return a


def is_irreducible(f, p) -> bool:
    """Rabin's irreducibility test for a polynomial over F_p."""
    f = _trim(list(f))
    d = len(f) - 1
    if d < 1:
        return False
    x = [0, 1]
    if poly_powmod(x, p**d, f, p) != _trim(poly_divmod(x, f, p)[1]):
        return False
    for r in prime_factors(d):
        h = poly_powmod(x, p ** (d // r), f, p)
        diff = list(h) + [0] * max(0, 2 - len(h))
        diff[1] = (diff[1] - 1) % p
        if poly_gcd(f, _trim(diff), p) != [1]:
            return False
    return True


def is_primitive_poly(f, p) -> bool:
    """True iff x generates the multiplicative group of F_p[x]/(f)."""
    f = _trim(list(f))
    d = len(f) - 1
    if d < 1 or f[0] % p == 0:
        return False
    order = p**d - 1
    if d == 1:
        # root is -f0/f1; must generate F_p^*
        root = (-f[0]) * pow(f[1], p - 2, p) % p
        return all(pow(root, order // r, p) != 1 for r in prime_factors(order)) if order > 1 else root == 1
    x = [0, 1]
    if poly_powmod(x, order, f, p) != [1]:
        return False
    return all(poly_powmod(x, order // r, f, p) != [1] for r in prime_factors(order))


def conway_key(f, p):
    """Sort key realizing Conway's ordering on monic polynomials."""
    d = len(f) - 1
    return tuple(((-1) ** (d - i) * f[i]) % p for i in range(d - 1, -1, -1))


def _from_key(key, p):
    d = len(key)
    coeffs = [0] * (d + 1)
    coeffs[d] = 1
    for pos, i in enumerate(range(d - 1, -1, -1)):
        coeffs[i] = ((-1) ** (d - i) * key[pos]) % p
    return coeffs


def least_primitive_poly(p: int, degree: int) -> tuple[int, ...]:
    """First primitive monic polynomial in Conway's ordering."""
    for key in itertools.product(range(p), repeat=degree):
        f = _from_key(key, p)
        if is_primitive_poly(f, p):
            return tuple(f)
    raise AssertionError("primitive polynomials always exist")


def canonical_modulus(p: int, degree: int) -> tuple[int, ...]:
    return CONWAY.get((p, degree)) or least_primitive_poly(p, degree)


# ---------------------------------------------------------------------------


class Subfield:
    """GF(Q) for a subfield Q = q**degree of a FieldCtx, with small tables.

    Elements are encoded as integers ``0..Q-1`` ordered by their poly-int
    value, so 0 and 1 encode zero and one and, for a prime field, the
    encoding is the natural residue.
    """

    def __init__(self, ctx: "FieldCtx", degree: int):
        self.ctx = ctx
        self.degree = degree
        self.order = ctx.q**degree
        Q = self.order
        step = ctx.N // (Q - 1)
        logs = np.array([ctx.ZERO] + [k * step for k in range(Q - 1)], dtype=np.int64)
        polys = ctx.exp[logs]
        order = np.argsort(polys, kind="stable")
        self.logs = logs[order]  # encoding -> log
        self.to_enc = np.full(ctx.N + 1, -1, dtype=np.int64)
        self.to_enc[self.logs] = np.arange(Q)
        L = self.logs
        self.add = self.to_enc[ctx.add(L[:, None], L[None, :])].astype(np.int64)
        self.mul = self.to_enc[ctx.mul(L[:, None], L[None, :])].astype(np.int64)
        self.neg = self.to_enc[ctx.neg(L)].astype(np.int64)
        inv = np.zeros(Q, dtype=np.int64)
        inv[1:] = self.to_enc[ctx.inv(L[1:])]
        self.inv = inv
        self.sub = self.add[:, self.neg]
        self.is_prime = degree * ctx.l == 1

    def __repr__(self):
        return f"Subfield(GF({self.order}))"

    def encode(self, logs):
        enc = self.to_enc[np.asarray(logs)]
        if np.any(enc < 0):
            raise ValueError("element not in subfield")
        return enc

    def decode(self, enc):
        return self.logs[np.asarray(enc)]


class FieldCtx:
    """Arithmetic context for F_{q^n}, q = p**l, with n even."""

    def __init__(self, p: int, l: int, n: int, modulus=None, *, require_even: bool = True):
        if not is_prime(p):
            raise NonPrime(f"p={p} is not prime")
        if l < 1 or n < 1:
            raise ValueError("l and n must be positive")
        if require_even and n % 2:
            raise OddExtension(f"n={n} must be even")
        self.p, self.l, self.n = p, l, n
        self.q = p**l
        self.degree = l * n
        self.order = p**self.degree
        if self.order > MAX_ORDER:
            raise FieldTooLarge(f"q^n = {self.order} exceeds {MAX_ORDER}")
        self.N = self.order - 1
        self.ZERO = self.N

        if modulus is None:
            modulus = canonical_modulus(p, self.degree)
        else:
            modulus = [int(c) % p for c in modulus]
            _trim(modulus)
            if len(modulus) - 1 != self.degree:
                raise ReducibleModulus(f"modulus degree {len(modulus) - 1} != l*n = {self.degree}")
            inv = pow(modulus[-1], p - 2, p)
            modulus = [c * inv % p for c in modulus]
            if not is_irreducible(modulus, p):
                raise ReducibleModulus("modulus is reducible over F_p")
            if not is_primitive_poly(modulus, p):
                raise NonPrimitiveModulus("root of the modulus is not a primitive element")
        self.modulus = tuple(int(c) for c in modulus)
        self._build_tables()

    # -- construction -----------------------------------------------------

    def _build_tables(self):
        p, D, N = self.p, self.degree, self.N
        # multiplication-by-x matrix on coefficient vectors
        M = np.zeros((D, D), dtype=np.int64)
        for i in range(D - 1):
            M[i + 1, i] = 1
        M[:, D - 1] = [(-c) % p for c in self.modulus[:D]]
        vecs = np.zeros((N, D), dtype=np.int64)
        vecs[0, 0] = 1
        filled, Mpow = 1, M
        while filled < N:
            cnt = min(filled, N - filled)
            vecs[filled:filled + cnt] = vecs[:cnt] @ Mpow.T % p
            filled += cnt
            Mpow = Mpow @ Mpow % p
        weights = p ** np.arange(D, dtype=np.int64)
        exp = vecs @ weights
        if len(np.unique(exp)) != N or np.any(exp == 0):
            raise NonPrimitiveModulus("x is not primitive modulo the defining polynomial")
        self.exp = np.append(exp, 0).astype(np.int64)
        log = np.empty(self.order, dtype=np.int64)
        log[self.exp] = np.arange(N + 1)
        self.log = log
        self._weights = weights
        # zech[k] = log(1 + alpha^k); zech[ZERO] = 0
        polys = self.exp.copy()
        d0 = polys % p
        plus1 = np.where(d0 == p - 1, polys - (p - 1), polys + 1)
        self.zech = log[plus1]
        self.half = N // 2 if p != 2 else 0  # log of -1

    # -- scalar and vectorized arithmetic on logs --------------------------

    def _arr(self, a):
        return np.asarray(a, dtype=np.int64)

    def _ret(self, res, *inputs):
        if all(np.ndim(x) == 0 for x in inputs):
            return int(res)
        return res

    def mul(self, a, b):
        A, B = self._arr(a), self._arr(b)
        res = np.where((A == self.ZERO) | (B == self.ZERO), self.ZERO, (A + B) % self.N)
        return self._ret(res, a, b)

    def add(self, a, b):
        A, B = self._arr(a), self._arr(b)
        Z = self.ZERO
        d = (B - A) % self.N
        z = self.zech[d]
        s = np.where(z == Z, Z, (A + z) % self.N)
        res = np.where(A == Z, B, np.where(B == Z, A, s))
        return self._ret(res, a, b)

    def neg(self, a):
        A = self._arr(a)
        res = np.where(A == self.ZERO, self.ZERO, (A + self.half) % self.N)
        return self._ret(res, a)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def inv(self, a):
        A = self._arr(a)
        if np.any(A == self.ZERO):
            raise DivisionByZero("inverse of zero")
        res = (-A) % self.N
        return self._ret(res, a)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, k: int):
        A = self._arr(a)
        if k < 0:
            return self.pow(self.inv(a), -k)
        if k == 0:
            res = np.zeros_like(A)
        else:
            res = np.where(A == self.ZERO, self.ZERO, (A * k) % self.N)
        return self._ret(res, a)

    def arith(self, op: str, a, b=None, k: int | None = None):
        """Dispatch ``op`` in {add, sub, mul, div, neg, inv, pow}."""
        if op in ("neg", "inv"):
            return getattr(self, op)(a)
        if op == "pow":
            if k is None:
                raise ValueError("pow needs an exponent k")
            return self.pow(a, k)
        if op not in ("add", "sub", "mul", "div"):
            raise ValueError(f"unknown operation {op!r}")
        return getattr(self, op)(a, b)

    def frobenius(self, a, power: int = 1):
        """``a -> a**(q**power)``."""
        return self.pow(a, pow(self.q, power % self.n, self.N) if self.N > 1 else 1)

    def in_subfield(self, a, degree: int):
        """True iff ``a`` lies in F_{q^degree}."""
        if self.n % degree:
            raise ValueError(f"F_q^{degree} is not a subfield of F_q^{self.n}")
        A = self._arr(a)
        res = (A == self.ZERO) | (A % (self.N // (self.q**degree - 1)) == 0)
        return self._ret(res, a)

    def alpha(self, k: int = 1) -> int:
        return k % self.N

    def from_poly(self, v):
        V = self._arr(v)
        return self._ret(self.log[V], v)

    def to_poly(self, a):
        A = self._arr(a)
        return self._ret(self.exp[A], a)

    def from_coeffs(self, coeffs) -> int:
        """Log of the element with the given little-endian coefficients."""
        v = sum((int(c) % self.p) * self.p**i for i, c in enumerate(coeffs))
        return int(self.log[v])

    def elements(self):
        """All elements as logs: ZERO first, then alpha^0..alpha^(N-1)."""
        return np.concatenate([[self.ZERO], np.arange(self.N)])

    # -- sums -------------------------------------------------------------

    @cached_property
    def digits(self) -> np.ndarray:
        """Coefficient vectors of all elements, indexed by log (row ZERO is 0)."""
        return (self.exp[:, None] // self._weights[None, :]) % self.p

    def sum(self, a, axis=-1):
        """Field sum of log-encoded elements along ``axis``."""
        A = self._arr(a)
        if self.p == 2:
            polys = np.bitwise_xor.reduce(self.exp[A], axis=axis)
        else:
            dig = self.digits[A].sum(axis=axis if axis >= 0 else axis - 1) % self.p
            polys = dig @ self._weights
        res = self.log[polys]
        return int(res) if np.ndim(res) == 0 else res

    # -- subfields and trace ------------------------------------------------

    @cached_property
    def fq(self) -> Subfield:
        """The coefficient field F_q."""
        return Subfield(self, 1)

    def subfield(self, degree: int) -> Subfield:
        if degree == 1:
            return self.fq
        if self.n % degree:
            raise ValueError(f"F_q^{degree} is not a subfield")
        return Subfield(self, degree)

    @cached_property
    def trace_table(self) -> np.ndarray:
        """Tr_{q^n/q}(alpha^e) for e in [0, N-1], as F_q encodings."""
        e = np.arange(self.N, dtype=np.int64)
        terms = np.stack([(e * pow(self.q, k, self.N)) % self.N for k in range(self.n)], axis=1)
        return self.fq.encode(self.sum(terms, axis=1))

    # -- presentation -----------------------------------------------------

    def descriptor(self) -> str:
        mod_int = sum(c * self.p**i for i, c in enumerate(self.modulus))
        return f"GF({self.p}^{self.l})^{self.n}/{mod_int:x}"

    def info(self) -> dict:
        return {
            "p": self.p,
            "l": self.l,
            "n": self.n,
            "q": self.q,
            "order": self.order,
            "N": self.N,
            "modulus": list(self.modulus),
            "descriptor": self.descriptor(),
        }

    def __repr__(self):
        return f"FieldCtx({self.descriptor()})"


_CACHE: dict = {}


def build_field(p: int, l: int, n: int, modulus=None) -> FieldCtx:
    """Return a (cached, immutable) field context for F_{(p^l)^n}."""
    key = (p, l, n, None if modulus is None else tuple(modulus))
    ctx = _CACHE.get(key)
    if ctx is None:
        ctx = FieldCtx(p, l, n, modulus)
        _CACHE[key] = ctx
    return ctx


def field_for_q(q: int, n: int, modulus=None) -> FieldCtx:
    p, l = prime_power(q)
    return build_field(p, l, n, modulus)
