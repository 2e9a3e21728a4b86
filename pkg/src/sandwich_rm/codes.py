"""Punctured and extended cyclic codes over F_q given by defining sets.

Coordinates: a punctured word has positions ``j = 0..N-1`` standing for
alpha^j; an extended word appends position ``N`` for the field element 0.
Position indices therefore coincide with the log encoding used by
:class:`~sandwich_rm.field.FieldCtx` (whose ZERO sentinel is N).  Symbols are
F_q encodings (``ctx.fq``).
"""

from __future__ import annotations

import json
from functools import cached_property

import numpy as np

from . import linalg
from .errors import InvalidI, LengthMismatch, RangeError, Unsupported, ZeroScale
from .exponents import ExponentSet, exponent_space
from .field import FieldCtx

PUNCTURED = "punctured"
EXTENDED = "extended"
_DIGITS = "0123456789abcdefghijklmnopqrstuvwxyz"


# ---------------------------------------------------------------------------
# codewords


def weight(x) -> int:
    return int(np.count_nonzero(x))


def to_digits(x) -> str:
    return "".join(_DIGITS[int(v)] for v in x)


def from_digits(s: str) -> np.ndarray:
    return np.array([_DIGITS.index(ch) for ch in s.strip().lower()], dtype=np.int64)


def rho_many(ctx: FieldCtx, x, exps) -> np.ndarray:
    """Power sums rho_s(x) for each s in ``exps`` (logs).

    Works on punctured (length N) and extended (length N+1) words; the
    extension position contributes x_0 * 0^s with 0^0 = 1.
    """
    x = np.asarray(x, dtype=np.int64)
    exps = np.asarray(list(exps), dtype=np.int64)
    N = ctx.N
    if len(x) not in (N, N + 1):
        raise LengthMismatch(f"word length {len(x)} is neither {N} nor {N + 1}")
    supp = np.nonzero(x[:N])[0]
    coeff = ctx.fq.logs[x[supp]]
    if len(supp):
        terms = ctx.mul(coeff[None, :], (exps[:, None] * supp[None, :]) % N)
        out = ctx.sum(terms, axis=1)
    else:
        out = np.full(len(exps), ctx.ZERO, dtype=np.int64)
    out = np.asarray(out, dtype=np.int64).reshape(len(exps))
    if len(x) == N + 1 and x[N]:
        at0 = exps == 0
        out[at0] = ctx.add(out[at0], ctx.fq.logs[x[N]])
    return out


def rho(ctx: FieldCtx, x, s: int) -> int:
    return int(rho_many(ctx, x, [s])[0])


def extend(ctx: FieldCtx, x) -> np.ndarray:
    """Append the overall parity symbol -sum(x) at position 0."""
    x = np.asarray(x, dtype=np.int64)
    if len(x) != ctx.N:
        raise LengthMismatch(f"expected a punctured word of length {ctx.N}")
    F = ctx.fq
    total = 0
    for v in x[x != 0]:
        total = F.add[total, v]
    return np.append(x, F.neg[total])


def puncture(ctx: FieldCtx, x) -> np.ndarray:
    x = np.asarray(x, dtype=np.int64)
    if len(x) != ctx.N + 1:
        raise LengthMismatch(f"expected an extended word of length {ctx.N + 1}")
    return x[: ctx.N].copy()


def affine_perm(ctx: FieldCtx, x, u: int, v: int) -> np.ndarray:
    """sigma_{u,v}: the symbol at g moves to u*g + v."""
    x = np.asarray(x, dtype=np.int64)
    if len(x) != ctx.N + 1:
        raise LengthMismatch("affine permutations act on extended words")
    if u == ctx.ZERO:
        raise ZeroScale("u must be nonzero")
    src = np.arange(ctx.N + 1)
    dst = ctx.add(ctx.mul(u, src), v)
    y = np.zeros_like(x)
    y[dst] = x
    return y


def cyclic_shift(x, k: int = 1, extended: bool = False) -> np.ndarray:
    """Move the symbol at alpha^j to alpha^(j+k); an extension symbol stays put."""
    x = np.asarray(x, dtype=np.int64)
    if extended:
        return np.append(np.roll(x[:-1], k), x[-1])
    return np.roll(x, k)


def algebra_mul(ctx: FieldCtx, x, y, algebra: str) -> np.ndarray:
    """Product in M = F_q[F*, x] (length N) or A = F_q[F, +] (length N+1)."""
    x = np.asarray(x, dtype=np.int64)
    y = np.asarray(y, dtype=np.int64)
    F = ctx.fq
    if algebra == "M":
        L = ctx.N
        if len(x) != L or len(y) != L:
            raise LengthMismatch(f"M has length {L}")
        pos = lambda i, j: (i + j) % L
    elif algebra == "A":
        L = ctx.N + 1
        if len(x) != L or len(y) != L:
            raise LengthMismatch(f"A has length {L}")
        pos = lambda i, j: ctx.add(i, j)
    else:
        raise ValueError("algebra must be 'M' or 'A'")
    sx, sy = np.nonzero(x)[0], np.nonzero(y)[0]
    z = np.zeros(L, dtype=np.int64)
    if len(sx) == 0 or len(sy) == 0:
        return z
    target = np.asarray(pos(sx[:, None], sy[None, :])).ravel()
    prods = F.mul[x[sx][:, None], y[sy][None, :]].ravel()
    if F.is_prime:
        np.add.at(z, target, prods)
        return z % F.order
    for t, v in zip(target, prods):
        z[t] = F.add[z[t], v]
    return z


# ---------------------------------------------------------------------------
# codes


class Code:
    """A punctured or extended cyclic code described by its defining set.

    ``defining_set`` is a subset of [0, N-1] for punctured codes and of
    [0, N] for extended ones (where 0 is the overall-parity constraint and N
    the constraint rho_N, i.e. alpha^0 as a zero).
    """

    def __init__(self, ctx: FieldCtx, kind: str, defining_set, family: str = "raw", r=None, I=None):
        if kind not in (PUNCTURED, EXTENDED):
            raise ValueError(f"unknown kind {kind!r}")
        self.ctx = ctx
        self.kind = kind
        self.family = family
        self.r = r
        self.I = None if I is None else frozenset(I)
        hi = ctx.N if kind == EXTENDED else ctx.N - 1
        T = ExponentSet.of(defining_set, ctx.q, ctx.N)
        if T.elements and not (0 <= T.elements[0] and T.elements[-1] <= hi):
            raise RangeError(f"defining set must lie in [0, {hi}]")
        self.defining_set = T
        self.length = ctx.N + 1 if kind == EXTENDED else ctx.N

    # -- identity -----------------------------------------------------------

    @property
    def q(self):
        return self.ctx.q

    @property
    def n(self):
        return self.ctx.n

    @property
    def dimension(self) -> int:
        """length - |defining set| (valid for q-closed defining sets)."""
        return self.length - len(self.defining_set)

    @property
    def zeros(self) -> ExponentSet:
        """Zero set of the underlying punctured code, as exponents in [1, N]."""
        N = self.ctx.N
        if self.kind == EXTENDED:
            vals = [t for t in self.defining_set if t != 0]
        else:
            vals = [t if t else N for t in self.defining_set]
        return ExponentSet.of(vals, self.q, N)

    @property
    def punctured_defining_set(self) -> frozenset:
        return self.zeros.punctured()

    def key(self):
        return (self.ctx.descriptor(), self.kind, self.defining_set.elements)

    def __eq__(self, other):
        return isinstance(other, Code) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def label(self) -> str:
        star = "*" if self.kind == PUNCTURED else ""
        q, n = self.q, self.n
        if self.family == "sandwich":
            return f"C_{q}({self.r},{{{','.join(map(str, sorted(self.I)))}}},{n}){star}"
        if self.family == "rm":
            return f"R_{q}({self.r},{n}){star}"
        return f"raw[{self.length},{self.dimension}]{star}"

    def __repr__(self):
        return f"Code({self.label()}, length={self.length}, dim={self.dimension})"

    def descriptor(self) -> dict:
        return {
            "q": self.q,
            "n": self.n,
            "r": self.r,
            "I": None if self.I is None else sorted(self.I),
            "kind": self.kind,
            "family": self.family,
        }

    def to_json(self) -> str:
        return json.dumps(self.descriptor(), sort_keys=True)

    # -- derived codes ------------------------------------------------------

    def punctured(self) -> "Code":
        if self.kind == PUNCTURED:
            return self
        if 0 not in self.defining_set:
            raise Unsupported("only extensions of cyclic codes can be punctured to a cyclic code")
        return Code(self.ctx, PUNCTURED, self.punctured_defining_set, self.family, self.r, self.I)

    def extended(self) -> "Code":
        if self.kind == EXTENDED:
            return self
        return Code(self.ctx, EXTENDED, set(self.zeros) | {0}, self.family, self.r, self.I)

    @property
    def is_affine_invariant(self) -> bool:
        """Delta-closure criterion; only meaningful for extended codes."""
        if self.kind != EXTENDED:
            return False
        return exponent_space(self.q, self.n).is_delta_closed(self.defining_set)

    # -- matrices -------------------------------------------------------------

    def constraint_rows(self) -> np.ndarray:
        """F_q-expansion of rho_s(x) = 0 for s in the defining set.

        Row (s, i) holds Tr(alpha^i * g^s) over the coordinates g, which is
        the i-th coordinate of rho_s in the trace-dual basis.
        """
        ctx = self.ctx
        N, n = ctx.N, ctx.n
        T = np.array(self.defining_set.elements, dtype=np.int64)
        if len(T) == 0:
            return np.zeros((0, self.length), dtype=np.int64)
        j = np.arange(N, dtype=np.int64)
        i = np.arange(n, dtype=np.int64)
        expo = (i[None, :, None] + T[:, None, None] * j[None, None, :]) % N
        rows = ctx.trace_table[expo].reshape(len(T) * n, N)
        if self.kind == EXTENDED:
            # position 0 contributes 0^s * alpha^i: only for s = 0
            last = np.zeros((len(T), n), dtype=np.int64)
            if T[0] == 0:
                last[0] = ctx.trace_table[i]
            rows = np.concatenate([rows, last.reshape(-1, 1)], axis=1)
        return rows

    @cached_property
    def parity_matrix(self) -> np.ndarray:
        rows = self.constraint_rows()
        if len(rows) == 0:
            return rows
        return linalg.rref(rows, self.ctx.fq)[0]

    @cached_property
    def generator_matrix(self) -> np.ndarray:
        return linalg.nullspace(self.parity_matrix, self.ctx.fq, self.length)

    @property
    def rank_dimension(self) -> int:
        return int(self.generator_matrix.shape[0])

    # -- membership -----------------------------------------------------------

    def _check_length(self, x):
        if len(x) != self.length:
            raise LengthMismatch(f"word length {len(x)} != code length {self.length}")

    def contains(self, x) -> bool:
        x = np.asarray(x, dtype=np.int64)
        self._check_length(x)
        if len(self.defining_set) == 0:
            return True
        vals = rho_many(self.ctx, x, self.defining_set.elements)
        return bool(np.all(vals == self.ctx.ZERO))

    def syndrome_zero(self, x) -> bool:
        """Membership through the parity matrix (independent of rho)."""
        x = np.asarray(x, dtype=np.int64)
        self._check_length(x)
        H = self.parity_matrix
        if len(H) == 0:
            return True
        return not np.any(linalg.matmul(H, x.reshape(-1, 1), self.ctx.fq))

    def random_codeword(self, rng) -> np.ndarray:
        G = self.generator_matrix
        coeffs = rng.integers(0, self.q, size=G.shape[0])
        return linalg.combine(G, coeffs, self.ctx.fq) if len(G) else np.zeros(self.length, dtype=np.int64)


def membership(c: Code, x) -> bool:
    return c.contains(x)


# ---------------------------------------------------------------------------
# constructors


def build_code(ctx: FieldCtx, family: str, kind: str = EXTENDED, r=None, I=None, defining_set=None) -> Code:
    """Construct R_q(r,n), C_q(r,I,n) or a raw code from its defining set."""
    E = exponent_space(ctx.q, ctx.n)
    top = E.top
    if family == "raw":
        if defining_set is None:
            raise ValueError("raw codes need a defining set")
        return Code(ctx, kind, defining_set, "raw", r, I)
    if family == "rm":
        if r is None or not -1 <= r <= top:
            raise RangeError(f"RM order must lie in [-1, {top}]")
        if r == top:
            return _full_space(ctx, kind, r=r)
        return _from_zeros(ctx, kind, E.Zr(r), "rm", r, None)
    if family == "sandwich":
        if r is None or not 0 <= r <= top:
            raise RangeError(f"r must lie in [0, {top}]")
        I = frozenset(() if I is None else I)
        if not I <= E.M(r):
            raise InvalidI(f"I={sorted(I)} is not a subset of M_{r}={sorted(E.M(r))}")
        if r == top:
            if 0 in I:
                return _full_space(ctx, kind, r=r, I=I)
            base = _from_zeros(ctx, kind, E.Zr(top - 1), "sandwich", r, I)
            return base
        return _from_zeros(ctx, kind, E.ZrI(r, I), "sandwich", r, I)
    raise ValueError(f"unknown family {family!r}")


def _from_zeros(ctx, kind, zeros, family, r, I):
    if kind == EXTENDED:
        T = set(zeros) | {0}
    else:
        T = {z % ctx.N for z in zeros}
    return Code(ctx, kind, T, family, r, I)


def _full_space(ctx, kind, r=None, I=None):
    return Code(ctx, kind, (), "raw", r, I)


def sandwich(ctx, r, I, kind=EXTENDED) -> Code:
    return build_code(ctx, "sandwich", kind, r, I)


def reed_muller(ctx, r, kind=EXTENDED) -> Code:
    return build_code(ctx, "rm", kind, r)


# ---------------------------------------------------------------------------
# duality


def dual_defining_set(c: Code) -> frozenset:
    N = c.ctx.N
    if c.kind == EXTENDED:
        return frozenset(range(N + 1)) - {N - t for t in c.defining_set}
    return frozenset((-s) % N for s in range(N) if s not in c.defining_set)


def dual(c: Code, verify: bool = True) -> Code:
    """The dual code, built from the parameter rule and checked against the
    defining-set computation (and, with ``verify``, against the matrices)."""
    E = exponent_space(c.q, c.n)
    top = E.top
    if c.kind != EXTENDED:
        raise Unsupported("dual is defined here for extended codes")
    if c.family == "sandwich" and c.r is not None and c.r < top:
        d = build_code(c.ctx, "sandwich", EXTENDED, top - c.r, E.M(c.r) - c.I)
    elif c.family == "rm":
        d = build_code(c.ctx, "rm", EXTENDED, top - c.r - 1)
    else:
        raise Unsupported(f"no parameter rule for the dual of {c.label()}")
    expected = dual_defining_set(c)
    if d.defining_set.as_set() != expected:
        raise AssertionError(f"dual of {c.label()}: defining sets disagree")
    if verify:
        check_orthogonal(c, d)
    return d


def check_orthogonal(c: Code, d: Code):
    F = c.ctx.fq
    if c.dimension + d.dimension != c.length:
        raise AssertionError("dimensions of a code and its dual must sum to the length")
    G, H = c.generator_matrix, d.generator_matrix
    if len(G) and len(H) and np.any(linalg.matmul(G, H.T, F)):
        raise AssertionError("generator matrices are not orthogonal")
