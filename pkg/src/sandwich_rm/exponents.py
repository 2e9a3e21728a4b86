"""Combinatorics on exponents u in [0, q^n - 1].

Everything here is modulus-independent: sets hold integers, never field
elements.  Exponent sets for zero sets live in ``[1, q^n - 1]`` (so
``q^n - 1`` stands for alpha^0); extended defining sets additionally contain
0, the index of the overall-parity constraint.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from math import comb

import numpy as np

from .errors import InvalidI, OutOfRange, RangeError


def binom(a: int, b: int) -> int:
    """Binomial coefficient, zero whenever an argument is negative or b > a."""
    if b < 0 or a < 0 or b > a:
        return 0
    return comb(a, b)


@dataclass(frozen=True)
class ExponentSet:
    """Sorted set of exponents together with the modulus it is read against."""

    elements: tuple[int, ...]
    q: int
    N: int

    @classmethod
    def of(cls, values, q: int, N: int) -> "ExponentSet":
        return cls(tuple(sorted({int(v) for v in values})), q, N)

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, u):
        return u in self._members

    def __eq__(self, other):
        if isinstance(other, ExponentSet):
            return self.elements == other.elements
        if isinstance(other, (set, frozenset)):
            return set(self.elements) == other
        return NotImplemented

    def __hash__(self):
        return hash(self.elements)

    @cached_property
    def _members(self) -> frozenset:
        return frozenset(self.elements)

    def as_set(self) -> frozenset:
        return self._members

    @property
    def q_closed(self) -> bool:
        """Closed under u -> q*u (mod N), reading N itself as 0."""
        mods = {u % self.N for u in self.elements}
        return all((self.q * u) % self.N in mods for u in mods)

    def punctured(self) -> frozenset:
        """Residues mod N (drops nothing; maps q^n - 1 to 0)."""
        return frozenset(u % self.N for u in self.elements)

    def union(self, other) -> "ExponentSet":
        return ExponentSet.of(set(self.elements) | set(other), self.q, self.N)

    def difference(self, other) -> "ExponentSet":
        return ExponentSet.of(set(self.elements) - set(other), self.q, self.N)

    def to_json(self) -> str:
        return json.dumps(list(self.elements))

    def __repr__(self):
        return f"ExponentSet({list(self.elements)})"


@dataclass(frozen=True)
class ParitySelector:
    r: int
    I: frozenset

    def to_json(self) -> str:
        return json.dumps({"r": self.r, "I": sorted(self.I)})


class ExponentSpace:
    """Digit-level view of [0, q^n - 1] for fixed (q, n), n even."""

    def __init__(self, q: int, n: int):
        if n % 2:
            raise ValueError("n must be even")
        self.q, self.n, self.m = q, n, n // 2
        self.size = q**n
        self.N = self.size - 1
        self.top = n * (q - 1)  # wt_q(q^n - 1)

    @cached_property
    def digits(self) -> np.ndarray:
        u = np.arange(self.size, dtype=np.int64)
        return np.stack([(u // self.q**i) % self.q for i in range(self.n)], axis=1)

    @cached_property
    def weights(self) -> np.ndarray:
        return self.digits.sum(axis=1)

    @cached_property
    def odd_sums(self) -> np.ndarray:
        return self.digits[:, 1::2].sum(axis=1)

    @cached_property
    def even_sums(self) -> np.ndarray:
        return self.digits[:, 0::2].sum(axis=1)

    @cached_property
    def imbalance(self) -> np.ndarray:
        """|O(u) - E(u)| for every u."""
        return np.abs(self.odd_sums - self.even_sums)

    def _check(self, u):
        if not 0 <= u <= self.N:
            raise OutOfRange(f"exponent {u} outside [0, {self.N}]")

    def _set(self, values) -> ExponentSet:
        return ExponentSet.of(values, self.q, self.N)

    # -- digit functions ----------------------------------------------------

    def digits_of(self, u: int) -> list[int]:
        self._check(u)
        return [int(d) for d in self.digits[u]]

    def wt(self, u: int) -> int:
        self._check(u)
        return int(self.weights[u])

    def O(self, u: int) -> int:
        self._check(u)
        return int(self.odd_sums[u])

    def E(self, u: int) -> int:
        self._check(u)
        return int(self.even_sums[u])

    def preceq(self, s: int, t: int) -> bool:
        self._check(s)
        self._check(t)
        return bool(np.all(self.digits[s] <= self.digits[t]))

    def cyclotomic_coset(self, u: int) -> ExponentSet:
        if not 0 <= u < self.N:
            raise OutOfRange(f"exponent {u} outside [0, {self.N - 1}]")
        orbit, v = [], u
        while v not in orbit:
            orbit.append(v)
            v = (v * self.q) % self.N
        return self._set(orbit)

    # -- M_r, Z_r, Theta ----------------------------------------------------

    def M(self, r: int) -> frozenset:
        """M_+ (r even) or M_- (r odd)."""
        return frozenset(k for k in range(self.m * (self.q - 1) + 1) if k % 2 == r % 2)

    def Zr(self, r: int) -> ExponentSet:
        if not -1 <= r < self.top:
            raise RangeError(f"r={r} outside [-1, {self.top})")
        u = np.nonzero(self.weights <= self.top - r - 1)[0]
        return self._set(u[u > 0])

    def theta(self, r: int, k: int) -> ExponentSet:
        if not 0 <= r <= self.top:
            raise RangeError(f"r={r} outside [0, {self.top}]")
        if k not in self.M(r):
            return self._set(())
        mask = (self.weights == self.top - r) & (self.imbalance == k)
        return self._set(np.nonzero(mask)[0])

    def complement_I(self, r: int, I) -> frozenset:
        I = frozenset(I)
        Mr = self.M(r)
        if not I <= Mr:
            raise InvalidI(f"I={sorted(I)} is not a subset of M_{r}={sorted(Mr)}")
        return Mr - I

    def ZrI(self, r: int, I) -> ExponentSet:
        if not 0 <= r < self.top:
            raise RangeError(f"r={r} outside [0, {self.top})")
        Ibar = self.complement_I(r, I)
        removed = set()
        for k in I:
            removed |= self.theta(r, k).as_set()
        lhs = self.Zr(r - 1).as_set() - removed
        rhs = set(self.Zr(r).as_set())
        for k in Ibar:
            rhs |= self.theta(r, k).as_set()
        assert lhs == rhs, "Z_{r,I}: the two defining formulas disagree"
        return self._set(lhs)

    # alternate names
    wt_q = wt
    build_Zr = Zr
    build_theta = theta
    build_ZrI = ZrI

    # -- affine invariance ----------------------------------------------------

    def delta_closure(self, T) -> ExponentSet:
        T = [int(t) for t in T]
        for t in T:
            self._check(t)
        if not T:
            return self._set(())
        mask = np.zeros(self.size, dtype=bool)
        D = self.digits
        for t in T:
            mask |= np.all(D <= D[t], axis=1)
        return self._set(np.nonzero(mask)[0])

    def is_delta_closed(self, T) -> bool:
        return self.delta_closure(T).as_set() == frozenset(int(t) for t in T)

    # -- closed-form counts ---------------------------------------------------

    def _bounded_compositions(self, total: int) -> int:
        """Ways to write ``total`` as m digits in [0, q-1] (inclusion-exclusion)."""
        m, q = self.m, self.q
        return sum(
            (-1) ** i * binom(m, i) * binom(total - i * q + m - 1, total - i * q)
            for i in range(m + 1)
        )

    def count_theta(self, r: int, k: int) -> int:
        if not 0 <= r <= self.top:
            raise RangeError(f"r={r} outside [0, {self.top}]")
        if k not in self.M(r):
            return 0
        rest = self.top - r
        if k == 0:
            return self._bounded_compositions(rest // 2) ** 2
        if rest - k < 0:
            return 0
        return 2 * self._bounded_compositions((rest - k) // 2) * self._bounded_compositions((rest + k) // 2)

    def dim_rm(self, r: int) -> int:
        if r == -1:
            return 0
        if not 0 <= r <= self.top:
            raise RangeError(f"r={r} outside [-1, {self.top}]")
        n, q = self.n, self.q
        return sum((-1) ** i * binom(n, i) * binom(r - i * q + n, r - i * q) for i in range(n + 1))

    def dim_sandwich(self, r: int, I) -> int:
        if not 0 <= r < self.top:
            raise RangeError(f"r={r} outside [0, {self.top})")
        Ibar = self.complement_I(r, I)
        return self.dim_rm(r) - sum(self.count_theta(r, k) for k in Ibar)


_SPACES: dict = {}


def exponent_space(q: int, n: int) -> ExponentSpace:
    sp = _SPACES.get((q, n))
    if sp is None:
        sp = _SPACES[(q, n)] = ExponentSpace(q, n)
    return sp
