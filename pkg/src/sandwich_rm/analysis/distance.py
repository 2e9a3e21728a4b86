"""Minimum-distance bounds and exact search.

Search strategies
-----------------
exhaustive
    every codeword (up to scalars) from one systematic generator.
support
    supports of increasing size w; a support S carries a codeword iff the
    parity matrix restricted to S has rank < |S|.
bz
    Brouwer-Zimmermann style enumeration by information weight.  Cyclic
    (punctured) codes and affine-invariant extended codes have a transitive
    automorphism group, so one information set suffices: once every
    combination of at most w rows is done, any unseen codeword has weight
    >= ceil(L(w+1)/k).  Other codes use disjoint information sets and
    relative ranks.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations, product
from math import ceil, comb, gcd

import numpy as np

from .. import kernels, linalg
from ..codes import EXTENDED, PUNCTURED, Code, affine_perm, extend, to_digits, weight
from ..errors import BudgetExceeded, TooMany, Unsupported
from ..exponents import exponent_space

EXHAUSTIVE_LIMIT = 2**24
SUPPORT_CAP = 20_000
DEFAULT_BUDGET = 2 * 10**10
STRATEGIES = ("auto", "exhaustive", "support", "bz")


# ---------------------------------------------------------------------------
# bounds


def _longest_cyclic_run(mask: np.ndarray) -> int:
    if mask.all():
        return len(mask)
    # rotate so the array starts right after a gap
    start = int(np.argmin(mask)) + 1
    m = np.roll(mask, -start).astype(np.int8)
    edges = np.diff(np.concatenate([[0], m, [0]]))
    starts, ends = np.nonzero(edges == 1)[0], np.nonzero(edges == -1)[0]
    return int((ends - starts).max()) if len(starts) else 0


def bch_bound(zeros, N: int, max_steps: int = 4096) -> tuple[int, int]:
    """Best BCH bound over steps a with gcd(a, N) = 1.

    ``zeros`` are residues mod N.  Returns ``(bound, step)``.
    """
    Z = np.zeros(N, dtype=bool)
    Z[list(zeros)] = True
    best, best_a = 1 + _longest_cyclic_run(Z), 1
    if N > 2:
        steps = [a for a in range(2, N // 2 + 1) if gcd(a, N) == 1][:max_steps]
        j = np.arange(N)
        for a in steps:
            run = _longest_cyclic_run(Z[(a * j) % N])
            if run + 1 > best:
                best, best_a = run + 1, a
    return best, best_a


def _translation_gain(c: Code) -> int:
    """1 when an extended code is affine invariant (weights of the punctured
    code's minimum words grow by exactly one), else 0."""
    if c.kind == EXTENDED and 0 in c.defining_set and c.is_affine_invariant:
        return 1
    return 0


def rm_distance(q: int, n: int, r: int) -> int:
    """Minimum distance of the extended generalized Reed-Muller code of order r."""
    if not 0 <= r <= n * (q - 1):
        raise ValueError("order out of range")
    if r == n * (q - 1):
        return 1
    rho, s = divmod(r, q - 1)
    return (q - s) * q ** (n - rho - 1)


def sandwich_bound(q: int, n: int, R: int, I) -> dict | None:
    """Classify C_q(R, I, n) into the exact branch, the lower-bound branch,
    or neither; values are for the extended code.  ``None`` when R - 1 is
    outside [0, n(q-1) - 2]."""
    r = R - 1
    if not 0 <= r <= n * (q - 1) - 2:
        return None
    I = frozenset(I)
    rho, s = divmod(r, q - 1)
    E = exponent_space(q, n)
    M = E.M(R)
    exact_val = (q - s) * q ** (n - rho - 1)
    out = {"rho": rho, "s": s, "exact": False, "value": None, "branch": "none", "degenerate": False}
    if rho == n - 1:
        hyp = {q - 2 - s}
        out["hypothesis"] = sorted(hyp)
        out["degenerate"] = not hyp <= M
        if not hyp & I:
            out.update(exact=True, value=q - s, branch="equal")
        return out
    low_val = (q * q - q * s - 1) * q ** (n - rho - 2)
    if rho % 2:
        hyp, upper = {q - s, q - 2 - s}, q - s
        low_ok = True
    else:
        hyp, upper = {s + 1, abs(s - 1)}, abs(s - 1)
        low_ok = s != 0
    out["hypothesis"] = sorted(hyp)
    out["degenerate"] = len(hyp) < 2 or not hyp <= M
    hit = hyp & I
    if not hit:
        out.update(exact=True, value=exact_val, branch="equal")
    elif low_ok and hit == {upper} and len(hyp) == 2:
        out.update(value=low_val, branch="lower")
    return out


def distance_bounds(c: Code) -> dict:
    """Sound lower bounds (and an upper hint) on dist(c).

    Keys: ``bch``, ``bch_step``, ``sandwich`` (classification or None),
    ``rm_range`` (bounds from R(r) <= C <= R(r+1) for sandwich codes),
    ``lower``/``lower_method`` (the best sound lower bound).
    """
    ctx = c.ctx
    q, n, N = c.q, c.n, ctx.N
    gain = _translation_gain(c)
    zeros = c.punctured_defining_set
    if len(zeros) == N:
        bch, step = c.length + 1, 1
    else:
        bch, step = bch_bound(zeros, N)
        bch = min(bch + gain, c.length)
    out = {"bch": bch, "bch_step": step, "sandwich": None, "rm_range": None}
    lower, method = bch, "bch"
    shift = 0 if c.kind == EXTENDED else 1
    if c.family == "sandwich" and c.r is not None and c.r <= n * (q - 1):
        lo_rm = rm_distance(q, n, c.r) - shift
        hi_rm = rm_distance(q, n, c.r - 1) - shift if c.r >= 1 else None
        out["rm_range"] = [lo_rm, hi_rm]
        if lo_rm > lower:
            lower, method = lo_rm, "rm-sandwich"
        sb = sandwich_bound(q, n, c.r, c.I)
        if sb is not None and sb["value"] is not None:
            sb = dict(sb, value=sb["value"] - shift)
            if sb["value"] > lower:
                lower, method = sb["value"], "sandwich-bound"
        out["sandwich"] = sb
    elif c.family == "rm" and c.r is not None and 0 <= c.r <= n * (q - 1):
        val = rm_distance(q, n, c.r) - shift
        out["rm_range"] = [val, val]
        if val > lower:
            lower, method = val, "rm-formula"
    out["lower"], out["lower_method"] = lower, method
    return out


# ---------------------------------------------------------------------------
# report


@dataclass
class DistanceReport:
    code: str
    length: int
    dimension: int
    lower_bound: int
    lower_method: str
    upper_bound: int | None = None
    witness: np.ndarray | None = None
    exact: int | None = None
    strategy: str = ""
    nodes: int = 0
    notes: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "code": self.code,
            "length": self.length,
            "dimension": self.dimension,
            "lower_bound": self.lower_bound,
            "lower_method": self.lower_method,
            "upper_bound": self.upper_bound,
            "witness": None if self.witness is None else to_digits(self.witness),
            "exact": self.exact,
            "strategy": self.strategy,
            "nodes": self.nodes,
            "notes": list(self.notes),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


# ---------------------------------------------------------------------------
# search helpers


def _tables(F):
    return F.add.astype(np.uint8), F.mul.astype(np.uint8)


class _Search:
    """Mutable search state shared by the strategies."""

    def __init__(self, c: Code, G: np.ndarray, lower: int, method: str, budget: int):
        self.c = c
        self.G = G
        self.F = c.ctx.fq
        self.q = c.q
        self.L = G.shape[1]
        self.k = G.shape[0]
        self.lower, self.method = lower, method
        self.best = self.L + 1
        self.word = None
        self.nodes = 0
        self.budget = budget
        self.addt, self.mult = _tables(self.F)

    def offer(self, word):
        wt = weight(word)
        if 0 < wt < self.best:
            self.best, self.word = wt, np.asarray(word, dtype=np.int64)

    def raise_lower(self, value: int, method: str):
        if value > self.lower:
            self.lower, self.method = min(value, self.best), method

    @property
    def done(self) -> bool:
        return self.lower >= self.best

    def remaining(self) -> int:
        return max(self.budget - self.nodes, 0)

    def level(self, S, rest, w):
        """Run one level of the enumeration on systematic matrix S."""
        A = S[:, rest]
        best, idx, coef, nodes, status = kernels.enumerate_level(
            A, self.q, w, self.best, self.lower, self.remaining(), self.addt, self.mult
        )
        self.nodes += nodes
        if idx:
            self.offer(linalg.combine(S[idx], coef, self.F))
        return status


def _systematic(G, F, col_order=None):
    S, info, rest = linalg.systematic(G, F, col_order)
    return S, info, rest


def _transitive(c: Code) -> bool:
    return c.kind == PUNCTURED or c.is_affine_invariant


def _run_exhaustive(st: _Search):
    S, info, rest = _systematic(st.G, st.F)
    for w in range(1, st.k + 1):
        if st.done:
            break
        status = st.level(S, rest, w)
        if status == 2:
            return False
        if status == 1:
            break
    else:
        st.raise_lower(st.best, "exhaustive")
    if st.best <= st.lower:
        st.lower = st.best
    return True


def _run_bz(st: _Search, transitive: bool):
    L, k = st.L, st.k
    if transitive:
        S, info, rest = _systematic(st.G, st.F)
        for w in range(1, k + 1):
            st.raise_lower(ceil(L * w / k), "bz")
            if st.done:
                return True
            status = st.level(S, rest, w)
            if status == 2:
                return False
            if status == 1:
                st.lower = st.best
                return True
        st.lower = st.best
        return True
    # disjoint information sets with relative ranks
    mats, remaining = [], list(range(L))
    while remaining:
        taken = set(remaining)
        order = remaining + [j for j in range(L) if j not in taken]
        S, info, rest = _systematic(st.G, st.F, order)
        kj = sum(1 for j in info if j in taken)
        if kj == 0:
            break
        mats.append((S, rest, kj))
        inside = set(info)
        remaining = [j for j in remaining if j not in inside]
    for w in range(1, k + 1):
        bound = sum(max(0, w - (k - kj)) for _, _, kj in mats)
        st.raise_lower(bound, "bz")
        if st.done:
            return True
        for S, rest, _ in mats:
            status = st.level(S, rest, w)
            if status == 2:
                return False
            if status == 1:
                st.lower = st.best
                return True
    st.lower = st.best
    return True


def _support_words(H, F, S):
    """Codewords supported inside the column set S (basis of the kernel)."""
    if len(H) == 0:
        return np.eye(len(S), dtype=np.int64)
    return linalg.nullspace(H[:, list(S)], F, len(S))


def _run_support(st: _Search, cap: int) -> bool:
    c, F, L = st.c, st.F, st.L
    H = c.parity_matrix
    w = max(st.lower, 1)
    while w < st.best:
        total = comb(L, w)
        if total > cap or total > st.remaining():
            return False
        for S in combinations(range(L), w):
            st.nodes += 1
            if len(H) and linalg.rank(H[:, S], F) == w:
                continue
            v = _support_words(H, F, S)[0]
            word = np.zeros(L, dtype=np.int64)
            word[list(S)] = v
            st.offer(word)
            break
        if st.best == w:
            break
        st.raise_lower(w + 1, "support")
        w += 1
    st.lower = st.best
    return True


# ---------------------------------------------------------------------------
# public API


def _finish(st: _Search, c: Code, strategy: str, notes) -> DistanceReport:
    rep = DistanceReport(
        code=c.label(),
        length=c.length,
        dimension=st.k,
        lower_bound=min(st.lower, st.best),
        lower_method=st.method,
        upper_bound=st.best if st.word is not None else None,
        witness=st.word,
        exact=st.best if st.word is not None and st.lower >= st.best else None,
        strategy=strategy,
        nodes=st.nodes,
        notes=notes,
    )
    if rep.witness is not None and not c.syndrome_zero(rep.witness):
        raise AssertionError("distance witness is not a codeword")
    return rep


def min_distance(c: Code, strategy: str = "auto", budget: int | None = None, threads: int = 1) -> DistanceReport:
    """Exact minimum distance with a witness, or bounds plus BudgetExceeded.

    ``threads`` is accepted for interface compatibility; the enumeration
    runs on one core.
    """
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}")
    budget = DEFAULT_BUDGET if budget is None else int(budget)
    G = c.generator_matrix
    k, L = G.shape[0], c.length
    if k == 0:
        raise Unsupported("the zero code has no minimum distance")
    bounds = distance_bounds(c)
    notes = []
    sb = bounds["sandwich"]
    if sb is not None and sb.get("degenerate"):
        notes.append("sandwich hypothesis set degenerate: " + str(sb.get("hypothesis")))

    # affine-invariant extended codes: search the punctured code, add one
    if c.kind == EXTENDED and _translation_gain(c) and strategy in ("auto", "bz") and k > 1:
        inner = c.punctured()
        try:
            rep = min_distance(inner, strategy, budget, threads)
        except BudgetExceeded as exc:
            part = exc.report
            rep = _lift(c, part, bounds, notes)
            raise BudgetExceeded(str(exc), rep) from None
        return _lift(c, rep, bounds, notes)

    st = _Search(c, G, bounds["lower"], bounds["lower_method"], budget)
    if k == L:
        e = np.zeros(L, dtype=np.int64)
        e[0] = 1
        st.offer(e)
        st.lower = 1
        return _finish(st, c, "trivial", notes)

    used = strategy
    if strategy == "auto":
        if c.q**k <= EXHAUSTIVE_LIMIT:
            used = "exhaustive"
        elif comb(L, max(st.lower, 1)) <= SUPPORT_CAP:
            used = "support"
        else:
            used = "bz"
    ok = True
    if used == "exhaustive":
        ok = _run_exhaustive(st)
    elif used == "support":
        ok = _run_support(st, SUPPORT_CAP if strategy == "auto" else budget)
        if not ok and strategy == "auto":
            used = "support+bz"
            ok = _run_bz(st, _transitive(c))
    else:
        ok = _run_bz(st, _transitive(c))
    rep = _finish(st, c, used, notes)
    if not ok:
        raise BudgetExceeded(f"node budget {budget} exhausted for {c.label()}", rep)
    return rep


def _lift(c: Code, rep: DistanceReport, bounds: dict, notes) -> DistanceReport:
    """Punctured-code report -> report for the affine-invariant extension."""
    witness = None if rep.witness is None else extend(c.ctx, rep.witness)
    lower, method = rep.lower_bound + 1, rep.lower_method
    if bounds["lower"] > lower:
        lower, method = bounds["lower"], bounds["lower_method"]
    upper = None if witness is None else weight(witness)
    out = DistanceReport(
        code=c.label(),
        length=c.length,
        dimension=rep.dimension,
        lower_bound=lower if upper is None else min(lower, upper),
        lower_method=method,
        upper_bound=upper,
        witness=witness,
        exact=upper if upper is not None and lower >= upper else None,
        strategy=rep.strategy + "+punctured",
        nodes=rep.nodes,
        notes=list(notes) + rep.notes,
    )
    if witness is not None and not c.syndrome_zero(witness):
        raise AssertionError("lifted witness is not a codeword")
    return out


# ---------------------------------------------------------------------------
# codewords of a given weight

WORD_CAP = 10**6


def _unique_rows(words, L) -> np.ndarray:
    if not len(words):
        return np.zeros((0, L), dtype=np.int64)
    arr = np.unique(np.asarray(words, dtype=np.int64).reshape(-1, L), axis=0)
    return arr


def _with_scalars(words, F) -> list:
    out = []
    for x in words:
        for lam in range(1, F.order):
            out.append(F.mul[lam, x])
    return out


def _collect(c: Code, G, w: int, max_level: int, budget: int, cap: int):
    """All weight-w codewords whose information weight is <= max_level, up to scalars."""
    F = c.ctx.fq
    S, info, rest = _systematic(G, F)
    A = S[:, rest]
    addt, mult = _tables(F)
    words, nodes = [], 0
    for lvl in range(1, max_level + 1):
        hits, used, status, overflow = kernels.collect_level(A, c.q, lvl, w, cap, max(budget - nodes, 0), addt, mult)
        nodes += used
        if status == 2:
            raise BudgetExceeded(f"node budget {budget} exhausted while collecting weight {w}")
        if overflow or len(words) + len(hits) > cap:
            raise TooMany(f"more than {cap} codewords of weight {w}")
        for h in hits:
            words.append(linalg.combine(S[h[:lvl]], h[lvl:], F))
    return words, nodes


def _orbit_closure(c: Code, words, cap: int) -> list:
    """Close a word list under generators of the code's transitive group."""
    ctx = c.ctx
    if c.kind == PUNCTURED:
        gens = [lambda x: np.roll(x, 1)]
    else:
        gens = [lambda x: affine_perm(ctx, x, 1, ctx.ZERO)]
        # translations by alpha^0..alpha^(deg-1) generate the additive group
        gens += [lambda x, b=b: affine_perm(ctx, x, 0, b) for b in range(ctx.degree)]
    seen = {x.tobytes(): x for x in (np.asarray(w, dtype=np.int64) for w in words)}
    frontier = list(seen.values())
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = g(x)
                key = y.tobytes()
                if key not in seen:
                    seen[key] = y
                    nxt.append(y)
                    if len(seen) > cap:
                        raise TooMany(f"more than {cap} codewords in the orbit closure")
        frontier = nxt
    return list(seen.values())


def min_weight_codewords(c: Code, w: int, strategy: str = "auto", budget: int | None = None, cap: int = WORD_CAP) -> np.ndarray:
    """Every nonzero codeword of weight exactly ``w`` (rows, deduplicated and sorted).

    Strategies: ``exhaustive`` (q^k <= 2^24), ``support`` (all supports of
    size w), ``orbit`` (transitive codes: low information weight plus
    closure under the automorphism group).  ``auto`` tries them in that order.
    """
    budget = DEFAULT_BUDGET if budget is None else int(budget)
    L = c.length
    G = c.generator_matrix
    k = G.shape[0]
    F = c.ctx.fq
    if w <= 0 or k == 0 or w > L:
        return np.zeros((0, L), dtype=np.int64)
    if strategy == "auto":
        if c.q**k <= EXHAUSTIVE_LIMIT:
            strategy = "exhaustive"
        elif comb(L, w) <= SUPPORT_CAP:
            strategy = "support"
        elif _transitive(c):
            strategy = "orbit"
        else:
            raise BudgetExceeded(f"no feasible strategy to list weight-{w} words of {c.label()}")
    if strategy == "exhaustive":
        words, _ = _collect(c, G, w, k, budget, cap)
        return _unique_rows(_with_scalars(words, F), L)
    if strategy == "support":
        if comb(L, w) > budget:
            raise BudgetExceeded(f"{comb(L, w)} supports exceed the budget {budget}")
        H = c.parity_matrix
        words = []
        for S in combinations(range(L), w):
            B = _support_words(H, F, S)
            if len(B) == 0:
                continue
            for coeffs in product(range(F.order), repeat=len(B)):
                v = linalg.combine(B, coeffs, F)
                if np.all(v != 0):
                    x = np.zeros(L, dtype=np.int64)
                    x[list(S)] = v
                    words.append(x)
            if len(words) > cap:
                raise TooMany(f"more than {cap} codewords of weight {w}")
        return _unique_rows(words, L)
    if strategy == "orbit":
        if not _transitive(c):
            raise Unsupported("orbit closure needs an affine-invariant or cyclic code")
        words, _ = _collect(c, G, w, min(k, (w * k) // L), budget, cap)
        words = _with_scalars(words, F)
        return _unique_rows(_orbit_closure(c, words, cap), L)
    raise ValueError(f"unknown strategy {strategy!r}")
