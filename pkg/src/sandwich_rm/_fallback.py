"""Pure numpy versions of the enumeration kernels.

Same contract as the compiled module: prefixes of ``w - 1`` rows are walked
in lexicographic order and the last row/coefficient pair is vectorized, so
witnesses and hit order agree with the compiled kernel.  Node counts agree
whenever a run completes.
"""

from __future__ import annotations

from math import comb

import numpy as np


def _tables(q, addt, mult):
    if addt is None or mult is None:
        e = np.arange(q)
        return (e[:, None] + e[None, :]) % q, (e[:, None] * e[None, :]) % q
    return np.asarray(addt, dtype=np.int64), np.asarray(mult, dtype=np.int64)


def _total_nodes(k, w, q):
    return sum(comb(k - (w - L), L) * (q - 1) ** (L - 1) for L in range(1, w + 1))


def _prefixes(k, L, q, depth=0, start=0):
    """(rows, coeffs) prefixes of length L in (row, coeff) lexicographic order."""
    if depth == L:
        yield (), ()
        return
    for j in range(start, k - (L - depth)):
        for c in range(1, 2 if depth == 0 else q):
            for rest, rc in _prefixes(k, L, q, depth + 1, j + 1):
                yield (j, *rest), (c, *rc)


def _walk(A, q, w, addt, mult, budget):
    """Yield (prefix_idx, prefix_coef, last_idx, last_coef, weights, nodes)."""
    A = np.asarray(A, dtype=np.int64)
    k, r = A.shape
    add, mul = _tables(q, addt, mult)
    # scaled[c, j] = c * A[j]
    scaled = mul[np.arange(q)[:, None, None], A[None, :, :]]
    nodes = 0
    for pre, pc in _prefixes(k, w - 1, q):
        start = pre[-1] + 1 if pre else 0
        if start >= k:
            continue
        acc = np.zeros(r, dtype=np.int64)
        for i, c in zip(pre, pc):
            acc = add[acc, scaled[c, i]]
        cs = np.arange(1, q) if w > 1 else np.array([1])
        block = add[acc[None, None, :], scaled[cs][:, start:, :]]  # (c, j, r)
        block = block.transpose(1, 0, 2)  # j-major, c inner
        wts = w + np.count_nonzero(block, axis=2).ravel()
        js = np.repeat(np.arange(start, k), len(cs))
        cc = np.tile(cs, k - start)
        nodes += len(wts)
        yield pre, pc, js, cc, wts, nodes
        if nodes > budget:
            return


def enumerate_level(A, q, w, best, stop_at, budget, addt=None, mult=None):
    A = np.asarray(A)
    k = A.shape[0]
    if w < 1 or w > k:
        return best, [], [], 0, 0
    start_best = best
    indices, coeffs = [], []
    nodes = 0
    status = 0
    for pre, pc, js, cc, wts, nodes in _walk(A, q, w, addt, mult, budget):
        early = np.nonzero((wts < best) & (wts <= stop_at))[0]
        i = int(early[0]) if len(early) else int(np.argmin(wts))
        if wts[i] < best:
            best = int(wts[i])
            indices = [*pre, int(js[i])]
            coeffs = [*pc, int(cc[i])]
            if best <= stop_at:
                status = 1
                break
        if nodes > budget:
            status = 2
            break
    if status == 0:
        nodes = _total_nodes(k, w, q)
    if best >= start_best:
        indices, coeffs = [], []
    return best, indices, coeffs, nodes, status


def collect_level(A, q, w, target, cap, budget, addt=None, mult=None):
    A = np.asarray(A)
    k = A.shape[0]
    hits = []
    overflow = False
    status = 0
    if 1 <= w <= k:
        for pre, pc, js, cc, wts, nodes in _walk(A, q, w, addt, mult, budget):
            for i in np.nonzero(wts == target)[0]:
                if len(hits) < cap:
                    hits.append([*pre, int(js[i]), *pc, int(cc[i])])
                else:
                    overflow = True
            if nodes > budget:
                status = 2
                break
        nodes = _total_nodes(k, w, q) if status == 0 else nodes
    else:
        nodes = 0
    out = np.array(hits, dtype=np.int64).reshape(len(hits), 2 * w)
    return out, nodes, status, overflow
