"""Row reduction over a small field GF(q) given by its operation tables.

``F`` is anything with ``order``, ``is_prime`` and the tables ``add``,
``sub``, ``mul``, ``neg``, ``inv`` (see :class:`sandwich_rm.field.Subfield`).
Matrices are int64 numpy arrays of field encodings.
"""

from __future__ import annotations

import numpy as np


def _axpy(F, rows, factors, pivot_row):
    """rows - factors[:, None] * pivot_row."""
    if F.is_prime:
        return (rows - factors[:, None] * pivot_row[None, :]) % F.order
    return F.sub[rows, F.mul[factors[:, None], pivot_row[None, :]]]


def _scale(F, row, c):
    if F.is_prime:
        return (row * c) % F.order
    return F.mul[c, row]


def rref(M, F, col_order=None):
    """Reduced row-echelon form.

    Returns ``(R, pivots)`` where R has only the nonzero rows.  ``col_order``
    optionally fixes the order in which columns are tried as pivots.
    """
    R = np.array(M, dtype=np.int64, copy=True)
    if R.ndim != 2:
        raise ValueError("expected a matrix")
    nrows, ncols = R.shape
    cols = range(ncols) if col_order is None else col_order
    pivots = []
    row = 0
    for c in cols:
        if row == nrows:
            break
        nz = np.nonzero(R[row:, c])[0]
        if len(nz) == 0:
            continue
        piv = row + nz[0]
        if piv != row:
            R[[row, piv]] = R[[piv, row]]
        R[row] = _scale(F, R[row], F.inv[R[row, c]])
        others = np.nonzero(R[:, c])[0]
        others = others[others != row]
        if len(others):
            R[others] = _axpy(F, R[others], R[others, c], R[row])
        pivots.append(int(c))
        row += 1
    return R[:row], pivots


def rank(M, F) -> int:
    M = np.asarray(M)
    if M.size == 0:
        return 0
    return len(rref(M, F)[1])


def nullspace(M, F, ncols=None):
    """Basis (in RREF) of {x : M x = 0}."""
    M = np.asarray(M, dtype=np.int64)
    if ncols is None:
        ncols = M.shape[1]
    if M.size == 0:
        return np.eye(ncols, dtype=np.int64)
    R, pivots = rref(M, F)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = np.zeros((len(free), ncols), dtype=np.int64)
    for i, f in enumerate(free):
        basis[i, f] = 1
        for r, pc in enumerate(pivots):
            basis[i, pc] = F.neg[R[r, f]]
    if len(basis) == 0:
        return basis
    return rref(basis, F)[0]


def matmul(A, B, F):
    """A @ B over GF(q)."""
    A = np.asarray(A, dtype=np.int64)
    B = np.asarray(B, dtype=np.int64)
    if F.is_prime:
        return (A @ B) % F.order
    out = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
    for t in range(A.shape[1]):
        out = F.add[out, F.mul[A[:, t][:, None], B[t][None, :]]]
    return out


def combine(rows, coeffs, F):
    """Linear combination sum_i coeffs[i] * rows[i]."""
    rows = np.asarray(rows, dtype=np.int64)
    coeffs = np.asarray(coeffs, dtype=np.int64)
    if F.is_prime:
        return (coeffs @ rows) % F.order
    out = np.zeros(rows.shape[1], dtype=np.int64)
    for c, r in zip(coeffs, rows):
        out = F.add[out, F.mul[c, r]]
    return out


def systematic(G, F, col_order=None):
    """Bring a full-rank generator to systematic form on its pivot columns.

    Returns ``(S, info, rest)`` with ``S[:, info]`` the identity.
    """
    S, info = rref(G, F, col_order)
    if len(info) != np.asarray(G).shape[0]:
        raise ValueError("generator matrix is not of full row rank")
    info_set = set(info)
    rest = [c for c in range(S.shape[1]) if c not in info_set]
    return S, info, rest
