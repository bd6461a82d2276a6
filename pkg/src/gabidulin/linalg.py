"""Gaussian elimination over any exact field.

The ``_raw`` functions take a field object and lists of raw values; the
plain versions accept :class:`FieldElement` matrices.
"""

from __future__ import annotations

from .fields import FieldElement


def rref_raw(F, rows, counter=None):
    """Reduced row echelon form. Returns ``(matrix, pivot_columns)``."""
    M = [list(r) for r in rows]
    if not M:
        return M, []
    ncols = len(M[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(M)) if not F._is_zero(M[i][c])), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = F._inv(M[r][c])
        if counter is not None:
            counter.divs += 1
        M[r] = [F._mul(inv, x) if not F._is_zero(x) else x for x in M[r]]
        for i in range(len(M)):
            if i != r and not F._is_zero(M[i][c]):
                f = M[i][c]
                M[i] = [F._sub(a, F._mul(f, b)) if not F._is_zero(b) else a for a, b in zip(M[i], M[r])]
                if counter is not None:
                    counter.mults += ncols - c
                    counter.adds += ncols - c
        pivots.append(c)
        r += 1
        if r == len(M):
            break
    return M, pivots


def rank_raw(F, rows) -> int:
    if not rows or not rows[0]:
        return 0
    if getattr(F, "p", None) is not None and F.below is None:
        return _rank_mod_p(F.p, rows)
    return len(rref_raw(F, rows)[1])


def _rank_mod_p(p, rows):
    M = [[x % p for x in r] for r in rows]
    rank, ncols = 0, len(M[0])
    for c in range(ncols):
        piv = next((i for i in range(rank, len(M)) if M[i][c]), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        inv = pow(M[rank][c], -1, p)
        prow = M[rank]
        for i in range(rank + 1, len(M)):
            if M[i][c]:
                f = M[i][c] * inv % p
                M[i] = [(a - f * b) % p for a, b in zip(M[i], prow)]
        rank += 1
        if rank == len(M):
            break
    return rank


def kernel_raw(F, rows, ncols=None):
    """Basis of the right kernel; the ``j``-th vector has a 1 at the ``j``-th free column."""
    if ncols is None:
        ncols = len(rows[0])
    R, pivots = rref_raw(F, rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [F._zero] * ncols
        v[fc] = F._one
        for i, pc in enumerate(pivots):
            v[pc] = F._neg(R[i][fc])
        basis.append(v)
    return basis


def solve_raw(F, rows, rhs):
    """One solution of ``rows @ x = rhs`` or ``None`` when inconsistent."""
    ncols = len(rows[0])
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    R, pivots = rref_raw(F, aug)
    if ncols in pivots:
        return None
    x = [F._zero] * ncols
    for i, pc in enumerate(pivots):
        x[pc] = R[i][ncols]
    return x


def _unwrap(M):
    F = None
    for row in M:
        for x in row:
            if isinstance(x, FieldElement):
                F = x.field
                break
        if F is not None:
            break
    if F is None:
        raise ValueError("cannot infer the field of the matrix")
    return F, [[F(x).value for x in row] for row in M]


def rank(M, field=None) -> int:
    if not M or not M[0]:
        return 0
    if field is None:
        field, raw = _unwrap(M)
    else:
        raw = [[field(x).value for x in row] for row in M]
    return rank_raw(field, raw)


def rref(M, field=None):
    if field is None:
        field, raw = _unwrap(M)
    else:
        raw = [[field(x).value for x in row] for row in M]
    R, piv = rref_raw(field, raw)
    return [[FieldElement(field, x) for x in row] for row in R], piv


def kernel(M, field=None):
    if field is None:
        field, raw = _unwrap(M)
    else:
        raw = [[field(x).value for x in row] for row in M]
    return [[FieldElement(field, x) for x in v] for v in kernel_raw(field, raw)]


def solve(M, rhs, field=None):
    if field is None:
        field, raw = _unwrap(M)
    else:
        raw = [[field(x).value for x in row] for row in M]
    x = solve_raw(field, raw, [field(b).value for b in rhs])
    return None if x is None else [FieldElement(field, v) for v in x]


def matmul(A, B):
    n = len(B)
    return [[sum((A[i][t] * B[t][j] for t in range(1, n)), A[i][0] * B[0][j]) for j in range(len(B[0]))]
            for i in range(len(A))]
