"""Rank weights of vectors over ``L`` and the induced distances."""

from __future__ import annotations

from .fields import CyclicAutomorphism, k_rank
from .linalg import rank_raw
from .skew import HdimViolation, annihilator

KINDS = ("annihilator", "moore_L", "moore_K", "basis")


def moore_rank_L(theta: CyclicAutomorphism, x) -> int:
    """Rank over ``L`` of the ``s x n`` matrix ``theta^i(x_j)``."""
    L = theta.field
    vals = [L(v).value for v in x]
    rows = [[theta.apply_raw(v, i) for v in vals] for i in range(theta.order)]
    return rank_raw(L, rows)


def moore_rank_K(theta: CyclicAutomorphism, x) -> int:
    """Number of K-independent columns of the Moore matrix.

    Each column is flattened to its ``s*m`` coordinates over ``K``.
    """
    L = theta.field
    vals = [L(v).value for v in x]
    cols = []
    for v in vals:
        col = []
        for i in range(theta.order):
            col.extend(theta.apply_raw(v, i))
        cols.append(col)
    rows = [[c[r] for c in cols] for r in range(len(cols[0]))] if cols else []
    return rank_raw(L.below, rows)


def weight(x, kind: str = "moore_L", theta: CyclicAutomorphism | None = None, basis=None) -> int:
    """Rank weight of ``x``; ``theta`` is needed for every kind except ``basis``."""
    x = list(x)
    if kind not in KINDS:
        raise ValueError(f"unknown weight kind {kind!r}; expected one of {KINDS}")
    if not x:
        return 0
    if kind == "basis":
        field = theta.field if theta is not None else x[0].field
        return k_rank([field(v) for v in x], basis=basis, field=field)
    if theta is None:
        raise ValueError(f"weight kind {kind!r} needs the automorphism")
    if kind == "moore_L":
        return moore_rank_L(theta, x)
    if kind == "moore_K":
        return moore_rank_K(theta, x)
    if all(theta.field(v).is_zero() for v in x):
        return 0
    try:
        return annihilator(theta, x).degree
    except HdimViolation:
        return least_vanishing_degree(theta, x)


def least_vanishing_degree(theta: CyclicAutomorphism, x) -> int:
    """Least degree of a nonzero skew polynomial vanishing on every ``x_j``.

    Defined for any automorphism: it is the first ``d`` for which the Moore
    rows ``0..d`` are L-dependent.
    """
    L = theta.field
    vals = [L(v).value for v in x]
    rows = []
    for d in range(theta.order + 1):
        rows.append([theta.apply_raw(v, d) for v in vals])
        if rank_raw(L, rows) <= d:
            return d
    return theta.order


def rank_distance(x, y, kind: str = "moore_L", theta: CyclicAutomorphism | None = None, basis=None) -> int:
    x, y = list(x), list(y)
    if len(x) != len(y):
        raise ValueError("vectors have different lengths")
    return weight([a - b for a, b in zip(x, y)], kind, theta, basis)


def all_weights(x, theta: CyclicAutomorphism) -> dict:
    return {k: weight(x, k, theta) for k in KINDS}

