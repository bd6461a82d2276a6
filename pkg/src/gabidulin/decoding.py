"""Error and erasure decoding for Gabidulin codes.

Two error decoders solve the linear reconstruction problem: find ``(N, W)``
with ``W != 0``, ``deg W <= t`` and ``W{y_i} = N{g_i}``.  The message is then
the left quotient ``N = W * f``.

* :func:`decode_gauss` solves it as one linear system over ``L``.
* :func:`reconstruct_wb` runs the quadratic Welch-Berlekamp style iteration,
  in a standard, a division-free and a low-degree flavour.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

import networkx as nx

from .codes import GabidulinCode
from .fields import FieldElement
from .linalg import rank_raw, rref_raw
from .skew import (
    OpCounter,
    SkewPoly,
    _eval_raw,
    _Ops,
    _trim,
    annihilator,
    annihilator_interpolator,
    df_annihilator_interpolator,
    left_divmod,
    sp_add,
    sp_mul,
)

VARIANTS = ("standard", "division_free", "low_degree")
METHODS = {"gauss": None, "wb": "standard", "wb-df": "division_free", "wb-lowdeg": "low_degree"}


class DecodingFailure(Exception):
    """No codeword within the decoding radius (or the erasure budget is exceeded)."""


class InvariantViolation(AssertionError):
    """An internal degree or contract check of the reconstruction failed."""


@dataclass
class DecodeResult:
    f: SkewPoly
    e: list
    codeword: list
    counter: OpCounter | None = None
    extra: dict = dc_field(default_factory=dict)


def _lr_degree_bound(n, k):
    t = (n - k) // 2
    return k + t - 1 if (n - k) % 2 == 0 else k + t


def check_lr_contract(code: GabidulinCode, y, N: SkewPoly, W: SkewPoly):
    """Raise :class:`InvariantViolation` unless ``(N, W)`` solves the reconstruction problem."""
    n, k, t = code.n, code.k, code.t_max
    if W.is_zero():
        raise InvariantViolation("W is zero")
    if W.degree > t:
        raise InvariantViolation(f"deg W = {W.degree} > t = {t}")
    if N.degree > _lr_degree_bound(n, k):
        raise InvariantViolation(f"deg N = {N.degree} exceeds {_lr_degree_bound(n, k)}")
    for gi, yi in zip(code.g, y):
        if W(yi) != N(gi):
            raise InvariantViolation("W{y_i} != N{g_i}")


def _finish(code, y, N, W, counter):
    f, r = left_divmod(N, W, counter)
    if not r.is_zero() or f.degree >= code.k:
        raise DecodingFailure("no codeword within the decoding radius")
    c = code.encode(f)
    e = [a - b for a, b in zip(y, c)]
    return DecodeResult(f=f, e=e, codeword=c, counter=counter)


# -- Gaussian elimination


def solve_lr_gauss(code: GabidulinCode, y, counter=None):
    n, k = code.n, code.k
    t = code.t_max
    s = t if (n - k) % 2 == 0 else t + 1
    theta = code.theta
    L = code.field
    g = [x.value for x in code.g]
    yv = [L(v).value for v in y]
    rows = []
    for gi, yi in zip(g, yv):
        rows.append([theta.apply_raw(gi, a) for a in range(k + s)] + [theta.apply_raw(yi, b) for b in range(t + 1)])
    ncols = k + s + t + 1
    R, pivots = rref_raw(L, rows, counter)
    free = next(c for c in range(ncols) if c not in pivots)
    sol = [L._zero] * ncols
    sol[free] = L._one
    for i, pc in enumerate(pivots):
        sol[pc] = L._neg(R[i][free])
    N = SkewPoly._raw(theta, sol[: k + s])
    # the unknowns of the second block are -w_b
    W = SkewPoly._raw(theta, [L._neg(v) for v in sol[k + s:]])
    return N, W


def decode_gauss(code: GabidulinCode, y, counter=None) -> DecodeResult:
    y = [code.field(v) for v in y]
    if len(y) != code.n:
        raise ValueError("word length differs from n")
    N, W = solve_lr_gauss(code, y, counter)
    if W.is_zero():
        raise DecodingFailure("reconstruction produced W = 0")
    return _finish(code, y, N, W, counter)


# -- Welch-Berlekamp style reconstruction


def _degree_checks(j, k, N0, W0, N1, W1):
    def deg(p):
        return len(p) - 1 if p else float("-inf")

    r = j - k
    bounds = [
        ("N0", deg(N0), k + r // 2),
        ("W0", deg(W0), (r + 1) // 2),
        ("N1", deg(N1), k - 1 + (r + 1) // 2),
        ("W1", deg(W1), r // 2),
    ]
    for name, d, b in bounds:
        if d > b:
            raise InvariantViolation(f"round {j}: deg {name} = {d} > {b}")
    u = r // 2
    if r % 2 == 1:
        exact = [("N1", deg(N1), k + u), ("W0", deg(W0), u + 1)]
    else:
        exact = [("N0", deg(N0), k + u), ("W1", deg(W1), u)]
    for name, d, b in exact:
        if d != b:
            raise InvariantViolation(f"round {j}: deg {name} = {d}, expected exactly {b}")


def reconstruct_wb(code: GabidulinCode, y, variant: str = "standard", counter=None, trace=None,
                   check_invariants: bool = False):
    """Return ``(N, W)`` solving the reconstruction problem for ``y``.

    ``trace(stage, state)`` is called after initialisation and after each
    round with the current polynomials and discrepancy vectors.
    For ``variant="low_degree"`` the returned pair also carries ``P``, ``Ann``
    and ``Int`` in ``reconstruct_wb.last_parts`` style via the third element:
    use :func:`reconstruct_wb_parts` to get them.
    """
    N, W, _ = _wb(code, y, variant, counter, trace, check_invariants, rebuild=True)
    return N, W


def reconstruct_wb_parts(code, y, variant="low_degree", counter=None, trace=None, check_invariants=False):
    return _wb(code, y, variant, counter, trace, check_invariants, rebuild=False)


def _wb(code, y, variant, counter, trace, check_invariants, rebuild):
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}; expected one of {VARIANTS}")
    theta = code.theta
    L = code.field
    n, k = code.n, code.k
    y = [L(v) for v in y]
    if len(y) != n:
        raise ValueError("word length differs from n")
    op = _Ops(theta, counter)
    zero, one = L._zero, L._one
    g = [x.value for x in code.g]
    yv = [v.value for v in y]

    if variant == "division_free":
        Ann, Int, lam = df_annihilator_interpolator(theta, code.g[:k], y[:k], counter)
        lam = lam.value
    else:
        Ann, Int = annihilator_interpolator(theta, code.g[:k], y[:k], counter)
        lam = one
    ann, itp = list(Ann._c), list(Int._c)

    low = variant == "low_degree"
    # in the low-degree variant the "N" slots hold P with N = P*Ann + W*Int
    N0 = [one] if low else ann
    W0 = []
    N1 = [] if low else itp
    W1 = [lam]
    u0 = [zero] * n
    u1 = [zero] * n
    for i in range(k, n):
        u0[i] = _eval_raw(op, ann, g[i])
        u1[i] = op.sub(_eval_raw(op, itp, g[i]), op.mul(lam, yv[i]))

    def full_N(P, Wp):
        if not low:
            return SkewPoly._raw(theta, P)
        A = sp_mul(SkewPoly._raw(theta, P), Ann)
        B = sp_mul(SkewPoly._raw(theta, Wp), Int)
        return sp_add(A, B)

    def state():
        return {
            "N0": full_N(N0, W0), "W0": SkewPoly._raw(theta, W0),
            "N1": full_N(N1, W1), "W1": SkewPoly._raw(theta, W1),
            "u0": [FieldElement(L, v) for v in u0], "u1": [FieldElement(L, v) for v in u1],
            "g": [FieldElement(L, v) for v in g], "y": [FieldElement(L, v) for v in yv],
        }

    def verify(j):
        _degree_checks(j, k, *(list(full_N(N0, W0)._c), W0, list(full_N(N1, W1)._c), W1))
        nn0, nn1 = full_N(N0, W0), full_N(N1, W1)
        for idx in range(j, n):
            d0 = L._sub(_eval_raw(_Ops(theta), nn0._c, g[idx]), _eval_raw(_Ops(theta), W0, yv[idx]))
            d1 = L._sub(_eval_raw(_Ops(theta), nn1._c, g[idx]), _eval_raw(_Ops(theta), W1, yv[idx]))
            if not (L._eq(d0, u0[idx]) and L._eq(d1, u1[idx])):
                raise InvariantViolation(f"round {j}: incremental discrepancy differs at position {idx}")

    if trace is not None:
        trace("init", state())
    if check_invariants:
        verify(k)

    def x_minus(c, A):
        # (X - c) * A
        out = [zero] + [op.th(a) for a in A]
        for i, a in enumerate(A):
            if not op.is_zero(a):
                t = op.mul(c, a)
                out[i] = op.sub(out[i], t) if not op.is_zero(out[i]) else L._neg(t)
        return list(_trim(L, out))

    def ax_minus(a, ta, A):
        # (a X - theta(a)) * A
        out = [zero] + [op.mul(a, op.th(x)) for x in A]
        for i, x in enumerate(A):
            if not op.is_zero(x):
                t = op.mul(ta, x)
                out[i] = op.sub(out[i], t) if not op.is_zero(out[i]) else L._neg(t)
        return list(_trim(L, out))

    def axpy(A, d, B):
        # A - d * B
        out = list(A) + [zero] * (len(B) - len(A))
        for i, b in enumerate(B):
            if not op.is_zero(b):
                t = op.mul(d, b)
                out[i] = op.sub(out[i], t) if not op.is_zero(out[i]) else L._neg(t)
        return list(_trim(L, out))

    def scale_sub(a, A, d, B):
        # a * A - d * B
        return axpy([op.mul(a, x) for x in A], d, B)

    for i in range(k, n):
        j = i
        while j < n and not L._is_zero(u0[j]) and L._is_zero(u1[j]):
            j += 1
        if j == n:
            break
        if j != i:
            for vec in (g, yv, u0, u1):
                vec[i], vec[j] = vec[j], vec[i]
        a1, a0 = u1[i], u0[i]
        if not L._is_zero(a1):
            if variant == "division_free":
                ta = op.th(a1)
                nN1, nW1 = ax_minus(a1, ta, N1), ax_minus(a1, ta, W1)
                nN0, nW0 = scale_sub(a1, N0, a0, N1), scale_sub(a1, W0, a0, W1)
                nu1, nu0 = list(u1), list(u0)
                for p in range(i + 1, n):
                    nu1[p] = op.sub(op.mul(a1, op.th(u1[p])), op.mul(ta, u1[p]))
                    nu0[p] = op.sub(op.mul(a1, u0[p]), op.mul(a0, u1[p]))
            else:
                c = op.div(op.th(a1), a1)
                d = op.div(a0, a1) if not L._is_zero(a0) else zero
                nN1, nW1 = x_minus(c, N1), x_minus(c, W1)
                nN0, nW0 = axpy(N0, d, N1), axpy(W0, d, W1)
                nu1, nu0 = list(u1), list(u0)
                for p in range(i + 1, n):
                    nu1[p] = op.sub(op.th(u1[p]), op.mul(c, u1[p]))
                    nu0[p] = op.sub(u0[p], op.mul(d, u1[p]))
        else:
            nN1 = [zero] + [op.th(x) for x in N1] if N1 else []
            nW1 = [zero] + [op.th(x) for x in W1] if W1 else []
            nN0, nW0 = N0, W0
            nu1 = list(u1)
            for p in range(i + 1, n):
                nu1[p] = op.th(u1[p])
            nu0 = list(u0)
        nu1[i] = zero
        nu0[i] = zero
        N0, W0, u0 = nN1, nW1, nu1
        N1, W1, u1 = nN0, nW0, nu0
        if trace is not None:
            trace(f"round {i + 1}", state())
        if check_invariants:
            verify(i + 1)

    Wp = SkewPoly._raw(theta, W1)
    if low:
        P = SkewPoly._raw(theta, N1)
        parts = {"P": P, "Ann": Ann, "Int": Int}
        if rebuild:
            return full_N(N1, W1), Wp, parts
        return None, Wp, parts
    return SkewPoly._raw(theta, N1), Wp, {}


def decode_wb(code: GabidulinCode, y, variant: str = "standard", counter=None, trace=None,
              check_invariants: bool = False) -> DecodeResult:
    y = [code.field(v) for v in y]
    if len(y) != code.n:
        raise ValueError("word length differs from n")
    if variant == "low_degree":
        _, W, parts = _wb(code, y, variant, counter, trace, check_invariants, rebuild=False)
        if check_invariants:
            N = sp_add(sp_mul(parts["P"], parts["Ann"]), sp_mul(W, parts["Int"]))
            check_lr_contract(code, y, N, W)
        # P*Ann + W*Int = W*f  gives  f = Int + W \ (P*Ann)
        PA = sp_mul(parts["P"], parts["Ann"], counter)
        q, r = left_divmod(PA, W, counter)
        if not r.is_zero():
            raise DecodingFailure("no codeword within the decoding radius")
        f = sp_add(q, parts["Int"], counter)
        if f.degree >= code.k:
            raise DecodingFailure("no codeword within the decoding radius")
        c = code.encode(f)
        return DecodeResult(f=f, e=[a - b for a, b in zip(y, c)], codeword=c, counter=counter)
    N, W, _ = _wb(code, y, variant, counter, trace, check_invariants, rebuild=True)
    if check_invariants:
        check_lr_contract(code, y, N, W)
    return _finish(code, y, N, W, counter)


def decode(code: GabidulinCode, y, method: str = "wb", counter=None, trace=None,
           check_invariants: bool = False) -> DecodeResult:
    """Dispatch on ``method`` in ``gauss``, ``wb``, ``wb-df``, ``wb-lowdeg``."""
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}; expected one of {sorted(METHODS)}")
    if method == "gauss":
        return decode_gauss(code, y, counter)
    return decode_wb(code, y, METHODS[method], counter, trace, check_invariants)


# -- erasures


def term_rank_cover(masked):
    """Minimum set of rows ``S_r`` and columns ``S_c`` covering every ``None`` entry."""
    G = nx.Graph()
    rows = [("r", i) for i in range(len(masked))]
    G.add_nodes_from(rows)
    for i, row in enumerate(masked):
        for j, x in enumerate(row):
            if x is None:
                G.add_edge(("r", i), ("c", j))
    if G.number_of_edges() == 0:
        return [], []
    top = [v for v in rows if G.degree(v) > 0]
    matching = nx.bipartite.hopcroft_karp_matching(G, top_nodes=top)
    cover = nx.bipartite.to_vertex_cover(G, matching, top_nodes=top)
    S_r = sorted(i for kind, i in cover if kind == "r")
    S_c = sorted(j for kind, j in cover if kind == "c")
    return S_r, S_c


@dataclass
class LinePattern:
    """Received ``m x n`` matrix over ``K`` with ``None`` for erased entries."""

    masked: list
    S_r: list | None = None
    S_c: list | None = None

    def __post_init__(self):
        if self.S_r is None or self.S_c is None:
            self.S_r, self.S_c = term_rank_cover(self.masked)
        self.S_r, self.S_c = sorted(self.S_r), sorted(self.S_c)
        rows, cols = set(self.S_r), set(self.S_c)
        for i, row in enumerate(self.masked):
            for j, x in enumerate(row):
                if x is None and i not in rows and j not in cols:
                    raise ValueError(f"erased entry ({i}, {j}) is not covered by S_r, S_c")


@dataclass
class NetworkPattern:
    """Side information ``A_r_hat`` (``m x s_r``) and ``B_c_hat`` (``s_c x n``) over ``K``."""

    A_r_hat: list
    B_c_hat: list


def _default_basis(L):
    K = L.below
    return [FieldElement(L, tuple(K._one if i == j else K._zero for i in range(L.degree))) for j in range(L.degree)]


def _inner_decode(code, g, z, k_inner, V, method, counter, trace, check_invariants):
    inner = GabidulinCode(code.theta, g, k_inner, check=False)
    if len(g) < k_inner:
        raise DecodingFailure("too many erasures for the code")
    res = decode(inner, z, method, counter, trace, check_invariants)
    f, r = left_divmod(res.f, V, counter)
    if not r.is_zero() or f.degree >= code.k:
        raise DecodingFailure("erasure annihilator does not divide the inner message")
    return f, res


def decode_line_erasures(code: GabidulinCode, pattern: LinePattern, basis=None, method: str = "wb",
                         counter=None, trace=None, check_invariants=False) -> SkewPoly:
    L = code.field
    K = L.below
    basis = _default_basis(L) if basis is None else [L(b) for b in basis]
    M = pattern.masked
    if len(M) != L.degree or any(len(r) != code.n for r in M):
        raise ValueError(f"masked matrix must be {L.degree} x {code.n}")
    if len(pattern.S_r) + len(pattern.S_c) > code.n - code.k:
        raise DecodingFailure("erasure cover exceeds n - k")
    keep = [j for j in range(code.n) if j not in set(pattern.S_c)]
    g = [code.g[j] for j in keep]
    y = []
    for j in keep:
        acc = L.zero
        for r in range(L.degree):
            x = M[r][j]
            if x is None:
                continue
            x = K(x)
            if not x.is_zero():
                acc = acc + basis[r] * x
        y.append(acc)
    V = annihilator(code.theta, [basis[r] for r in pattern.S_r], counter) if pattern.S_r \
        else SkewPoly.one(code.theta)
    z = [V(v) for v in y]
    f, _ = _inner_decode(code, g, z, code.k + V.degree, V, method, counter, trace, check_invariants)
    return f


def column_reduce(B, field):
    """Column operations making the kept columns of ``B`` zero.

    Each row's pivot is its rightmost nonzero entry among the columns not yet
    used as pivots; that column is subtracted from the others to clear the
    row.  Returns ``(ops, pivots)``: ``ops`` is the list of
    ``(target, coefficient, pivot)`` meaning ``C_target -= coefficient * C_pivot``.
    """
    K = field
    rows = [[K(x).value for x in r] for r in B]
    if rows:
        R, piv = rref_raw(K, rows)
        rows = [R[i] for i in range(len(piv))]
    n = len(B[0]) if B else 0
    ops, pivots = [], []
    for r in range(len(rows)):
        row = rows[r]
        cand = [j for j in range(n) if j not in pivots and not K._is_zero(row[j])]
        if not cand:
            continue
        p = cand[-1]
        for j in range(n):
            if j == p or j in pivots or K._is_zero(rows[r][j]):
                continue
            c = K._div(rows[r][j], rows[r][p])
            ops.append((j, c, p))
            for rr in rows:
                rr[j] = K._sub(rr[j], K._mul(c, rr[p]))
        pivots.append(p)
    return ops, pivots


def apply_column_ops(vec, ops, K):
    vec = list(vec)
    for j, c, p in ops:
        vec[j] = vec[j] - vec[p] * FieldElement(K, c)
    return vec


def network_side_info(code: GabidulinCode, pattern: NetworkPattern, basis=None):
    """Column operations, kept positions and the erasure annihilator for a network pattern."""
    L = code.field
    K = L.below
    basis = _default_basis(L) if basis is None else [L(b) for b in basis]
    B = pattern.B_c_hat or []
    if B and any(len(r) != code.n for r in B):
        raise ValueError(f"B_c_hat must have {code.n} columns")
    ops, pivots = column_reduce(B, K) if B else ([], [])
    keep = [j for j in range(code.n) if j not in pivots]
    A = pattern.A_r_hat or []
    elems = []
    if A and len(A[0]) > 0:
        if len(A) != L.degree:
            raise ValueError(f"A_r_hat must have {L.degree} rows")
        for l in range(len(A[0])):
            acc = L.zero
            for r in range(L.degree):
                x = K(A[r][l])
                if not x.is_zero():
                    acc = acc + basis[r] * x
            elems.append(acc)
    V = annihilator(code.theta, elems) if any(not e.is_zero() for e in elems) else SkewPoly.one(code.theta)
    return ops, keep, V, elems


def decode_network_erasures(code: GabidulinCode, y, pattern: NetworkPattern, basis=None, method: str = "wb",
                            counter=None, trace=None, check_invariants=False, details=None) -> SkewPoly:
    """``y`` is the received word in ``L^n`` (or an ``m x n`` matrix over ``K``)."""
    L = code.field
    K = L.below
    basis_l = _default_basis(L) if basis is None else [L(b) for b in basis]
    if y and isinstance(y[0], (list, tuple)) and len(y) == L.degree and not isinstance(y[0], FieldElement):
        y = [sum((basis_l[r] * K(y[r][j]) for r in range(L.degree)), L.zero) for j in range(code.n)]
    y = [L(v) for v in y]
    ops, keep, V, elems = network_side_info(code, pattern, basis)
    g2 = apply_column_ops(code.g, ops, K)
    y2 = apply_column_ops(y, ops, K)
    g_t = [g2[j] for j in keep]
    y_t = [y2[j] for j in keep]
    if len(g_t) - code.k - V.degree < 0:
        raise DecodingFailure("too many erasures for the code")
    z = [V(v) for v in y_t]
    if details is not None:
        details.update(g_tilde=g_t, y_tilde=y_t, V=V, z=z, erasure_elements=elems)
    f, res = _inner_decode(code, g_t, z, code.k + V.degree, V, method, counter, trace, check_invariants)
    if details is not None:
        details.update(F=res.f)
    return f


def rank_of(vectors, field) -> int:
    from .fields import coordinate_matrix

    return rank_raw(field.below, coordinate_matrix(vectors, field))
