"""Random codes, messages and planted errors for tests, the CLI and benchmarks."""

from __future__ import annotations

from .codes import GabidulinCode
from .fields import (
    ExtensionField,
    FieldElement,
    cyclotomic_automorphism,
    cyclotomic_field,
    finite_field,
    frobenius,
    k_rank,
)
from .linalg import rank_raw
from .skew import SkewPoly

# length -> (cyclotomic conductor, inert prime) used for timing runs
BENCH_ROWS = {4: (5, 2), 6: (7, 3), 8: (11, 2), 10: (11, 2), 12: (13, 2), 14: (17, 3), 16: (17, 3)}


def primitive_root(p: int) -> int:
    for r in range(2, p):
        if len({pow(r, i, p) for i in range(1, p)}) == p - 1:
            return r
    raise ValueError(f"no primitive root mod {p}")


def cyclotomic_code(p: int, n: int, k: int, exponent: int | None = None, check: bool = True) -> GabidulinCode:
    """Code over ``QQ[a]/(1 + ... + a^(p-1))`` with support ``(1, a, ..., a^(n-1))``."""
    L = cyclotomic_field(p)
    theta = cyclotomic_automorphism(L, exponent if exponent is not None else primitive_root(p))
    return GabidulinCode(theta, [L.gen ** i for i in range(n)], k, check=check)


def random_support(field: ExtensionField, n: int, rng):
    while True:
        g = [FieldElement(field, field.random_raw(rng)) for _ in range(n)]
        if k_rank(g, field=field) == n:
            return g


def finite_code(p: int, m: int, n: int, k: int, rng) -> GabidulinCode:
    F = finite_field(p, m)
    return GabidulinCode(frobenius(F), random_support(F, n, rng), k, check=False)


def random_element(field, rng, binary: bool = False):
    if binary:
        return FieldElement(field, tuple(field.below._coerce(rng.randint(0, 1)) for _ in range(field.degree)))
    return FieldElement(field, field.random_raw(rng))


def random_message(code: GabidulinCode, rng, binary: bool = False) -> SkewPoly:
    return SkewPoly(code.theta, [random_element(code.field, rng, binary) for _ in range(code.k)])


def random_error(code: GabidulinCode, rank: int, rng, small: bool = False):
    """Error word of exact rank ``rank``: ``(e_1..e_t) * A`` with ``A`` a ``t x n`` matrix over K.

    With ``small=True`` the ``e_i`` have 0/1 coordinates and ``A`` has
    entries in ``{-1, 0, 1}``.
    """
    L = code.field
    K = L.below
    n = code.n
    if rank == 0:
        return [L.zero] * n
    if rank > min(n, L.degree):
        raise ValueError("rank exceeds min(n, m)")
    for _ in range(1000):
        es = [random_element(L, rng, binary=small) for _ in range(rank)]
        if k_rank(es, field=L) != rank:
            continue
        if small or K.order is None:
            A = [[K(rng.randint(-1, 1)) for _ in range(n)] for _ in range(rank)]
        else:
            A = [[FieldElement(K, K.random_raw(rng)) for _ in range(n)] for _ in range(rank)]
        if rank_raw(K, [[x.value for x in row] for row in A]) != rank:
            continue
        return [sum((es[i] * A[i][j] for i in range(rank)), L.zero) for j in range(n)]
    raise RuntimeError("could not draw an error of the requested rank")


def corrupt(codeword, error):
    return [c + e for c, e in zip(codeword, error)]


def _k_matrix(K, rows, cols, rng, small, full_rank=True):
    for _ in range(1000):
        if small or K.order is None:
            M = [[K(rng.randint(-1, 1)) for _ in range(cols)] for _ in range(rows)]
        else:
            M = [[FieldElement(K, K.random_raw(rng)) for _ in range(cols)] for _ in range(rows)]
        if not full_rank or rank_raw(K, [[x.value for x in r] for r in M]) == min(rows, cols):
            return M
    raise RuntimeError("could not draw a full-rank matrix")


def random_line_erasures(code: GabidulinCode, t: int, s_r: int, s_c: int, rng, small: bool = False):
    """``(f, LinePattern)``: a codeword plus a rank-``t`` error, with entries of
    ``s_r`` random rows and ``s_c`` random columns erased at random (each line
    keeps at least one erasure).
    """
    from .decoding import LinePattern

    L = code.field
    f = random_message(code, rng, binary=small)
    y = corrupt(code.encode(f), random_error(code, t, rng, small))
    M = [list(r) for r in code.codeword_matrix(y)]
    rows = rng.sample(range(code.m), s_r)
    cols = rng.sample(range(code.n), s_c)
    for i in rows:
        hit = [j for j in range(code.n) if rng.random() < 0.5] or [rng.randrange(code.n)]
        for j in hit:
            M[i][j] = None
    for j in cols:
        hit = [i for i in range(code.m) if rng.random() < 0.5] or [rng.randrange(code.m)]
        for i in hit:
            M[i][j] = None
    return f, LinePattern(M, rows, cols)


def random_network_erasures(code: GabidulinCode, t: int, s_r: int, s_c: int, rng, small: bool = False):
    """``(f, y, NetworkPattern)`` with ``y = c + e + A_r_hat B_r + A_c B_c_hat`` read over the power basis."""
    from .decoding import NetworkPattern

    L = code.field
    K = L.below
    m, n = code.m, code.n
    f = random_message(code, rng, binary=small)
    y = corrupt(code.encode(f), random_error(code, t, rng, small))
    basis = [FieldElement(L, tuple(K._one if i == j else K._zero for i in range(m))) for j in range(m)]

    def column_elements(A, s):
        return [sum((basis[r] * A[r][l] for r in range(m)), L.zero) for l in range(s)]

    A_r_hat = _k_matrix(K, m, s_r, rng, small)
    B_r = _k_matrix(K, s_r, n, rng, small, full_rank=False)
    A_c = _k_matrix(K, m, s_c, rng, small, full_rank=False)
    B_c_hat = _k_matrix(K, s_c, n, rng, small)
    for elems, B, s in ((column_elements(A_r_hat, s_r), B_r, s_r), (column_elements(A_c, s_c), B_c_hat, s_c)):
        for l in range(s):
            y = [v + elems[l] * B[l][j] for j, v in enumerate(y)]
    return f, y, NetworkPattern(A_r_hat=A_r_hat, B_c_hat=B_c_hat)
