import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gabidulin.fields import QQ, cyclotomic_automorphism, cyclotomic_field, k_rank
from gabidulin.skew import (
    NEG_INF,
    DependentPointsError,
    HdimViolation,
    OpCounter,
    SkewPoly,
    ThetaMismatchError,
    annihilator,
    annihilator_interpolator,
    df_annihilator_interpolator,
    interpolator,
    left_divmod,
    moore_matrix,
    right_divmod,
    root_space_dim,
    sp_divide,
    sp_mul,
)

from helpers import gf_tower, rand_elem, rand_nonzero, rand_poly, two_layer_finite


def thetas():
    L7 = cyclotomic_field(7)
    _, fr = gf_tower(2, 5)
    _, fr3 = gf_tower(3, 4)
    _, th4 = two_layer_finite()
    return [cyclotomic_automorphism(L7, 3), fr, fr3, th4]


THETAS = thetas()
IDS = ["cyclo7", "gf32", "gf81", "gf64/gf4"]


def test_zero_and_degree():
    th = THETAS[0]
    assert SkewPoly.zero(th).degree == NEG_INF
    assert SkewPoly.one(th).degree == 0
    assert SkewPoly.x(th, 3).degree == 3
    assert SkewPoly(th, [1, 0, 0]).degree == 0
    assert str(SkewPoly.zero(th)) == "0"


def test_twisted_commutation():
    th = THETAS[0]
    L = th.field
    a = L.gen
    X = SkewPoly.x(th)
    assert X * SkewPoly.constant(th, a) == SkewPoly(th, [0, th(a)])
    assert SkewPoly.constant(th, a) * X == SkewPoly(th, [0, a])


@pytest.mark.parametrize("th", THETAS, ids=IDS)
def test_ring_axioms(th, rng):
    for _ in range(15):
        A, B, C = (rand_poly(th, rng.randint(0, 4), rng) for _ in range(3))
        assert (A * B) * C == A * (B * C)
        assert A * (B + C) == A * B + A * C
        assert (A + B) * C == A * C + B * C
        assert (A * B).degree == A.degree + B.degree


@pytest.mark.parametrize("th", THETAS, ids=IDS)
def test_evaluation_is_a_morphism(th, rng):
    L = th.field
    for _ in range(15):
        A, B = rand_poly(th, rng.randint(0, 4), rng), rand_poly(th, rng.randint(0, 4), rng)
        b = rand_elem(L, rng)
        assert (A * B)(b) == A(B(b))
        assert (A + B)(b) == A(b) + B(b)


@pytest.mark.parametrize("th", THETAS, ids=IDS)
def test_left_and_right_division(th, rng):
    for _ in range(15):
        A = rand_poly(th, rng.randint(0, 7), rng)
        B = rand_poly(th, rng.randint(0, 4), rng)
        Q, R = left_divmod(A, B)
        assert B * Q + R == A and R.degree < B.degree
        Q, R = right_divmod(A, B)
        assert Q * B + R == A and R.degree < B.degree


def test_exact_left_division_recovers_factor(rng):
    th = THETAS[0]
    W, f = rand_poly(th, 2, rng), rand_poly(th, 3, rng)
    Q, R = sp_divide(W * f, W, side="left")
    assert Q == f and R.is_zero()
    Q, R = sp_divide(W * f, f, side="right")
    assert Q == W and R.is_zero()


def test_division_by_zero_polynomial():
    th = THETAS[0]
    with pytest.raises(ZeroDivisionError):
        left_divmod(SkewPoly.one(th), SkewPoly.zero(th))


def test_mixing_automorphisms_is_an_error():
    L = cyclotomic_field(7)
    A = SkewPoly.one(cyclotomic_automorphism(L, 3))
    B = SkewPoly.one(cyclotomic_automorphism(L, 5))
    with pytest.raises(ThetaMismatchError):
        A + B


@pytest.mark.parametrize("th", THETAS, ids=IDS)
def test_annihilator_vanishes_with_degree_equal_to_rank(th, rng):
    L = th.field
    for s in range(0, 4):
        v = [rand_nonzero(L, rng) for _ in range(s)]
        A = annihilator(th, v)
        assert A.is_monic()
        assert A.degree == k_rank(v, field=L)
        assert all(A(x).is_zero() for x in v)
        assert root_space_dim(A) == A.degree


def test_annihilator_skips_dependent_inputs():
    th = THETAS[0]
    a = th.field.gen
    A = annihilator(th, [a, a * QQ(3), a ** 2, a + a ** 2])
    assert A.degree == 2


def test_annihilator_outside_framework_raises(kummer):
    th = kummer["theta1"]
    j, a = kummer["K"].gen, kummer["L"].gen
    # a^3 is fixed by a -> j*a; 1 and a^3 are K-independent
    with pytest.raises(HdimViolation):
        annihilator(th, [kummer["L"].one, a ** 3])


def test_annihilator_inside_framework_on_kummer(kummer):
    th = kummer["theta2"]
    A = annihilator(th, kummer["x"])
    assert A.degree == 4 and all(A(x).is_zero() for x in kummer["x"])


@pytest.mark.parametrize("th", THETAS, ids=IDS)
def test_interpolator(th, rng):
    L = th.field
    for n in range(1, min(4, L.degree) + 1):
        while True:
            g = [rand_nonzero(L, rng) for _ in range(n)]
            if k_rank(g, field=L) == n:
                break
        y = [rand_elem(L, rng) for _ in range(n)]
        Ann, Int = annihilator_interpolator(th, g, y)
        assert Ann == annihilator(th, g)
        assert Int.degree < n
        assert [Int(x) for x in g] == y
        assert interpolator(th, g, y) == Int


@pytest.mark.parametrize("th", THETAS, ids=IDS)
def test_division_free_interpolator(th, rng):
    L = th.field
    n = min(4, L.degree)
    while True:
        g = [rand_nonzero(L, rng) for _ in range(n)]
        if k_rank(g, field=L) == n:
            break
    y = [rand_elem(L, rng) for _ in range(n)]
    Ann, Int, lam = df_annihilator_interpolator(th, g, y)
    assert not lam.is_zero()
    assert all(Ann(x).is_zero() for x in g) and Ann.degree == n
    assert [Int(x) for x in g] == [lam * v for v in y]
    Ann2, Int2 = annihilator_interpolator(th, g, y)
    assert Int == lam * Int2


def test_interpolation_on_dependent_points():
    th = THETAS[0]
    a = th.field.gen
    with pytest.raises(DependentPointsError):
        annihilator_interpolator(th, [a, a * QQ(2)], [a, a])


def test_root_space_dimension_bound(rng):
    th = THETAS[1]
    for _ in range(20):
        A = rand_poly(th, rng.randint(0, 4), rng)
        assert root_space_dim(A) <= A.degree
    assert root_space_dim(SkewPoly.zero(th)) == th.field.degree


def test_root_space_dimension_outside_framework(kummer):
    # X - 1 has the whole fixed field of theta1 as its roots
    A = SkewPoly(kummer["theta1"], [-1, 1])
    assert root_space_dim(A) == 2 > A.degree


def test_moore_matrix_shape():
    th = THETAS[0]
    a = th.field.gen
    M = moore_matrix(th, [a, a ** 2], 3)
    assert len(M) == 3 and M[1] == [a ** 3, a ** 6]


def test_op_counter_counts_products(rng):
    th = THETAS[0]
    A, B = rand_poly(th, 3, rng), rand_poly(th, 3, rng)
    c = OpCounter()
    sp_mul(A, B, counter=c)
    assert 0 < c.mults <= 16
    assert c.coefficient_ops >= c.mults


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(-2, 2), min_size=1, max_size=12), st.lists(st.integers(-2, 2), min_size=1, max_size=12))
def test_degree_of_product_is_additive(xs, ys):
    th = THETAS[0]
    L = th.field
    A = SkewPoly(th, [L(xs[i:i + 6]) for i in range(0, len(xs), 6)])
    B = SkewPoly(th, [L(ys[i:i + 6]) for i in range(0, len(ys), 6)])
    P = A * B
    if A.is_zero() or B.is_zero():
        assert P.is_zero()
    else:
        assert P.degree == A.degree + B.degree
