import itertools

import pytest

from gabidulin.fields import cyclotomic_automorphism, cyclotomic_field
from gabidulin.rank_metric import KINDS, all_weights, least_vanishing_degree, rank_distance, weight
from gabidulin.skew import SkewPoly

from helpers import gf_tower, rand_elem


def test_kummer_outside_framework(kummer):
    th, x = kummer["theta1"], kummer["x"]
    w = all_weights(x, th)
    assert w == {"annihilator": 2, "moore_L": 2, "moore_K": 4, "basis": 4}
    assert least_vanishing_degree(th, x) == 2


def test_kummer_inside_framework(kummer):
    w = all_weights(kummer["x"], kummer["theta2"])
    assert set(w.values()) == {4}


def test_printed_vanishing_polynomials(kummer):
    K, L = kummer["K"], kummer["L"]
    j = L(K.gen)
    A = SkewPoly(kummer["theta1"], [j, -(j + 1), 1])
    assert all(A(v).is_zero() for v in kummer["x"])
    B = SkewPoly(kummer["theta2"], [j, 0, -(j + 1), 0, 1])
    assert all(B(v).is_zero() for v in kummer["x"])


def test_unknown_kind_and_missing_theta():
    L = cyclotomic_field(5)
    with pytest.raises(ValueError):
        weight([L.one], "hamming", cyclotomic_automorphism(L, 2))
    with pytest.raises(ValueError):
        weight([L.one], "moore_L")
    assert weight([L.one, L.gen], "basis") == 2


def test_zero_vector_has_weight_zero():
    L = cyclotomic_field(7)
    th = cyclotomic_automorphism(L, 3)
    for kind in KINDS:
        assert weight([L.zero] * 3, kind, th) == 0
        assert weight([], kind, th) == 0


@pytest.mark.parametrize("p,m", [(2, 4), (3, 3)])
def test_weights_agree_under_the_framework(p, m, rng):
    L, th = gf_tower(p, m)
    for _ in range(30):
        x = [rand_elem(L, rng) for _ in range(rng.randint(1, 5))]
        assert len(set(all_weights(x, th).values())) == 1


def test_metric_axioms_and_triangle_inequality(rng):
    L, th = gf_tower(2, 4)
    n = 4
    triples = 0
    while triples < 200:
        x, y, z = ([rand_elem(L, rng) for _ in range(n)] for _ in range(3))
        dxy = rank_distance(x, y, theta=th)
        assert dxy == rank_distance(y, x, theta=th)
        assert (dxy == 0) == (x == y)
        assert rank_distance(x, z, theta=th) <= dxy + rank_distance(y, z, theta=th)
        triples += 1


def test_distance_length_mismatch():
    L = cyclotomic_field(5)
    with pytest.raises(ValueError):
        rank_distance([L.one], [L.one, L.one], kind="basis")


def test_weight_is_at_most_min_n_m():
    L, th = gf_tower(2, 3)
    elems = [L(list(bits)) for bits in itertools.product([0, 1], repeat=3)]
    for x in itertools.combinations(elems, 4):
        assert weight(list(x), theta=th) <= 3
