from gabidulin.fields import FieldElement, PrimeField, finite_field, frobenius
from gabidulin.skew import SkewPoly


def rand_elem(L, rng, bound=2):
    return FieldElement(L, L.random_raw(rng, bound))


def rand_nonzero(L, rng, bound=2):
    while True:
        x = rand_elem(L, rng, bound)
        if not x.is_zero():
            return x


def rand_poly(theta, deg, rng, bound=2):
    L = theta.field
    cs = [rand_elem(L, rng, bound) for _ in range(deg)] + [rand_nonzero(L, rng, bound)]
    return SkewPoly(theta, cs)


def gf_tower(p, m):
    F = finite_field(p, m)
    return F, frobenius(F)


def two_layer_finite():
    """GF(2) -> GF(4) -> GF(4^3) with the GF(4)-Frobenius x -> x^4."""
    from gabidulin.fields import ExtensionField, find_irreducible

    F4 = ExtensionField(PrimeField(2), [1, 1, 1], var="w")
    mod = find_irreducible(F4, 3)
    L = ExtensionField(F4, [FieldElement(F4, c) for c in mod], var="a")
    return L, frobenius(L)
