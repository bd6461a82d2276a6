"""Integral codes over ``QQ[Y]/(T)``: coefficient sizes, inert primes and
decoding in the residue field ``F_q[Y]/(T mod q)``.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .codes import GabidulinCode
from .decoding import LinePattern, NetworkPattern, decode, decode_line_erasures, decode_network_erasures
from .fields import (
    QQ,
    CyclicAutomorphism,
    ExtensionField,
    FieldElement,
    PrimeField,
    RationalField,
    is_irreducible,
    is_prime,
)
from .skew import SkewPoly


class NotInertError(ValueError):
    pass


class NoInertPrimeError(RuntimeError):
    pass


class NonIntegralError(ValueError):
    pass


class LiftError(ValueError):
    """A residue coordinate matches no alphabet member."""


def _as_int(c):
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    raise NonIntegralError(f"coordinate {c} is not an integer")


def _check_source(field):
    if not isinstance(field, ExtensionField) or not isinstance(field.below, RationalField):
        raise ValueError("reduction needs a single extension layer over QQ")


def _int_coords(x):
    if isinstance(x, FieldElement) and isinstance(x.field, RationalField):
        return [_as_int(x.value)]
    if isinstance(x, FieldElement):
        _check_source(x.field)
        return [_as_int(c) for c in x.value]
    return [_as_int(x)]


def size_of(x) -> float:
    """``log2`` of the largest absolute integer coordinate; ``-inf`` for zero.

    Accepts an element, a :class:`SkewPoly` or any (nested) list of them.
    """
    if isinstance(x, SkewPoly):
        x = x.coeffs
    if isinstance(x, (list, tuple)):
        return max((size_of(v) for v in x), default=float("-inf"))
    top = max((abs(c) for c in _int_coords(x)), default=0)
    return math.log2(top) if top else float("-inf")


def is_inert(field: ExtensionField, q: int) -> bool:
    _check_source(field)
    if not is_prime(q):
        return False
    try:
        coeffs = [_as_int(c) for c in field.modulus]
    except NonIntegralError:
        return False
    Fq = PrimeField(q)
    return is_irreducible(Fq, [c % q for c in coeffs])


def find_inert_prime(field: ExtensionField, min: int = 2, cap: int = 10 ** 4) -> int:
    """Smallest prime ``q >= min`` with the modulus irreducible mod ``q``."""
    _check_source(field)
    q = max(min, 2)
    while q <= cap:
        if is_prime(q) and is_inert(field, q):
            return q
        q += 1
    raise NoInertPrimeError(f"no inert prime in [{min}, {cap}]")


class ResidueContext:
    def __init__(self, source: ExtensionField, q: int, theta: CyclicAutomorphism):
        _check_source(source)
        if not is_inert(source, q):
            raise NotInertError(f"{q} is not inert: the modulus is reducible mod {q}")
        if theta.field != source:
            raise ValueError("automorphism acts on a different field")
        self.source = source
        self.q = q
        self.prime_field = PrimeField(q)
        self.residue = ExtensionField(self.prime_field, [_as_int(c) % q for c in source.modulus],
                                      var=source.var, check=False)
        self.theta = theta
        try:
            img = self.reduce(theta.image)
        except NonIntegralError:
            raise NonIntegralError("automorphism image is not integral") from None
        self.theta_bar = CyclicAutomorphism(self.residue, img)

    def __repr__(self):
        return f"ResidueContext(q={self.q}, residue={self.residue!r})"

    def reduce(self, x):
        """Reduce an element, skew polynomial, code or nested list modulo ``q``."""
        if x is None:
            return None
        if isinstance(x, GabidulinCode):
            return reduce_code(self, x)
        if isinstance(x, SkewPoly):
            return SkewPoly(self.theta_bar, [self.reduce(c) for c in x.coeffs])
        if isinstance(x, LinePattern):
            return LinePattern([[self.reduce(v) for v in row] for row in x.masked], list(x.S_r), list(x.S_c))
        if isinstance(x, NetworkPattern):
            return NetworkPattern(self.reduce(x.A_r_hat), self.reduce(x.B_c_hat))
        if isinstance(x, (list, tuple)):
            return [self.reduce(v) for v in x]
        if isinstance(x, FieldElement) and x.field == self.source:
            return FieldElement(self.residue, tuple(_as_int(c) % self.q for c in x.value))
        if isinstance(x, FieldElement) and isinstance(x.field, RationalField):
            x = x.value
        if isinstance(x, str):
            x = QQ(x).value
        return FieldElement(self.prime_field, _as_int(x) % self.q)


def make_residue_context(source: ExtensionField, q, theta: CyclicAutomorphism) -> ResidueContext:
    if q == "auto" or q is None:
        q = find_inert_prime(source)
    return ResidueContext(source, int(q), theta)


def reduce_word(ctx: ResidueContext, x):
    return ctx.reduce(x)


def reduce_code(ctx: ResidueContext, code: GabidulinCode) -> GabidulinCode:
    g = [ctx.reduce(x) for x in code.g]
    try:
        return GabidulinCode(ctx.theta_bar, g, code.k)
    except ValueError as exc:
        raise ValueError(f"reduced code is not a Gabidulin code: {exc}") from None


class LiftAlphabet:
    """Admissible integer coordinate values, pairwise distinct modulo ``q``."""

    def __init__(self, values, q: int):
        self.values = sorted(set(int(v) for v in values))
        self.q = q
        self._table = {}
        for v in self.values:
            r = v % q
            if r in self._table:
                raise ValueError(f"alphabet values {self._table[r]} and {v} collide modulo {q}")
            self._table[r] = v

    @classmethod
    def centered(cls, q: int, bound: int | None = None):
        """Representatives in ``(-q/2, q/2]``, optionally limited to ``|v| <= bound``."""
        lo, hi = -((q - 1) // 2), q // 2
        if bound is not None:
            if bound > hi or -bound < lo:
                raise ValueError(f"bound {bound} is too large for q = {q}")
            lo, hi = -bound, bound
        return cls(range(lo, hi + 1), q)

    def lift(self, r: int) -> int:
        try:
            return self._table[r % self.q]
        except KeyError:
            raise LiftError(f"residue {r % self.q} matches no alphabet member {self.values}") from None

    def __repr__(self):
        return f"LiftAlphabet({self.values}, q={self.q})"


def lift_poly(ctx: ResidueContext, f: SkewPoly, alphabet: LiftAlphabet) -> SkewPoly:
    coeffs = [FieldElement(ctx.source, tuple(alphabet.lift(c) for c in x.value)) for x in f.coeffs]
    return SkewPoly(ctx.theta, coeffs)


def residue_decode_and_lift(code: GabidulinCode, y, q="auto", alphabet=None, erasures=None,
                            method: str = "wb", trace=None, details=None, counter=None) -> SkewPoly:
    """Decode an integral word in the residue field and lift the message back.

    ``alphabet`` defaults to centered representatives.  ``erasures`` may be a
    :class:`LinePattern` (then ``y`` is ignored and may be ``None``) or a
    :class:`NetworkPattern`.
    """
    ctx = make_residue_context(code.field, q, code.theta)
    if alphabet is None:
        alphabet = LiftAlphabet.centered(ctx.q)
    elif not isinstance(alphabet, LiftAlphabet):
        alphabet = LiftAlphabet(alphabet, ctx.q)
    if alphabet.q != ctx.q:
        raise ValueError("alphabet was built for a different prime")
    rcode = reduce_code(ctx, code)
    if details is not None:
        details["context"] = ctx
    if isinstance(erasures, LinePattern):
        fbar = decode_line_erasures(rcode, ctx.reduce(erasures), method=method, trace=trace, counter=counter)
    elif isinstance(erasures, NetworkPattern):
        yb = ctx.reduce(y)
        if details is not None:
            details["y_reduced"] = yb
        fbar = decode_network_erasures(rcode, yb, ctx.reduce(erasures), method=method, trace=trace,
                                       details=details, counter=counter)
    else:
        yb = ctx.reduce(y)
        if details is not None:
            details["y_reduced"] = yb
        fbar = decode(rcode, yb, method, counter=counter, trace=trace).f
    if details is not None:
        details["f_residue"] = fbar
    return lift_poly(ctx, fbar, alphabet)
