"""Exact fields: the rationals, prime fields and towers of simple extensions.

Every field object works on *raw* values (``int``/``Fraction`` for the
rationals, ``int`` in ``[0, p)`` for a prime field, tuples of raw values of
the field below for an extension).  User code normally handles
:class:`FieldElement` wrappers, which carry their field and overload the
arithmetic operators.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import reduce


class ReducibleModulusError(ArithmeticError):
    """A layer modulus turned out not to be irreducible."""


class FieldMismatchError(TypeError):
    """Elements of unrelated fields were combined."""


def _norm_q(x):
    if type(x) is Fraction and x.denominator == 1:
        return x.numerator
    return x


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _prime_factors(n):
    out, f = [], 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


class Field:
    """Common interface; concrete fields implement the ``_op`` methods."""

    below = None
    degree = 1
    var = None
    # raw values support Python's native + - * before normalisation
    _native = False

    def __call__(self, x) -> "FieldElement":
        if isinstance(x, FieldElement):
            if x.field == self:
                return x
            return FieldElement(self, self._embed(x))
        return FieldElement(self, self._coerce(x))

    @property
    def zero(self):
        return FieldElement(self, self._zero)

    @property
    def one(self):
        return FieldElement(self, self._one)

    @property
    def base(self):
        f = self
        while f.below is not None:
            f = f.below
        return f

    @property
    def depth(self):
        d, f = 0, self
        while f.below is not None:
            d, f = d + 1, f.below
        return d

    @property
    def absolute_degree(self):
        d, f = 1, self
        while f.below is not None:
            d, f = d * f.degree, f.below
        return d

    def tower(self):
        """Fields of the tower, base first."""
        chain, f = [], self
        while f is not None:
            chain.append(f)
            f = f.below
        return chain[::-1]

    @property
    def is_finite(self):
        return self.base.characteristic != 0

    @property
    def order(self):
        if not self.is_finite:
            return None
        return self.base.characteristic ** self.absolute_degree

    def _embed(self, x):
        raise FieldMismatchError(f"cannot map an element of {x.field} into {self}")

    def _div(self, a, b):
        return self._mul(a, self._inv(b))

    def _sub(self, a, b):
        return self._add(a, self._neg(b))

    def _eq(self, a, b):
        return a == b


class RationalField(Field):
    characteristic = 0
    _zero = 0
    _one = 1
    _native = True

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "QQ"

    def _coerce(self, x):
        if isinstance(x, bool):
            raise TypeError("booleans are not field elements")
        if isinstance(x, int):
            return x
        if isinstance(x, Fraction):
            return _norm_q(x)
        if isinstance(x, str):
            return _norm_q(Fraction(x.strip()))
        raise TypeError(f"cannot coerce {x!r} into QQ")

    def _add(self, a, b):
        return _norm_q(a + b)

    def _sub(self, a, b):
        return _norm_q(a - b)

    def _neg(self, a):
        return -a

    def _mul(self, a, b):
        return _norm_q(a * b)

    def _inv(self, a):
        if a == 0:
            raise ZeroDivisionError("division by zero in QQ")
        return _norm_q(Fraction(1) / a)

    def _div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero in QQ")
        if type(a) is int and type(b) is int:
            if a % b == 0:
                return a // b
            return Fraction(a, b)
        return _norm_q(Fraction(a) / b)

    def _is_zero(self, a):
        return a == 0

    def _normalize(self, a):
        return _norm_q(a)

    def _format(self, a):
        return str(a)

    def random_raw(self, rng, bound=1):
        return rng.randint(-bound, bound)


QQ = RationalField()


class PrimeField(Field):
    _zero = 0
    _one = 1
    _native = True

    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.characteristic = p
        self.p = p

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))

    def __repr__(self):
        return f"GF({self.p})"

    def _coerce(self, x):
        if isinstance(x, bool):
            raise TypeError("booleans are not field elements")
        if isinstance(x, int):
            return x % self.p
        if isinstance(x, Fraction):
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        if isinstance(x, str):
            return self._coerce(Fraction(x.strip()))
        raise TypeError(f"cannot coerce {x!r} into {self}")

    def _add(self, a, b):
        return (a + b) % self.p

    def _sub(self, a, b):
        return (a - b) % self.p

    def _neg(self, a):
        return -a % self.p

    def _mul(self, a, b):
        return a * b % self.p

    def _inv(self, a):
        if a == 0:
            raise ZeroDivisionError(f"division by zero in {self}")
        return pow(a, -1, self.p)

    def _is_zero(self, a):
        return a == 0

    def _normalize(self, a):
        return a % self.p

    def _format(self, a):
        return str(a)

    def random_raw(self, rng, bound=None):
        return rng.randrange(self.p)

    def raw_elements(self):
        return range(self.p)


# -- dense univariate polynomials over a field, raw coefficients, low degree first


def _ptrim(F, a):
    a = list(a)
    while a and F._is_zero(a[-1]):
        a.pop()
    return a


def _psub(F, a, b):
    n = max(len(a), len(b))
    z = F._zero
    out = [F._sub(a[i] if i < len(a) else z, b[i] if i < len(b) else z) for i in range(n)]
    return _ptrim(F, out)


def _pmul(F, a, b):
    if not a or not b:
        return []
    out = [F._zero] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if F._is_zero(ai):
            continue
        for j, bj in enumerate(b):
            out[i + j] = F._add(out[i + j], F._mul(ai, bj))
    return _ptrim(F, out)


def _pdivmod(F, a, b):
    a = _ptrim(F, a)
    b = _ptrim(F, b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    inv_lead = F._inv(b[-1])
    q = [F._zero] * max(len(a) - len(b) + 1, 0)
    r = list(a)
    while len(r) >= len(b):
        c = F._mul(r[-1], inv_lead)
        shift = len(r) - len(b)
        q[shift] = c
        for i, bi in enumerate(b):
            r[shift + i] = F._sub(r[shift + i], F._mul(c, bi))
        r = _ptrim(F, r[:-1])
    return _ptrim(F, q), r


def _pmod(F, a, b):
    return _pdivmod(F, a, b)[1]


def _pgcd(F, a, b):
    a, b = _ptrim(F, a), _ptrim(F, b)
    while b:
        a, b = b, _pmod(F, a, b)
    return a


def _pxgcd(F, a, b):
    """Return (g, s) with s*a = g mod b."""
    r0, r1 = _ptrim(F, a), _ptrim(F, b)
    s0, s1 = [F._one], []
    while r1:
        q, r = _pdivmod(F, r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _psub(F, s0, _pmul(F, q, s1))
    return r0, s0


def _ppowmod(F, base, e, mod):
    result = [F._one]
    base = _pmod(F, base, mod)
    while e:
        if e & 1:
            result = _pmod(F, _pmul(F, result, base), mod)
        e >>= 1
        if e:
            base = _pmod(F, _pmul(F, base, base), mod)
    return result


def is_irreducible(F: Field, poly) -> bool:
    """Rabin's test over a finite field ``F``; ``poly`` is a list of raw coefficients."""
    f = _ptrim(F, poly)
    n = len(f) - 1
    if n < 1:
        return False
    if n == 1:
        return True
    q = F.order
    x = [F._zero, F._one]

    def frob_power(k):
        # X^(q^k) mod f
        r = x
        for _ in range(k):
            r = _ppowmod(F, r, q, f)
        return r

    if _psub(F, frob_power(n), x):
        return False
    for r in _prime_factors(n):
        h = _psub(F, frob_power(n // r), x)
        if len(_pgcd(F, f, h)) > 1:
            return False
    return True


class ExtensionField(Field):
    """``below[Y] / (modulus)`` for a monic modulus of degree at least two."""

    def __init__(self, below: Field, modulus, var: str = "a", check: bool = True):
        coeffs = [below(c).value for c in modulus]
        coeffs = _ptrim(below, coeffs)
        if len(coeffs) < 3:
            raise ValueError("modulus must have degree >= 2")
        if not below._eq(coeffs[-1], below._one):
            raise ValueError("modulus must be monic")
        self.below = below
        self.modulus = tuple(coeffs)
        self.degree = len(coeffs) - 1
        self.var = var
        self._zero = (below._zero,) * self.degree
        self._one = (below._one,) + (below._zero,) * (self.degree - 1)
        self._tail = tuple(coeffs[:-1])
        self._hash = hash((below, self.modulus))
        if check and below.is_finite and not is_irreducible(below, coeffs):
            raise ReducibleModulusError(f"modulus {list(coeffs)} is reducible over {below}")

    def __eq__(self, other):
        if self is other:
            return True
        return (
            isinstance(other, ExtensionField)
            and self._hash == other._hash
            and self.below == other.below
            and self.modulus == other.modulus
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"{self.below!r}[{self.var}]/({self._format(self.modulus)})"

    @property
    def gen(self):
        return FieldElement(self, (self.below._zero, self.below._one) + (self.below._zero,) * (self.degree - 2))

    def _coerce(self, x):
        if isinstance(x, (list, tuple)):
            if len(x) > self.degree:
                raise ValueError(f"too many coordinates for {self}")
            vals = [self.below(c).value for c in x]
            vals += [self.below._zero] * (self.degree - len(vals))
            return tuple(vals)
        return (self.below(x).value,) + (self.below._zero,) * (self.degree - 1)

    def _embed(self, x):
        # elements of a field lower in the tower become constants
        if x.field == self.below:
            return (x.value,) + (self.below._zero,) * (self.degree - 1)
        if self.below.below is None:
            raise FieldMismatchError(f"cannot map an element of {x.field} into {self}")
        return (self.below._embed(x),) + (self.below._zero,) * (self.degree - 1)

    def _is_zero(self, a):
        K = self.below
        return all(K._is_zero(c) for c in a)

    def _add(self, a, b):
        K = self.below
        return tuple(K._add(x, y) for x, y in zip(a, b))

    def _sub(self, a, b):
        K = self.below
        return tuple(K._sub(x, y) for x, y in zip(a, b))

    def _neg(self, a):
        K = self.below
        return tuple(K._neg(x) for x in a)

    def _eq(self, a, b):
        K = self.below
        return all(K._eq(x, y) for x, y in zip(a, b))

    def _normalize(self, a):
        return a

    def _scale(self, c, a):
        """Multiply by a raw scalar of the field below."""
        K = self.below
        return tuple(K._mul(c, x) for x in a)

    def _mul(self, a, b):
        K = self.below
        d = self.degree
        tail = self._tail
        if K._native:
            prod = [0] * (2 * d - 1)
            for i, ai in enumerate(a):
                if ai == 0:
                    continue
                for j, bj in enumerate(b):
                    if bj != 0:
                        prod[i + j] += ai * bj
            for k in range(2 * d - 2, d - 1, -1):
                c = prod[k]
                if c == 0:
                    continue
                off = k - d
                for i, t in enumerate(tail):
                    if t != 0:
                        prod[off + i] -= c * t
            norm = K._normalize
            return tuple(norm(v) for v in prod[:d])
        zero = K._zero
        prod = [zero] * (2 * d - 1)
        for i, ai in enumerate(a):
            if K._is_zero(ai):
                continue
            for j, bj in enumerate(b):
                if K._is_zero(bj):
                    continue
                prod[i + j] = K._add(prod[i + j], K._mul(ai, bj))
        for k in range(2 * d - 2, d - 1, -1):
            c = prod[k]
            if K._is_zero(c):
                continue
            off = k - d
            for i, t in enumerate(tail):
                if not K._is_zero(t):
                    prod[off + i] = K._sub(prod[off + i], K._mul(c, t))
        return tuple(prod[:d])

    def _inv(self, a):
        K = self.below
        if self._is_zero(a):
            raise ZeroDivisionError(f"division by zero in {self}")
        g, s = _pxgcd(K, list(a), list(self.modulus))
        if len(g) != 1:
            raise ReducibleModulusError(
                f"modulus of {self} has a nontrivial factor; the layer is not a field"
            )
        c = K._inv(g[0])
        s = [K._mul(c, x) for x in s]
        s += [K._zero] * (self.degree - len(s))
        return tuple(s)

    def _format(self, a):
        K = self.below
        terms = []
        for i in range(len(a) - 1, -1, -1):
            c = a[i]
            if K._is_zero(c):
                continue
            mono = "" if i == 0 else (self.var if i == 1 else f"{self.var}^{i}")
            neg = False
            if isinstance(K, RationalField) and c < 0:
                neg, c = True, -c
            cs = K._format(c)
            if mono and isinstance(K, ExtensionField) and sum(not K.below._is_zero(x) for x in c) > 1:
                cs = f"({cs})"
            if mono and K._eq(c, K._one):
                body = mono
            elif mono:
                body = cs + mono
            else:
                body = cs
            terms.append((neg, body))
        if not terms:
            return "0"
        out = ("-" if terms[0][0] else "") + terms[0][1]
        for neg, body in terms[1:]:
            out += (" - " if neg else " + ") + body
        return out

    def random_raw(self, rng, bound=1):
        return tuple(self.below.random_raw(rng, bound) for _ in range(self.degree))

    def raw_elements(self):
        return itertools.product(self.below.raw_elements(), repeat=self.degree)

    def coords(self, x: "FieldElement"):
        return [FieldElement(self.below, c) for c in x.value]


def tower_extend(field: Field, modulus, var: str = "a") -> ExtensionField:
    """Adjoin a root of ``modulus`` (coefficients low degree first) to ``field``."""
    return ExtensionField(field, modulus, var=var)


def cyclotomic_field(p: int, var: str = "a") -> ExtensionField:
    """``QQ[Y]/(1 + Y + ... + Y^(p-1))`` for a prime ``p``."""
    if not is_prime(p):
        raise ValueError("cyclotomic conductor must be prime")
    return ExtensionField(QQ, [1] * p, var=var)


def find_irreducible(F: Field, degree: int):
    """Smallest (in lexicographic order of coefficients) monic irreducible polynomial."""
    elems = list(F.raw_elements())
    for tail in itertools.product(elems, repeat=degree):
        poly = list(reversed(tail)) + [F._one]
        if F._is_zero(poly[0]):
            continue
        if is_irreducible(F, poly):
            return poly
    raise ValueError("no irreducible polynomial found")


def finite_field(p: int, m: int, var: str = "a") -> ExtensionField:
    """A degree-``m`` extension of ``GF(p)`` by the first irreducible polynomial found."""
    F = PrimeField(p)
    return ExtensionField(F, find_irreducible(F, m), var=var, check=False)


class FieldElement:
    __slots__ = ("field", "value")

    def __init__(self, field: Field, value):
        self.field = field
        self.value = value

    def _other(self, other):
        if isinstance(other, FieldElement):
            if other.field is self.field or other.field == self.field:
                return other.value
            return self.field._embed(other)
        return self.field._coerce(other)

    def __add__(self, other):
        if isinstance(other, FieldElement) and other.field.depth > self.field.depth:
            return other.field(self).__add__(other)
        return FieldElement(self.field, self.field._add(self.value, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, FieldElement) and other.field.depth > self.field.depth:
            return other.field(self).__sub__(other)
        return FieldElement(self.field, self.field._sub(self.value, self._other(other)))

    def __rsub__(self, other):
        if isinstance(other, FieldElement) and other.field.depth > self.field.depth:
            return other.field(self).__rsub__(other)
        return FieldElement(self.field, self.field._sub(self._other(other), self.value))

    def __neg__(self):
        return FieldElement(self.field, self.field._neg(self.value))

    def __mul__(self, other):
        if isinstance(other, FieldElement) and other.field.depth > self.field.depth:
            return other.field(self).__mul__(other)
        if hasattr(other, "theta"):  # skew polynomial: let it scale from the left
            return NotImplemented
        return FieldElement(self.field, self.field._mul(self.value, self._other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, FieldElement) and other.field.depth > self.field.depth:
            return other.field(self).__truediv__(other)
        return FieldElement(self.field, self.field._div(self.value, self._other(other)))

    def __rtruediv__(self, other):
        if isinstance(other, FieldElement) and other.field.depth > self.field.depth:
            return other.field(self).__rtruediv__(other)
        return FieldElement(self.field, self.field._div(self._other(other), self.value))

    def __pow__(self, e: int):
        F = self.field
        if e < 0:
            return self.inverse() ** (-e)
        result, base = F._one, self.value
        while e:
            if e & 1:
                result = F._mul(result, base)
            e >>= 1
            if e:
                base = F._mul(base, base)
        return FieldElement(F, result)

    def inverse(self):
        return FieldElement(self.field, self.field._inv(self.value))

    def is_zero(self):
        return self.field._is_zero(self.value)

    def __bool__(self):
        return not self.field._is_zero(self.value)

    def __eq__(self, other):
        if isinstance(other, FieldElement) and not (other.field is self.field or other.field == self.field):
            try:
                other = self.field(other)
            except FieldMismatchError:
                return False
        try:
            return self.field._eq(self.value, self._other(other))
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash(self.value)

    def coords(self):
        """Coordinates over the field one layer below (power basis)."""
        if self.field.below is None:
            raise TypeError("base field elements have no coordinates")
        return self.field.coords(self)

    def __str__(self):
        return self.field._format(self.value)

    def __repr__(self):
        return f"FieldElement({self.field._format(self.value)})"


# -- linear maps over K used by the automorphism


def _matvec(K, M, v):
    """``M`` is a list of rows of raw K values."""
    if K._native:
        norm = K._normalize
        return tuple(norm(sum(mij * vj for mij, vj in zip(row, v) if mij != 0 and vj != 0)) for row in M)
    out = []
    for row in M:
        acc = K._zero
        for mij, vj in zip(row, v):
            if not K._is_zero(mij) and not K._is_zero(vj):
                acc = K._add(acc, K._mul(mij, vj))
        out.append(acc)
    return tuple(out)


class CyclicAutomorphism:
    """A ``K``-automorphism of ``L = K[Y]/(T)`` given by the image of ``Y``.

    ``K`` is the field directly below ``L``.  The powers of the map are cached
    as matrices over ``K`` in the power basis.
    """

    def __init__(self, field: ExtensionField, image):
        if not isinstance(field, ExtensionField):
            raise TypeError("automorphisms act on extension fields")
        image = field(image)
        K = field.below
        # T(image) == 0 ?
        acc = field.zero
        for c in reversed(field.modulus):
            acc = acc * image + FieldElement(field, field._coerce(FieldElement(K, c)))
        if not acc.is_zero():
            raise ValueError("image is not a root of the modulus; not an automorphism")
        self.field = field
        self.base_field = K
        self.image = image
        d = field.degree

        def matrix_for(y):
            # columns are the coordinates of y^0, ..., y^(d-1)
            cols, p = [], field.one
            for _ in range(d):
                cols.append(p.value)
                p = p * y
            return tuple(tuple(cols[c][r] for c in range(d)) for r in range(d))

        gen = field.gen
        images = [gen]
        mats = [matrix_for(gen)]
        cur = image
        while not cur == gen:
            if len(images) >= d:
                raise ValueError("map does not have finite order <= [L:K]")
            images.append(cur)
            mats.append(matrix_for(cur))
            cur = FieldElement(field, _matvec(K, mats[1], cur.value))
        self.order = len(images)
        self._mats = mats
        self._images = images

    def __repr__(self):
        return f"CyclicAutomorphism({self.field.var} -> {self.image}, order={self.order})"

    def __eq__(self, other):
        return isinstance(other, CyclicAutomorphism) and self.field == other.field and self.image == other.image

    def __hash__(self):
        return hash((self.field, self.image.value))

    def power_matrix(self, i: int):
        """Matrix of ``theta^i`` over ``K`` (rows of FieldElements)."""
        K = self.base_field
        M = self._mats[i % self.order]
        return [[FieldElement(K, x) for x in row] for row in M]

    def apply_raw(self, x, i: int = 1):
        i %= self.order
        if i == 0:
            return x
        return _matvec(self.base_field, self._mats[i], x)

    def __call__(self, x: FieldElement, i: int = 1) -> FieldElement:
        if not (x.field is self.field or x.field == self.field):
            x = self.field(x)
        return FieldElement(self.field, self.apply_raw(x.value, i))

    def inverse(self, x: FieldElement) -> FieldElement:
        return self(x, self.order - 1)

    def fixed_field_dim(self) -> int:
        """``K``-dimension of ``{x : theta(x) = x}``."""
        from .linalg import rank_raw

        K = self.base_field
        d = self.field.degree
        if self.order == 1:
            return d
        M = self._mats[1]
        rows = [[K._sub(M[r][c], K._one) if r == c else M[r][c] for c in range(d)] for r in range(d)]
        return d - rank_raw(K, rows)

    @property
    def satisfies_framework(self) -> bool:
        return self.fixed_field_dim() == 1


def automorphism_make(field: ExtensionField, image) -> CyclicAutomorphism:
    return CyclicAutomorphism(field, image)


def frobenius(field: ExtensionField) -> CyclicAutomorphism:
    """``x -> x^q`` where ``q`` is the size of the field below."""
    q = field.below.order
    if q is None:
        raise ValueError("Frobenius needs a finite field below")
    return CyclicAutomorphism(field, field.gen ** q)


def cyclotomic_automorphism(field: ExtensionField, exponent: int) -> CyclicAutomorphism:
    """``alpha -> alpha^exponent`` on a cyclotomic field."""
    return CyclicAutomorphism(field, field.gen ** exponent)


def coordinate_matrix(vectors, field: ExtensionField | None = None):
    """``m x n`` matrix over ``K`` whose ``j``-th column holds the coordinates of ``vectors[j]``."""
    if field is None:
        if not vectors:
            raise ValueError("cannot infer the field of an empty vector")
        field = vectors[0].field
    vals = [field(v).value for v in vectors]
    return [[vals[j][i] for j in range(len(vals))] for i in range(field.degree)]


def k_rank(vectors, basis=None, field: ExtensionField | None = None) -> int:
    """Rank over ``K`` of the coordinate matrix of ``vectors``.

    The rank does not depend on the chosen ``K``-basis, so ``basis`` is only
    validated (size ``m``, independent).
    """
    from .linalg import rank_raw

    if field is None:
        if vectors:
            field = vectors[0].field
        elif basis:
            field = basis[0].field
        else:
            return 0
    if basis is not None:
        if len(basis) != field.degree:
            raise ValueError(f"basis must have {field.degree} elements")
        if rank_raw(field.below, coordinate_matrix(basis, field)) != field.degree:
            raise ValueError("basis elements are not K-linearly independent")
    if not vectors:
        return 0
    return rank_raw(field.below, coordinate_matrix(vectors, field))


def power_basis(field: ExtensionField):
    g = field.gen
    out = [field.one]
    for _ in range(field.degree - 1):
        out.append(out[-1] * g)
    return out


def sum_elements(field: Field, elems):
    return reduce(lambda a, b: a + b, elems, field.zero)
