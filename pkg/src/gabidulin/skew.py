"""Skew polynomials ``L[X; theta]`` with ``X * c = theta(c) * X``.

Coefficients are stored as raw field values (lowest degree first) for speed;
:attr:`SkewPoly.coeffs` exposes them as :class:`FieldElement` objects.
Operations accept an optional :class:`OpCounter` which tallies field
operations in ``L``.  Multiplications by one are neither performed nor
counted.
"""

from __future__ import annotations

from dataclasses import dataclass

from .fields import CyclicAutomorphism, FieldElement, coordinate_matrix
from .linalg import rank_raw

# degree of the zero polynomial
NEG_INF = float("-inf")


class HdimViolation(ArithmeticError):
    """A nonzero skew polynomial has more roots than its degree allows."""


class DependentPointsError(ValueError):
    """Interpolation points are not K-linearly independent."""


class ThetaMismatchError(TypeError):
    pass


@dataclass
class OpCounter:
    adds: int = 0
    mults: int = 0
    divs: int = 0
    thetas: int = 0

    @property
    def coefficient_ops(self):
        return self.adds + self.mults

    def snapshot(self):
        return OpCounter(self.adds, self.mults, self.divs, self.thetas)


class _Ops:
    """Counted raw arithmetic in ``L``."""

    __slots__ = ("L", "theta", "c", "one")

    def __init__(self, theta, counter=None):
        self.theta = theta
        self.L = theta.field
        self.c = counter
        self.one = self.L._one

    def is_zero(self, a):
        return self.L._is_zero(a)

    def is_one(self, a):
        return self.L._eq(a, self.one)

    def add(self, a, b):
        if self.c is not None:
            self.c.adds += 1
        return self.L._add(a, b)

    def sub(self, a, b):
        if self.c is not None:
            self.c.adds += 1
        return self.L._sub(a, b)

    def mul(self, a, b):
        L = self.L
        if L._is_zero(a) or L._is_zero(b):
            return L._zero
        if L._eq(a, self.one):
            return b
        if L._eq(b, self.one):
            return a
        if self.c is not None:
            self.c.mults += 1
        return L._mul(a, b)

    def div(self, a, b):
        if self.c is not None:
            self.c.divs += 1
        return self.L._div(a, b)

    def th(self, a, i=1):
        if i % self.theta.order == 0:
            return a
        if self.c is not None:
            self.c.thetas += 1
        return self.theta.apply_raw(a, i)


def _trim(L, cs):
    cs = list(cs)
    while cs and L._is_zero(cs[-1]):
        cs.pop()
    return tuple(cs)


class SkewPoly:
    __slots__ = ("theta", "_c")

    def __init__(self, theta: CyclicAutomorphism, coeffs=()):
        L = theta.field
        self.theta = theta
        self._c = _trim(L, (L(c).value for c in coeffs))

    @classmethod
    def _raw(cls, theta, raw, trimmed=False):
        p = cls.__new__(cls)
        p.theta = theta
        p._c = tuple(raw) if trimmed else _trim(theta.field, raw)
        return p

    @classmethod
    def zero(cls, theta):
        return cls._raw(theta, (), True)

    @classmethod
    def one(cls, theta):
        return cls._raw(theta, (theta.field._one,), True)

    @classmethod
    def x(cls, theta, power=1):
        L = theta.field
        return cls._raw(theta, (L._zero,) * power + (L._one,), True)

    @classmethod
    def constant(cls, theta, c):
        return cls(theta, [c])

    @property
    def field(self):
        return self.theta.field

    @property
    def degree(self):
        return len(self._c) - 1 if self._c else NEG_INF

    @property
    def coeffs(self):
        L = self.theta.field
        return [FieldElement(L, c) for c in self._c]

    def coeff(self, i):
        L = self.theta.field
        if 0 <= i < len(self._c):
            return FieldElement(L, self._c[i])
        return L.zero

    @property
    def lead(self):
        if not self._c:
            return self.theta.field.zero
        return FieldElement(self.theta.field, self._c[-1])

    def is_zero(self):
        return not self._c

    def is_monic(self):
        return bool(self._c) and self.theta.field._eq(self._c[-1], self.theta.field._one)

    def _check(self, other):
        if not isinstance(other, SkewPoly):
            return SkewPoly.constant(self.theta, other)
        if not (other.theta is self.theta or other.theta == self.theta):
            raise ThetaMismatchError("skew polynomials over different automorphisms")
        return other

    def __add__(self, other):
        return sp_add(self, self._check(other))

    __radd__ = __add__

    def __neg__(self):
        L = self.theta.field
        return SkewPoly._raw(self.theta, [L._neg(c) for c in self._c], True)

    def __sub__(self, other):
        return sp_add(self, -self._check(other))

    def __rsub__(self, other):
        return sp_add(self._check(other), -self)

    def __mul__(self, other):
        return sp_mul(self, self._check(other))

    def __rmul__(self, other):
        # scalar on the left multiplies every coefficient
        return scalar_mul(self.theta.field(other), self)

    def __call__(self, b):
        return sp_eval(self, b)

    def __eq__(self, other):
        if not isinstance(other, SkewPoly):
            try:
                other = self._check(other)
            except (TypeError, ValueError):
                return NotImplemented
        if len(self._c) != len(other._c):
            return False
        L = self.theta.field
        return all(L._eq(a, b) for a, b in zip(self._c, other._c))

    def __hash__(self):
        return hash(self._c)

    def __str__(self):
        if not self._c:
            return "0"
        L = self.theta.field
        return " + ".join(f"({L._format(c)})X^{i}" for i, c in enumerate(self._c) if not L._is_zero(c))

    def __repr__(self):
        return f"SkewPoly({self})"


def scalar_mul(c: FieldElement, A: SkewPoly, counter=None) -> SkewPoly:
    """``c * A`` with ``c`` a constant on the left."""
    op = _Ops(A.theta, counter)
    return SkewPoly._raw(A.theta, [op.mul(c.value, a) for a in A._c])


def sp_add(A: SkewPoly, B: SkewPoly, counter=None) -> SkewPoly:
    if not (A.theta is B.theta or A.theta == B.theta):
        raise ThetaMismatchError("skew polynomials over different automorphisms")
    op = _Ops(A.theta, counter)
    a, b = A._c, B._c
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, bi in enumerate(b):
        if op.is_zero(bi):
            continue
        out[i] = op.add(out[i], bi) if not op.is_zero(out[i]) else bi
    return SkewPoly._raw(A.theta, out)


def sp_sub(A: SkewPoly, B: SkewPoly, counter=None) -> SkewPoly:
    return sp_add(A, -B, counter)


def sp_mul(A: SkewPoly, B: SkewPoly, counter=None) -> SkewPoly:
    """``sum_{i,j} a_i theta^i(b_j) X^(i+j)``."""
    if not (A.theta is B.theta or A.theta == B.theta):
        raise ThetaMismatchError("skew polynomials over different automorphisms")
    if not A._c or not B._c:
        return SkewPoly.zero(A.theta)
    op = _Ops(A.theta, counter)
    L = op.L
    out = [L._zero] * (len(A._c) + len(B._c) - 1)
    for i, ai in enumerate(A._c):
        if op.is_zero(ai):
            continue
        for j, bj in enumerate(B._c):
            if op.is_zero(bj):
                continue
            term = op.mul(ai, op.th(bj, i))
            out[i + j] = term if op.is_zero(out[i + j]) else op.add(out[i + j], term)
    return SkewPoly._raw(A.theta, out)


def _eval_raw(op, coeffs, b):
    L = op.L
    acc = L._zero
    if L._is_zero(b):
        return acc
    bi = b
    for i, ai in enumerate(coeffs):
        if i:
            bi = op.th(bi)
        if op.is_zero(ai):
            continue
        term = op.mul(ai, bi)
        acc = term if L._is_zero(acc) else op.add(acc, term)
    return acc


def sp_eval(A: SkewPoly, b, counter=None) -> FieldElement:
    """Operator evaluation ``A{b} = sum a_i theta^i(b)``."""
    L = A.theta.field
    b = L(b)
    return FieldElement(L, _eval_raw(_Ops(A.theta, counter), A._c, b.value))


def left_divmod(A: SkewPoly, B: SkewPoly, counter=None):
    """``A = B * Q + R`` with ``deg R < deg B``."""
    if B.is_zero():
        raise ZeroDivisionError("skew polynomial division by zero")
    theta = A.theta
    op = _Ops(theta, counter)
    L = op.L
    db = len(B._c) - 1
    lead_b = B._c[-1]
    r = list(A._c)
    q = [L._zero] * max(len(r) - db, 0)
    while len(r) - 1 >= db:
        e = len(r) - 1 - db
        ratio = r[-1] if op.is_one(lead_b) else op.div(r[-1], lead_b)
        c = op.th(ratio, -db)
        q[e] = c
        # r -= B * (c X^e) = sum b_i theta^i(c) X^(i+e)
        for i in range(db):
            bi = B._c[i]
            if op.is_zero(bi):
                continue
            r[i + e] = op.sub(r[i + e], op.mul(bi, op.th(c, i)))
        r.pop()
        while r and L._is_zero(r[-1]):
            r.pop()
    return SkewPoly._raw(theta, q), SkewPoly._raw(theta, r, True)


def right_divmod(A: SkewPoly, B: SkewPoly, counter=None):
    """``A = Q * B + R`` with ``deg R < deg B``."""
    if B.is_zero():
        raise ZeroDivisionError("skew polynomial division by zero")
    theta = A.theta
    op = _Ops(theta, counter)
    L = op.L
    db = len(B._c) - 1
    r = list(A._c)
    q = [L._zero] * max(len(r) - db, 0)
    while len(r) - 1 >= db:
        e = len(r) - 1 - db
        tb = [op.th(b, e) for b in B._c]
        c = r[-1] if op.is_one(tb[-1]) else op.div(r[-1], tb[-1])
        q[e] = c
        for i in range(db):
            if op.is_zero(tb[i]):
                continue
            r[i + e] = op.sub(r[i + e], op.mul(c, tb[i]))
        r.pop()
        while r and L._is_zero(r[-1]):
            r.pop()
    return SkewPoly._raw(theta, q), SkewPoly._raw(theta, r, True)


def sp_divide(A: SkewPoly, B: SkewPoly, side: str = "left", counter=None):
    if side == "left":
        return left_divmod(A, B, counter)
    if side == "right":
        return right_divmod(A, B, counter)
    raise ValueError("side must be 'left' or 'right'")


def _linear_factor_times(op, c, A):
    """``(X - c) * A`` for raw ``c``."""
    L = op.L
    out = [L._zero] * (len(A) + 1)
    for i, a in enumerate(A):
        out[i + 1] = op.th(a)
    for i, a in enumerate(A):
        if op.is_zero(a):
            continue
        t = op.mul(c, a)
        out[i] = op.sub(out[i], t) if not op.is_zero(out[i]) else L._neg(t)
    return out


def _in_span(theta, prior, v):
    if not prior:
        return theta.field._is_zero(v)
    K = theta.base_field
    base = coordinate_matrix([FieldElement(theta.field, x) for x in prior], theta.field)
    ext = coordinate_matrix([FieldElement(theta.field, x) for x in prior + [v]], theta.field)
    return rank_raw(K, base) == rank_raw(K, ext)


def annihilator(theta: CyclicAutomorphism, v, counter=None) -> SkewPoly:
    """Monic skew polynomial of least degree vanishing on the K-span of ``v``.

    Inputs already in the span of earlier ones are skipped.  A zero
    evaluation on an independent input means the automorphism has too large a
    fixed field, reported as :class:`HdimViolation`.
    """
    L = theta.field
    op = _Ops(theta, counter)
    A = [L._one]
    used = []
    for x in v:
        x = L(x).value
        p = _eval_raw(op, A, x)
        if L._is_zero(p):
            if _in_span(theta, used, x):
                continue
            raise HdimViolation("zero pivot on an independent element; fixed field is larger than K")
        c = op.div(op.th(p), p)
        A = _linear_factor_times(op, c, A)
        used.append(x)
    return SkewPoly._raw(theta, A)


def annihilator_interpolator(theta: CyclicAutomorphism, g, y, counter=None):
    """Annihilator of ``g`` and the interpolator with ``Int{g_i} = y_i``, jointly."""
    if len(g) != len(y):
        raise ValueError("g and y have different lengths")
    L = theta.field
    op = _Ops(theta, counter)
    ann = [L._one]
    itp = []
    for gi, yi in zip(g, y):
        gi, yi = L(gi).value, L(yi).value
        a = _eval_raw(op, ann, gi)
        if L._is_zero(a):
            raise DependentPointsError("interpolation points are K-linearly dependent")
        r = op.sub(yi, _eval_raw(op, itp, gi))
        if not L._is_zero(r):
            c = op.div(r, a)
            itp = list(itp) + [L._zero] * (len(ann) - len(itp))
            for i, ai in enumerate(ann):
                if not op.is_zero(ai):
                    t = op.mul(c, ai)
                    itp[i] = op.add(itp[i], t) if not op.is_zero(itp[i]) else t
        ann = _linear_factor_times(op, op.div(op.th(a), a), ann)
    return SkewPoly._raw(theta, ann), SkewPoly._raw(theta, itp)


def interpolator(theta: CyclicAutomorphism, g, y, counter=None) -> SkewPoly:
    return annihilator_interpolator(theta, g, y, counter)[1]


def df_annihilator_interpolator(theta: CyclicAutomorphism, g, y, counter=None):
    """Division-free variant: returns ``(Ann, Int, lam)`` with ``Int{g_i} = lam * y_i``."""
    if len(g) != len(y):
        raise ValueError("g and y have different lengths")
    L = theta.field
    op = _Ops(theta, counter)
    ann = [L._one]
    itp = []
    lam = L._one
    for gi, yi in zip(g, y):
        gi, yi = L(gi).value, L(yi).value
        a = _eval_raw(op, ann, gi)
        if L._is_zero(a):
            raise DependentPointsError("interpolation points are K-linearly dependent")
        r = op.sub(op.mul(lam, yi), _eval_raw(op, itp, gi))
        new = [op.mul(a, c) for c in itp] + [L._zero] * (len(ann) - len(itp))
        for i, ai in enumerate(ann):
            t = op.mul(r, ai)
            if not op.is_zero(t):
                new[i] = op.add(new[i], t) if not op.is_zero(new[i]) else t
        itp = _trim(L, new)
        lam = op.mul(a, lam)
        # (a X - theta(a)) * ann
        ta = op.th(a)
        out = [L._zero] * (len(ann) + 1)
        for i, c in enumerate(ann):
            out[i + 1] = op.mul(a, op.th(c))
        for i, c in enumerate(ann):
            t = op.mul(ta, c)
            if not op.is_zero(t):
                out[i] = op.sub(out[i], t)
        ann = out
    return SkewPoly._raw(theta, ann), SkewPoly._raw(theta, itp), FieldElement(L, lam)


def root_space_dim(A: SkewPoly) -> int:
    """K-dimension of ``{b in L : A{b} = 0}``; pure linear algebra."""
    theta = A.theta
    L = theta.field
    if A.is_zero():
        return L.degree
    op = _Ops(theta)
    basis = [L._one] + [tuple(L.below._one if i == j else L.below._zero for i in range(L.degree))
                        for j in range(1, L.degree)]
    images = [FieldElement(L, _eval_raw(op, A._c, b)) for b in basis]
    return L.degree - rank_raw(L.below, coordinate_matrix(images, L))


def moore_matrix(theta: CyclicAutomorphism, x, rows: int):
    """``rows x n`` matrix ``theta^i(x_j)``."""
    return [[theta(xj, i) for xj in x] for i in range(rows)]
