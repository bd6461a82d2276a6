"""Generalized Gabidulin codes: construction, encoding, dual and exhaustive oracles."""

from __future__ import annotations

from .fields import CyclicAutomorphism, ExtensionField, FieldElement, PrimeField, coordinate_matrix, k_rank
from .linalg import _rank_mod_p, kernel_raw, rank_raw
from .skew import SkewPoly, sp_eval

ENUMERATION_GUARD = 2 ** 20


class InvalidCodeError(ValueError):
    pass


class EnumerationTooLarge(RuntimeError):
    pass


class GabidulinCode:
    """Evaluation code ``{(f{g_1}, ..., f{g_n}) : deg f < k}``.

    ``g`` must be K-linearly independent and ``theta`` must have ``K`` as its
    fixed field.
    """

    def __init__(self, theta: CyclicAutomorphism, g, k: int, check: bool = True):
        L = theta.field
        self.theta = theta
        self.g = [L(x) for x in g]
        self.k = int(k)
        self.n = len(self.g)
        self.m = L.degree
        if self.k < 0:
            raise InvalidCodeError("k must be >= 0")
        if self.k > self.n:
            raise InvalidCodeError(f"need k <= n (k={self.k}, n={self.n})")
        if self.n > self.m:
            raise InvalidCodeError(f"need n <= m (n={self.n}, m={self.m})")
        if check:
            if k_rank(self.g, field=L) != self.n:
                raise InvalidCodeError("support is not K-linearly independent")
            if theta.fixed_field_dim() != 1:
                raise InvalidCodeError("fixed field of theta is larger than K")

    @property
    def field(self) -> ExtensionField:
        return self.theta.field

    @property
    def d(self):
        return self.n - self.k + 1

    @property
    def t_max(self):
        return (self.n - self.k) // 2

    def __repr__(self):
        return f"GabidulinCode(n={self.n}, k={self.k}, d={self.d}, field={self.field!r})"

    def message(self, coeffs) -> SkewPoly:
        return SkewPoly(self.theta, coeffs)

    def encode(self, f) -> list:
        if not isinstance(f, SkewPoly):
            f = self.message(f)
        if f.degree >= self.k:
            raise ValueError(f"message degree {f.degree} must be < k = {self.k}")
        return [sp_eval(f, x) for x in self.g]

    def generator_matrix(self):
        """``k x n`` matrix with rows ``theta^i(g)``."""
        return [[self.theta(x, i) for x in self.g] for i in range(self.k)]

    def codeword_matrix(self, c):
        """``m x n`` matrix over ``K`` of the coordinates of ``c``."""
        K = self.field.below
        return [[FieldElement(K, v) for v in row] for row in coordinate_matrix(list(c), self.field)]

    def dual_support(self):
        """Vector ``h`` whose Moore matrix with ``n-k`` rows is a parity-check matrix."""
        if self.k >= self.n:
            raise InvalidCodeError("the dual of a code with k = n is trivial")
        L = self.field
        lo = -(self.n - self.k - 1)
        rows = [[self.theta.apply_raw(x.value, e) for x in self.g] for e in range(lo, self.k)]
        ker = kernel_raw(L, rows, self.n)
        if not ker:
            raise ArithmeticError("parity-check system has only the trivial solution")
        return [FieldElement(L, v) for v in ker[0]]

    def parity_check_matrix(self):
        h = self.dual_support()
        return [[self.theta(x, i) for x in h] for i in range(self.n - self.k)]

    # -- exhaustive oracles

    def _enumeration_size(self):
        q = self.field.order
        if q is None:
            raise EnumerationTooLarge("exhaustive search needs a finite field")
        return q ** self.k

    def _fast_prime_layer(self):
        L = self.field
        return isinstance(L.below, PrimeField)

    def _basis_codewords(self):
        """Codewords of ``b X^i`` for every power-basis element ``b`` and ``i < k``."""
        L = self.field
        out = []
        for i in range(self.k):
            for l in range(L.degree):
                b = [L.below._zero] * L.degree
                b[l] = L.below._one
                coef = [L.zero] * i + [FieldElement(L, tuple(b))]
                out.append(((i, l), self.encode(SkewPoly(self.theta, coef))))
        return out

    def _walk(self, vectors, p, start, visit):
        """Depth-first enumeration of all ``F_p`` combinations of ``vectors``.

        ``visit(acc, digits)`` is called on every leaf.  ``acc`` is the flattened
        codeword (an ``int`` bitmask when ``p = 2``, else a list of ints).
        """
        digits = [0] * len(vectors)
        if p == 2:
            def rec(d, acc):
                if d == len(vectors):
                    return visit(acc, digits)
                digits[d] = 0
                if rec(d + 1, acc):
                    return True
                digits[d] = 1
                r = rec(d + 1, acc ^ vectors[d])
                digits[d] = 0
                return r
        else:
            def rec(d, acc):
                if d == len(vectors):
                    return visit(acc, digits)
                cur = acc
                for c in range(p):
                    digits[d] = c
                    if rec(d + 1, cur):
                        return True
                    cur = [(a + b) % p for a, b in zip(cur, vectors[d])]
                digits[d] = 0
                return False
        rec(0, start)

    def _pack(self, word):
        """Flatten a word of ``L^n`` for the fast enumeration path."""
        L = self.field
        p = L.below.p
        m = L.degree
        vals = [L(x).value for x in word]
        if p == 2:
            acc = 0
            for j, v in enumerate(vals):
                for i, c in enumerate(v):
                    if c:
                        acc |= 1 << (j * m + i)
            return acc
        return [c for v in vals for c in v]

    def _packed_rank(self, acc):
        L = self.field
        p = L.below.p
        m, n = L.degree, self.n
        if p == 2:
            mask = (1 << m) - 1
            basis = []
            for j in range(n):
                v = (acc >> (j * m)) & mask
                for b in basis:
                    v = min(v, v ^ b)
                if v:
                    basis.append(v)
            return len(basis)
        return _rank_mod_p(p, [acc[j * m:(j + 1) * m] for j in range(n)])

    def _check_guard(self, guard):
        size = self._enumeration_size()
        if size > guard:
            raise EnumerationTooLarge(f"|L|^k = {size} exceeds the enumeration guard {guard}")

    def _digits_to_message(self, digits, index):
        L = self.field
        coeffs = [[L.below._zero] * L.degree for _ in range(self.k)]
        for (i, l), c in zip(index, digits):
            coeffs[i][l] = L.below._coerce(c)
        return SkewPoly(self.theta, [FieldElement(L, tuple(c)) for c in coeffs])

    def brute_force_nlr(self, y, t: int, guard: int = ENUMERATION_GUARD):
        """All ``(f, e)`` with ``deg f < k`` and rank of ``e = y - f{g}`` at most ``t``."""
        self._check_guard(guard)
        y = [self.field(v) for v in y]
        if len(y) != self.n:
            raise ValueError("word length differs from n")
        found = []
        if self._fast_prime_layer():
            basis = self._basis_codewords()
            index = [b[0] for b in basis]
            p = self.field.below.p
            vectors = [self._pack(b[1]) for b in basis]
            ypk = self._pack(y)
            start = 0 if p == 2 else [0] * (self.n * self.m)

            def visit(acc, digits):
                e = ypk ^ acc if p == 2 else [(a - b) % p for a, b in zip(ypk, acc)]
                if self._packed_rank(e) <= t:
                    found.append(self._digits_to_message(digits, index))
                return False

            self._walk(vectors, p, start, visit)
        else:
            import itertools

            L = self.field
            for coeffs in itertools.product(list(L.raw_elements()), repeat=self.k):
                f = SkewPoly(self.theta, [FieldElement(L, c) for c in coeffs])
                e = [a - b for a, b in zip(y, self.encode(f))]
                if k_rank(e, field=L) <= t:
                    found.append(f)
        out = []
        for f in found:
            e = [a - b for a, b in zip(y, self.encode(f))]
            out.append((f, e))
        return out

    def min_distance_exhaustive(self, guard: int = ENUMERATION_GUARD) -> int:
        """Minimum rank weight over nonzero codewords, by enumeration.

        Rank weight is invariant under L-scalars, so only messages whose last
        nonzero coefficient is one are visited.
        """
        self._check_guard(guard)
        if self.k == 0:
            raise InvalidCodeError("the zero code has no nonzero codeword")
        L = self.field
        best = self.n
        if self._fast_prime_layer():
            p = L.below.p
            basis = self._basis_codewords()
            packed = [self._pack(b[1]) for b in basis]
            for top in range(self.k):
                # messages c_0 + ... + X^top with lower coefficients free
                vectors = packed[: top * self.m]
                lead = self._pack(self.encode(SkewPoly.x(self.theta, top)))
                state = {"best": best}

                def visit(acc, digits, state=state):
                    r = self._packed_rank(acc)
                    if r < state["best"]:
                        state["best"] = r
                    return state["best"] == 1

                self._walk(vectors, p, lead, visit)
                best = min(best, state["best"])
            return best
        import itertools

        elems = list(L.raw_elements())
        for top in range(self.k):
            for coeffs in itertools.product(elems, repeat=top):
                f = SkewPoly(self.theta, [FieldElement(L, c) for c in coeffs] + [L.one])
                best = min(best, k_rank(self.encode(f), field=L))
        return best


def code_new(theta, g, k) -> GabidulinCode:
    return GabidulinCode(theta, g, k)


def rank_of_word(word, field=None) -> int:
    """K-rank of the entries of a word (equal to every rank weight under the framework)."""
    if field is None:
        field = word[0].field
    return rank_raw(field.below, coordinate_matrix(list(word), field))
