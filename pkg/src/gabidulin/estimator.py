"""scikit-learn style wrappers: ``fit`` takes the support, ``transform``
encodes messages and ``predict`` decodes received words.
"""

from __future__ import annotations

from sklearn.base import BaseEstimator, TransformerMixin

from .codes import GabidulinCode
from .decoding import METHODS, DecodingFailure, decode
from .fields import CyclicAutomorphism
from .skew import SkewPoly


class NotFittedError(RuntimeError):
    pass


def check_automorphism(theta):
    if not isinstance(theta, CyclicAutomorphism):
        raise TypeError(f"theta must be a CyclicAutomorphism, got {type(theta).__name__}")
    return theta


def check_vector(x, field, length=None, name="vector"):
    """Coerce ``x`` into a list of elements of ``field``, checking its length."""
    if isinstance(x, (str, bytes)) or not hasattr(x, "__iter__"):
        raise TypeError(f"{name} must be a sequence of field elements")
    out = [field(v) for v in x]
    if length is not None and len(out) != length:
        raise ValueError(f"{name} has length {len(out)}, expected {length}")
    return out


def check_words(X, field, length, name="word"):
    if isinstance(X, (str, bytes)) or not hasattr(X, "__iter__"):
        raise TypeError(f"expected a sequence of {name}s")
    return [check_vector(x, field, length, name) for x in X]


def check_message(f, theta, k):
    if not isinstance(f, SkewPoly):
        f = SkewPoly(theta, check_vector(f, theta.field, name="message"))
    if f.degree >= k:
        raise ValueError(f"message degree {f.degree} must be < k = {k}")
    return f


class _CodeMixin:
    def _build(self, X):
        theta = check_automorphism(self.theta)
        g = check_vector(X, theta.field, name="support")
        self.code_ = GabidulinCode(theta, g, self.k)
        self.n_features_in_ = self.code_.n
        return self

    def _check_fitted(self):
        if not hasattr(self, "code_"):
            raise NotFittedError(f"{type(self).__name__} is not fitted; call fit(support) first")


class GabidulinEncoder(_CodeMixin, TransformerMixin, BaseEstimator):
    """Encode messages (skew polynomials or coefficient lists) into codewords."""

    def __init__(self, theta=None, k=1):
        self.theta = theta
        self.k = k

    def fit(self, X, y=None):
        return self._build(X)

    def transform(self, X):
        self._check_fitted()
        return [self.code_.encode(check_message(f, self.code_.theta, self.code_.k)) for f in X]


class GabidulinDecoder(_CodeMixin, BaseEstimator):
    """Decode received words; failed words come back as ``None``."""

    def __init__(self, theta=None, k=1, method="wb", check_invariants=False):
        self.theta = theta
        self.k = k
        self.method = method
        self.check_invariants = check_invariants

    def fit(self, X, y=None):
        if self.method not in METHODS:
            raise ValueError(f"unknown method {self.method!r}; expected one of {sorted(METHODS)}")
        return self._build(X)

    def decode_one(self, word):
        self._check_fitted()
        word = check_vector(word, self.code_.field, self.code_.n, "word")
        return decode(self.code_, word, self.method, check_invariants=self.check_invariants)

    def predict(self, X):
        self._check_fitted()
        out = []
        for word in check_words(X, self.code_.field, self.code_.n):
            try:
                out.append(decode(self.code_, word, self.method, check_invariants=self.check_invariants).f)
            except DecodingFailure:
                out.append(None)
        return out

    def score(self, X, y):
        """Fraction of words decoded to the given messages."""
        pred = self.predict(X)
        hits = sum(1 for p, f in zip(pred, y) if p is not None and p == check_message(f, self.code_.theta, self.k))
        return hits / len(pred) if pred else 0.0


__all__ = ["GabidulinEncoder", "GabidulinDecoder", "NotFittedError", "check_vector", "check_words",
           "check_message", "check_automorphism"]
