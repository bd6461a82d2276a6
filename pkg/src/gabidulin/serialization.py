"""JSON encodings for fields, elements, codes, words and erasure patterns.

Base-field values are ints, or strings ``"a/b"`` for non-integral rationals.
An extension element is the list of its coordinates over the field below.
"""

from __future__ import annotations

from fractions import Fraction

from .codes import GabidulinCode
from .decoding import LinePattern, NetworkPattern
from .fields import QQ, CyclicAutomorphism, ExtensionField, FieldElement, PrimeField, RationalField
from .skew import SkewPoly


class FormatError(ValueError):
    """Malformed JSON document."""


def _value_to_json(field, v):
    if isinstance(field, ExtensionField):
        return [_value_to_json(field.below, c) for c in v]
    if isinstance(v, Fraction) and v.denominator != 1:
        return f"{v.numerator}/{v.denominator}"
    return int(v)


def element_to_json(x: FieldElement):
    if not isinstance(x, FieldElement):  # plain base-field number
        return _value_to_json(QQ, Fraction(x) if isinstance(x, (str, Fraction)) else int(x))
    return _value_to_json(x.field, x.value)


def element_from_json(field, data) -> FieldElement:
    try:
        if isinstance(field, ExtensionField):
            if isinstance(data, list):
                if len(data) > field.degree:
                    raise FormatError(f"too many coordinates for {field}")
                coords = [element_from_json(field.below, c).value for c in data]
                coords += [field.below._zero] * (field.degree - len(coords))
                return FieldElement(field, tuple(coords))
            return field(element_from_json(field.below, data))
        if isinstance(data, bool) or not isinstance(data, (int, str)):
            raise FormatError(f"bad base-field value {data!r}")
        return field(data)
    except (ValueError, ZeroDivisionError) as exc:
        if isinstance(exc, FormatError):
            raise
        raise FormatError(str(exc)) from None


def field_to_json(field) -> dict:
    chain = field.tower()
    base = chain[0]
    out = {"base": "Q" if isinstance(base, RationalField) else {"Fp": base.p}, "layers": []}
    for layer in chain[1:]:
        out["layers"].append({
            "modulus": [_value_to_json(layer.below, c) for c in layer.modulus],
            "var": layer.var,
        })
    return out


def field_from_json(data) -> ExtensionField:
    try:
        base = data["base"]
        if base == "Q":
            field = QQ
        elif isinstance(base, dict) and "Fp" in base:
            field = PrimeField(int(base["Fp"]))
        else:
            raise FormatError(f"unknown base {base!r}")
        layers = data.get("layers", [])
        for i, layer in enumerate(layers):
            # the top layer is "a", lower layers "b", "c", ...
            depth = len(layers) - 1 - i
            var = layer.get("var") or (chr(ord("a") + depth) if depth < 20 else f"y{i}")
            coeffs = [element_from_json(field, c) for c in layer["modulus"]]
            field = ExtensionField(field, coeffs, var=var)
    except (KeyError, TypeError) as exc:
        raise FormatError(f"bad field descriptor: {exc}") from None
    return field


def poly_to_json(f: SkewPoly):
    return [element_to_json(c) for c in f.coeffs]


def poly_from_json(theta, data) -> SkewPoly:
    if not isinstance(data, list):
        raise FormatError("a skew polynomial is a list of coefficients")
    return SkewPoly(theta, [element_from_json(theta.field, c) for c in data])


def code_to_json(code: GabidulinCode) -> dict:
    return {
        "field": field_to_json(code.field),
        "theta_image": element_to_json(code.theta.image),
        "support": [element_to_json(x) for x in code.g],
        "k": code.k,
    }


def code_from_json(data) -> GabidulinCode:
    try:
        field = field_from_json(data["field"])
        theta = CyclicAutomorphism(field, element_from_json(field, data["theta_image"]))
        g = [element_from_json(field, x) for x in data["support"]]
        return GabidulinCode(theta, g, int(data["k"]))
    except (KeyError, TypeError) as exc:
        raise FormatError(f"bad code document: {exc}") from None


def word_to_json(word, **meta) -> dict:
    out = {"entries": [element_to_json(x) for x in word]}
    out.update(meta)
    return out


def word_from_json(field, data):
    try:
        return [element_from_json(field, x) for x in data["entries"]]
    except (KeyError, TypeError) as exc:
        raise FormatError(f"bad word document: {exc}") from None


def line_pattern_to_json(p: LinePattern) -> dict:
    return {
        "masked": [[None if x is None else element_to_json(x) for x in row] for row in p.masked],
        "S_r": list(p.S_r),
        "S_c": list(p.S_c),
    }


def line_pattern_from_json(K, data) -> LinePattern:
    try:
        masked = [[None if x is None else element_from_json(K, x) for x in row] for row in data["masked"]]
        return LinePattern(masked, data.get("S_r"), data.get("S_c"))
    except (KeyError, TypeError) as exc:
        raise FormatError(f"bad line pattern: {exc}") from None


def network_pattern_to_json(p: NetworkPattern) -> dict:
    return {
        "A_r_hat": [[element_to_json(x) for x in row] for row in p.A_r_hat],
        "B_c_hat": [[element_to_json(x) for x in row] for row in p.B_c_hat],
    }


def network_pattern_from_json(K, data) -> NetworkPattern:
    try:
        A = [[element_from_json(K, x) for x in row] for row in data.get("A_r_hat", [])]
        B = [[element_from_json(K, x) for x in row] for row in data.get("B_c_hat", [])]
        return NetworkPattern(A, B)
    except TypeError as exc:
        raise FormatError(f"bad network pattern: {exc}") from None


def result_to_json(status, f=None, e=None, **extra) -> dict:
    out = {"status": status, "f": None if f is None else poly_to_json(f),
           "e": None if e is None else [element_to_json(x) for x in e]}
    out.update(extra)
    return out
