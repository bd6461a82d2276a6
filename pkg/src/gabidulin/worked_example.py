"""The length-6 cyclotomic scenario with one row erasure, one column erasure
and a rank-2 error, decoded modulo 3, rendered as a text trace.
"""

from __future__ import annotations

import difflib
from importlib import resources

from .decoding import NetworkPattern
from .instances import cyclotomic_code
from .residue import LiftAlphabet, residue_decode_and_lift


def scenario():
    code = cyclotomic_code(7, 6, 2, exponent=3)
    a = code.field.gen
    y = [
        a ** 5 + a ** 3 - a ** 2 + 2 * a + 2,
        a ** 5 - a ** 4 + a ** 3 + a ** 2 - 1,
        -2 * a ** 5 + 4 * a ** 4 + a ** 2 - 2 * a,
        -a ** 5 + 2 * a ** 4 + a ** 3 - a ** 2 + 3,
        -2 * a ** 5 - 2 * a ** 2,
        -a ** 5 - a ** 4 + a ** 3 - 2 * a ** 2 - a + 2,
    ]
    pattern = NetworkPattern(A_r_hat=[[1], [-1], [0], [1], [1], [-1]], B_c_hat=[[1, 0, -1, 0, 0, 1]])
    return {"code": code, "y": y, "pattern": pattern, "q": 3, "alphabet": [0, 1]}


def format_vector(v):
    return "(" + ", ".join(str(x) for x in v) + ")"


def format_state(label, state):
    lines = [f"{label}:"]
    for key in ("N0", "W0", "N1", "W1"):
        lines.append(f"  {key} = {state[key]}")
    for key in ("u0", "u1"):
        lines.append(f"  {key} = {format_vector(state[key])}")
    return lines


class TraceRecorder:
    """Collects reconstruction states; usable as the ``trace`` callback."""

    def __init__(self):
        self.states = []

    def __call__(self, stage, state):
        self.states.append((stage, state))

    def lines(self):
        out = []
        for idx, (stage, state) in enumerate(self.states):
            out += format_state("initialisation" if idx == 0 else f"iteration {idx}", state)
        return out


def render(method: str = "wb") -> str:
    if method == "gauss":
        raise ValueError("the trace needs a reconstruction method (wb, wb-df or wb-lowdeg)")
    s = scenario()
    rec = TraceRecorder()
    details = {}
    f = residue_decode_and_lift(s["code"], s["y"], s["q"], LiftAlphabet(s["alphabet"], s["q"]),
                                s["pattern"], method=method, trace=rec, details=details)
    lines = ["reduced y:"]
    lines += [f"  y{i + 1} = {v}" for i, v in enumerate(details["y_reduced"])]
    lines.append("after column operations:")
    lines += [f"  g{i + 1} = {v}" for i, v in enumerate(details["g_tilde"])]
    lines += [f"  y{i + 1} = {v}" for i, v in enumerate(details["y_tilde"])]
    for e in details["erasure_elements"]:
        lines.append(f"row erasure element: {e}")
    lines.append(f"V_r = {details['V']}")
    lines.append("evaluations:")
    lines += [f"  z{i + 1} = {v}" for i, v in enumerate(details["z"])]
    lines += rec.lines()
    last = rec.states[-1][1]
    lines.append(f"N = {last['N1']}")
    lines.append(f"W = {last['W1']}")
    lines.append(f"F = {details['F']}")
    lines.append(f"f = {details['f_residue']}")
    lines.append(f"lifted f = {f}")
    return "\n".join(lines) + "\n"


def golden() -> str:
    return resources.files("gabidulin").joinpath("data/golden_trace.txt").read_text()


def diff_against_golden(text: str) -> list:
    return list(difflib.unified_diff(golden().splitlines(), text.splitlines(), "golden", "computed", lineterm=""))
