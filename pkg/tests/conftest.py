import random

import pytest

from gabidulin.fields import QQ, CyclicAutomorphism, ExtensionField
from gabidulin.instances import cyclotomic_code


@pytest.fixture
def cyclo_code():
    """[6, 2] code over QQ(zeta_7), a -> a^3, support 1..a^5."""
    return cyclotomic_code(7, 6, 2, exponent=3)


@pytest.fixture
def cyclo_message(cyclo_code):
    a = cyclo_code.field.gen
    return cyclo_code.message([a ** 2, a ** 5])


@pytest.fixture(scope="session")
def kummer():
    K = ExtensionField(QQ, [1, 1, 1], var="j")
    L = ExtensionField(K, [-2, 0, 0, 0, 0, 0, 1], var="a")
    j, a = K.gen, L.gen
    return {
        "K": K,
        "L": L,
        "theta1": CyclicAutomorphism(L, j * a),
        "theta2": CyclicAutomorphism(L, (j + 1) * a),
        "x": [L.one, a, a ** 3, a ** 4],
    }


@pytest.fixture
def rng():
    return random.Random(20240611)


# -- one summary line per acceptance criterion

_CRITERIA = {}


def pytest_runtest_logreport(report):
    mark = _CRITERIA.get(report.nodeid)
    if mark is not None and (report.when == "call" or report.failed):
        mark["outcome"] = report.outcome
        mark["seconds"] += report.duration


def pytest_collection_modifyitems(items):
    for item in items:
        m = item.get_closest_marker("criterion")
        if m is not None:
            _CRITERIA[item.nodeid] = {"number": m.args[0], "title": m.args[1], "outcome": "not run", "seconds": 0.0}


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for c in sorted(_CRITERIA.values(), key=lambda c: c["number"]):
        status = {"passed": "PASS", "failed": "FAIL"}.get(c["outcome"], c["outcome"].upper())
        terminalreporter.write_line(f"criterion {c['number']:>2}: {status}  {c['title']}  ({c['seconds']:.1f} s)")
