import pytest

from gabidulin.worked_example import diff_against_golden, golden, render


def test_standard_trace_matches_golden():
    assert diff_against_golden(render("wb")) == []


def test_golden_contents():
    text = golden()
    assert "V_r = (a^5 + a^2)X^0 + (1)X^1" in text
    assert text.rstrip().endswith("lifted f = (a^2)X^0 + (a^5)X^1")


@pytest.mark.parametrize("method", ["wb-df", "wb-lowdeg"])
def test_other_methods_reach_the_same_message(method):
    text = render(method)
    assert text.rstrip().endswith("lifted f = (a^2)X^0 + (a^5)X^1")


def test_division_free_trace_differs_from_printed_states():
    # the printed intermediate polynomials are those of the standard update rule
    assert diff_against_golden(render("wb-df")) != []


def test_trace_needs_a_reconstruction_method():
    with pytest.raises(ValueError):
        render("gauss")
