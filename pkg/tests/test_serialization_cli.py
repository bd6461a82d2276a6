import csv
import io
import json
import random

import pytest

from gabidulin import serialization as ser
from gabidulin.cli import main
from gabidulin.decoding import LinePattern, NetworkPattern
from gabidulin.fields import QQ, ExtensionField, PrimeField, finite_field
from gabidulin.instances import finite_code
from gabidulin.worked_example import scenario


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def write(path, obj):
    path.write_text(json.dumps(obj))
    return str(path)


# -- serialization


def test_field_round_trip_two_layers():
    K = ExtensionField(QQ, [1, 1, 1], var="j")
    L = ExtensionField(K, [-2, 0, 0, 0, 0, 0, 1], var="a")
    doc = ser.field_to_json(L)
    assert doc["base"] == "Q" and len(doc["layers"]) == 2
    M = ser.field_from_json(json.loads(json.dumps(doc)))
    assert M.degree == 6 and M.below.degree == 2


def test_rational_coordinates_as_strings():
    L = ExtensionField(QQ, [1, 1, 1])
    x = L([QQ("1/3"), 2])
    assert ser.element_to_json(x) == ["1/3", 2]
    assert ser.element_from_json(L, ["1/3", 2]) == x
    assert ser.element_from_json(L, 5) == L.one * 5


def test_code_and_word_round_trip(cyclo_code, cyclo_message):
    doc = json.loads(json.dumps(ser.code_to_json(cyclo_code)))
    code = ser.code_from_json(doc)
    assert code.g == cyclo_code.g and code.k == 2 and code.theta.image == cyclo_code.theta.image
    w = cyclo_code.encode(cyclo_message)
    assert ser.word_from_json(code.field, json.loads(json.dumps(ser.word_to_json(w)))) == w


def test_finite_code_round_trip():
    code = finite_code(3, 4, 3, 2, random.Random(1))
    back = ser.code_from_json(json.loads(json.dumps(ser.code_to_json(code))))
    assert back.field.order == 81 and back.g == code.g


def test_patterns_round_trip():
    K = PrimeField(3)
    lp = LinePattern([[K(1), None], [K(0), K(2)]])
    back = ser.line_pattern_from_json(K, json.loads(json.dumps(ser.line_pattern_to_json(lp))))
    assert back.masked == lp.masked and back.S_r == lp.S_r and back.S_c == lp.S_c
    npat = NetworkPattern([[1], [-1]], [[1, 0, -1]])
    back = ser.network_pattern_from_json(QQ, ser.network_pattern_to_json(npat))
    assert [[x.value for x in r] for r in back.A_r_hat] == [[1], [-1]]


@pytest.mark.parametrize("doc", [{"base": "R"}, {"layers": []}, {"base": {"Fp": 2}, "layers": [{"mod": [1]}]}])
def test_bad_field_documents(doc):
    with pytest.raises(ser.FormatError):
        ser.field_from_json(doc)


def test_bad_values():
    F = finite_field(2, 3)
    with pytest.raises(ser.FormatError):
        ser.element_from_json(F, [1, 0, 0, 1])
    with pytest.raises(ser.FormatError):
        ser.element_from_json(F, [1.5])
    with pytest.raises(ser.FormatError):
        ser.word_from_json(F, {"words": []})


# -- command line


def test_worked_code_and_encoding(tmp_path, capsys):
    code_file = tmp_path / "code.json"
    rc, _, _ = run(capsys, "gen-code", "--cyclotomic", 7, "--theta-exp", 3, "--k", 2, "--n", 6, "-o", code_file)
    assert rc == 0
    msg = write(tmp_path / "f.json", [[0, 0, 1, 0, 0, 0], [0, 0, 0, 0, 0, 1]])
    rc, out, _ = run(capsys, "encode", "--code", code_file, "--message", msg)
    assert rc == 0
    assert json.loads(out)["entries"] == [
        [0, 0, 1, 0, 0, 1], [0, 1, 0, 1, 0, 0], [0, 0, 0, 0, 2, 0],
        [1, 0, 0, 0, 0, 1], [-1, -1, -1, 0, -1, -1], [0, -1, -1, -1, -1, -1],
    ]


def test_length_above_degree_is_named(capsys):
    rc, _, err = run(capsys, "gen-code", "--cyclotomic", 7, "--k", 2, "--n", 7)
    assert rc == 1 and "n <= m" in err


@pytest.mark.parametrize("method", ["gauss", "wb", "wb-df", "wb-lowdeg"])
def test_round_trip_through_files(tmp_path, capsys, method):
    code_file = tmp_path / "code.json"
    assert run(capsys, "gen-code", "--fp", 2, "--m", 4, "--k", 2, "--n", 4, "--seed", 3, "-o", code_file)[0] == 0
    word = tmp_path / "c.json"
    assert run(capsys, "encode", "--code", code_file, "--seed", 5, "-o", word)[0] == 0
    noisy = tmp_path / "y.json"
    assert run(capsys, "corrupt", "--code", code_file, "--word", word, "--rank", 1, "--seed", 7, "-o", noisy)[0] == 0
    rc, out, _ = run(capsys, "decode", "--code", code_file, "--word", noisy, "--method", method)
    assert rc == 0
    assert json.loads(out)["f"] == json.loads(word.read_text())["f"]


def test_cyclotomic_rank_two_round_trip(tmp_path, capsys):
    code_file = tmp_path / "code.json"
    run(capsys, "gen-code", "--cyclotomic", 7, "--theta-exp", 3, "--k", 2, "--n", 6, "-o", code_file)
    word, noisy = tmp_path / "c.json", tmp_path / "y.json"
    run(capsys, "encode", "--code", code_file, "--seed", 1, "-o", word)
    run(capsys, "corrupt", "--code", code_file, "--word", word, "--rank", 2, "--seed", 7, "-o", noisy)
    rc, out, _ = run(capsys, "decode", "--code", code_file, "--word", noisy)
    assert rc == 0 and json.loads(out)["f"] == json.loads(word.read_text())["f"]


def test_decoding_failure_exit_code(tmp_path, capsys):
    code_file = tmp_path / "code.json"
    run(capsys, "gen-code", "--fp", 2, "--m", 5, "--k", 1, "--n", 5, "--seed", 2, "-o", code_file)
    word, noisy = tmp_path / "c.json", tmp_path / "y.json"
    run(capsys, "encode", "--code", code_file, "--seed", 1, "-o", word)
    codes = set()
    for seed in range(12):
        run(capsys, "corrupt", "--code", code_file, "--word", word, "--rank", 4, "--seed", seed, "-o", noisy)
        rc, out, _ = run(capsys, "decode", "--code", code_file, "--word", noisy)
        codes.add(rc)
        assert json.loads(out)["status"] == ("ok" if rc == 0 else "fail")
    assert 2 in codes


def test_usage_errors(tmp_path, capsys):
    assert run(capsys, "decode")[0] == 1
    assert run(capsys, "bogus")[0] == 1
    assert run(capsys, "encode", "--code", tmp_path / "missing.json", "--seed", 1)[0] == 1
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(capsys, "encode", "--code", bad, "--seed", 1)[0] == 1
    assert run(capsys, "gen-code", "--k", 1, "--n", 1)[0] == 1


def test_residue_decoding_of_worked_network_example(tmp_path, capsys):
    s = scenario()
    code_file = write(tmp_path / "code.json", ser.code_to_json(s["code"]))
    word = write(tmp_path / "y.json", ser.word_to_json(s["y"]))
    pat = write(tmp_path / "p.json", ser.network_pattern_to_json(s["pattern"]))
    rc, out, err = run(capsys, "decode", "--code", code_file, "--word", word, "--network-pattern", pat,
                       "--mod-prime", 3, "--lift-alphabet", "0,1", "--trace")
    assert rc == 0
    assert json.loads(out)["f"] == [[0, 0, 1, 0, 0, 0], [0, 0, 0, 0, 0, 1]]
    assert "initialisation:" in err and "iteration 2:" in err


def test_not_inert_prime_is_a_usage_error(tmp_path, capsys):
    s = scenario()
    code_file = write(tmp_path / "code.json", ser.code_to_json(s["code"]))
    word = write(tmp_path / "y.json", ser.word_to_json(s["y"]))
    assert run(capsys, "decode", "--code", code_file, "--word", word, "--mod-prime", 7)[0] == 1


def test_outputs_are_deterministic(tmp_path, capsys):
    outs = []
    for _ in range(2):
        code_file = tmp_path / "code.json"
        run(capsys, "gen-code", "--fp", 3, "--m", 4, "--k", 2, "--n", 4, "--seed", 9, "-o", code_file)
        run(capsys, "encode", "--code", code_file, "--seed", 4, "-o", tmp_path / "c.json")
        run(capsys, "corrupt", "--code", code_file, "--word", tmp_path / "c.json", "--rank", 1, "--seed", 4,
            "-o", tmp_path / "y.json")
        outs.append(code_file.read_bytes() + (tmp_path / "y.json").read_bytes())
    assert outs[0] == outs[1]


def test_demo_matches_golden(capsys):
    rc, out, err = run(capsys, "demo")
    assert rc == 0 and "matches" in err
    assert out.rstrip().endswith("lifted f = (a^2)X^0 + (a^5)X^1")


def test_bench_zero_repeats(capsys):
    rc, out, _ = run(capsys, "bench", "--repeats", 0, "--rows", "6:2")
    assert rc == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [r["median_ms"] for r in rows] == ["", ""]


def test_bench_small_rows(capsys):
    rc, out, err = run(capsys, "bench", "--repeats", 2, "--rows", "4:2,6:2", "--mode", "both")
    assert rc == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert list(rows[0]) == ["n", "k", "mode", "median_ms", "max_size_bits"]
    assert {r["mode"] for r in rows} == {"direct", "residue"}
    assert all(float(r["median_ms"]) > 0 for r in rows)
    assert "mode=direct" in err and "mode=residue" in err


def test_bench_rejects_unknown_length(capsys):
    assert run(capsys, "bench", "--rows", "5:2")[0] == 1
