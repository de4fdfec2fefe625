import json
import os

import pytest

from pairalg.cli import main
from pairalg.structio import (ParseError, load_structures, parse_structures,
                              serialize_structures)

FIXTURES = os.path.join(os.path.dirname(__file__), "..", "src", "pairalg",
                        "fixtures")


def fx(name):
    return os.path.join(FIXTURES, name)


ALL_FIXTURES = ["boolean.pair", "double_boolean.pair", "supertropical3.pair",
                "nmax3.semiring", "krasner.hyper"]


@pytest.mark.parametrize("name", ALL_FIXTURES)
def test_fixture_roundtrip(name):
    with open(fx(name)) as fh:
        text = fh.read()
    structs = parse_structures(text)
    assert serialize_structures(structs) == text


def test_parse_boolean_pair():
    structs = load_structures(fx("boolean.pair"))
    s = structs["semiring"]
    assert s.labels == ["0", "1"]
    assert structs["pair"].in_a0(0)


def test_dimension_error_reports_line():
    bad = "[semiring]\nname = x\nelements = 0 1\nzero = 0\none = 1\n" \
          "add =\n  0 1\n  1 1\n  1 1\nmul =\n  0 0\n  0 1\n"
    with pytest.raises(ParseError) as exc:
        parse_structures(bad)
    assert "line" in str(exc.value)


def test_unknown_label_rejected():
    bad = "[semiring]\nname = x\nelements = 0 1\nzero = 0\none = 1\n" \
          "add =\n  0 q\n  1 1\nmul =\n  0 0\n  0 1\n"
    with pytest.raises(ParseError) as exc:
        parse_structures(bad)
    assert "'q'" in str(exc.value)


def test_unknown_section_rejected():
    with pytest.raises(ParseError):
        parse_structures("[conference]\nname = x\n")


# ---------------------------------------------------------------------------
# CLI behaviour


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.strip() else None)


def test_cli_verify_fixture(capsys):
    code, report = run(capsys, "verify", fx("boolean.pair"))
    assert code == 0
    assert report["valid"]


def test_cli_verify_broken_semiring(tmp_path, capsys):
    # non-commutative addition: exit 1 with a witness
    bad = tmp_path / "broken.semiring"
    bad.write_text(
        "[semiring]\nname = broken\nelements = 0 1\nzero = 0\none = 1\n"
        "add =\n  0 1\n  0 1\nmul =\n  0 0\n  0 1\n")
    code, report = run(capsys, "verify", str(bad))
    assert code == 1
    assert not report["valid"]
    assert report["reports"]["semiring"]["violations"]


def test_cli_spectrum_boolean(capsys):
    code, report = run(capsys, "spectrum", fx("boolean.pair"))
    assert code == 0
    assert report["prime_count"] == 1
    assert report["krull_dimension"] == 0


def test_cli_hilbert_free_two(capsys):
    code, report = run(capsys, "hilbert", "--free-letters", "2",
                       "--kmax", "5")
    assert code == 0
    assert report["coefficients"] == [2, 4, 8, 16, 32]


def test_cli_shallow(capsys):
    code, report = run(capsys, "shallow", fx("supertropical3.pair"))
    assert code == 0 and report["shallow"]


def test_cli_radical_marker_exit(capsys):
    code, report = run(capsys, "radical", fx("supertropical3.pair"))
    assert code == 1
    assert report["radical"] == "no pair-congruence"


def test_cli_unknown_input_is_input_error(capsys):
    code, _ = run(capsys, "verify", "definitely-not-a-file")
    assert code == 2


def test_cli_unknown_subcommand_exits_two(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_cli_ore_witness(capsys):
    code, report = run(capsys, "ore-witness", "supertropical-naturals",
                       "--a1", "1", "--a2", "2", "--degree", "1",
                       "--window", "4")
    assert code == 0
    assert report["result"]["status"] == "yes"


def test_cli_powerset_size_ge_two(capsys):
    code, report = run(capsys, "powerset", fx("krasner.hyper"),
                       "--a0-choice", "size_ge_two")
    assert code == 0
    assert report["shallow"]
    assert len(report["elements"]) == 3


def test_cli_krasner_quotient(capsys):
    code, report = run(capsys, "krasner", fx("nmax3.semiring"),
                       "--subgroup", "0")
    assert code == 0
    assert report["verify"]["valid"]


def test_cli_localize(capsys):
    code, report = run(capsys, "localize", fx("boolean.pair"),
                       "--s-subset", "1")
    assert code == 0
    assert report["elements"]


def test_cli_polyroots_tangible_window(capsys):
    code, report = run(capsys, "polyroots", "supertropical-naturals",
                       "--poly", "x^2 + 1*x + 4", "--window", "10")
    assert code == 0
    assert "2" in report["roots"]


def test_cli_growth_matrix_units(capsys):
    code, report = run(capsys, "growth", "--matrix-units", "2",
                       "--kmax", "6")
    assert code == 0
    assert report["profile"]["d"] == [1, 4, 0, 0, 0, 0, 0]
