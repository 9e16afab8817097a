import json
import subprocess
import sys

import pytest

from cyclicreal.cli import main, parse_morphism, parse_object
from cyclicreal.errors import ParseError
from cyclicreal.poset import product, standard_poset
from cyclicreal.ppset import Embedded, Standard


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("argv,expected", [
    (["hom", "delta", "1", "1", "--count-only"], "3"),
    (["hom", "cyclic", "1", "1", "--count-only"], "6"),
    (["hom", "cyclic", "1", "1", "--count-only", "--model", "nabla"], "6"),
    (["hom", "delta", "0", "0", "--count-only"], "1"),
    (["hom", "poset", "[1]", "[2]", "--count-only"], "6"),
    (["realize", "product", "[1]", "[1]", "--f-vector"], "4 5 2"),
    (["realize", "[2]", "--euler"], "1"),
    (["realize", "[0]", "--f-vector"], "1"),
])
def test_counts(argv, expected, capsys):
    code, out, _ = run(argv, capsys)
    assert code == 0 and out.strip() == expected


def test_hom_listing(capsys):
    code, out, _ = run(["hom", "cyclic", "0", "1"], capsys)
    assert out.split() == ["chi=[0];u=0", "chi=[1];u=0"]


def test_compose(capsys):
    m = "chi=[0,0,1];u=2"
    code, out, _ = run(["compose", "chi=[0,1];u=0", m], capsys)
    assert code == 0 and out.strip() == m
    code, out, _ = run(["compose", "f=[0,1,2,3]", "f=[1,2,3,4]", "--model", "nabla"], capsys)
    assert out.strip() == "f=[1,2,3,4]"
    code, out, _ = run(["compose", "f=[0,1,2]", "--dual", "--model", "nabla"], capsys)
    assert out.strip() == "f=[0,1,2]"


def test_compose_via_oracle(capsys):
    code, out, _ = run(["compose", "--via-oracle", "--seed", "3"], capsys)
    assert code == 0 and out.strip() == "OK"
    code, out, _ = run(["compose", "--via-oracle", "chi=[0,1];u=1", "chi=[0,0];u=1;m=1"], capsys)
    assert code == 0 and out.splitlines()[0] == "OK"


def test_compose_mismatch(capsys):
    code, _, err = run(["compose", "chi=[0];u=0", "chi=[0,1];u=0"], capsys)
    assert code == 2 and "ObjectMismatch" in err and "[0]->[0]" in err and "[1]->[1]" in err


def test_parse_errors(capsys):
    code, _, err = run(["realize", "[x]"], capsys)
    assert code == 2 and "usage" in err
    with pytest.raises(ParseError):
        parse_morphism("g=[0]")
    with pytest.raises(ParseError):
        parse_object("[1] [2]")
    with pytest.raises(SystemExit) as exc:
        main(["hom", "nonsense", "1", "1"])
    assert exc.value.code == 2


def test_object_literals(tmp_path):
    assert parse_object("product [1] [2]") == product(standard_poset(1), standard_poset(2))
    assert parse_object("[[3]]") == Standard(3)
    assert parse_object("embedded 0,3@5") == Embedded((0, 3), 5)
    assert parse_object("embedded 0,3@5-") == Embedded((0, 3), 5, True)
    f = tmp_path / "p.json"
    f.write_text(json.dumps({"elements": ["a", "b", "c"], "leq": [[0, 2], [1, 2]]}))
    P = parse_object(f"@{f}")
    assert P.size == 3 and P.leq(0, 2) and not P.comparable(0, 1)


def test_realize_exports(capsys):
    code, out, _ = run(["realize", "product", "[1]", "[1]", "--export", "off"], capsys)
    assert out.splitlines()[:2] == ["OFF", "4 2 5"]
    code, out, _ = run(["realize", "[1]", "--export", "json"], capsys)
    assert json.loads(out)["f_vector"] == [2, 1]
    code, _, err = run(["realize", "[4]", "--export", "off"], capsys)
    assert code == 2 and "UnsupportedExportDimension" in err


def test_realize_ppset(capsys):
    code, out, _ = run(["realize", "embedded", "0,3@5"], capsys)
    assert code == 0 and "[[1]]" in out


def test_show_point(tmp_path, capsys):
    from cyclicreal.cyclic_realization import homeo_from_product, phase, point_to_json
    from cyclicreal.realization import bary
    from fractions import Fraction as Fr
    p = homeo_from_product(bary(Fr(1, 2), Fr(1, 2)), phase(Fr(1, 4)), 1)
    f = tmp_path / "pt.json"
    f.write_text(point_to_json(p))
    code, out, _ = run(["show", f"@{f}"], capsys)
    assert code == 0 and out.splitlines()[0] == "one period over [[1]]:"
    assert out.splitlines()[-1] == "barycentric 1/2 1/2; phase 1/4"


def test_verify(capsys):
    code, out, _ = run(["verify", "square"], capsys)
    assert code == 0 and out.startswith("PASS square")
    code, out, _ = run(["verify", "metric", "--seed", "7", "--samples", "200"], capsys)
    assert code == 0 and "0 failures" in out
    code, _, err = run(["verify", "nosuch"], capsys)
    assert code == 2 and "UnknownSuite" in err


def test_verify_failure_exit_code(capsys):
    code, out, _ = run(["verify", "cyclic-metric", "--samples", "100"], capsys)
    assert code == 1 and out.startswith("FAIL cyclic-metric")


def test_deterministic_output(capsys):
    first = run(["compose", "--via-oracle", "--seed", "5"], capsys)
    second = run(["compose", "--via-oracle", "--seed", "5"], capsys)
    assert first == second


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "cyclicreal", "hom", "cyclic", "2", "1", "--count-only"],
                         capture_output=True, text=True, check=True)
    assert out.stdout.strip() == str(4 * 3)
