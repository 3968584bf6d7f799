import json

import pytest

from operadcalc.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_show_entry(capsys):
    code, out, _ = run(capsys, "show", "ass")
    assert code == 0
    assert "operad ass" in out
    assert "ambient arity-3 dimension" in out


def test_black_with_recognition(capsys):
    code, out, _ = run(capsys, "black", "ass", "leib", "--recognize")
    assert code == 0
    assert "diass" in out


def test_nested_expression(capsys):
    code, out, _ = run(
        capsys, "dual", "(black ass (dual postcom))", "--recognize"
    )
    assert code == 0
    assert "tridend" in out


def test_white_method_both_agrees(capsys):
    code, out, _ = run(
        capsys, "white", "perm", "lie", "--method", "both", "--recognize"
    )
    assert code == 0
    assert "leib" in out


def test_recognize_verb(capsys):
    code, out, _ = run(capsys, "recognize", "(white lie zinb)")
    assert code == 0
    assert "prelie" in out


def test_mag_literal(capsys):
    code, out, _ = run(capsys, "show", "mag_{1,0,1}")
    assert code == 0
    assert "relation dimension: 0" in out


def test_unknown_key_exits_1(capsys):
    code, out, err = run(capsys, "show", "nosuchoperad")
    assert code == 1
    assert "unknown presentation" in err


def test_json_error_payload(capsys):
    code, out, _ = run(capsys, "show", "nosuchoperad", "--format", "json")
    assert code == 1
    assert json.loads(out)["code"] == 1


def test_json_output(capsys):
    code, out, _ = run(
        capsys, "show", "prelie", "--format", "json", "--recognize"
    )
    assert code == 0
    data = json.loads(out)
    assert data["name"] == "prelie"
    assert any(m["entry"] == "prelie" for m in data["recognized"])


def test_latex_output(capsys):
    code, out, _ = run(capsys, "show", "lie", "--format", "latex")
    assert code == 0
    assert "aligned" in out


def test_parse_file(capsys, tmp_path):
    src = tmp_path / "my.op"
    src.write_text(
        "operad myop { gens: m:nonsym; rel: m(m(x,y),z) - m(x,m(y,z)); }"
    )
    code, out, _ = run(capsys, "parse", str(src), "--recognize")
    assert code == 0
    assert "ass" in out


def test_zoo_dir_extends_catalog(capsys, tmp_path):
    (tmp_path / "extra.op").write_text(
        "operad extra { gens: b:sym; rel: b(b(x,y),z) - b(x,b(y,z)); }"
    )
    code, out, _ = run(
        capsys, "dual", "extra", "--zoo-dir", str(tmp_path), "--recognize"
    )
    assert code == 0
    assert "lie" in out


def test_verify_group(capsys):
    code, out, _ = run(capsys, "verify", "adjunction")
    assert code == 0
    assert "PASS" in out


def test_verify_unknown_group(capsys):
    code, out, err = run(capsys, "verify", "everything")
    assert code == 1


def test_dump_tables(capsys):
    code, out, _ = run(capsys, "show", "lie", "--dump-tables")
    assert code == 0
    assert "black ass table" in out and "white lie table" in out


def test_sum_prod_opp_adm(capsys):
    for verb, args in (
        ("sum", ["ass", "lie"]),
        ("prod", ["ass", "lie"]),
        ("opp", ["leib"]),
        ("adm", ["ass"]),
    ):
        code, out, _ = run(capsys, verb, *args)
        assert code == 0
        assert "operad" in out
