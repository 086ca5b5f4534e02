import json
import subprocess
import sys

import pytest

from superkac.cli import EXIT_CAP, EXIT_DOMAIN, EXIT_MALFORMED, EXIT_OK, run

A = {"family": "sl", "m": 1, "n": 2}
THETA_T = {"r": 1, "n": 2, "values": [{"exp": [1], "val": "1"}]}
THETA_HALF = {"r": 1, "n": 2, "values": [{"exp": [0], "val": "1/2"}, {"exp": [1], "val": "1"}]}


def call(capsys, *argv):
    code = run([str(a) for a in argv])
    out = capsys.readouterr().out
    return code, json.loads(out)


def factor_doc(theta, vlabel=("0",), point=("0",)):
    return {"algebra": A, "factor": {"point": list(point), "kind": "kac", "theta": theta, "vlabel": list(vlabel)}}


def test_describe_algebra(capsys):
    code, out = call(capsys, "describe-algebra", "--family", "sl", "--m", 1, "--n", 2)
    assert code == EXIT_OK
    assert out["positive_odd_count"] == 2
    assert len(out["roots"]["odd"]) == 4 and len(out["roots"]["even"]) == 2
    assert out["distinguished_borel"]["parities"] == ["odd", "even"]


def test_kac_like_dim_two_truncation(capsys, tmp_path):
    doc = {"algebra": A, "theta": THETA_T}
    path = tmp_path / "k.json"
    path.write_text(json.dumps(doc))
    code, out = call(capsys, "kac-like", path, "--vlabel", "trivial", "--realize")
    assert code == EXIT_OK
    assert out["dim"] == 16 and out["sdim"] == 0
    assert out["realized"] == {"dim": 16, "sdim": 0, "character_matches": True, "bracket_residual": "0"}


def test_ext1_half_difference_is_zero(capsys, tmp_path):
    f1, f2 = tmp_path / "f1.json", tmp_path / "f2.json"
    f1.write_text(json.dumps(factor_doc(THETA_HALF)))
    f2.write_text(json.dumps(factor_doc(THETA_T)))
    code, out = call(capsys, "ext1", f1, f2, "--oracle")
    assert code == EXIT_OK
    assert out["case"] == "zero" and out["dim"] == 0 and out["oracle_dim"] == 0


def test_irreducible_with_oracle(capsys):
    code, out = call(capsys, "irreducible", json.dumps({"algebra": A, "theta": THETA_T}), "--oracle")
    assert code == EXIT_OK
    assert out["irreducible"] and out["oracle"]["is_irreducible"]
    assert out["certificates"][0]["scalar"] != "0"


def test_irreducible_wrong_ideal(capsys):
    doc = {"algebra": A, "theta": {"r": 1, "n": 2, "values": [{"exp": [0], "val": "1"}]},
           "ideal": {"r": 1, "n": 2, "ideal": []}}
    code, out = call(capsys, "irreducible", json.dumps(doc), "--oracle")
    assert code == EXIT_OK
    assert out["irreducible"] is False and out["oracle"]["is_irreducible"] is False


def test_character_and_roundtrip(capsys):
    desc = {"algebra": A, "factors": [
        {"point": ["1"], "kind": "eval", "hw": {"hprime": ["1"], "z": "-1"}},
        {"point": ["0"], "kind": "kac", "theta": THETA_T, "vlabel": ["0"]}]}
    code, out = call(capsys, "character", json.dumps(desc))
    assert code == EXIT_OK and out["dim"] == 48 and out["sdim"] == 0
    # the emitted descriptor re-parses to the same value
    code2, out2 = call(capsys, "character", json.dumps(out["descriptor"]))
    assert out2["descriptor"] == out["descriptor"]


def test_change_borel(capsys):
    desc = {"algebra": A, "factors": [{"point": ["0"], "kind": "eval", "hw": {"hprime": ["1"], "z": "-1"}}]}
    code, out = call(capsys, "change-borel", json.dumps(desc), "--chain", "[[1,-1,0]]", "--literal")
    assert code == EXIT_OK
    w = out["highest_weight"]["psi"][0]["values"][0]["weight"]
    assert w == {"hprime": ["1"], "z": "-1"}
    assert out["literal_shift"]["psi"][0]["values"][0]["weight"] != w


def test_blocks(capsys):
    uni = {"algebra": A, "universe": [
        {"point": ["0"], "kind": "eval", "hw": {"hprime": ["1"], "z": "-1"}},
        {"point": ["0"], "kind": "eval", "hw": {"hprime": ["0"], "z": "1"}}]}
    d1 = {"algebra": A, "factors": [{"point": ["0"], "kind": "eval", "hw": {"hprime": ["1"], "z": "-1"}}]}
    d2 = {"algebra": A, "factors": []}
    code, out = call(capsys, "blocks", json.dumps(uni), "--same", json.dumps(d1), json.dumps(d2))
    assert code == EXIT_OK
    assert out["same_block"] is True
    assert "caveat" in out
    assert len(out["points"][0]["components"]) == 2


@pytest.mark.parametrize("argv,code", [
    (["kac-like", "{not json"], EXIT_MALFORMED),
    (["kac-like", '{"algebra": 3}'], EXIT_MALFORMED),
    (["kac-like", "/nonexistent/file.json"], EXIT_MALFORMED),
    (["kac-like", json.dumps({"algebra": A, "theta": THETA_T}), "--vlabel", "[-1]"], EXIT_DOMAIN),
    (["describe-algebra", "--family", "sl", "--m", "3", "--n", "2"], EXIT_DOMAIN),
    (["ext1", json.dumps(factor_doc(THETA_T)), json.dumps({"algebra": {"family": "sl", "m": 2, "n": 2},
                                                        "factor": factor_doc(THETA_T, ("0", "0"))["factor"]})],
     EXIT_DOMAIN),
])
def test_error_exit_codes(capsys, argv, code):
    got, out = call(capsys, *argv)
    assert got == code
    assert set(out["error"]) == {"code", "message"}


def test_size_cap_exit_code(capsys, monkeypatch):
    monkeypatch.setenv("SUPERKAC_MAX_DIM", "4")
    code, out = call(capsys, "kac-like", json.dumps({"algebra": A, "theta": THETA_T}), "--realize")
    assert code == EXIT_CAP and out["error"]["code"] == "size_cap"


def test_stdin_and_module_entry_point():
    doc = json.dumps({"algebra": A, "theta": THETA_T})
    res = subprocess.run([sys.executable, "-m", "superkac", "kac-like", "-"], input=doc,
                         capture_output=True, text=True, check=False)
    assert res.returncode == 0
    assert json.loads(res.stdout)["dim"] == 16


def test_verify_quick_subset(capsys):
    code, out = call(capsys, "verify", "--quick", "--only", "4,8")
    assert code == EXIT_OK
    assert [r["criterion"] for r in out["results"]] == [4, 8]
    assert out["passed"]
