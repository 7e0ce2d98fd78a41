"""Command-line behaviour, exit codes and JSON determinism."""

import json

import pytest

from wgk import cli
from wgk import wgrass25


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_info_wgr(capsys):
    code, out, _ = run(capsys, "info", "wgr", "--w", "1/2,1/2,1/2,1/2,3/2")
    assert code == 0
    assert "P(1^6,2^4)" in out
    assert "[2, 3, 3, 3, 3]" in out
    assert "degree = 13/16" in out
    assert "K = O(-7)" in out


def test_info_wogr(capsys):
    code, out, _ = run(capsys, "info", "wogr", "--w", "0,0,1,1,2", "--u", "1")
    assert code == 0
    assert "P(1^2,2^4,3^4,4^4,5^2)" in out
    assert "K = O(-24)" in out


def test_info_straight_degree(capsys):
    code, out, _ = run(capsys, "info", "wgr", "--w", "1/2,1/2,1/2,1/2,1/2")
    assert code == 0
    assert "degree = 5" in out


def test_info_doubled_weights(capsys):
    code, out, _ = run(capsys, "info", "wgr", "--w", "1,1,1,1,3", "--doubled")
    assert code == 0
    assert "P(1^6,2^4)" in out


def test_info_rejects_bad_weights(capsys):
    code, _, err = run(capsys, "info", "wgr", "--w", "1/3,1,1,1,1")
    assert code == 2
    assert "error" in err
    code, _, err = run(capsys, "info", "wogr", "--w", "0,0,0,0,0", "--u", "0")
    assert code == 2


def test_verify_passes(capsys):
    code, out, _ = run(capsys, "verify")
    assert code == 0
    assert "checks passed" in out
    assert "FAIL" not in out


def test_verify_names_corrupted_identity(capsys, monkeypatch):
    from wgk import wogr510
    wogr510.equations()          # prime caches with the honest table
    wogr510.spinor_graph()
    good = wgrass25.pfaffian_equations()

    def corrupted():
        pfs = list(good)
        pfs[0] = -pfs[0]
        return pfs

    monkeypatch.setattr(wgrass25, "pfaffian_equations", corrupted)
    code, out, _ = run(capsys, "verify")
    assert code == 1
    assert "FAIL identity (a)" in out


def test_verify_json_is_deterministic(capsys):
    code, out1, _ = run(capsys, "verify", "--json")
    code2, out2, _ = run(capsys, "verify", "--json")
    assert code == code2 == 0
    assert out1 == out2
    data = json.loads(out1)
    assert data["ok"] is True


def test_rr_can3(capsys):
    code, out, _ = run(capsys, "rr", "can3", "--pg", "7", "--k3", "21",
                       "--half", "2", "--expand", "8")
    assert code == 0
    assert out.strip() == "1 7 29 83 190 370 645 1035 1562"


def test_rr_cy3(capsys):
    code, out, _ = run(capsys, "rr", "cy3", "--a3", "6/5", "--ac2", "108/5",
                       "--point", "5:0,0,-1/5,1/5,0", "--expand", "8")
    assert code == 0
    assert out.strip() == "1 2 5 11 20 34 54 81 117"


def test_section_command(tmp_path, capsys):
    model = tmp_path / "m.json"
    model.write_text(json.dumps(
        {"family": "wgr25", "w2": [1, 1, 1, 1, 3], "u2": 0}))
    code, out, _ = run(capsys, "section", "--model", str(model),
                       "--cut", "2,2,2", "--invariants", "--basket")
    assert code == 0
    assert "A^3 = 13/2" in out
    assert "h^0 = 6" in out
    assert "1/2(1,1,1) x 1" in out
    assert "K = O(-1)" in out


def test_section_roundtrip_json(tmp_path, capsys):
    model = tmp_path / "m.json"
    model.write_text(json.dumps(
        {"family": "wogr510", "w2": [0, 0, 2, 2, 4], "u2": 2}))
    code, out, _ = run(capsys, "section", "--model", str(model),
                       "--cut", "2,2,3,4,4,4,5", "--roundtrip", "cy3", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["roundtrip"]["ok"] is True
    assert data["canonical"] == 0


def test_match_command(tmp_path, capsys):
    rr = tmp_path / "cy3.json"
    rr.write_text(json.dumps({
        "kind": "cy3", "A3": "6/5", "Ac2": "108/5",
        "points": [
            {"r": 5, "weights": [3, 3, 4], "c": ["0", "0", "-1/5", "1/5", "0"]},
            {"r": 3, "weights": [1, 1, 1]},
            {"r": 3, "weights": [2, 2, 2]}]}))
    code, out, _ = run(capsys, "match", "--rr", str(rr))
    assert code == 0
    assert "accepted: wOGr(5,10; w=(0,0,1,1,2), u=1)" in out
    assert "rejected: cone[1] over wGr(2,5; w=(1,1,1,2,2)) ∩ (6)" in out
    assert "no coordinate weight divisible by 5" in out


def test_match_can3(tmp_path, capsys):
    rr = tmp_path / "can3.json"
    rr.write_text(json.dumps({"kind": "can3", "pg": 7, "K3": "21",
                              "half_points": 2}))
    code, out, _ = run(capsys, "match", "--rr", str(rr))
    assert code == 0
    assert "accepted: wOGr(5,10; w=(0,0,0,0,1), u=1)" in out


def test_match_json_report(tmp_path, capsys):
    rr = tmp_path / "can3.json"
    rr.write_text(json.dumps({"kind": "can3", "pg": 7, "K3": "21",
                              "half_points": 2}))
    code, out, _ = run(capsys, "match", "--rr", str(rr), "--json")
    assert code == 0
    data = json.loads(out)
    accepted = [c for c in data["report"]["candidates"] if c["accepted"]]
    assert len(accepted) == 1
    cand = accepted[0]
    assert cand["model"] == {"family": "wogr510", "w2": [0, 0, 0, 0, 2], "u2": 2}
    assert cand["generators"] == [1] * 7 + [2, 2]
    # report carries the candidate's numerator for provenance
    assert [0, 1, 1] in cand["numerator"] and [3, -8, 1] in cand["numerator"]


def test_match_rejects_malformed_file(tmp_path, capsys):
    rr = tmp_path / "bad.json"
    rr.write_text("{\"kind\": \"nope\"}")
    code, _, err = run(capsys, "match", "--rr", str(rr))
    assert code == 2 and "error" in err


def test_oracle_command(capsys):
    code, out, _ = run(capsys, "oracle", "wgr", "--w", "1/2,1/2,1/2,1/2,1/2",
                       "--degree", "3")
    assert code == 0
    assert "oracle dimension 175" in out and "agree" in out


def test_json_outputs_are_sorted_and_stable(capsys):
    code, out1, _ = run(capsys, "info", "wogr", "--w", "0,0,1,1,2", "--u", "1",
                        "--json")
    _, out2, _ = run(capsys, "info", "wogr", "--w", "0,0,1,1,2", "--u", "1",
                     "--json")
    assert code == 0 and out1 == out2
    data = json.loads(out1)
    assert data["schema"] == "wgk/1"


def test_depth_env_override(capsys, monkeypatch):
    monkeypatch.setenv("WGK_DEPTH", "6")
    code, out, _ = run(capsys, "rr", "can3", "--pg", "7", "--k3", "21",
                       "--half", "2")
    assert code == 0
    assert out.strip() == "1 7 29 83 190 370 645"
