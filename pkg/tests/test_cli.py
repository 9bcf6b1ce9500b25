"""The monodromy command line: subcommands, exit codes, determinism."""

import json

import pytest

from monodromy import cli


def run(capsys, *argv):
    status = cli.main(list(argv))
    captured = capsys.readouterr()
    return status, captured.out, captured.err


def test_poly_table(capsys):
    status, out, err = run(capsys, "poly", "--n", "2", "--k", "2")
    assert status == 0
    assert "q^6 - 2q^5 - q^4 + 4q^3 - q^2 - 2q + 1" in out
    assert "degree bound 6: met" in out
    assert err == ""


def test_poly_json_values(capsys):
    status, out, _ = run(capsys, "poly", "--n", "2", "--g", "1", "--q", "2,3", "--format", "json")
    assert status == 0
    doc = json.loads(out)
    assert doc["mode"] == "all-semisimple"
    assert doc["k"] == 2
    assert doc["values"] == {"2": "9", "3": "256"}
    assert doc["poly"]["coeffs"][0] == [1, 1]


def test_poly_prank_one_is_mixed(capsys):
    status, out, _ = run(capsys, "poly", "--n", "2", "--g", "1", "--prank", "1", "--format", "json")
    assert status == 0
    doc = json.loads(out)
    assert doc["mode"] == "mixed"
    # mixed counts carry no degree check, but do carry the Laurent quotient
    assert "degree" in doc and "laurentQuotient" in doc["checks"]
    assert "degree" not in doc["checks"]


def test_poly_conjugacy_mode(capsys):
    status, out, _ = run(capsys, "poly", "--n", "2", "--k", "2", "--mode", "conj", "--q", "2", "--format", "json")
    assert status == 0
    doc = json.loads(out)
    assert doc["mode"] == "conjugacy-classes"
    assert doc["values"] == {"2": "5"}
    assert doc["checks"] == {}


def test_poly_deterministic_output(capsys):
    _, first, _ = run(capsys, "poly", "--n", "3", "--k", "2", "--format", "json")
    _, second, _ = run(capsys, "poly", "--n", "3", "--k", "2", "--format", "json")
    assert first == second


def test_verify_ok(capsys):
    status, out, _ = run(capsys, "verify", "--n", "2", "--k", "2", "--mode", "ss", "--q", "2,3", "--format", "json")
    assert status == 0
    doc = json.loads(out)
    assert doc["allMatch"] is True
    assert [row["q"] for row in doc["rows"]] == [2, 3]
    assert doc["rows"][0]["predicted"] == doc["rows"][0]["actual"] == "9"


def test_verify_mixed_and_conj(capsys):
    status, out, _ = run(capsys, "verify", "--n", "2", "--k", "2", "--mode", "mixed", "--q", "2")
    assert status == 0
    assert "predicted 12, brute 12" in out
    status, out, _ = run(capsys, "verify", "--n", "2", "--k", "1", "--mode", "conj", "--q", "3")
    assert status == 0
    assert "predicted 6, brute 6" in out


def test_verify_mismatch_exits_one(capsys, monkeypatch):
    import monodromy.fforacle as fforacle

    monkeypatch.setattr(fforacle, "brute_hom_count", lambda *a, **k: 999)
    status, out, _ = run(capsys, "verify", "--n", "2", "--k", "2", "--mode", "ss", "--q", "2")
    assert status == 1
    assert "MISMATCH" in out


def test_census(capsys):
    status, out, _ = run(capsys, "census", "--n", "2", "--q", "2,3", "--format", "json")
    assert status == 0
    doc = json.loads(out)
    assert doc["allMatch"] is True
    assert len(doc["rows"]) == 6  # 3 types x 2 fields
    assert {row["actual"] for row in doc["rows"] if row["q"] == 3} == {"3", "2", "1"}


def test_divisibility_single_group(capsys):
    status, out, _ = run(capsys, "divisibility", "--group", "S3", "--format", "json")
    assert status == 0
    doc = json.loads(out)
    assert doc["allOk"] is True
    (group,) = doc["groups"]
    assert group["name"] == "S3" and group["order"] == 6
    assert group["cosetLemma"]["failures"] == []
    assert len(group["homReports"]) == 12  # k in 1..3 times four prime sets


def test_divisibility_flags(capsys):
    status, out, _ = run(
        capsys, "divisibility", "--group", "C6", "--k", "2", "--S", "3", "--n", "2", "--format", "json"
    )
    assert status == 0
    doc = json.loads(out)
    (group,) = doc["groups"]
    assert len(group["homReports"]) == 1
    assert group["homReports"][0]["S"] == [3]
    assert [row["n"] for row in group["frobenius"]] == [2]
    status, out, _ = run(capsys, "divisibility", "--group", "C6", "--S", "none", "--k", "1", "--format", "json")
    doc = json.loads(out)
    assert doc["groups"][0]["homReports"][0]["S"] == []


def test_divisibility_custom_corpus(capsys, tmp_path):
    path = tmp_path / "corpus.txt"
    path.write_text("C4 4 (1 2 3 4)\n", encoding="utf-8")
    status, out, _ = run(capsys, "divisibility", "--corpus", str(path), "--format", "json")
    assert status == 0
    doc = json.loads(out)
    assert [g["name"] for g in doc["groups"]] == ["C4"]


def test_usage_errors_exit_two(capsys):
    # both shapes at once
    status, _, err = run(capsys, "poly", "--n", "2", "--k", "2", "--g", "1")
    assert status == 2 and "error:" in err
    # --mode with --g
    status, _, err = run(capsys, "poly", "--n", "2", "--g", "1", "--mode", "ss")
    assert status == 2
    # bad q list
    status, _, err = run(capsys, "poly", "--n", "2", "--k", "2", "--q", "2,x")
    assert status == 2
    # non prime power
    status, _, err = run(capsys, "verify", "--n", "2", "--k", "2", "--mode", "ss", "--q", "6")
    assert status == 2
    # unknown corpus group
    status, _, err = run(capsys, "divisibility", "--group", "Nope")
    assert status == 2


def test_size_ceiling_and_override(capsys):
    status, _, err = run(capsys, "poly", "--n", "7", "--k", "2")
    assert status == 2 and "budget-override" in err
    status, _, _ = run(capsys, "poly", "--n", "7", "--k", "1", "--budget-override")
    assert status == 0


def test_scan_budget_exit_two(capsys):
    status, _, err = run(capsys, "verify", "--n", "3", "--k", "2", "--mode", "ss", "--q", "3")
    assert status == 2 and "pair tests" in err


def test_unsupported_field_exit_two(capsys):
    status, _, err = run(capsys, "verify", "--n", "2", "--k", "2", "--mode", "ss", "--q", "11")
    assert status == 2


def test_cache_file_round_trip(capsys, tmp_path):
    path = tmp_path / "weights.json"
    status, first, _ = run(capsys, "poly", "--n", "2", "--k", "3", "--cache", str(path), "--format", "json")
    assert status == 0
    assert path.exists()
    status, second, _ = run(capsys, "poly", "--n", "2", "--k", "3", "--cache", str(path), "--format", "json")
    assert status == 0
    assert first == second
    # and identical to a cacheless run
    _, bare, _ = run(capsys, "poly", "--n", "2", "--k", "3", "--format", "json")
    assert bare == first


def test_cache_env_override(capsys, tmp_path, monkeypatch):
    env_path = tmp_path / "env-cache.json"
    flag_path = tmp_path / "flag-cache.json"
    monkeypatch.setenv("MONODROMY_CACHE", str(env_path))
    status, _, _ = run(capsys, "poly", "--n", "2", "--k", "2", "--cache", str(flag_path))
    assert status == 0
    assert env_path.exists()
    assert not flag_path.exists()


def test_corrupt_cache_exit_two(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{not json", encoding="utf-8")
    status, _, err = run(capsys, "poly", "--n", "2", "--k", "2", "--cache", str(path))
    assert status == 2


def test_entry_raises_system_exit(capsys, monkeypatch):
    monkeypatch.setattr("sys.argv", ["monodromy", "poly", "--n", "1", "--k", "1"])
    with pytest.raises(SystemExit) as exc:
        cli.entry()
    assert exc.value.code == 0
