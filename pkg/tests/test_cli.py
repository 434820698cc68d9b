from __future__ import annotations

import json

import pytest

from cosetlab.cli import main
from cosetlab.report import strip_volatile, validate_report

NONASSOC_LOOP = [
    [0, 1, 2, 3, 4],
    [1, 0, 3, 4, 2],
    [2, 4, 0, 1, 3],
    [3, 2, 4, 0, 1],
    [4, 3, 1, 2, 0],
]


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_catalog_lists_groups(capsys, tmp_path):
    code, out, err = run(capsys, "catalog", "--cache-dir", str(tmp_path))
    assert code == 0
    lines = out.splitlines()
    assert lines[0].split() == ["name", "order", "subgroups"]
    rows = {parts[0]: parts[1:] for parts in (ln.split() for ln in lines[1:])}
    assert rows["S4"] == ["24", "30"]
    assert rows["Q8"] == ["8", "6"]
    assert rows["S5"] == ["120", "156"]


def test_verify_s4_clean(capsys, tmp_path):
    code, out, err = run(
        capsys, "verify", "--group", "S4", "--cache-dir", str(tmp_path)
    )
    assert code == 0
    doc = json.loads(out)
    validate_report(doc)
    assert doc["group"] == {
        "label": "S4",
        "order": 24,
        "spec_hash": doc["group"]["spec_hash"],
        "subgroup_count": 30,
    }
    ks = [v["k"] for v in doc["verifications"]]
    assert ks == [2, 3, 4]
    assert all(v["status"] == "confirmed" for v in doc["verifications"])
    assert "confirmed" in err


def test_verify_k_flag_single_value(capsys, tmp_path):
    code, out, _ = run(
        capsys, "verify", "--group", "C6", "--k", "3", "--cache-dir", str(tmp_path)
    )
    assert code == 0
    doc = json.loads(out)
    assert [v["k"] for v in doc["verifications"]] == [3]
    assert doc["config"]["k_min"] == doc["config"]["k_max"] == 3


def test_verify_k_flag_open_range_note(capsys, tmp_path):
    code, out, _ = run(
        capsys, "verify", "--group", "C6", "--k", "5..6", "--cache-dir", str(tmp_path)
    )
    assert code == 0
    doc = json.loads(out)
    assert all("note" in v for v in doc["verifications"])
    validate_report(doc)


def test_bad_k_flag_exits_2(capsys, tmp_path):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--group", "C6", "--k", "7..9"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--group", "C6", "--k", "x"])
    assert exc.value.code == 2


def test_clique_cap_exits_3(capsys, tmp_path):
    code, out, err = run(
        capsys,
        "verify", "--group", "A5", "--max-cliques", "1", "--cache-dir", str(tmp_path),
    )
    assert code == 3
    assert "resource limit" in err


def test_unknown_group_exits_2(capsys, tmp_path):
    code, _, err = run(
        capsys, "verify", "--group", "NoSuchThing", "--cache-dir", str(tmp_path)
    )
    assert code == 2
    assert "error:" in err


def test_malformed_json_spec_exits_2(capsys, tmp_path):
    p = tmp_path / "broken.json"
    p.write_text("{ nope")
    code, _, err = run(capsys, "verify", "--group", str(p), "--cache-dir", str(tmp_path))
    assert code == 2
    assert "unreadable" in err


def test_invalid_spec_fields_exit_2(capsys, tmp_path):
    p = tmp_path / "fields.json"
    p.write_text(json.dumps({"format": "groupspec-v1", "kind": "cayley", "order": 2}))
    code, _, err = run(capsys, "verify", "--group", str(p), "--cache-dir", str(tmp_path))
    assert code == 2


def test_nongroup_table_exits_2(capsys, tmp_path):
    p = tmp_path / "loop.json"
    p.write_text(
        json.dumps(
            {"format": "groupspec-v1", "kind": "cayley", "order": 5, "table": NONASSOC_LOOP}
        )
    )
    code, _, err = run(capsys, "verify", "--group", str(p), "--cache-dir", str(tmp_path))
    assert code == 2


def test_spec_file_group_works(capsys, tmp_path):
    table = [[(i + j) % 4 for j in range(4)] for i in range(4)]
    p = tmp_path / "c4.json"
    p.write_text(
        json.dumps({"format": "groupspec-v1", "kind": "cayley", "order": 4, "table": table})
    )
    code, out, _ = run(capsys, "subgroups", "--group", str(p), "--cache-dir", str(tmp_path))
    assert code == 0
    doc = json.loads(out)
    assert len(doc["subgroups"]) == 3


def test_family_string_beyond_catalog(capsys, tmp_path):
    code, out, _ = run(capsys, "subgroups", "--group", "C30", "--cache-dir", str(tmp_path))
    assert code == 0
    doc = json.loads(out)
    assert doc["group"]["order"] == 30
    assert len(doc["subgroups"]) == 8  # divisors of 30


def test_census_c6(capsys, tmp_path):
    code, out, err = run(capsys, "census", "--group", "C6", "--cache-dir", str(tmp_path))
    assert code == 0
    doc = json.loads(out)
    validate_report(doc)
    assert len(doc["census"]) == 20  # C(4+2, 3) subgroup multisets
    assert all(e["enumerated"] for e in doc["census"])


def test_census_cap_exits_3(capsys, tmp_path):
    code, _, err = run(
        capsys,
        "census", "--group", "C6", "--max-census", "5", "--cache-dir", str(tmp_path),
    )
    assert code == 3
    assert "exceed" in err


def test_subgroups_q8(capsys, tmp_path):
    code, out, _ = run(capsys, "subgroups", "--group", "Q8", "--cache-dir", str(tmp_path))
    assert code == 0
    doc = json.loads(out)
    validate_report(doc)
    assert doc["subgroups"][0] == [0]
    assert len(doc["subgroups"]) == 6


def test_lemmas_c12(capsys, tmp_path):
    code, out, err = run(capsys, "lemmas", "--group", "C12", "--cache-dir", str(tmp_path))
    assert code == 0
    doc = json.loads(out)
    validate_report(doc)
    assert doc["lemmas"]["failures"] == 0
    assert "0 failures" in err


def test_report_flag_writes_file(capsys, tmp_path):
    target = tmp_path / "out.json"
    code, out, err = run(
        capsys,
        "verify", "--group", "C6", "--cache-dir", str(tmp_path),
        "--report", str(target),
    )
    assert code == 0
    assert out == ""
    assert str(target) in err
    doc = json.loads(target.read_text())
    validate_report(doc)
    assert doc["runtime"]["report_path"] == str(target)


def test_reports_identical_across_cache_and_jobs(capsys, tmp_path):
    def stripped(*argv):
        code, out, _ = run(capsys, *argv)
        assert code == 0
        return strip_volatile(json.loads(out))

    base = ["verify", "--group", "S3xC2", "--cache-dir", str(tmp_path)]
    cold = stripped(*base)
    warm = stripped(*base)
    jobs4 = stripped(*base, "--jobs", "4")
    assert cold == warm == jobs4
