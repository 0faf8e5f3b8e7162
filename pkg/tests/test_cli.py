import json

import pytest

from letterkit import from_graph6, is_isomorphic, matching, path, stacked_path, to_graph6
from letterkit.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_gen_stacked_graph6(capsys):
    code, out, _ = run(capsys, "gen", "--family", "stacked", "--n", "2", "--g6")
    assert code == 0
    g = from_graph6(out.strip())
    assert g.n == 8 and g.edge_count() == 14


def test_gen_json_includes_labels(capsys):
    code, out, _ = run(capsys, "gen", "--family", "stacked", "--n", "1",
                       "--json")
    obj = json.loads(out)
    assert code == 0 and obj["n"] == 4
    assert obj["labels"][0] == ["s", 1, 1]


def test_gen_threshold_sequence(capsys):
    code, out, _ = run(capsys, "gen", "--family", "threshold", "--seq", "iid")
    assert code == 0
    assert is_isomorphic(from_graph6(out.strip()), path(3))


def test_gen_dot(capsys):
    code, out, _ = run(capsys, "gen", "--family", "matching", "--n", "1",
                       "--dot")
    assert code == 0 and "0 -- 1;" in out


def test_decode(capsys):
    code, out, _ = run(capsys, "decode", "--decoder", "ba",
                       "--word", "baba")
    assert code == 0
    assert is_isomorphic(from_graph6(out.strip()), path(4))


def test_lettericity_file_and_stdin(tmp_path, capsys, monkeypatch):
    f = tmp_path / "m3.g6"
    f.write_text(to_graph6(matching(3)) + "\n")
    code, out, _ = run(capsys, "lettericity", str(f))
    assert code == 0 and out.strip() == "3"
    import io
    monkeypatch.setattr("sys.stdin", io.StringIO(to_graph6(matching(2))))
    code, out, _ = run(capsys, "lettericity", "-")
    assert code == 0 and out.strip() == "2"


def test_lettericity_json_roundtrips(tmp_path, capsys):
    f = tmp_path / "p4.g6"
    f.write_text(to_graph6(path(4)))
    code, out, _ = run(capsys, "lettericity", str(f), "--json")
    obj = json.loads(out)
    assert code == 0 and obj["lettericity"] == 2
    from letterkit import lettering_from_json, verify
    lett = lettering_from_json(json.dumps(obj["lettering"]))
    assert verify(path(4), lett)


def test_single_k_check_with_classes(tmp_path, capsys):
    g, labels = stacked_path(2)
    f = tmp_path / "r2.g6"
    f.write_text(to_graph6(g))
    classes = tmp_path / "classes.json"
    classes.write_text(json.dumps([
        [labels.id_of("s", 1, 1), labels.id_of("s", 2, 1)],
        [labels.id_of("c", 1, 1), labels.id_of("c", 2, 1)],
        [labels.id_of("c", 1, 2), labels.id_of("c", 2, 2)],
        [labels.id_of("s", 1, 2), labels.id_of("s", 2, 2)],
    ]))
    code, out, _ = run(capsys, "lettericity", str(f), "--max-k", "4",
                       "--classes", str(classes))
    obj = json.loads(out)
    assert code == 0 and obj["outcome"] == "exhausted"


def test_decompose(tmp_path, capsys):
    f = tmp_path / "m2.g6"
    f.write_text(to_graph6(matching(2)))
    code, out, _ = run(capsys, "decompose", str(f))
    obj = json.loads(out)
    assert code == 0 and obj["modules"] == [[0, 1], [2, 3]]
    code, out, _ = run(capsys, "decompose", str(f), "--tree")
    assert code == 0 and json.loads(out)["n"] == 4


def test_profile(tmp_path, capsys):
    f = tmp_path / "m2.g6"
    f.write_text(to_graph6(matching(2)))
    code, out, _ = run(capsys, "profile", str(f), "--m", "2")
    obj = json.loads(out)
    assert code == 0
    assert (obj["p"], obj["q"], obj["r"]) == (3, 2, 1)
    assert "f_paper" in obj and "F_impl" in obj


def test_compose_cli(tmp_path, capsys):
    f = tmp_path / "m2.g6"
    f.write_text(to_graph6(matching(2)))
    code, out, _ = run(capsys, "compose", str(f), "--verify", "--json")
    obj = json.loads(out)
    assert code == 0 and obj["alphabet_size"] == 2


def test_verify_paper_fast_suites(capsys):
    code, out, _ = run(capsys, "verify-paper", "--suite", "prop41,dualities")
    assert code == 0
    lines = [json.loads(line) for line in out.strip().splitlines()]
    assert [entry["check"] for entry in lines] == ["dualities", "prop41"]
    assert all(entry["status"] == "pass" for entry in lines)


def test_verify_paper_unknown_suite(capsys):
    code, _, err = run(capsys, "verify-paper", "--suite", "nope")
    assert code == 2 and "unknown suite" in err


def test_verify_paper_budget_exhaustion(capsys):
    code, out, _ = run(capsys, "verify-paper", "--suite", "prop43",
                       "--budget", "1e-9")
    assert code == 1
    entry = json.loads(out.strip().splitlines()[-1])
    assert entry["status"] == "budget-exhausted"


def test_usage_error_exit_code(capsys):
    assert run(capsys, "lettericity", "/nonexistent/file.g6")[0] == 2
    assert main(["gen", "--family", "nope"]) == 2


def test_malformed_graph6(tmp_path, capsys):
    f = tmp_path / "bad.g6"
    f.write_text("B")
    code, _, err = run(capsys, "lettericity", str(f))
    assert code == 2 and "error" in err
