"""Exit codes, output shapes, and determinism of the command line."""

import json

import pytest

from logictop.cli import run_cli
from logictop.corpus import l3, l22, sierpinski, v_frame
from logictop.documents import Document, emit_document
from logictop.duality import LogicMap, PointMap


@pytest.fixture()
def docs(tmp_path):
    """A directory of ready-made documents, one per interesting case."""
    files = {
        "l3.json": Document("logic", l3()),
        "l22.json": Document("logic", l22()),
        "v.json": Document("poset", v_frame()),
        "sierpinski.json": Document("space", sierpinski()),
        "bad_map.json": Document("logic_map", LogicMap(l22(), l22(), (0, 2, 0, 3))),
        "id_map.json": Document("logic_map", LogicMap(l22(), l22(), (0, 1, 2, 3))),
        "swap_points.json": Document("point_map", PointMap(sierpinski(), sierpinski(), (1, 0))),
    }
    for name, doc in files.items():
        (tmp_path / name).write_text(emit_document(doc), encoding="utf-8")
    (tmp_path / "broken.json").write_text('{"kind": bogus}', encoding="utf-8")
    (tmp_path / "noconn.json").write_text(
        '{"kind": "logic", "exprs": ["a", "b"], "theories": [[0], [0, 1]]}',
        encoding="utf-8",
    )
    return tmp_path


def test_classify_worked_logic(docs, capsys):
    code = run_cli(["classify", "--input", str(docs / "l3.json")])
    out = capsys.readouterr().out
    assert code == 0
    assert out.splitlines()[0] == "class: intuitionistic"


def test_classify_json_format(docs, capsys):
    code = run_cli(["classify", "--input", str(docs / "l3.json"), "--format", "json"])
    assert code == 0
    obj = json.loads(capsys.readouterr().out)
    assert obj["classification"] == "intuitionistic"


def test_spectrum_lists_primes(docs, capsys):
    code = run_cli(["spectrum", "--input", str(docs / "l22.json")])
    out = capsys.readouterr().out
    assert code == 0
    assert "primes: {a,top} {b,top}" in out


def test_space_emits_a_space_document(docs, capsys):
    code = run_cli(["space", "--input", str(docs / "l3.json")])
    assert code == 0
    obj = json.loads(capsys.readouterr().out)
    assert obj["kind"] == "space"
    assert obj["basis"] == [[], [1], [0, 1]]


def test_dualize_space_to_logic(docs, capsys):
    code = run_cli(["dualize", "--input", str(docs / "sierpinski.json")])
    assert code == 0
    obj = json.loads(capsys.readouterr().out)
    assert obj["kind"] == "logic"
    assert obj["theories"] == [[1, 2], [2]]


def test_roundtrip_reports_iso(docs, capsys):
    code = run_cli(["roundtrip", "--input", str(docs / "l22.json")])
    out = capsys.readouterr().out
    assert code == 0
    assert "iso_ok: true" in out


def test_roundtrip_accepts_a_map_document(docs, capsys):
    code = run_cli(["roundtrip", "--input", str(docs / "id_map.json")])
    assert code == 0
    assert "square_ok: true" in capsys.readouterr().out


def test_check_map_fails_on_unstable_map(docs, capsys):
    code = run_cli(["check-map", "--input", str(docs / "bad_map.json")])
    out = capsys.readouterr().out
    assert code == 1
    assert "is_stable: false" in out
    assert "witness is_stable: {1,3}" in out
    assert "stable_iff_disjunction: true" in out


def test_check_map_passes_on_identity(docs, capsys):
    code = run_cli(["check-map", "--input", str(docs / "id_map.json")])
    assert code == 0
    assert "is_isomorphism: true" in capsys.readouterr().out


def test_check_map_on_point_maps(docs, capsys):
    code = run_cli(["check-map", "--input", str(docs / "swap_points.json")])
    out = capsys.readouterr().out
    assert code == 1
    assert "is_spectral_map: false" in out


def test_godel_witness_text(docs, capsys):
    code = run_cli(["godel-witness", "--input", str(docs / "v.json")])
    out = capsys.readouterr().out
    assert code == 0
    assert "witness: p={b} q={c} lhs={r,b,c} rhs={b,c}" in out


def test_export_dot(docs, capsys):
    code = run_cli(["export-dot", "--input", str(docs / "v.json")])
    out = capsys.readouterr().out
    assert code == 0
    assert '"r" -> "b";' in out


def test_output_file_writing(docs, tmp_path):
    target = tmp_path / "out.txt"
    code = run_cli(["classify", "--input", str(docs / "l3.json"), "--output", str(target)])
    assert code == 0
    assert target.read_text(encoding="utf-8").startswith("class: intuitionistic")


def test_stdin_input(docs, capsys, monkeypatch):
    import io

    monkeypatch.setattr("sys.stdin", io.StringIO((docs / "l3.json").read_text(encoding="utf-8")))
    code = run_cli(["classify"])
    assert code == 0
    assert "class: intuitionistic" in capsys.readouterr().out


def test_parse_error_exits_2(docs, capsys):
    code = run_cli(["classify", "--input", str(docs / "broken.json")])
    assert code == 2
    assert "error:" in capsys.readouterr().err


def test_wrong_kind_exits_2(docs, capsys):
    code = run_cli(["classify", "--input", str(docs / "v.json")])
    assert code == 2
    assert "expects a logic document" in capsys.readouterr().err


def test_missing_file_exits_2(docs, capsys):
    code = run_cli(["classify", "--input", str(docs / "nope.json")])
    assert code == 2


def test_usage_error_exits_2(capsys):
    assert run_cli(["no-such-command"]) == 2
    assert run_cli([]) == 2


def test_domain_error_exits_1(docs, capsys):
    code = run_cli(["space", "--input", str(docs / "noconn.json")])
    assert code == 1
    assert "error:" in capsys.readouterr().err


def test_corpus_small_run(capsys):
    code = run_cli(["corpus", "--max-points", "2"])
    out = capsys.readouterr().out
    assert code == 0
    lines = [l for l in out.splitlines() if l.startswith("criterion")]
    assert len(lines) == 11
    assert all(": pass" in l for l in lines)


def test_corpus_deterministic_across_jobs(capsys, monkeypatch):
    run_cli(["corpus", "--max-points", "2", "--jobs", "1"])
    sequential = capsys.readouterr().out
    monkeypatch.setenv("WORKBENCH_JOBS", "3")
    run_cli(["corpus", "--max-points", "2"])
    parallel = capsys.readouterr().out
    assert sequential == parallel


def test_corpus_json_format(capsys):
    code = run_cli(["corpus", "--max-points", "2", "--format", "json"])
    assert code == 0
    results = json.loads(capsys.readouterr().out)
    assert [r["number"] for r in results] == list(range(1, 12))
    assert all(r["passed"] for r in results)
