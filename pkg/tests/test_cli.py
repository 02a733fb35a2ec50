import json

from minrep.cli import emit_table, main


def run(capsys, *args):
    code = main(list(args))
    return code, capsys.readouterr().out


def test_sl2_suite_passes(capsys):
    code, out = run(capsys, "verify", "--suite", "sl2", "--rank", "2", "--max-degree", "6", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["pass"]
    assert data["schema"] == "minrep-report/1"
    assert {"name", "expected", "computed", "residual", "pass"} <= set(data["checks"][0])


def test_norms_suite_rank_one(capsys):
    code, out = run(capsys, "verify", "--suite", "norms", "--rank", "1", "--max-m", "5")
    data = json.loads(out)
    assert code == 0
    c5 = [c for c in data["checks"] if c["name"] == "norms/c_5 (r=1)"][0]
    assert c5["computed"] == "1/3628800" and c5["pass"]


def test_failing_suite_exit_code(capsys):
    code, out = run(capsys, "verify", "--suite", "schrodinger", "--rank", "2", "--max-degree", "3")
    data = json.loads(out)
    assert code == 1 and not data["pass"]
    assert any(f["finding"] == "l2-skew" for f in data["findings"])


def test_usage_errors(capsys):
    assert main(["verify", "--suite", "nope"]) == 2
    assert main(["verify", "--suite", "sl2", "--rank", "0"]) == 2
    assert main(["verify", "--suite", "sl2-golden", "--rank", "2"]) == 2
    assert main([]) == 2


def test_determinism(tmp_path):
    paths = [tmp_path / "a.json", tmp_path / "b.json"]
    for p in paths:
        main(["verify", "--suite", "norms", "--rank", "2", "--max-m", "2", "--mc-samples", "20000",
              "--out", str(p)])
    a, b = (json.loads(p.read_text()) for p in paths)
    a.pop("wall_time"), b.pop("wall_time")
    assert a == b


def test_markdown(capsys):
    code, out = run(capsys, "verify", "--suite", "fock-weight", "--rank", "1", "--format", "markdown")
    assert code == 0 and out.startswith("# minrep report: fock-weight")
    assert "fock-normalization" in out


def test_table(capsys):
    assert main(["table"]) == 0
    out = capsys.readouterr().out
    assert "so*(4r)" in out and "e7(-25)" in out and "sl(2,C)" in out
    assert emit_table() == out
