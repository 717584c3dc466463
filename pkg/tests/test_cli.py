import json

import pytest

from rectindex.cli import default_widths, main


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, body in {
        "text": "abab\nbaba\nabab\n",
        "pat": "ab\nba\n",
        "big": "ababa\nababa\n",
        "ragged": "ab\nb\n",
        "one": "x\n",
    }.items():
        paths[name] = tmp_path / f"{name}.grid"
        paths[name].write_text(body)
    return {k: str(v) for k, v in paths.items()}


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_query_tsv(files, capsys):
    code, out, _ = run(capsys, "query", files["text"], files["pat"])
    assert code == 0
    assert out == "1\t1\n1\t3\n2\t2\n"


def test_query_json(files, capsys):
    code, out, _ = run(capsys, "query", files["text"], files["pat"], "--format", "json")
    assert code == 0
    assert json.loads(out) == [{"row": 1, "col": 1}, {"row": 1, "col": 3}, {"row": 2, "col": 2}]


def test_query_self_and_oversize(files, capsys):
    assert run(capsys, "query", files["text"], files["text"])[1] == "1\t1\n"
    code, out, _ = run(capsys, "query", files["text"], files["big"])
    assert code == 0 and out == ""


def test_io_and_format_errors(files, capsys):
    code, out, err = run(capsys, "query", files["text"], files["ragged"])
    assert code == 2 and out == "" and "ragged" in err
    code, _, err = run(capsys, "query", files["text"] + ".missing", files["pat"])
    assert code == 2 and "cannot read" in err


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["nonsense"])
    assert exc.value.code == 1
    with pytest.raises(SystemExit) as exc:
        main(["query"])
    assert exc.value.code == 1
    assert main(["verify", "--random", "2", "2", "2", "--patterns", "-1"]) == 1


def test_verify_random(capsys):
    code, out, _ = run(capsys, "verify", "--random", "16", "16", "2", "--patterns", "100", "--seed", "7")
    assert code == 0 and out == "100/100 ok\n"
    assert run(capsys, "verify", "--random", "16", "16", "2", "--patterns", "100", "--seed", "7")[1] == out


def test_verify_single_cell(files, capsys):
    code, out, _ = run(capsys, "verify", files["one"], "--patterns", "5")
    assert code == 0 and out == "5/5 ok\n"


def test_verify_needs_text(capsys):
    assert run(capsys, "verify")[0] == 2


def test_verify_reports_mismatch(monkeypatch, capsys):
    from rectindex import cli

    monkeypatch.setattr(cli, "naive_search_2d", lambda text, pattern: [])
    code, out, err = run(capsys, "verify", "--random", "4", "4", "2", "--patterns", "4", "--seed", "1")
    assert code == 3
    assert out.endswith("ok\n") and "mismatch at sample 0 (seed 1)" in err


def test_bench(capsys):
    code, out, _ = run(capsys, "bench", "--random", "16", "16", "3", "--patterns", "3", "--widths", "1", "4", "99")
    assert code == 0
    head, table = out.split("\n\n")
    metrics = dict(line.split("\t") for line in head.splitlines()[1:])
    assert int(metrics["space_total"]) > 0 and float(metrics["build_seconds"]) > 0
    rows = [line.split("\t") for line in table.splitlines()[1:]]
    assert [r[0] for r in rows] == ["1", "4"]


def test_default_widths():
    assert default_widths(256, 16) == [1, 2, 8, 9, 16]
    assert default_widths(1, 1) == [1]
