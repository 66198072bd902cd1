import pytest

from ncgb.cli import main

from conftest import BRAIDED_TEXT, COMPLETED_BRAIDED_TEXT


@pytest.fixture
def braided_file(tmp_path):
    path = tmp_path / "braided.txt"
    path.write_text(BRAIDED_TEXT)
    return str(path)


@pytest.fixture
def completed_file(tmp_path):
    path = tmp_path / "completed.txt"
    path.write_text(COMPLETED_BRAIDED_TEXT)
    return str(path)


def test_complete_braided(braided_file, capsys):
    assert main(["complete", braided_file]) == 0
    out = capsys.readouterr().out
    assert "y.x.y -> x.x" in out
    assert "y.x.x -> x.x.z" in out
    assert "y.x.x.x -> x.x.x.y" in out
    assert "status: converged" in out
    assert "iterations: 3" in out


def test_complete_output_is_reparsable(braided_file, tmp_path, capsys):
    main(["complete", braided_file])
    out = capsys.readouterr().out
    rules_text = out[: out.index("status:")]
    again = tmp_path / "again.txt"
    again.write_text(rules_text)
    assert main(["check", str(again)]) == 0


def test_complete_cap_exit_code(braided_file, capsys):
    assert main(["complete", braided_file, "--max-iter", "1"]) == 1
    assert "status: iteration_cap" in capsys.readouterr().out
    assert main(["complete", braided_file, "--max-deg", "2"]) == 1
    assert "status: degree_cap" in capsys.readouterr().out


def test_complete_trace(braided_file, tmp_path, capsys):
    trace = tmp_path / "trace.txt"
    assert main(["complete", braided_file, "--trace", str(trace)]) == 0
    text = trace.read_text()
    assert "step 0" in text and "step 2" in text
    assert "(y.z.x, (1, 0), (0, 1))" in text
    assert "(y.x.y.z, (2, 0), (0, 1))" in text
    assert "(y.x.y.x.y, (2, 0), (0, 2))" in text
    assert "y.x.y -> x.x" in text
    assert "y.x.x -> x.x.z" in text
    assert "y.x.x.x -> x.x.x.y" in text
    assert "(identity)" in text


def test_check(braided_file, completed_file, capsys):
    assert main(["check", braided_file]) == 1
    out = capsys.readouterr().out
    assert "not confluent" in out
    assert "UNSOLVABLE" in out
    assert "SP = y.x.y - x.x" in out
    assert main(["check", completed_file]) == 0
    out = capsys.readouterr().out
    assert out.strip().endswith("confluent")
    assert "UNSOLVABLE" not in out


def test_reduce(completed_file, braided_file, capsys):
    assert main(["reduce", completed_file, "y.z.x"]) == 0
    assert capsys.readouterr().out.strip() == "x.x"
    assert main(["reduce", completed_file, "y.x.y.x.y - x.x.x.y"]) == 0
    assert capsys.readouterr().out.strip() == "0"
    assert main(["reduce", braided_file, "y.x.y"]) == 0
    assert capsys.readouterr().out.strip() == "y.x.y"


def test_branchings(braided_file, completed_file, capsys):
    assert main(["branchings", braided_file]) == 0
    out = capsys.readouterr().out.strip().splitlines()
    assert out == ["(y.z.x, (1, 0), (0, 1)): SP = y.x.y - x.x"]
    assert main(["branchings", completed_file]) == 0
    assert len(capsys.readouterr().out.strip().splitlines()) == 6


def test_oracle(braided_file, capsys):
    assert main(["oracle", braided_file]) == 0
    assert "AGREE" in capsys.readouterr().out


def test_parse_error_exit_code(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("alphabet: x\norder: deglex\nrules:\nx.x - x\n")
    assert main(["check", str(bad)]) == 2
    assert "line 4" in capsys.readouterr().err


def test_missing_file_exit_code(tmp_path, capsys):
    assert main(["check", str(tmp_path / "nope.txt")]) == 2
    assert "error" in capsys.readouterr().err


def test_usage_error():
    with pytest.raises(SystemExit):
        main([])
