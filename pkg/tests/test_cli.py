"""
Tests for the command-line entry point and its exit codes.
"""
import pytest

from main import EXIT_IO, EXIT_OK, EXIT_USAGE, EXIT_VERIFY_FAILED, main
from unruh.exceptions import ConsistencyError, ConvergenceError


def test_eval_at_rest(capsys):
    assert main(["eval", "0", "0"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "pi_corrected" in out
    assert "delta_pi" in out


def test_eval_corner_prints_full_precision(capsys):
    assert main(["eval", "0.7853981633974483", "0.7853981633974483"]) == EXIT_OK
    assert "0.39038820320" in capsys.readouterr().out


def test_eval_out_of_range_is_usage_error():
    with pytest.raises(SystemExit) as info:
        main(["eval", "1.0", "0"])
    assert info.value.code == EXIT_USAGE


@pytest.mark.parametrize("error", [ConsistencyError, ConvergenceError])
def test_eval_numeric_failure_exit_code(monkeypatch, capsys, error):
    def failing(p):
        raise error("negativity formulations disagree")

    monkeypatch.setattr("main.build_report", failing)
    assert main(["eval", "0.3", "0.5"]) == EXIT_VERIFY_FAILED
    err = capsys.readouterr().err
    assert err.startswith("ERROR: consistency check failed")
    assert "Traceback" not in err


def test_single(capsys):
    assert main(["single", "0.7853981633974483"]) == EXIT_OK
    assert "n_ci" in capsys.readouterr().out


def test_sweep_writes_file(tmp_path):
    out = tmp_path / "sweep.csv"
    assert main(["sweep", "--grid", "2", "--quantities", "deltas", "--out", str(out)]) == EXIT_OK
    assert len(out.read_text().splitlines()) == 2 + 4


def test_sweep_unknown_quantity_is_usage_error(tmp_path, capsys):
    with pytest.raises(SystemExit) as info:
        main(["sweep", "--grid", "2", "--quantities", "corected", "--out", str(tmp_path / "x.csv")])
    assert info.value.code == EXIT_USAGE
    assert "Did you mean" in capsys.readouterr().err


def test_sweep_bad_grid_is_usage_error(tmp_path):
    with pytest.raises(SystemExit) as info:
        main(["sweep", "--grid", "1", "--out", str(tmp_path / "x.csv")])
    assert info.value.code == EXIT_USAGE


def test_sweep_unwritable_path_is_io_error(tmp_path):
    out = tmp_path / "no" / "such" / "dir.csv"
    assert main(["sweep", "--grid", "2", "--out", str(out)]) == EXIT_IO


def test_verify(capsys):
    assert main(["verify", "--grid", "3"]) == EXIT_OK
    assert "All suites passed." in capsys.readouterr().out


def test_verify_failure_exit_code(monkeypatch, capsys):
    import unruh.verify as verify

    real = verify.run_verify

    def broken(grid_n):
        return real(grid_n, corrected=lambda p, v: 0.0)

    monkeypatch.setattr("main.run_verify", broken)
    assert main(["verify", "--grid", "3"]) == EXIT_VERIFY_FAILED
    assert "FIRST FAILURE" in capsys.readouterr().out


def test_verify_bad_grid():
    with pytest.raises(SystemExit) as info:
        main(["verify", "--grid", "1"])
    assert info.value.code == EXIT_USAGE
