"""CLI contract tests: argument parsing, exit codes, formats, caching.

Commands run in-process through main(argv) with captured stdout; one
subprocess test covers the installed console entry point.
"""

import json
import subprocess
import sys

import pytest

from schubert.cli import (
    EXIT_DOMAIN,
    EXIT_OK,
    EXIT_PARSE,
    EXIT_RESOURCE,
    JobSpec,
    main,
)


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run_cli(capsys, *argv)
    assert code == EXIT_OK, err
    return json.loads(out)


# -- the three contract examples ----------------------------------------------


def test_enumerate_f4_p1(capsys):
    obj = run_json(capsys, "enumerate", "F4", "--K", "1")
    assert obj["count"] == 24
    assert obj["lie_type"] == "F4"
    assert obj["K"] == [1]
    assert {"r": 3, "i": 1, "word": [3, 2, 1]} in obj["elements"]


def test_multiply_omega_cubed(capsys):
    obj = run_json(capsys, "multiply", "F4", "--K", "1", "w1", "w1", "w1")
    assert obj["terms"] == [{"r": 3, "i": 1, "word": [3, 2, 1], "coeff": 2}]


def test_presentation_su3_full_flag(capsys):
    obj = run_json(capsys, "presentation", "A2", "--K", "1,2")
    assert len(obj["generators"]) == 2
    assert sorted(obj["relation_degrees"]) == [2, 3]


# -- class addressing ----------------------------------------------------------


def test_class_addressing_equivalences(capsys):
    by_word = run_json(capsys, "multiply", "F4", "--K", "1", "2,1", "1")
    by_pair = run_json(capsys, "multiply", "F4", "--K", "1", "2.1", "w1")
    assert by_word["terms"] == by_pair["terms"]


def test_threads_do_not_change_results(capsys):
    seq = run_json(capsys, "multiply", "F4", "--K", "1", "3,2,1", "4,3,2,1")
    par = run_json(
        capsys, "multiply", "F4", "--K", "1", "3,2,1", "4,3,2,1", "--threads", "4"
    )
    assert seq == par


# -- exit codes -----------------------------------------------------------------


@pytest.mark.parametrize(
    "argv",
    [
        ["multiply", "F4", "--K", "1", "zz"],  # unparseable class token
        ["multiply", "F4", "--K", "1"],  # no classes
        ["nonsense", "F4"],  # unknown command
        ["enumerate", "Q9"],  # unknown Lie type
        ["giambelli", "F4", "--K", "1"],  # missing --degree
        ["gysin", "F4", "--K", "1,2", "--degree", "6"],  # K not a single node
        ["enumerate", "F4", "--K", "1", "--threads", "0"],
    ],
)
def test_parse_errors_exit_1(capsys, argv):
    code, _, _ = run_cli(capsys, *argv)
    assert code == EXIT_PARSE


@pytest.mark.parametrize(
    "argv",
    [
        ["enumerate", "F4", "--K", "9"],  # node outside 1..4
        ["multiply", "F4", "--K", "1", "5,2,1"],  # letter outside 1..4
        ["multiply", "F4", "--K", "1", "1,2"],  # not a minimal representative
        ["multiply", "F4", "--K", "1", "9.9"],  # no such class
        ["multiply", "A2", "--K", "1", "w2"],  # class of the wrong parabolic
    ],
)
def test_domain_errors_exit_2(capsys, argv):
    code, _, err = run_cli(capsys, *argv)
    assert code == EXIT_DOMAIN
    assert "domain error" in err


def test_resource_cap_exits_3(capsys):
    code, _, err = run_cli(capsys, "enumerate", "E6", "--max-elements", "10")
    assert code == EXIT_RESOURCE
    assert "resource limit" in err


# -- caching --------------------------------------------------------------------


def test_cache_round_trip_byte_identical(capsys, tmp_path):
    code1, out1, _ = run_cli(
        capsys, "enumerate", "F4", "--K", "1", "--cache-dir", str(tmp_path)
    )
    assert code1 == EXIT_OK
    assert (tmp_path / "F4-K1.table").exists()
    code2, out2, _ = run_cli(
        capsys, "enumerate", "F4", "--K", "1", "--cache-dir", str(tmp_path)
    )
    assert code2 == EXIT_OK
    assert out1 == out2  # byte-identical JSON after the cache round-trip
    fresh = json.loads(out1)
    cached = json.loads(out2)
    assert fresh == cached


def test_cache_env_var(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("SCHUBERT_CACHE_DIR", str(tmp_path))
    _, out1, _ = run_cli(capsys, "enumerate", "B3", "--K", "3")
    assert (tmp_path / "B3-K3.table").exists()
    _, out2, _ = run_cli(capsys, "enumerate", "B3", "--K", "3")
    assert out1 == out2


def test_cache_content_mismatch_is_domain_error(capsys, tmp_path):
    run_cli(capsys, "enumerate", "A2", "--K", "1", "--cache-dir", str(tmp_path))
    (tmp_path / "A2-K2.table").write_bytes((tmp_path / "A2-K1.table").read_bytes())
    code, _, err = run_cli(
        capsys, "enumerate", "A2", "--K", "2", "--cache-dir", str(tmp_path)
    )
    assert code == EXIT_DOMAIN
    assert "cache file" in err


def test_multiply_uses_cache(capsys, tmp_path):
    run_cli(capsys, "enumerate", "F4", "--K", "1", "--cache-dir", str(tmp_path))
    obj = run_json(
        capsys, "multiply", "F4", "--K", "1", "w1", "w1", "w1",
        "--cache-dir", str(tmp_path),
    )
    assert obj["terms"][0]["coeff"] == 2


# -- output formats --------------------------------------------------------------


def test_table_and_text_formats(capsys):
    code, out, _ = run_cli(capsys, "enumerate", "A2", "--K", "1", "--format", "table")
    assert code == EXIT_OK
    assert out.splitlines()[0].split() == ["r", "i", "word"]
    code, out, _ = run_cli(
        capsys, "multiply", "F4", "--K", "1", "w1", "w1", "w1", "--format", "text"
    )
    assert out.strip() == "2*s[3,1]"
    code, out, _ = run_cli(
        capsys, "presentation", "F4", "--K", "1", "--format", "text"
    )
    assert "Z[w1, y3, y4, y6]" in out


def test_gysin_groups_json(capsys):
    obj = run_json(capsys, "gysin", "F4", "--K", "1", "--degree", "12")
    by_degree = {g["degree"]: g for g in obj["groups"]}
    assert by_degree[6]["torsion"] == [2]
    assert by_degree[8] == {"degree": 8, "free_rank": 1, "torsion": [], "name": "Z"}
    assert by_degree[12]["torsion"] == [4]
    assert by_degree[7]["name"] == "0"


def test_giambelli_json(capsys):
    obj = run_json(capsys, "giambelli", "F4", "--K", "1", "--degree", "4")
    assert [e["polynomial"] for e in obj["classes"]] == ["-2*y4 + w1*y3", "y4"]


def test_jobspec_validates_eagerly():
    from schubert.cartan import LieType
    from schubert.cli import CliParseError

    with pytest.raises(CliParseError):
        JobSpec("multiply", LieType("F", 4), (1,), ())
    with pytest.raises(ValueError):
        JobSpec("enumerate", LieType("F", 4), (7,))
    with pytest.raises(CliParseError):
        JobSpec("enumerate", LieType("F", 4), (1,), fmt="yaml")


def test_console_entry_point_subprocess():
    proc = subprocess.run(
        [sys.executable, "-m", "schubert.cli", "enumerate", "F4", "--K", "1"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["count"] == 24
