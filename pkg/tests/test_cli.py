import json
import shutil
import subprocess
import sys

import pytest

from mtamari import __version__
from mtamari.cli import main
from mtamari.formulas import count_intervals


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_count_brute(capsys):
    code, out, _ = run(capsys, "count", "--m", "2", "--n", "3", "--brute")
    assert code == 0
    assert out == "58 (formula) = 58 (brute force)\n"


def test_count_big(capsys):
    code, out, _ = run(capsys, "count", "--m", "1", "--n", "100")
    assert code == 0
    value = int(out)
    assert value > 0 and value == count_intervals(1, 100)
    assert len(out.strip()) > 50


def test_count_by_contacts(capsys):
    code, out, _ = run(capsys, "count", "--m", "1", "--n", "2", "--by-contacts")
    assert code == 0
    assert out.splitlines() == ["3", "i=2: 1", "i=3: 2"]
    code, out, _ = run(capsys, "count", "--m", "2", "--n", "3", "--by-contacts", "--brute")
    assert code == 0 and "brute force " not in out.split("\n", 1)[1]


def test_series_text(capsys):
    code, out, _ = run(capsys, "series", "--m", "1", "--order", "4")
    assert code == 0
    assert out == "1, 1, 3, 13, 68\n"


def test_series_terms(capsys):
    code, out, _ = run(capsys, "series", "--m", "1", "--order", "1", "--with-y", "--terms")
    assert out.splitlines() == ["1, 1", "0 1 0 0 1", "1 2 1 0 1"]


def test_series_json(capsys):
    code, out, _ = run(capsys, "series", "--m", "1", "--order", "2", "--with-y", "--with-q",
                       "--format", "json")
    data = json.loads(out)
    assert data["schema"] == "mtamari.series/1"
    assert data["m"] == 1 and data["order"] == 2
    assert [c["n"] for c in data["coeffs"]] == [0, 1, 2]
    total = sum(int(t[3]) for t in data["coeffs"][2]["terms"])
    assert total == 3
    chains = sorted(t[2] for t in data["coeffs"][2]["terms"] for _ in range(int(t[3])))
    assert chains == [0, 0, 1]


def test_hasse_dot(capsys):
    code, out, _ = run(capsys, "hasse", "--m", "2", "--n", "3", "--format", "dot")
    assert code == 0
    assert out.startswith("digraph tamari_m2_n3 {")
    assert out.count("[label=") == 12


def test_hasse_json(capsys):
    code, out, _ = run(capsys, "hasse", "--m", "1", "--n", "2", "--format", "json")
    data = json.loads(out)
    assert data == {"schema": "mtamari.hasse/1", "m": 1, "n": 2,
                    "nodes": ["uudd", "udud"], "edges": [[1, 0]]}


def test_intervals(capsys):
    code, out, _ = run(capsys, "intervals", "--m", "1", "--n", "2", "--format", "json")
    data = json.loads(out)
    assert data["schema"] == "mtamari.intervals/1"
    assert data["intervals"] == 3
    assert data["by_contacts"] == [[2, 1], [3, 2]]
    code, out, _ = run(capsys, "intervals", "--m", "1", "--n", "2")
    assert out.splitlines()[0] == "m=1 n=2 intervals=3"


def test_formula(capsys):
    code, out, _ = run(capsys, "formula", "--m", "2", "--n", "3")
    assert out == "58\n"
    code, out, _ = run(capsys, "formula", "--m", "1", "--n", "2", "--i", "3")
    assert out == "2\n"
    code, out, _ = run(capsys, "formula", "--m", "2", "--n", "4", "--table")
    data = json.loads(out)
    assert data["schema"] == "mtamari.formula/1"
    assert sum(int(r["count"]) for r in data["rows"]) == int(data["total"]) == 703


def test_verify_symmetry(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "symmetry", "--m-max", "2", "--order", "6")
    assert code == 0
    assert out.splitlines()[-1] == "PASS"
    assert "FAIL" not in out


@pytest.mark.parametrize("argv", [
    ["count", "--m", "0", "--n", "3"],
    ["count", "--m", "1"],
    ["series", "--m", "1", "--order", "-1"],
    ["hasse", "--m", "1", "--n", "2", "--format", "svg"],
    ["verify", "--suite", "nonsense"],
    ["formula", "--m", "1", "--n", "3", "--i", "9"],
    [],
])
def test_usage_errors(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        raise SystemExit(main(argv))
    assert exc.value.code == 64


def test_resource_limit_exit(capsys):
    code, _, err = run(capsys, "hasse", "--m", "1", "--n", "8", "--node-cap", "10")
    assert code == 2
    assert "resource limit" in err


def test_version_goes_to_stderr(capsys):
    code, out, err = run(capsys, "--version")
    assert code == 0 and out == ""
    assert err.strip() == f"mtamari {__version__}"


def _script():
    exe = shutil.which("mtamari")
    return [exe] if exe else [sys.executable, "-m", "mtamari"]


@pytest.mark.parametrize("argv", [
    ["hasse", "--m", "2", "--n", "3"],
    ["intervals", "--m", "2", "--n", "3", "--format", "json"],
    ["series", "--m", "2", "--order", "4", "--with-y", "--with-q", "--format", "json"],
])
def test_output_is_byte_identical(argv):
    runs = [subprocess.run(_script() + argv, capture_output=True, check=True).stdout
            for _ in range(2)]
    assert runs[0] == runs[1] and runs[0]


def test_subprocess_exit_codes():
    assert subprocess.run(_script() + ["count", "--m", "0", "--n", "1"],
                          capture_output=True).returncode == 64
    assert subprocess.run(_script() + ["count", "--m", "1", "--n", "9", "--brute",
                                       "--node-cap", "5"], capture_output=True).returncode == 2
    assert subprocess.run([sys.executable, "-m", "mtamari", "formula", "--m", "1", "--n", "2"],
                          capture_output=True).stdout == b"3\n"
