import subprocess
import sys

import pytest

from vminor.cli import main, parse_edge_list
from vminor.graph import GraphError
from vminor.graph6 import parse_graph6
from vminor.vertexminor import parse_witness, verify_witness


@pytest.fixture
def run(capsys, monkeypatch):
    def _run(argv, stdin=""):
        import io

        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
        code = main(argv)
        out, err = capsys.readouterr()
        return code, out, err

    return _run


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


def test_g6_encode_decode(run):
    code, out, _ = run(["g6", "encode"], "3: 0-1 0-2 1-2\n5: 0-2 0-4 1-3 3-4\n0:\n")
    assert code == 0 and out.split() == ["Bw", "DQc", "?"]
    code, out, _ = run(["g6", "decode"], "Bw\n@\n")
    assert out.splitlines() == ["3: 0-1 0-2 1-2", "1:"]


def test_g6_bad_line_is_error_but_continues(run, caplog):
    code, out, _ = run(["g6", "decode"], "B!\nBw\n")
    assert code == 1 and out.strip() == "3: 0-1 0-2 1-2"
    assert "line 1: byte 1" in caplog.text


def test_edge_list_parser():
    assert parse_edge_list("2: 0-1").edges() == [(0, 1)]
    with pytest.raises(GraphError):
        parse_edge_list("nonsense")


def test_lc(run):
    code, out, _ = run(["lc", "--at", "1"], "Bg\n")  # path 0-1-2 centred at 1
    assert code == 0 and out.strip() == "Bw"


def test_orbit_and_truncation(run):
    code, out, _ = run(["orbit"], "Bo\n")
    assert code == 0 and len(out.split()) == 4
    code, out, _ = run(["orbit", "--cap", "2"], "Bo\n")
    assert code == 2 and len(out.split()) == 2


def test_vm_present_with_witness(run, tmp_path):
    minor = write(tmp_path, "c5.g6", "Dhc\n")
    host = write(tmp_path, "c6.g6", "EhEG\n")
    for strategy in ("orbit", "interleaved"):
        code, out, _ = run(["vm", "--minor", minor, "--host", host, "--strategy", strategy])
        assert code == 0
        status, rest = out.split("\n", 1)
        assert status == "present"
        w = parse_witness(rest)
        assert verify_witness(parse_graph6("Dhc"), parse_graph6("EhEG"), w)


def test_vm_absent_and_undecided(run, tmp_path):
    minor = write(tmp_path, "k3.g6", "Bw\n")
    host = write(tmp_path, "m.g6", "CK\n")  # 2K2
    code, out, _ = run(["vm", "--minor", minor, "--host", host])
    assert code == 0 and out.strip() == "absent"
    host = write(tmp_path, "c5.g6", "Dhc\n")
    code, out, _ = run(["vm", "--minor", minor, "--host", host, "--cap", "1"])
    assert code == 2 and out.startswith("undecided: truncated")


def test_cutrank(run):
    code, out, _ = run(["cutrank", "--set", "0,1"], "Dhc\n")
    assert out.splitlines() == ["rank 2", "X 0 | 1", "coX 2 | 3 | 4"]


def test_pair(run):
    code, out, _ = run(["pair", "--mode", "exact"], "EhEG\n")
    assert code == 0 and "t=2" in out and "optimal=yes" in out
    code, out, _ = run(["pair", "--mode", "heuristic"], "EhEG\n")
    assert "optimal=no" in out


def test_dichotomy(run):
    code, out, _ = run(["dichotomy", "--delta", "1/10"], "E~~w\n")  # K6
    assert out.startswith("dense vertex=0 degree=5") and "neighborhood=D~{" in out
    code, out, _ = run(["dichotomy", "--delta", "0.1"], "E???\n")
    assert out.startswith("sparse edges=0 bound=18/5")
    code, out, err = run(["dichotomy", "--delta", "2"], "E???\n")
    assert code == 1


def test_enum(run):
    code, out, _ = run(["enum", "--n", "4"])
    assert code == 0 and len(out.split()) == 11
    assert run(["enum", "--n", "9"])[0] == 1


def test_filter(run, tmp_path):
    minor = write(tmp_path, "k3.g6", "Bw\n")
    _, graphs4, _ = run(["enum", "--n", "4"])
    code, out, _ = run(["filter", "--minor", minor], graphs4 + "garbage!\n")
    assert code == 1  # the bad line is reported, the rest still processed
    assert len(out.split()) == 3
    undecided = tmp_path / "und.g6"
    code, out, _ = run(["filter", "--minor", minor, "--cap", "1", "--undecided", str(undecided)], "Dhc\nD??\n")
    assert code == 2 and out.split() == ["D??"]
    assert undecided.read_text().startswith("Dhc\t#")


def test_scan_csv_and_report(run, tmp_path):
    minor = write(tmp_path, "k3.g6", "Bw\n")
    report = tmp_path / "r.txt"
    code, out, _ = run(["scan", "--minor", minor, "--n", "4..6", "--report", str(report)])
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "n,family_size,min_t,min_ratio,min_maxalphaomega,implied_exponent,truncated_count"
    assert lines[3].startswith("6,4,2,0.333333,")
    text = report.read_text()
    assert "min_ratio = 1/3" in text and "min(2*c*delta, delta)" in text


def test_scan_from_input_file(run, tmp_path):
    minor = write(tmp_path, "k3.g6", "Bw\n")
    fam = write(tmp_path, "fam.g6", ">>graph6<<C?\nCK\nCw\nE@Q?\n")
    code, out, _ = run(["scan", "--minor", minor, "--n", "4..5", "--input", fam, "--report", str(tmp_path / "r")])
    assert out.splitlines()[1:] == ["4,2,2,0.500000,2,0.500000,0", "5,0,,,,,0"]


def test_diagnostics_reach_stderr():
    proc = subprocess.run(
        [sys.executable, "-m", "vminor", "g6", "decode"], input="B!\n", capture_output=True, text=True
    )
    assert proc.returncode == 1 and "line 1: byte 1" in proc.stderr


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "vminor", "g6", "decode"], input="Bw\n", capture_output=True, text=True
    )
    assert proc.returncode == 0 and proc.stdout.strip() == "3: 0-1 0-2 1-2"
