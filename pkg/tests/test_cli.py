import subprocess
import sys

import pytest

from matchmat.certificate import read_cover
from matchmat.cli import main
from matchmat.graph import complete, format_graph


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_mu_complete(capsys, tmp_path):
    cert = tmp_path / "k5.cert"
    code, out, _ = run(capsys, "mu", "--complete", "5", "-o", str(cert))
    assert code == 0 and out.splitlines()[0] == "mu = 4"
    assert run(capsys, "verify", str(cert))[0] == 0


@pytest.mark.parametrize("flag, n, mu", [("--cycle", "5", 3), ("--complete", "3", 1), ("--path", "4", 2)])
def test_mu_small(capsys, flag, n, mu):
    code, out, _ = run(capsys, "mu", flag, n)
    assert code == 0 and out == f"mu = {mu}\n"


def test_mu_certificate_to_stdout(capsys):
    code, out, _ = run(capsys, "mu", "--complete", "3", "-o", "-")
    assert code == 0
    assert "matchmat-cover version 1" in out


def test_decide_exit_codes(capsys):
    code, out, _ = run(capsys, "decide", "--complete", "5", "-m", "3")
    assert code == 3 and out.startswith("UNSAT")
    code, out, _ = run(capsys, "decide", "--complete", "5", "-m", "4")
    assert code == 0 and out.startswith("SAT")
    code, out, _ = run(capsys, "decide", "--complete", "3", "-m", "1")
    assert code == 0


def test_decide_stats(capsys):
    code, out, _ = run(capsys, "decide", "--complete", "5", "-m", "3", "--stats")
    assert code == 3
    for key in ("nodes", "propagations", "leaf_refutations", "wall_time"):
        assert key in out


def test_resource_limit_exit(capsys):
    assert run(capsys, "decide", "--complete", "7", "-m", "3", "--node-limit", "3")[0] == 2
    assert run(capsys, "mu", "--complete", "7", "--node-limit", "3")[0] == 2


def test_graph_file_input(capsys, tmp_path):
    path = tmp_path / "k4.txt"
    path.write_text(format_graph(complete(4)))
    code, out, _ = run(capsys, "mu", "--graph", str(path))
    assert code == 0 and out == "mu = 3\n"


def test_input_errors(capsys, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("p edge 3 1\ne 1 9\n")
    code, _, err = run(capsys, "mu", "--graph", str(bad))
    assert code == 1 and "line 2" in err
    assert run(capsys, "mu", "--graph", str(tmp_path / "missing"))[0] == 1
    assert run(capsys, "mu", "--cycle", "2")[0] == 1
    assert run(capsys, "decide", "--complete", "3", "-m", "0")[0] == 1


def test_exactly_one_graph_source(capsys):
    with pytest.raises(SystemExit):
        main(["mu", "--complete", "4", "--cycle", "5"])
    with pytest.raises(SystemExit):
        main(["mu"])
    capsys.readouterr()


def test_construct_and_verify_recursive(capsys, tmp_path):
    cert = tmp_path / "k12.cert"
    assert run(capsys, "construct", "recursive", "-m", "4", "-o", str(cert))[0] == 0
    code, out, _ = run(capsys, "verify", str(cert), "--complete", "12")
    assert code == 0 and "VALID" in out
    assert read_cover(cert).graph == complete(12)


def test_construct_recursive_five(capsys, tmp_path):
    cert = tmp_path / "k15.cert"
    assert run(capsys, "construct", "recursive", "-m", "5", "-o", str(cert))[0] == 0
    assert read_cover(cert).graph.n == 15


def test_construct_refusal(capsys):
    code, out, _ = run(capsys, "construct", "two", "--cycle", "5")
    assert code == 5
    assert "odd cycle of length 5" in out


def test_construct_partition_kinds(capsys, tmp_path):
    cert = tmp_path / "b.cert"
    assert run(capsys, "construct", "mpartite", "--bipartite", "2", "3", "-o", str(cert))[0] == 0
    assert read_cover(cert).m == 2
    assert run(capsys, "verify", str(cert), "--oracle")[0] == 0
    assert run(capsys, "construct", "fourpartite", "--multipartite", "1", "2", "1", "2", "-o", str(cert))[0] == 0
    assert read_cover(cert).m == 3
    assert run(capsys, "construct", "mpartite", "--complete", "4", "--blocks", "1,2;3,4")[0] == 1
    assert run(capsys, "construct", "two", "--cycle", "6", "-o", str(cert))[0] == 0


def test_verify_graph_mismatch(capsys, tmp_path):
    cert = tmp_path / "k3.cert"
    run(capsys, "construct", "recursive", "-m", "1", "-o", str(cert))
    assert run(capsys, "verify", str(cert), "--complete", "4")[0] == 4


def _k3_cert(capsys, tmp_path):
    cert = tmp_path / "k3.cert"
    run(capsys, "construct", "recursive", "-m", "1", "-o", str(cert))
    return cert


def test_verify_tampered_missing_circuit(capsys, tmp_path):
    cert = _k3_cert(capsys, tmp_path)
    text = cert.read_text().replace("system 1 3\n1 2 3\n", "system 1 2\n")
    cert.write_text(text)
    code, out, _ = run(capsys, "verify", str(cert))
    assert code == 4
    assert "cover: 1 2 3 lies in no system" in out


def test_verify_tampered_moved_triangle_circuit(capsys, tmp_path):
    cert = tmp_path / "k4.cert"
    run(capsys, "construct", "fourpartite", "--complete", "4", "-o", str(cert))
    lines = cert.read_text().splitlines()
    # move the first circuit of system 1 into system 2
    s1 = lines.index(next(ln for ln in lines if ln.startswith("system 1 ")))
    s2 = lines.index(next(ln for ln in lines if ln.startswith("system 2 ")))
    moved = lines[s1 + 1]
    size1, size2 = int(lines[s1].split()[2]), int(lines[s2].split()[2])
    lines[s1] = f"system 1 {size1 - 1}"
    lines[s2] = f"system 2 {size2 + 1}"
    lines.insert(s2 + 1, moved)
    del lines[s1 + 1]
    cert.write_text("\n".join(lines) + "\n")
    code, out, _ = run(capsys, "verify", str(cert))
    assert code == 4
    assert "triangle:" in out or "matching:" in out


def test_verify_version_mismatch(capsys, tmp_path):
    cert = _k3_cert(capsys, tmp_path)
    cert.write_text(cert.read_text().replace("version 1", "version 9"))
    code, _, err = run(capsys, "verify", str(cert))
    assert code == 1 and "version" in err


def test_restrict(capsys, tmp_path):
    src, out = tmp_path / "k12.cert", tmp_path / "k7.cert"
    run(capsys, "construct", "recursive", "-m", "4", "-o", str(src))
    assert run(capsys, "restrict", str(src), "--vertices", "1-7", "-o", str(out))[0] == 0
    assert read_cover(out).graph == complete(7)
    assert run(capsys, "restrict", str(src), "--cycle", "9", "-o", str(out))[0] == 0
    assert run(capsys, "restrict", str(src))[0] == 1


def test_emit_ip(capsys, tmp_path):
    code, out, _ = run(capsys, "emit-ip", "--complete", "3", "-m", "1")
    assert code == 0 and out.startswith("\\ matchmat feasibility")
    lp = tmp_path / "k4.lp"
    assert run(capsys, "emit-ip", "--complete", "4", "-m", "3", "--variant", "optimization", "-o", str(lp))[0] == 0
    assert lp.read_text().splitlines()[1] == "Maximize"


def test_bounds(capsys):
    code, out, _ = run(capsys, "bounds", "-m", "4")
    assert code == 0
    assert "nu_lower = 12" in out and "2^(2^12-1)-1" in out
    code, out, _ = run(capsys, "bounds", "-m", "1")
    assert "127" in out
    code, out, _ = run(capsys, "bounds", "-n", "13")
    assert "mu = 5 (exact)" in out
    code, out, _ = run(capsys, "bounds", "-n", "100")
    assert "<= mu <=" in out


def test_bounds_exact_prints_every_digit(capsys):
    code, out, _ = run(capsys, "bounds", "-m", "4", "--exact")
    value = int(out.split("nu_upper = ")[1].split()[0])
    assert value == 2 ** 4095 - 1


def test_analyze(capsys, tmp_path):
    cert = _k3_cert(capsys, tmp_path)
    code, out, _ = run(capsys, "analyze", str(cert))
    assert code == 0
    assert "degenerate triangles: 1" in out
    split = tmp_path / "split.cert"
    assert run(capsys, "analyze", str(cert), "--split", str(split))[0] == 0
    assert read_cover(split).m == 3
    assert run(capsys, "verify", str(split))[0] == 0


def test_threads_give_identical_certificates(capsys, tmp_path):
    a, b = tmp_path / "a.cert", tmp_path / "b.cert"
    run(capsys, "decide", "--complete", "6", "-m", "4", "--threads", "1", "-o", str(a))
    run(capsys, "decide", "--complete", "6", "-m", "4", "--threads", "4", "-o", str(b))
    assert a.read_bytes() == b.read_bytes()


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "matchmat", "mu", "--complete", "4"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "mu = 3\n"
