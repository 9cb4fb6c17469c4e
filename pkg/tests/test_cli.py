import json

from catalan_hankel.cli import main, parse_series
from catalan_hankel import PowerSeries


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_hankel_pair_row(capsys):
    code, out, _ = run(capsys, "hankel", "--family", "combo", "--m", "2", "--a", "1", "--b", "1", "--count", "6")
    assert code == 0 and out == "7,31,115,390,1254,3893\n"


def test_hankel_catalan(capsys):
    code, out, _ = run(capsys, "hankel", "--family", "catalan", "--count", "4")
    assert out == "1,1,1,1\n"


def test_hankel_symbolic(capsys):
    _, out, _ = run(capsys, "hankel", "--family", "combo", "--m", "1", "--symbolic", "--count", "2")
    assert out == "a + 2*b,a^2 + 4*a*b + 3*b^2\n"


def test_jfrac_json(capsys):
    code, out, _ = run(capsys, "jfrac", "--family", "combo", "--m", "2", "--a", "1", "--b", "1",
                       "--normalize", "--depth", "2", "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert doc["alphas"] == ["19/7", "489/217"] and doc["betas"] == ["31/49"]


def test_json_big_values_are_strings(capsys):
    _, out, _ = run(capsys, "hankel", "--family", "shifted", "--m", "6", "--count", "6", "--format", "json")
    doc = json.loads(out)
    assert doc["values"][-1] == "41314284"
    assert all(isinstance(v, str) for v in doc["values"])


def test_csv_has_header(capsys):
    _, out, _ = run(capsys, "hankel", "--family", "catalan", "--count", "3", "--format", "csv")
    assert out.splitlines() == ["n,value", "0,1", "1,1", "2,1"]


def test_verify_conjecture_t(capsys):
    code, out, _ = run(capsys, "verify", "conjecture-T", "--m-max", "5", "--n-max", "4")
    assert code == 0
    assert "verdict: pass (20 cases)" in out


def test_verify_identity(capsys):
    code, out, _ = run(capsys, "verify", "identity", "--name", "consecutive-diff", "--r", "3")
    assert code == 0 and "[PASS] consecutive-diff" in out


def test_verify_json_deterministic(capsys):
    argv = ("verify", "residuals", "--format", "json")
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second
    assert json.loads(first)["verdict"] == "pass"


def test_verify_csv(capsys):
    _, out, _ = run(capsys, "verify", "bands", "--format", "csv")
    assert out.splitlines()[0] == "report,case,passed,expected,actual,detail"


def test_verify_readings_lists_tags(capsys):
    code, out, _ = run(capsys, "verify", "readings")
    assert code == 0
    for tag in ("t4-x3-numerator", "shift2-b3-denominator", "htilde-recurrence", "spine-column-pairing", "L2-second-line"):
        assert tag in out


def test_usage_errors(capsys):
    assert run(capsys, "hankel", "--family", "nope")[0] == 2
    assert run(capsys, "verify", "nope")[0] == 2
    assert run(capsys, "verify", "identity", "--name", "nope")[0] == 2
    assert run(capsys, "riordan", "mul", "--g", "1")[0] == 2
    assert run(capsys, "riordan", "matrix", "--g", "import os", "--f", "x")[0] == 2


def test_precision_errors(capsys):
    assert run(capsys, "jfrac", "--family", "combo", "--symbolic", "--depth", "2")[0] == 3
    assert run(capsys, "jfrac", "--family", "combo", "--m", "0", "--a", "0", "--b", "0", "--depth", "1")[0] == 3
    assert run(capsys, "riordan", "matrix", "--g", "x", "--f", "x")[0] == 3


def test_bfile_too_short(capsys, tmp_path):
    path = tmp_path / "b.txt"
    path.write_text("0 1\n1 1\n2 2\n")
    assert run(capsys, "hankel", "--bfile", str(path), "--count", "4")[0] == 3
    code, out, _ = run(capsys, "hankel", "--bfile", str(path), "--count", "2")
    assert code == 0 and out == "1,1\n"


def test_config_file_and_override(capsys, tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("family = combo\nm = 2\na = 1\nb = 1\ncount = 3\n")
    _, out, _ = run(capsys, "hankel", "--config", str(cfg))
    assert out == "7,31,115\n"
    _, out, _ = run(capsys, "hankel", "--config", str(cfg), "--count", "2")
    assert out == "7,31\n"


def test_out_file(capsys, tmp_path):
    target = tmp_path / "h.txt"
    assert run(capsys, "hankel", "--count", "2", "--out", str(target))[0] == 0
    assert target.read_text() == "1,1\n"


def test_riordan_commands(capsys):
    _, out, _ = run(capsys, "riordan", "entry", "--pair", "Mtilde", "--n", "4", "--k", "1")
    assert out == "-20\n"
    _, out, _ = run(capsys, "riordan", "inv", "--pair", "pascal", "--count", "3", "--format", "csv")
    assert out.splitlines()[:3] == ["n,k,value", "0,0,1", "1,0,-1"]
    _, out, _ = run(capsys, "riordan", "apply", "--g", "1/(1-b*x)", "--f", "x/(1-b*x)^2", "--h", "1/(1-a*x)",
                    "--count", "3")
    assert out == "1,a + b,a^2 + 3*a*b + b^2\n"
    _, out, _ = run(capsys, "riordan", "mul", "--pair", "pascal", "--pair2", "pascal", "--count", "3")
    assert out.split() == ["1", "0", "0", "2", "1", "0", "4", "4", "1"]


def test_minors_and_spine(capsys):
    _, out, _ = run(capsys, "minors", "--penta", "8,5,1,1", "--count", "4")
    assert out.splitlines()[-1] == "minors: 7,31,115,390"
    _, out, _ = run(capsys, "minors", "--matrix", "2,1;1,2")
    assert out.splitlines()[-1] == "minors: 2,3"
    code, out, _ = run(capsys, "spine", "--r", "3")
    assert code == 0 and "pass" in out


def test_parse_series_expressions():
    x = PowerSeries.x(4)
    assert parse_series("1/(1-x)^2", 4) == (1 - x) ** -2
    assert parse_series("3/4", 2)[0] * 4 == 3
