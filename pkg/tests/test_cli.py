import io
import json
import subprocess
import sys


from runnet import cli
from runnet.checks import Check, SuiteResult


def run(*argv):
    out = io.StringIO()
    code = cli.main(list(argv), out=out)
    return code, out.getvalue()


def test_compute_two_cycle():
    code, text = run("compute", "two_cycle", "--hom", "perm", "--N", "12")
    assert code == 0
    lines = text.splitlines()
    assert lines[5] == "5: 9"
    assert [ln.split(": ")[1] for ln in lines[1:5]] == ["0"] * 4


def test_compute_file_path():
    from importlib import resources

    ref = resources.files("runnet") / "data" / "networks" / "g1p1.json"
    with resources.as_file(ref) as path:
        code, text = run("compute", str(path), "--format", "seq")
    assert code == 0
    assert text.startswith("0,0,0,0,0,11,26,")


def test_compute_invalid_network(capsys):
    code, _ = run("compute", "invalid_two_path")
    assert code == 1
    assert "composition (1,2)" in capsys.readouterr().err


def test_compute_start_end_override():
    _, whole = run("compute", "two_cycle", "--N", "6", "--format", "csv")
    _, other = run("compute", "two_cycle", "--N", "6", "--format", "csv", "--start", "2", "--end", "1")
    assert whole != other
    assert other.splitlines()[3] == "3,1"


def test_compute_missing_file(capsys):
    assert run("compute", "no/such/file.json")[0] == 1
    assert run("compute", "nosuchfixture")[0] == 1


def test_recipe_pk_table():
    code, text = run("recipe", "pk", "--N", "9")
    assert code == 0
    assert "7: 64 + 1824*t + 2880*t^2 + 272*t^3" in text.splitlines()


def test_recipe_sequences():
    assert run("recipe", "gz2014", "--N", "12", "--format", "seq")[1].strip() == \
        "1,1,2,4,13,50,229,1238,7614,52706,405581,3432022,31684445"
    assert run("recipe", "allOddPV", "--N", "12", "--format", "seq")[1].strip() == \
        "1,1,2,2,8,14,84,204,1632,5104,51040,195040,2340480"


def test_recipe_csv():
    text = run("recipe", "br", "--N", "4", "--format", "csv")[1]
    assert text.splitlines()[4] == "4,0,2,12,10"


def test_recipe_unknown(capsys):
    assert run("recipe", "nope")[0] == 1
    assert "unknown recipe" in capsys.readouterr().err


def test_recipe_alt_refused():
    assert run("recipe", "allEvenPV", "--hom", "alt")[0] == 1


def test_recipe_file(tmp_path):
    p = tmp_path / "r.json"
    p.write_text(json.dumps({"expr": {"sum": [{"named": "P"}, {"monomial": 0}]}, "deps": {"P": "rpk"}}))
    code, text = run("recipe", str(p), "--N", "3")
    assert code == 0 and text.splitlines()[0] == "0: 2"


def test_oracle_stat():
    assert run("oracle", "stat", "udr", "4")[1] == "t + 7*t^2 + 11*t^3 + 5*t^4\n"
    assert run("oracle", "stat", "des", "0")[1] == "1\n"
    assert run("oracle", "stat", "rpk", "4", "--format", "csv")[1] == "1,18,5\n"


def test_oracle_pred():
    assert run("oracle", "pred", "allPVEven", "12")[1] == "2340480\n"
    assert run("oracle", "pred", "allPVOdd", "5")[1] == "14\n"
    assert run("oracle", "pred", "incRunsBelow", "6", "--m", "3")[0] == 0


def test_oracle_cap(capsys):
    assert run("oracle", "stat", "pk", "11")[0] == 1
    assert run("oracle", "pred", "altRunsBelow", "11", "--m", "3")[0] == 1
    assert run("oracle", "stat", "pk", "5", "--cap", "11")[0] == 1


def test_usage_errors_exit_1():
    for argv in (["recipe", "pk", "--N", "65"], ["frobnicate"], ["compute"], ["check", "nope"]):
        assert cli.main(argv) == 1
    assert cli.main(["--help"]) == 0


def test_check_pass():
    code, text = run("check", "identities", "--N", "12")
    assert code == 0 and text.startswith("identities: pass")


def test_check_tables():
    code, text = run("check", "tables")
    assert code == 0


def test_check_mismatch_exit_2(monkeypatch):
    bad = SuiteResult("tables", 3, Check("pk row n=4", "8 + 16*t", "8 + 17*t"))
    monkeypatch.setattr("runnet.checks.run_suite", lambda *a, **k: bad)
    code, text = run("check", "tables")
    assert code == 2
    assert "expected: 8 + 16*t" in text and "actual:   8 + 17*t" in text


def test_output_deterministic():
    assert run("recipe", "udr", "--N", "8")[1] == run("recipe", "udr", "--N", "8")[1]


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "runnet", "recipe", "udr", "--N", "1"],
                         capture_output=True, text=True, check=False)
    assert res.returncode == 0 and res.stdout == "0: 1\n1: t\n"


def test_check_oracle_and_bijections_small_cap():
    code, text = run("check", "oracle", "--cap", "7")
    assert code == 0 and text.startswith("oracle: pass")
    code, text = run("check", "bijections", "--cap", "7")
    assert code == 0 and text.startswith("bijections: pass")
