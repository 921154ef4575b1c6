import json
import subprocess
import sys

from daha.cli import main, run


def call(*argv):
    code, doc, _ = run(list(argv))
    return code, doc


def test_compute_e_omega():
    code, doc = call("compute-e", "--type", "A", "--rank", "1", "--weight", "1")
    assert code == 0
    res = doc["result"]
    assert res["E"] == [{"weight": [1], "coeff": "1"}]
    assert res["eval_at_rho"] == "s^-1"
    assert res["norm"] == "1"
    assert all(res["checks"].values())


def test_compute_e_zero():
    code, doc = call("compute-e", "--weight", "0")
    assert code == 0
    assert doc["result"]["E"] == [{"weight": [0], "coeff": "1"}]


def test_compute_e_negative_weight_a2():
    code, doc = call("compute-e", "--type", "A", "--rank", "2", "--weight", "1", "-1")
    assert code == 0 and doc["status"] == "pass"


def test_unsupported_type_is_usage_error():
    code, doc = call("compute-e", "--type", "E", "--rank", "8", "--weight", "1")
    assert code == 3 and doc["status"] == "usage-error"


def test_bad_arguments_are_usage_errors():
    assert call("verify", "nonsense")[0] == 3
    assert call()[0] == 3
    assert call("compute-e", "--rank", "2", "--weight", "1")[0] == 3


def test_verify_gauss():
    code, doc = call("verify", "gauss", "--max-N", "12")
    assert code == 0
    assert doc["result"]["passed"] == 12 and doc["result"]["failed"] == 0


def test_verify_gauss_selberg_n5():
    code, doc = call("verify", "gauss-selberg", "--N", "5")
    assert code == 0
    ks = [c["parameters"].get("k") for c in doc["result"]["cases"]]
    assert ks[:2] == [1, 2]


def test_verify_duality_a2():
    code, doc = call("verify", "duality", "--type", "A", "--rank", "2", "--max-length", "4")
    assert code == 0 and doc["result"]["failed"] == 0


def test_verify_eta_negative_k_syntax():
    code, doc = call("verify", "eta", "--k", "-1/2", "--order", "12")
    assert code == 0
    assert doc["config"]["k"] == "-1/2"


def test_hypothesis_violation_exit_code():
    assert call("verify", "eta", "--k", "1")[0] == 2
    assert call("perfect", "--sector", "root-of-unity", "--N", "3", "--k", "2")[0] == 2
    assert call("perfect", "--sector", "negative", "--e", "2")[0] == 2


def test_mismatch_exit_code(monkeypatch):
    from daha import perfect
    from daha.coeff import Cyclo
    real = perfect.classical_gauss

    def broken(N):
        s, closed, ok = real(N)
        return (s + Cyclo.const(4 * N, 1), closed, False) if N == 7 else (s, closed, ok)
    monkeypatch.setattr(perfect, "classical_gauss", broken)
    code, doc = call("verify", "gauss", "--max-N", "8")
    assert code == 1
    assert doc["result"]["first_counterexample"]["parameters"] == {"N": 7}


def test_dump_upsilon():
    code, doc = call("dump", "upsilon", "--k", "-3/2", "--bound", "6")
    assert code == 0
    assert len(doc["result"]["upsilon"]["stabilizer"]) == 2


def test_dump_perfect_matrices():
    code, doc = call("dump", "perfect", "--N", "5", "--k", "1")
    assert code == 0
    mats = doc["result"]["representation"]["matrices"]
    assert all(len(M) == 6 and all(len(r) == 6 for r in M) for M in mats.values())


def test_dump_lambda_and_order():
    code, doc = call("dump", "lambda", "--bound", "3")
    assert code == 0 and len(doc["result"]["lines"]) == 7
    code, doc = call("dump", "order", "--type", "A", "--rank", "2", "--max-length", "2")
    assert code == 0 and doc["result"]["succeeds"]


def test_perfect_emit(tmp_path):
    out = tmp_path / "m.json"
    code, doc = call("perfect", "--type", "A", "--rank", "1", "--sector", "root-of-unity",
                     "--N", "5", "--k", "1", "--emit", str(out))
    assert code == 0 and doc["result"]["failed"] == 0
    data = json.loads(out.read_text())
    assert data["dimension"] == 6 and data["config"]["N"] == 5


def test_rerun_from_echo_is_identical(capsys):
    argv = ["verify", "relations", "--type", "A", "--rank", "2", "--degree", "2"]
    assert main(argv) == 0
    first = capsys.readouterr().out
    cfg = json.loads(first)["config"]
    again = [cfg["command"], cfg["suite"]]
    for key in ["type", "rank", "lattice", "degree", "seed", "jobs"]:
        again += ["--" + key.replace("_", "-"), str(cfg[key])]
    assert main(again) == 0
    assert capsys.readouterr().out == first


def test_output_file(tmp_path, capsys):
    out = tmp_path / "r.json"
    assert main(["verify", "gauss", "--max-N", "3", "--output", str(out)]) == 0
    assert json.loads(out.read_text())["result"]["passed"] == 3


def test_console_script():
    proc = subprocess.run([sys.executable, "-m", "daha.cli", "verify", "gauss", "--max-N", "2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["status"] == "pass"
