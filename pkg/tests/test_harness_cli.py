import csv
import io
import json

import pytest

from gftkit.errors import QuadratureError
from gftkit.harness import Config, load_config, list_scenarios, run_scenario
from gftkit.harness import scenarios as scenarios_mod
from gftkit.harness.cli import main, parse_complex
from gftkit.harness.report import EXIT_ENGINE, EXIT_FAIL, EXIT_PASS, EXIT_USAGE

FAST = ["--radii", "20", "--angles", "120"]


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def strip_runtime(doc):
    for r in doc["reports"]:
        r.pop("runtime", None)
    return doc


def test_list_contains_and_unique(capsys):
    code, out, _ = run(capsys, "list")
    assert code == EXIT_PASS and "norm-cesaro-sharp" in out
    ids = [s["id"] for s in list_scenarios()]
    assert len(ids) == len(set(ids))


def test_list_json(capsys):
    code, out, _ = run(capsys, "list", "--json")
    items = json.loads(out)
    assert isinstance(items, list) and all({"id", "description", "provenance"} <= set(i) for i in items)


def test_transform_alexander_koebe(capsys):
    code, out, _ = run(capsys, "transform", "--fn", "koebe_order", "--lambda", "0", "--op", "alexander",
                       "--degree", "8", "--json")
    coeffs = json.loads(out)["coefficients"]
    assert code == EXIT_PASS
    assert coeffs == [[0.0, 0.0]] + [[1.0, 0.0]] * 8


def test_transform_cesaro_zero_is_alexander(capsys):
    _, a, _ = run(capsys, "transform", "--fn", "half_plane", "--op", "cesaro", "--beta", "0", "--json")
    _, b, _ = run(capsys, "transform", "--fn", "half_plane", "--op", "alexander", "--json")
    assert json.loads(a)["coefficients"] == json.loads(b)["coefficients"]


def test_transform_j_gamma_zero(capsys):
    _, out, _ = run(capsys, "transform", "--op", "j-gamma", "--gamma", "0", "--degree", "6", "--json")
    assert json.loads(out)["coefficients"] == [[0.0, 0.0], [1.0, 0.0]] + [[0.0, 0.0]] * 5


def test_transform_csv_and_values(capsys):
    code, out, _ = run(capsys, "transform", "--fn", "half_plane", "--degree", "4", "--csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["k", "re", "im"] and len(rows) == 6
    code, out, _ = run(capsys, "transform", "--fn", "half_plane", "--at", "0.5", "--json")
    v = json.loads(out)["values"][0]
    assert v["f"] == pytest.approx([1.0, 0.0])


@pytest.mark.parametrize("text, value", [("0.5", 0.5), ("1-2i", 1 - 2j), ("0.5+0.25j", 0.5 + 0.25j),
                                         ("i", 1j), ("-i", -1j), ("2i", 2j)])
def test_parse_complex(text, value):
    assert parse_complex(text) == value


def test_usage_errors(capsys):
    assert run(capsys, "verify", "no-such-scenario")[0] == EXIT_USAGE
    assert run(capsys, "verify")[0] == EXIT_USAGE
    assert run(capsys, "transform", "--fn", "nope")[0] == EXIT_USAGE
    assert run(capsys, "transform", "--fn", "koebe_order", "--lambda", "1.5")[0] == EXIT_USAGE
    assert run(capsys, "norm", "--rmax", "1.2")[0] == EXIT_USAGE
    assert run(capsys, "transform", "--op", "hornich-add")[0] == EXIT_USAGE


def test_verify_pass_exit(capsys):
    code, out, _ = run(capsys, "verify", "norm-convex-order")
    assert code == EXIT_PASS and "PASS" in out


def test_verify_fail_exit_and_witness(capsys):
    code, out, _ = run(capsys, "verify", "norm-cesaro-sharp", "--alphas", "0.5", "--lambdas", "0",
                       "--betas", "1", "--json")
    assert code == EXIT_FAIL
    checks = json.loads(out)["reports"][0]["checks"]
    assert all(c["witness"] for c in checks if c["status"] != "pass")


def test_engine_error_exit(capsys, monkeypatch):
    def boom(ck, inputs, cfg):
        with ck.guard("case", "raises"):
            raise QuadratureError("synthetic", {"z": 0.5})

    sc = scenarios_mod.Scenario("synthetic-engine-error", "d", "p", {}, boom)
    monkeypatch.setitem(scenarios_mod.REGISTRY, sc.id, sc)
    code, out, _ = run(capsys, "verify", sc.id, "--json")
    assert code == EXIT_ENGINE
    assert json.loads(out)["reports"][0]["checks"][0]["status"] == "error"


def test_reports_byte_stable(capsys):
    argv = ["verify", "norm-cesaro-subordinate", "--json", *FAST]
    _, a, _ = run(capsys, *argv)
    _, b, _ = run(capsys, *argv)
    assert json.dumps(strip_runtime(json.loads(a))) == json.dumps(strip_runtime(json.loads(b)))
    r = run_scenario("set-predicates", Config())
    assert r.to_json(include_runtime=False) == run_scenario("set-predicates", Config()).to_json(include_runtime=False)


def test_csv_one_row_per_check(capsys):
    code, out, _ = run(capsys, "verify", "royster-nonunivalent", "--csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    rep = run_scenario("royster-nonunivalent")
    assert len(rows) == len(rep.checks) and {r["status"] for r in rows} == {"pass"}


def test_gft_config_and_flag_precedence(tmp_path, monkeypatch, capsys):
    path = tmp_path / "cfg.json"
    path.write_text(json.dumps({"radii": 11, "angles": 40, "seed": 3}))
    cfg = load_config(env={"GFT_CONFIG": str(path)}, angles=48)
    assert (cfg.radii, cfg.angles, cfg.seed) == (11, 48, 3)
    monkeypatch.setenv("GFT_CONFIG", str(path))
    _, out, _ = run(capsys, "verify", "norm-convex-order", "--json", "--angles", "64")
    echoed = json.loads(out)["reports"][0]["config"]
    assert echoed["radii"] == 11 and echoed["angles"] == 64


def test_gft_config_bad_file(tmp_path, monkeypatch, capsys):
    path = tmp_path / "cfg.json"
    path.write_text(json.dumps({"bogus_key": 1}))
    monkeypatch.setenv("GFT_CONFIG", str(path))
    assert run(capsys, "list")[0] == EXIT_PASS
    assert run(capsys, "verify", "norm-convex-order")[0] == EXIT_USAGE


def test_tol_overrides(tmp_path, capsys):
    cid = "norm-cesaro-sharp/alpha=0.5,lam=0,beta=1"
    path = tmp_path / "tol.json"
    path.write_text(json.dumps({cid: 0.5}))
    code, out, _ = run(capsys, "verify", "norm-cesaro-sharp", "--alphas", "0.5", "--lambdas", "0", "--betas", "1",
                       "--tol-overrides", str(path), "--json")
    check = json.loads(out)["reports"][0]["checks"][0]
    assert check["id"] == cid and check["tolerance"] == 0.5 and code == EXIT_PASS


def test_sweep_override_changes_inputs():
    rep = run_scenario("norm-convex-order", Config(lambdas=(0.25,)))
    assert [c.id for c in rep.checks] == ["norm-convex-order/lam=0.25/upper", "norm-convex-order/lam=0.25/sharp"]


def test_parallel_matches_sequential(capsys):
    argv = ["verify", "all", "--json", "--radii", "12", "--angles", "96", "--refine", "1"]
    _, seq, _ = run(capsys, *argv)
    _, par, _ = run(capsys, *argv, "--parallel")
    a, b = strip_runtime(json.loads(seq)), strip_runtime(json.loads(par))
    for r in a["reports"] + b["reports"]:
        r["config"].pop("parallel")
    assert a == b


def test_norm_check_falsify_commands(capsys):
    code, out, _ = run(capsys, "norm", "--fn", "half_plane", "--json", *FAST)
    assert code == EXIT_PASS and json.loads(out)["value"] == pytest.approx(4.0, abs=0.1)
    code, _, _ = run(capsys, "check", "--fn", "half_plane", "--class", "convex", *FAST)
    assert code == EXIT_PASS
    code, _, _ = run(capsys, "check", "--fn", "half_plane", "--op", "cesaro", "--beta", "3", "--class", "convex",
                     *FAST)
    assert code == EXIT_FAIL
    code, out, _ = run(capsys, "falsify", "--fn", "koebe_order", "--op", "cesaro", "--beta", "2", "--json")
    assert code == EXIT_FAIL and json.loads(out)["collision"]["polished"]
    code, out, _ = run(capsys, "falsify", "--fn", "identity", "--json", *FAST)
    assert code == EXIT_PASS and json.loads(out)["collision"] is None
