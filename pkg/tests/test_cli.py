import json
import subprocess
import sys
from importlib import resources

import jsonschema
import pytest

from tricount.cache import ResultCache, cache_key
from tricount.cli import main
from tricount.families import double_circle, random_points
from tricount.verify import CHECKS, parse_checks, verify_point_set


def schema(name):
    return json.loads(resources.files("tricount").joinpath("schemas", name).read_text())


ENUM_SCHEMA = schema("enumeration_report.v1.json")
VERIFY_SCHEMA = schema("verification_report.v1.json")


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def workdir(tmp_path, monkeypatch, tmp_cache):
    monkeypatch.chdir(tmp_path)
    return tmp_path


def test_gen_double_chain(workdir, capsys):
    code, out, _ = run(capsys, "gen", "double-chain", "--k", "5", "-o", "dc5.pts")
    assert code == 0
    lines = (workdir / "dc5.pts").read_text().splitlines()
    assert "10" in lines and len([ln for ln in lines if not ln.startswith("#")]) == 11
    side = json.loads((workdir / "dc5.pts.json").read_text())
    assert side["spec"]["k"] == 5 and side["certification"]["ok"]
    assert json.loads(out)["enumerated"] == "1750"


def test_gen_convex_and_random(workdir, capsys):
    assert run(capsys, "gen", "convex", "--n", "8", "-o", "c8.pts")[0] == 0
    assert run(capsys, "gen", "random", "--n", "9", "--seed", "42", "-o", "r1.pts")[0] == 0
    assert run(capsys, "gen", "random", "--n", "9", "--seed", "42", "-o", "r2.pts")[0] == 0
    assert (workdir / "r1.pts").read_bytes() == (workdir / "r2.pts").read_bytes()


def test_gen_bad_params(workdir, capsys):
    assert run(capsys, "gen", "double-chain", "--k", "1", "-o", "x.pts")[0] == 2
    assert run(capsys, "gen", "random", "--n", "5", "-o", "x.pts")[0] == 2


def test_gen_certification_failure(workdir, capsys, monkeypatch):
    import tricount.families as fam

    monkeypatch.setattr(fam, "expected_hull", lambda spec: (99, 0))
    assert run(capsys, "gen", "convex", "--n", "5", "-o", "x.pts")[0] == 3


def test_count_and_cache(workdir, capsys):
    run(capsys, "gen", "double-chain", "--k", "5", "-o", "dc5.pts", "--no-count")
    code, out, _ = run(capsys, "count", "dc5.pts")
    first = json.loads(out)
    assert code == 0 and first["count"] == "1750" and first["cached"] is False
    jsonschema.validate(first, ENUM_SCHEMA)
    code, out, _ = run(capsys, "count", "dc5.pts")
    second = json.loads(out)
    assert second["cached"] is True and second["count"] == first["count"]
    jsonschema.validate(second, ENUM_SCHEMA)
    # different flags are a different cache entry
    code, out, _ = run(capsys, "count", "dc5.pts", "--degree-sums")
    third = json.loads(out)
    assert third["cached"] is False and third["V"]
    lines = (workdir / "cache.jsonl").read_text().splitlines()
    assert len(lines) == 2


def test_count_examples(workdir, capsys):
    run(capsys, "gen", "convex", "--n", "8", "-o", "c8.pts", "--no-count")
    run(capsys, "gen", "double-circle", "--k", "4", "-o", "dci4.pts", "--no-count")
    assert json.loads(run(capsys, "count", "c8.pts")[1])["count"] == "132"
    assert json.loads(run(capsys, "count", "dci4.pts")[1])["count"] == "30"


def test_count_brute_and_list(workdir, capsys):
    run(capsys, "gen", "convex", "--n", "6", "-o", "c6.pts", "--no-count")
    code, out, _ = run(capsys, "count", "c6.pts", "--method", "brute", "--list", "--no-cache")
    rep = json.loads(out)
    jsonschema.validate(rep, ENUM_SCHEMA)
    assert rep["method"] == "brute_force" and len(rep["triangulations"]) == 14
    flip = json.loads(run(capsys, "count", "c6.pts", "--list", "--no-cache")[1])
    assert flip["triangulations"] == rep["triangulations"]


def test_count_errors(workdir, capsys):
    (workdir / "col.pts").write_text("4\n0 0\n1 0\n2 0\n0 1\n")
    code, out, _ = run(capsys, "count", "col.pts")
    assert code == 4 and json.loads(out)["violating_triple"] == [0, 1, 2]
    (workdir / "bad.pts").write_text("3\n0 0\n1 x\n0 1\n")
    assert run(capsys, "count", "bad.pts")[0] == 2
    assert run(capsys, "count", "missing.pts")[0] == 2
    run(capsys, "gen", "convex", "--n", "9", "-o", "c9.pts", "--no-count")
    assert run(capsys, "count", "c9.pts", "--limit", "10")[0] == 5
    assert run(capsys, "count", "c9.pts", "--method", "brute")[0] == 2


def test_verify_double_circle(workdir, capsys):
    run(capsys, "gen", "double-circle", "--k", "3", "-o", "dc3.pts", "--no-count")
    code, out, _ = run(capsys, "verify", "dc3.pts", "--checks", ",".join(CHECKS))
    rep = json.loads(out)
    jsonschema.validate(rep, VERIFY_SCHEMA)
    assert code == 0 and rep["ok"]
    assert [c["name"] for c in rep["checks"]] == list(CHECKS)
    assert all(c["status"] == "pass" for c in rep["checks"])


def test_verify_convex_bound(workdir, capsys):
    run(capsys, "gen", "convex", "--n", "6", "-o", "c6.pts", "--no-count")
    code, out, _ = run(capsys, "verify", "c6.pts", "--checks", "euler,bound")
    rep = json.loads(out)
    bound = rep["checks"][1]["details"]
    assert code == 0 and bound["count"] == "14"
    # 7^6 / C(12, 6) = 117649 / 924, reduced
    assert bound["bound"] == "16807/132"


def test_verify_random_local(workdir, capsys):
    run(capsys, "gen", "random", "--n", "9", "--seed", "7", "-o", "r.pts")
    code, out, _ = run(capsys, "verify", "r.pts", "--checks", "delete,insert")
    rep = json.loads(out)
    assert code == 0
    assert rep["checks"][0]["details"]["max_attained"]
    assert rep["checks"][1]["details"]["max_attained"]["interior"]


def test_verify_bad_checks(workdir, capsys):
    run(capsys, "gen", "convex", "--n", "5", "-o", "c5.pts", "--no-count")
    assert run(capsys, "verify", "c5.pts", "--checks", "euler,nonsense")[0] == 2


def test_verify_failure_exit(workdir, capsys, monkeypatch):
    import tricount.verify as ver

    monkeypatch.setitem(ver.RUNNERS, "bound", lambda ctx: (ver.FAIL, {}))
    run(capsys, "gen", "convex", "--n", "5", "-o", "c5.pts", "--no-count")
    assert run(capsys, "verify", "c5.pts", "--checks", "bound")[0] == 1


def test_verify_report_skips():
    rep = verify_point_set(random_points(9, 1), ["oracle"])
    assert rep.checks[0].status == "skipped" and rep.ok


def test_parse_checks_dedupes():
    assert parse_checks("euler,bound,euler") == ["euler", "bound"]
    with pytest.raises(ValueError):
        parse_checks("")


def test_bound(capsys):
    code, out, _ = run(capsys, "bound", "--v", "0", "--b", "3")
    assert code == 0 and out.splitlines() == ["49/12", "4.08333"]
    assert run(capsys, "bound", "--v", "0", "--b", "3", "--remark")[1].splitlines()[0] == "49/12"
    out = run(capsys, "bound", "--v", "2", "--b", "4")[1].splitlines()
    from fractions import Fraction
    from math import comb
    assert Fraction(out[0]) == Fraction(59**2 * 7**4, comb(12, 6))
    assert run(capsys, "bound", "--v", "-1", "--b", "3")[0] == 2
    assert run(capsys, "bound", "--v", "0", "--b", "2")[0] == 2


def test_formula(capsys):
    assert run(capsys, "formula", "catalan", "--m", "8")[1].strip() == "1430"
    assert run(capsys, "formula", "double-circle", "--k", "5")[1].strip() == "250"
    assert run(capsys, "formula", "insertion", "--i", "4", "--location", "boundary")[1].strip() == "2"
    assert run(capsys, "formula", "double-chain")[0] == 2
    assert run(capsys, "formula", "double-chain", "--k", "1")[0] == 2


def test_repro_subset(workdir, capsys):
    code, out, _ = run(capsys, "repro", "--fast", "--only", "1,12", "--threads", "1", "--json", "r.json")
    assert code == 0
    assert out.count("PASS") == 2
    rep = json.loads((workdir / "r.json").read_text())
    jsonschema.validate(rep, VERIFY_SCHEMA)
    assert rep["ok"] and [c["name"] for c in rep["checks"]] == ["criterion_1", "criterion_12"]
    assert run(capsys, "repro", "--only", "13")[0] == 2


def test_help_for_every_subcommand():
    for cmd in ("gen", "count", "verify", "bound", "formula", "repro"):
        res = subprocess.run([sys.executable, "-m", "tricount.cli", cmd, "--help"],
                             capture_output=True, text=True)
        assert res.returncode == 0 and "--threads" in res.stdout


def test_cache_tolerates_torn_line(tmp_path):
    path = tmp_path / "c.jsonl"
    cache = ResultCache(path)
    key = cache_key("ab", "flip_bfs", {"list": False})
    cache.append(key, {"count": "5"})
    with path.open("a") as fh:
        fh.write('{"key": ')
    assert cache.lookup(key) == {"count": "5"}
    assert cache.lookup(cache_key("cd", "flip_bfs", {})) is None


def test_verify_report_json_shape():
    rep = verify_point_set(double_circle(3), ["euler", "remark"], {"path": "x"}).to_json()
    jsonschema.validate(rep, VERIFY_SCHEMA)
    assert rep["counts"]["count"] == "4"
