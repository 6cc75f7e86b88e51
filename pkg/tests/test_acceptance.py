"""Exit criteria. Each test records one PASS/FAIL line in the terminal summary."""

import csv
import io
import json
import math

import numpy as np
import pytest
from scipy.optimize import minimize_scalar

from conftest import ACCEPTANCE
from exprgen import random_env_sets, random_expr
from mnesor import DiscreteFuzzySet, fs_intersect, fs_is_subset, fs_min, fs_equals, fs_scale, kernels
from mnesor.algebra import MUTANTS, check, law_catalog
from mnesor.cli import main
from mnesor.expr import Env, evaluate, simplify_with_steps, size
from mnesor.grade import ck, g_pow, grade_new
from mnesor.setfile import parse_sets

SEED = 20261018


@pytest.fixture
def record(request):
    lines = []

    def _record(text):
        lines.append(text)

    yield _record
    name = request.node.name.replace("test_", "").split("_")[0].upper().replace("AC", "AC-")
    failed = request.node.rep_call.failed if hasattr(request.node, "rep_call") else True
    status = "FAIL" if failed else "PASS"
    ACCEPTANCE.append(f"{status}  {name}: {'; '.join(lines)}")


def _cli(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("instance", ["discrete", "sampled", "grade"])
def test_ac1_axiom_suite(instance, capsys, record):
    code, out, _ = _cli(
        ["check", instance, "--cases", "1000", "--seed", "42", "--k", "0.4", "--tol", "1e-9"], capsys
    )
    report = json.loads(out)
    record(f"{instance}: verdict={report['verdict']} exit={code}")
    assert code == 0 and report["verdict"] == "pass"
    graded = instance == "grade"
    for law in report["laws"]:
        applicable = law["id"] != "L19" or graded
        assert law["status"] == ("checked" if applicable else "skipped"), law
        assert law["failures"] == 0
        if applicable:
            assert law["run"] == 1000
    assert len(report["laws"]) == len(law_catalog())


@pytest.mark.parametrize("mutant", sorted(MUTANTS))
def test_ac2_mutation_sensitivity(mutant, record):
    report = check(MUTANTS[mutant](), cases=1000, seed=42, tol=1e-9)
    record(f"{mutant}: failing laws {report.failed_laws()}")
    assert report.verdict == "fail"
    assert report.failed_laws()


def test_ac3_meet_collapse(record):
    rng = np.random.default_rng(SEED)
    universe = [f"u{i}" for i in range(8)]
    worst = 0.0
    for _ in range(200):
        pair = []
        for _ in range(2):
            v = rng.random(len(universe))
            v[rng.random(len(universe)) < 0.1] = 0.0
            v[rng.random(len(universe)) < 0.1] = 1.0
            pair.append(DiscreteFuzzySet(universe, v))
        a, b = pair
        oracle = np.minimum(a.values, b.values)
        for k in (0.1, 0.4, 1.0, 5.0):
            got = fs_intersect(a, b, k)
            worst = max(worst, float(np.max(np.abs(got.values - oracle))))
    record(f"max |De Morgan meet - min| = {worst:.3g} (tol 1e-9)")
    assert worst <= 1e-9


def _oracle_sup_gap(k, n=100_001):
    """Dense scan with the math module, refined by bounded maximization."""
    best, arg = -1.0, 0
    for i in range(n):
        x = i / (n - 1)
        c = 1.0 if x == 0.0 else 0.0 if x == 1.0 else math.exp(k / math.log(x))
        gap = abs(c - (1.0 - x))
        if gap > best:
            best, arg = gap, i
    h = 1.0 / (n - 1)
    lo, hi = max(arg - 1, 1) * h, min(arg + 1, n - 2) * h
    res = minimize_scalar(lambda x: -abs(math.exp(k / math.log(x)) - (1 - x)),
                          bounds=(lo, hi), method="bounded", options={"xatol": 1e-13})
    return best, -res.fun


def test_ac4_ck_close_to_one_minus(record):
    gap4, _ = kernels.ck_gap_sup(0.4, 100_001)
    gap5, _ = kernels.ck_gap_sup(0.5, 100_001)
    scan4, sup4 = _oracle_sup_gap(0.4)
    scan5, sup5 = _oracle_sup_gap(0.5)
    record(f"k=0.4 sup gap {gap4:.6f} (oracle {sup4:.6f}); k=0.5 sup gap {gap5:.6f} (oracle {sup5:.6f})")
    # frozen from the oracle: 0.0778403147 and 0.1039218799
    assert sup4 == pytest.approx(0.0778403147, abs=1e-9)
    assert sup5 == pytest.approx(0.1039218799, abs=1e-9)
    assert gap4 == pytest.approx(scan4, abs=1e-12)
    assert gap5 == pytest.approx(scan5, abs=1e-12)
    assert 0.070 <= gap4 <= 0.085
    assert gap5 > gap4
    assert gap5 == pytest.approx(0.105, abs=0.005)


def test_ac5_ck_identities(record):
    rng = np.random.default_rng(SEED + 5)
    worst = 0.0
    for _ in range(10_000):
        k = float(rng.uniform(0.1, 5.0))
        n = float(math.exp(rng.uniform(math.log(0.05), math.log(4.0))))
        r = rng.random()
        x = 0.0 if r < 0.02 else 1.0 if r < 0.04 else float(rng.random())
        g = grade_new(x)
        worst = max(
            worst,
            abs(ck(k, ck(k, g)).value - x),
            abs(g_pow(ck(k, g), n).value - ck(k * n, g).value),
            abs(ck(k, g_pow(g, n)).value - ck(k / n, g).value),
        )
    fixed = 0.0
    for k in rng.uniform(0.1, 5.0, size=100):
        xs = grade_new(math.exp(-math.sqrt(k)))
        fixed = max(fixed, abs(ck(float(k), xs).value - xs.value))
    record(f"identity error {worst:.3g} (tol 1e-9); fixed-point error {fixed:.3g} (tol 1e-12)")
    assert worst <= 1e-9
    assert fixed <= 1e-12


def test_ac6_selectivity(record):
    rng = np.random.default_rng(SEED + 6)
    universe = [f"u{i}" for i in range(8)]
    bad = 0
    for i in range(500):
        a = DiscreteFuzzySet(universe, rng.random(len(universe)))
        if i % 2 == 0:
            lam = float(1.0 - rng.random())  # (0, 1]
            ok = fs_is_subset(fs_scale(a, lam), a, 1e-12)
        else:
            lam = float(rng.uniform(1.0, 4.0))
            ok = fs_is_subset(a, fs_scale(a, lam), 1e-12)
        bad += not ok
    record(f"{500 - bad}/500 order statements hold (tol 1e-12)")
    assert bad == 0


def test_ac7_simplifier_soundness(record):
    rng = np.random.default_rng(SEED + 7)
    worst, over_budget, fired = 0.0, 0, 0
    for _ in range(500):
        e = random_expr(rng, depth=6)
        env = Env(random_env_sets(rng), float(rng.uniform(0.1, 5.0)))
        s, steps = simplify_with_steps(e)
        fired += steps > 0
        over_budget += steps > size(e) ** 2
        before, after = evaluate(e, env), evaluate(s, env)
        worst = max(worst, float(np.max(np.abs(before.values - after.values))))
    record(f"max deviation {worst:.3g} (tol 1e-9); {fired}/500 rewritten; {over_budget} over step bound")
    assert worst <= 1e-9
    assert over_budget == 0


def test_ac8_cli_round_trips(tmp_path, capsys, record):
    from pathlib import Path

    data = Path(__file__).resolve().parent.parent / "data"
    eval_argv = ["eval", "--env", str(data / "students.json"), "-e", "HIGH * 0.5", "-e", "~HIGH & YOUNG"]
    code, out1, _ = _cli(eval_argv, capsys)
    assert code == 0
    reloaded = parse_sets(json.loads(out1))
    assert set(reloaded) == {"HIGH * 0.5", "~HIGH & YOUNG"}

    plot_argv = ["plot", "--env", str(data / "education.json"), "-e", "HIGH", "-e", "HIGH * 0.5",
                 "--domain", "0:30", "--samples", "300"]
    code, csv1, _ = _cli(plot_argv, capsys)
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(csv1)))
    high = [float(r["mu"]) for r in rows if r["name"] == "HIGH"]
    half = [float(r["mu"]) for r in rows if r["name"] == "HIGH * 0.5"]
    assert len(high) == len(half) == 300
    assert all(h2 <= h for h, h2 in zip(high, half))

    check_argv = ["check", "grade", "--cases", "200"]
    _, rep1, _ = _cli(check_argv, capsys)
    identical = (
        _cli(eval_argv, capsys)[1] == out1
        and _cli(plot_argv, capsys)[1] == csv1
        and _cli(check_argv, capsys)[1] == rep1
    )
    record(f"eval output reloads; HIGH * 0.5 curve dominated at 300/300 samples; byte-identical reruns={identical}")
    assert identical
