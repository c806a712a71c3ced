"""The ten acceptance gates, one test each, in order.

Every test prints a single uncaptured line

    criterion N: PASS (detail)

so a bare pytest run shows the verdicts inline.  Tolerances and runtime
budgets are asserted, not just reported.
"""

import json
import math
import subprocess
import sys
import time

import numpy as np
import pytest

from latbounds.bounds import (cstar, gaussian_nu_closed_form, handshake_bound,
                              mu_norm, supergaussian_mu_closed_form,
                              transference_bound_l1, transference_bound_l2)
from latbounds.functions import TestFunctionSpec as FnSpec
from latbounds.functions import check_hypotheses
from latbounds.lattice import Lattice, integer_lattice, lll_reduce, \
    random_unimodular_lattice
from latbounds.verify import handshake_census, psf_residual, transference_check

SEEDED_DIMS = [2, 3, 2, 3, 2, 3, 2, 3, 2, 3]  # ten lattices, seeds 1..10

D4 = Lattice(np.array([[1.0, -1.0, 0.0, 0.0],
                       [0.0, 1.0, -1.0, 0.0],
                       [0.0, 0.0, 1.0, -1.0],
                       [0.0, 0.0, 1.0, 1.0]]), name="D4")


@pytest.fixture
def announce(capsys):
    def _announce(num, ok, detail):
        with capsys.disabled():
            print(f"criterion {num}: {'PASS' if ok else 'FAIL'} ({detail})")
        assert ok, f"criterion {num}: {detail}"
    return _announce


@pytest.fixture(scope="module")
def manifest_run(acceptance_manifest, tmp_path_factory):
    """The shipped manifest, run twice through the CLI for determinism."""
    outdir = tmp_path_factory.mktemp("reports")
    blobs, elapsed = [], []
    for i in (1, 2):
        out = outdir / f"report{i}.json"
        t0 = time.perf_counter()
        cp = subprocess.run(
            [sys.executable, "-m", "latbounds", "verify",
             str(acceptance_manifest), "--output", str(out)],
            capture_output=True, text=True)
        elapsed.append(time.perf_counter() - t0)
        assert cp.returncode == 0, cp.stdout + cp.stderr
        blobs.append(out.read_bytes())
    return {"report": json.loads(blobs[0]), "blobs": blobs,
            "elapsed": elapsed[0],
            "manifest": json.loads(acceptance_manifest.read_text())}


def test_criterion_01_cstar(announce):
    t0 = time.perf_counter()
    c = cstar()
    dt = time.perf_counter() - t0
    ok = 0.424785 <= c <= 0.424795 and dt < 1.0
    announce(1, ok, f"C* = {c:.12f} in [0.424785, 0.424795], {dt:.3f}s")


def test_criterion_02_l1_coefficient(announce):
    t0 = time.perf_counter()
    exact = (1 + cstar()) ** 2 * 3 / (4 * math.pi ** 2)
    gap = 0.154264 - exact
    dt = time.perf_counter() - t0
    ok = exact < 0.154264 and dt < 1.0
    announce(2, ok, f"(1+C*)^2 3/(4 pi^2) = {exact:.11f} < 0.154264, "
                    f"gap {gap:.3e}, {dt:.3f}s")


def test_criterion_03_closed_forms_match_optimizer(announce):
    t0 = time.perf_counter()
    worst = 0.0
    cases = 0
    for n in (1, 2, 4, 8):
        for tau in (0.5, 1.0, 2.0):
            r = math.sqrt(tau * n / math.pi)
            cf = gaussian_nu_closed_form(tau, n).value
            opt = mu_norm(FnSpec("gaussian", n), r, n).value
            worst = max(worst, abs(cf - opt) / cf)
            cases += 1
    for p in (0.5, 1.0, 1.5, 2.0):
        for t in (1.0, 1.5, 2.0):
            for n in (1, 2, 4):
                r = t * (n / p) ** (1.0 / p)
                cf = supergaussian_mu_closed_form(p, r, n).value
                opt = mu_norm(FnSpec("supergaussian", n, p=p), r, n).value
                worst = max(worst, abs(cf - opt) / cf)
                cases += 1
    dt = time.perf_counter() - t0
    ok = cases == 48 and worst <= 1e-9 and dt < 5.0
    announce(3, ok, f"{cases} grid points, worst rel dev {worst:.2e}, {dt:.2f}s")


def test_criterion_04_poisson_summation(announce):
    t0 = time.perf_counter()
    lattices = [integer_lattice(n) for n in (1, 2, 3)]
    lattices += [random_unimodular_lattice(d, s + 1)
                 for s, d in enumerate(SEEDED_DIMS)]
    rng = np.random.default_rng(20260823)
    worst_fast, worst_slow = 0.0, 0.0
    for L in lattices:
        for fam in ("gaussian", "inv_cosh_product"):
            spec = FnSpec(fam, L.dim)
            for t in (1.0, 1.5):
                for v in (np.zeros(L.dim), rng.uniform(-0.5, 0.5, L.dim)):
                    res = psf_residual(L, spec, v, t, 1e-9)
                    worst_fast = max(worst_fast, res)
    for n in (1, 2):
        L = integer_lattice(n)
        spec = FnSpec("exp_l1", n)
        for t in (1.0, 1.5):
            for v in (np.zeros(n), rng.uniform(-0.5, 0.5, n)):
                res = psf_residual(L, spec, v, t, 1e-7)
                worst_slow = max(worst_slow, res)
    dt = time.perf_counter() - t0
    ok = worst_fast <= 1e-8 and worst_slow <= 1e-6 and dt < 120.0
    announce(4, ok, f"13 lattices x 4 (t,v): gaussian/inv_cosh residual "
                    f"<= {worst_fast:.2e}, exp_l1 <= {worst_slow:.2e}, {dt:.1f}s")


def test_criterion_05_tail_manifest(announce, manifest_run):
    recs = [r for r in manifest_run["report"]["records"]
            if r["check"] == "tail_inequality"]
    checks = [c for c in manifest_run["manifest"]["checks"]
              if c["check_name"] == "tail_inequality"]
    fails = sum(r["verdict"] != "PASS" for r in recs)

    # coverage of the required grid
    gz = {(c["params"]["lattice"]["dim"], c["params"]["tau"])
          for c in checks if c["params"]["family"] == "gaussian"
          and c["params"]["lattice"]["kind"] == "integer"}
    want_gz = {(n, tau) for n in (1, 2, 3, 4, 5) for tau in (0.75, 1.0, 2.0)}
    seeded = {(c["params"]["lattice"]["dim"], c["params"]["lattice"]["seed"])
              for c in checks if c["params"]["family"] == "gaussian"
              and c["params"]["lattice"]["kind"] == "unimodular"}
    taus_seeded = all(
        {c["params"]["tau"] for c in checks
         if c["params"]["family"] == "gaussian"
         and c["params"]["lattice"]["kind"] == "unimodular"
         and (c["params"]["lattice"]["dim"],
              c["params"]["lattice"]["seed"]) == key} == {0.75, 1.0, 2.0}
        for key in seeded)
    ic = {c["params"]["lattice"]["dim"] for c in checks
          if c["params"]["family"] == "inv_cosh_product"}
    sg = {(c["params"]["p"], c["params"]["tscale"], c["params"]["lattice"]["dim"])
          for c in checks if c["params"]["family"] == "supergaussian"}
    want_sg = {(p, ts, n) for p in (1.0, 2.0) for ts in (1.2, 1.5)
               for n in (2, 3)}
    covered = (gz == want_gz and len(seeded) == 10
               and all(d <= 4 for d, _ in seeded) and taus_seeded
               and ic == {2, 3} and sg == want_sg)

    ok = (len(recs) == 55 and fails == 0 and covered
          and manifest_run["elapsed"] < 300.0)
    announce(5, ok, f"{len(recs)} tail cases, {fails} FAIL/inconclusive, "
                    f"grid covered, manifest run {manifest_run['elapsed']:.1f}s")


def test_criterion_06_part1_part3_manifest(announce, manifest_run):
    recs = [r for r in manifest_run["report"]["records"]
            if r["check"] in ("part1", "part3")]
    fails = sum(r["verdict"] != "PASS" for r in recs)
    idents = [r for r in recs if r["check"] == "part1"
              and r["params"]["t"] == 1.0 and not any(r["params"]["v"])]
    ident_ok = idents and all(abs(r["margin"]) <= 1e-12 for r in idents)
    ok = (len(recs) == 20 and fails == 0 and ident_ok
          and manifest_run["elapsed"] < 120.0)
    announce(6, ok, f"{len(recs)} part1+part3 cases, {fails} FAIL, "
                    f"{len(idents)} identities with margin <= 1e-12")


def test_criterion_07_transference(announce):
    t0 = time.perf_counter()
    worst_slack = math.inf
    anchor_ok = False
    for n in (1, 2, 3, 4):
        res = 32 if n == 4 else 64
        L = integer_lattice(n)
        for p in (2.0, 1.0):
            rep = transference_check(L, p, resolution=res)
            assert rep.verdict == "PASS", (n, p)
            worst_slack = min(worst_slack, rep.stated_bound - rep.product_upper)
            if n == 1 and p == 2.0:
                # sigma2(Z) rho2(Z) = 1/2 exactly at the grid's deep hole
                anchor_ok = (rep.sigma == 1.0
                             and abs(rep.rho_bracket[0] - 0.5) < 1e-15)
    for s, d in enumerate(SEEDED_DIMS):
        L = random_unimodular_lattice(d, s + 1)
        for p in (2.0, 1.0):
            rep = transference_check(L, p, resolution=64)
            assert rep.verdict == "PASS", (L.name, p)
            worst_slack = min(worst_slack, rep.stated_bound - rep.product_upper)
    dt = time.perf_counter() - t0
    ok = anchor_ok and worst_slack > 0 and dt < 300.0
    announce(7, ok, f"28 products under their bounds (min slack "
                    f"{worst_slack:.3f}), anchor rho2(Z) = 1/2 exact, {dt:.1f}s")


def test_criterion_08_handshake(announce):
    t0 = time.perf_counter()
    ok = True
    for n in range(1, 7):
        L = integer_lattice(n)
        for u in (1.0, 1.5):
            hc = handshake_census(L, 2.0, u)
            ok &= hc.passed and hc.count % 2 == 0
            if u == 1.0:
                ok &= hc.count == 2 * n
    for u in (1.0, 1.5):
        hc = handshake_census(D4, 2.0, u)
        ok &= hc.passed and hc.count % 2 == 0
        if u == 1.0:
            ok &= hc.count == 24
    # reduction invariance: skewed bases of the same lattices agree
    U = np.array([[1, 0, 0, 0], [3, 1, 0, 0], [0, -2, 1, 0], [1, 0, 0, 1]],
                 dtype=float)
    skewed = Lattice(U @ D4.basis)
    ok &= handshake_census(skewed, 2.0, 1.5).count == \
        handshake_census(D4, 2.0, 1.5).count
    ok &= handshake_census(lll_reduce(skewed), 2.0, 1.5).count == \
        handshake_census(D4, 2.0, 1.5).count
    dt = time.perf_counter() - t0
    ok &= dt < 60.0
    announce(8, ok, f"Z^1..Z^6 (2n at u=1) and D4 (24), u in {{1, 1.5}}, "
                    f"counts even, <= bound, reduction-invariant, {dt:.1f}s")


def test_criterion_09_hypothesis_sampling(announce, table05, table15):
    t0 = time.perf_counter()
    cases = [("gaussian", None, None), ("sech_product", None, None),
             ("inv_cosh_product", None, None), ("exp_l1", None, None),
             ("supergaussian", 0.5, table05), ("supergaussian", 1.0, None),
             ("supergaussian", 1.5, table15), ("supergaussian", 2.0, None)]
    total_viol = 0
    worst = math.inf
    for fam, p, table in cases:
        rep = check_hypotheses(FnSpec(fam, 3, p=p), samples=10000, seed=7,
                               table=table)
        total_viol += sum(st.violations for st in rep.checks.values())
        worst = min(worst, *(st.worst_margin for st in rep.checks.values()))
    dt = time.perf_counter() - t0
    ok = total_viol == 0 and dt < 60.0
    announce(9, ok, f"8 family/p cases x 3 hypotheses x 10^4 samples: "
                    f"{total_viol} violations (worst margin {worst:.1e}), {dt:.1f}s")


def test_criterion_10_determinism(announce, manifest_run):
    a, b = manifest_run["blobs"]
    ok = a == b and len(a) > 0
    announce(10, ok, f"two manifest runs byte-identical ({len(a)} bytes)")
