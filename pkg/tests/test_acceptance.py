"""Acceptance criteria: one test, and one printed PASS/FAIL line, per criterion.

Tolerances are fixed here and never adjusted to make a criterion pass.
"""

import io
import json
import math
import time

import numpy as np
import pytest

from balloonstar import balloon, diskmax, series as ps, verifier
from balloonstar.caratheodory import schwarz_from_schur
from balloonstar.cli import run
from balloonstar.series import PowerSeries

CFG = verifier.SweepConfig()


def report(capsys, number: int, title: str, ok: bool, detail: str):
    with capsys.disabled():
        print(f"\nCRITERION {number} [{'PASS' if ok else 'FAIL'}] {title}: {detail}")


def cli_json(*argv):
    out = io.StringIO()
    code = run(list(argv), stdout=out, stderr=io.StringIO())
    return code, json.loads(out.getvalue())


def test_criterion_1_extremal_series(capsys):
    expected = {
        "f1": {1: 1, 2: 1, 3: 3 / 4, 4: 19 / 36, 5: 101 / 288},
        "f2": {1: 1, 2: 0, 3: 1 / 2, 4: 0, 5: 1 / 4, 6: 0, 7: 5 / 36},
        "f3": {1: 1, 2: 1j, 3: -3 / 4, 4: -19j / 36, 5: 101 / 288},
    }
    start = time.perf_counter()
    worst = 0.0
    for label, want in expected.items():
        code, data = cli_json("extremal", label, "--order", "8", "--format", "json")
        assert code == 0
        got = {int(k[1:]): complex(v["re"], v["im"]) for k, v in data["values"].items()}
        worst = max(worst, max(abs(got[n] - v) for n, v in want.items()))
    elapsed = time.perf_counter() - start
    ok = worst <= 1e-12 and elapsed < 1.0
    report(capsys, 1, "extremal series", ok, f"max error {worst:.3g} (tol 1e-12), {elapsed:.2f} s (limit 1 s)")
    assert ok


def test_criterion_2_coefficient_bounds(capsys):
    start = time.perf_counter()
    checks = verifier.audit_initial_coefficients(CFG)
    elapsed = time.perf_counter() - start
    by = {c.name: c for c in checks}
    sharp = all(
        by[n].verdict == "certified"
        and abs(by[n].observed - by[n].bound) <= 1e-3
        and abs(by[n].extremal_value - by[n].bound) <= 1e-10
        for n in ("a2", "a3", "a4")
    )
    a5 = by["a5"]
    a5_ok = a5.observed <= a5.bound + CFG.tol_upper and abs(a5.extremal_value - a5.bound) <= 1e-10
    ok = sharp and a5_ok and elapsed < 30
    detail = ", ".join(f"{c.name} {c.observed:.7g}/{c.bound:.7g} {c.verdict}" for c in checks)
    report(capsys, 2, "coefficient bounds", ok, f"{detail}; {elapsed:.1f} s (limit 30 s)")
    assert ok


def test_criterion_3_determinant_theorems(capsys):
    start = time.perf_counter()
    checks = verifier.audit_fekete_szego([1.0], CFG)
    checks += [verifier.sweep_bound(n, CFG) for n in verifier.THEOREM_IDS]
    checks += verifier.audit_log_coefficients(CFG)
    elapsed = time.perf_counter() - start
    failed = [c for c in checks if c.verdict != "certified"]
    ok = not failed and elapsed < 120
    detail = f"{len(checks) - len(failed)}/{len(checks)} certified"
    if failed:
        detail += "; " + ", ".join(
            f"{c.name} {c.verdict} (sup {c.observed:.7g} vs {c.bound:.7g}, extremal {c.extremal} gives {c.extremal_value:.7g})"
            for c in failed
        )
    report(capsys, 3, "determinant theorems", ok, f"{detail}; {elapsed:.1f} s (limit 120 s)")
    assert ok


def test_criterion_4_disk_maximum_oracle(capsys):
    start = time.perf_counter()
    rng = np.random.default_rng(4)
    triples = rng.uniform(-3, 3, size=(1000, 3))
    gaps = np.array([diskmax.y_exact(a, b, c).value - diskmax.y_oracle(a, b, c, 2000) for a, b, c in triples])
    # seam probe: every seam in B for random (A, C), plus A crossing zero
    jumps = []
    for a, c in rng.uniform(-3, 3, size=(1000, 2)):
        for s in diskmax.seam_values(a, c):
            jumps += [diskmax.seam_jump(a, s, c), diskmax.seam_jump(a, -s, c)]
    for b, c in rng.uniform(-3, 3, size=(200, 2)):
        jumps.append(abs(diskmax.y_exact(1e-8, b, c).value - diskmax.y_exact(-1e-8, b, c).value))
    elapsed = time.perf_counter() - start
    # the oracle is a grid maximum; allow only floating-point rounding above the exact value
    ok = gaps.min() >= -1e-12 and gaps.max() <= 1e-3 and max(jumps) < 1e-6 and elapsed < 60
    report(capsys, 4, "disk-maximum oracle", ok,
           f"gap range [{gaps.min():.3g}, {gaps.max():.3g}] (need >= 0, <= 1e-3), "
           f"{len(jumps)} seam probes max jump {max(jumps):.3g} (< 1e-6), {elapsed:.1f} s (limit 60 s)")
    assert ok


def test_criterion_5_proof_scalars(capsys):
    scalars = verifier.audit_proof_scalars(10_000)
    envelopes = verifier.audit_envelope_h21log()
    wanted = {
        "log envelope (printed) max": 1 / 16,
        "invlog envelope (printed) max": 31 / 460,
        "log phi2 sup on (zeta', 1)": 0.0516512,
        "invlog phi2 sup on (zeta', 1)": 43 / 576,
    }
    env = {i["name"]: i for i in envelopes["items"]}
    env_ok = all(abs(env[k]["observed"] - v) <= 1e-6 for k, v in wanted.items())
    residuals = [i for i in scalars["items"] if "T6 at zeta'" in i["name"]]
    ok = scalars["pass"] and env_ok
    detail = "; ".join(f"{i['name']} residual {i['observed']:.2g}" for i in residuals)
    detail += "; " + ", ".join(f"{k} = {env[k]['observed']:.7g}" for k in wanted)
    failed = [i["name"] for i in scalars["items"] if not i["pass"]]
    if failed:
        detail += "; failed: " + ", ".join(failed)
    report(capsys, 5, "proof scalars and envelopes", ok, detail)
    assert ok


def test_criterion_6_m_surface(capsys):
    rep = verifier.audit_M_surface(400)
    items = {i["name"]: i for i in rep["printed"]["items"]}
    cons = {i["name"]: i for i in rep["consistent"]["items"]}
    mx = items["max over region"]
    ok = (
        abs(mx["observed"] - 1090) <= 1e-6
        and items["argmax is (1, 0)"]["pass"]
        and items["max M(0,y) <= 342"]["pass"]
        and items["max M(x,0) <= 1090"]["pass"]
        and items["max M(x,1-x^2) <= 1090"]["pass"]
    )
    detail = (
        f"displayed surface max {mx['observed']:.10g} at ({mx['argmax'][0]:.6f}, {mx['argmax'][1]:.6f}); "
        f"edges y=0 {items['max M(x,0) <= 1090']['observed']:.7g}, x=0 {items['max M(0,y) <= 342']['observed']:.7g}, "
        f"y=1-x^2 {items['max M(x,1-x^2) <= 1090']['observed']:.10g}; "
        f"consistent surface max {cons['max over region']['observed']:.10g}, edges "
        f"{cons['max M(x,0) <= 1090']['observed']:.7g}/{cons['max M(0,y) <= 342']['observed']:.7g}/"
        f"{cons['max M(x,1-x^2) <= 1090']['observed']:.10g}"
    )
    report(capsys, 6, "T23 majorant surface", ok, detail)
    assert ok


def test_criterion_7_series_properties(capsys):
    rng = np.random.default_rng(7)
    order = 8
    worst = {"ring": 0.0, "exp/log": 0.0, "revert": 0.0, "gamma": 0.0}

    def rand_series(scale=1.0):
        return PowerSeries(scale * (rng.normal(size=order + 1) + 1j * rng.normal(size=order + 1)))

    def err(a, b):
        return float(np.max(np.abs(a.coeffs - b.coeffs)))

    z = PowerSeries.variable(order)
    for _ in range(1000):
        a, b, c = rand_series(), rand_series(), rand_series()
        worst["ring"] = max(worst["ring"], err(a * (b + c), a * b + a * c), err((a * b) * c, a * (b * c)),
                            err(a + b, b + a), err(a * b, b * a))
        u = PowerSeries(np.concatenate([[1.0], rand_series(0.25).coeffs[1:]]))
        h = PowerSeries(np.concatenate([[0.0], rand_series(0.5).coeffs[1:]]))
        worst["exp/log"] = max(worst["exp/log"], err(ps.exp(ps.log(u)), u), err(ps.log(ps.exp(h)), h))
        tail = rand_series().coeffs[2:] / 2 ** np.arange(1, order)
        f = PowerSeries(np.concatenate([[0, 1], tail]))
        g = ps.revert(f)
        worst["revert"] = max(worst["revert"], err(ps.compose(f, g), z), err(ps.compose(g, f), z))
    r = np.sqrt(rng.uniform(0, 1, (1000, 4)))
    params = r * np.exp(2j * np.pi * rng.uniform(0, 1, (1000, 4)))
    for p in params:
        m = balloon.member_from_schwarz(schwarz_from_schur(p, 6), 6)
        cs = m.coefficient_set()
        g = balloon.log_coefficients_series(m.f)
        G = balloon.inverse_log_coefficients_series(m.f)
        worst["gamma"] = max(worst["gamma"],
                             float(np.max(np.abs(g - [cs.gamma1, cs.gamma2, cs.gamma3]))),
                             float(np.max(np.abs(G - [cs.Gamma1, cs.Gamma2, cs.Gamma3]))))
    ok = worst["ring"] <= 1e-10 and worst["exp/log"] <= 1e-10 and worst["revert"] <= 1e-10 and worst["gamma"] <= 1e-10
    report(capsys, 7, "series engine properties", ok,
           ", ".join(f"{k} max error {v:.3g}" for k, v in worst.items()) + " (tol 1e-10, 1000 samples each)")
    assert ok


def test_criterion_8_geometry(capsys):
    rep = verifier.audit_geometry(4096)
    items = {i["name"]: i for i in rep["items"]}
    left = items["leftmost deviation"]
    ok = all(items[k]["pass"] for k in ("boundary residual", "tip", "conjugate symmetry", "starlikeness probe",
                                        "leftmost deviation"))
    detail = (
        f"residual {items['boundary residual']['observed']:.3g}, tip {items['tip']['observed']:.7g}, "
        f"symmetry {'exact' if items['conjugate symmetry']['pass'] else 'broken'}, "
        f"starlike {items['starlikeness probe']['pass']}, leftmost located {left['located']:.5f} "
        f"vs quoted {left['quoted']} deviation {left['observed']:.4g} (tol 1e-2)"
    )
    report(capsys, 8, "boundary geometry", ok, detail)
    assert ok


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-v"]))
