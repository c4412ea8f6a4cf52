"""Acceptance checks, one test per criterion.

Each test prints a single ``PASS``/``FAIL`` line straight to the terminal
(bypassing pytest's capture). Running this file as a script prints the
same eleven lines without pytest.
"""

from __future__ import annotations

import contextlib
import json
import math
import sys
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np
import pytest
from scipy import integrate as spi
from scipy import special as sps

from umbral import catalog, cli
from umbral import generating as gen
from umbral import operators as ops
from umbral import special as sf
from umbral.numeric import integrate_halfline_oscillatory
from umbral.series import bessel_j0_series, from_coefficients, tricomi_c0_series

ORDER = 40


@dataclass
class Outcome:
    title: str
    checks: list[tuple[str, float, float]] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def check(self, label: str, err: float, tol: float) -> None:
        self.checks.append((label, float(err), float(tol)))

    def require(self, label: str, ok: bool) -> None:
        # boolean conditions count as an error of 0 or 1 against tolerance 0
        self.check(label, 0.0 if ok else 1.0, 0.0)

    @property
    def failures(self) -> list[tuple[str, float, float]]:
        return [c for c in self.checks if not c[1] <= c[2]]

    @property
    def ok(self) -> bool:
        return bool(self.checks) and not self.failures

    def line(self, number: int) -> str:
        worst = max((c[1] / c[2] if c[2] else c[1]) for c in self.checks) if self.checks else float("nan")
        head = f"{'PASS' if self.ok else 'FAIL'} criterion {number}: {self.title}"
        detail = f"{len(self.checks)} checks, worst err/tol {worst:.2g}"
        if self.failures:
            detail += "; failing: " + ", ".join(f"{lab} ({e:.3g} > {t:.0g})" for lab, e, t in self.failures[:4])
        return f"{head} [{detail}]"


def _catalog_checks(out: Outcome, identity_id: str, points: list[dict], tol: float) -> None:
    for p in points:
        rep = catalog.run_identity(identity_id, p, tol_override=tol)
        label = f"{identity_id}{p}"
        if rep.status == "skipped" or rep.abs_err is None:
            out.require(f"{label} evaluated ({rep.reason})", False)
        else:
            out.check(label, min(rep.abs_err, rep.rel_err), tol)


# --- the eleven criteria ----------------------------------------------------------------

J0_ZEROS = sps.jn_zeros(0, 64)


def criterion_1() -> Outcome:
    out = Outcome("J0 half-line integral = 1 (oscillatory oracle) and I_J0 = 2 via Borel scaling")
    res = integrate_halfline_oscillatory(lambda x: float(sps.j0(x)), tol=1e-8,
                                         zeros=lambda k: float(J0_ZEROS[k]))
    out.check("oscillatory quadrature of J0", abs(res.value - 1.0), 1e-4)
    out.check("umbral closed form of J0 integral", abs(gen.bessel_j0_halfline_integral() - 1.0), 1e-4)
    # the half-order Borel image of J0 must be exp(-(x/2)^2), coefficient by coefficient
    image, _ = ops.apply_transform(bessel_j0_series(ORDER), ops.borel(0.5, 1.0))
    gauss = [0.0 if r % 2 else (-1) ** (r // 2) / (4 ** (r // 2) * math.factorial(r // 2)) for r in range(ORDER + 1)]
    out.check("half-order Borel image coefficients", float(np.max(np.abs(image.coeffs - gauss))), 1e-13)
    rep = catalog.run_identity("I_J0_recovery")
    out.check("I_J0 from the Borel image", rep.abs_err, 1e-6)
    out.check("I_J0 value", abs(rep.lhs - 2.0), 1e-6)
    return out


def criterion_2() -> Outcome:
    out = Outcome("Mellin integral of J0 at nu in {0.5, 1, 1.25}")
    for nu in (0.5, 1.0, 1.25):
        expected = 2 ** (nu - 1) * math.gamma(nu / 2) / math.gamma(1 - nu / 2)
        rep = catalog.run_identity("J0_mellin", {"nu": nu})
        out.check(f"quadrature nu={nu}", abs(rep.lhs - expected), 1e-4)
        out.check(f"closed form nu={nu}", abs(gen.bessel_j0_mellin(nu) - expected), 1e-12)
    return out


def criterion_3() -> Outcome:
    out = Outcome("Borel coefficient identities on C0 and J0")
    c0 = tricomi_c0_series(ORDER)
    B = ops.borel(1.0, 1.0)
    once, flag1 = ops.apply_transform(c0, B)
    exp_neg = [(-1) ** r / math.factorial(r) for r in range(ORDER + 1)]
    out.check("B[C0] = exp(-x)", float(np.max(np.abs(once.coeffs - exp_neg))), 1e-13)
    out.require("B[C0] flagged converged", flag1.status == "converged")
    twice, flag2 = ops.apply_transform(c0, B.power(2))
    out.check("B^2[C0] = 1/(1+x)", float(np.max(np.abs(twice.coeffs - [(-1) ** r for r in range(ORDER + 1)]))),
              1e-13)
    out.require("B^2[C0] flagged conditionally convergent", flag2.status == "conditionally-convergent")
    half, _ = ops.apply_transform(bessel_j0_series(ORDER), ops.borel(0.5, 1.0))
    gauss = [0.0 if r % 2 else (-1) ** (r // 2) / (4 ** (r // 2) * math.factorial(r // 2)) for r in range(ORDER + 1)]
    out.check("B_1/2[J0] = exp(-x^2/4)", float(np.max(np.abs(half.coeffs - gauss))), 1e-13)
    thrice, flag3 = ops.apply_transform(c0, B.power(3))
    out.require("B^3[C0] flagged divergent", flag3.status == "divergent")
    out.check("B^3[C0] coefficients are (-1)^r r!",
              max(abs(thrice.coeffs[r] / ((-1) ** r * math.factorial(r)) - 1) for r in range(ORDER + 1)), 1e-13)
    return out


def _doetsch_sum(x: float, y: float, t: float, l: int = 0, terms: int = 60) -> float:
    return math.fsum(t ** n / math.factorial(n) * sf.hermite2(2 * n + l, x, y) for n in range(terms))


def criterion_4() -> Outcome:
    out = Outcome("Doetsch rule and its generalization; triple-lacunary theorem")
    for identity_id in ("doetsch", "doetsch_general"):
        entry = catalog.get_entry(identity_id)
        points = catalog.points_for(entry, 10, seed=0)
        out.require(f"{identity_id}: 10 points", len(points) == 10)
        for p in points:
            x, y, t, l = p["x"], p["y"], p["t"], p.get("l", 0)
            out.require(f"{identity_id}: |t| <= 1/(8|y|) at {p}", abs(t) * 8 * abs(y) <= 1)
            closed = gen.doetsch_general(l, x, y, t) if l else gen.doetsch(x, y, t)
            partial = _doetsch_sum(x, y, t, l)
            out.check(f"{identity_id}{p}", abs(partial - closed) / max(1.0, abs(closed)), 1e-8)
    x, y, t = 0.3, 0.2, 0.1
    # sum over n of t^n/n! H_{3n}(x, y), against the double 30/30 truncation
    lhs = math.fsum(t ** n / math.factorial(n) * sf.hermite2(3 * n, x, y) for n in range(30))
    rhs = gen.triple_lacunary_series(x, y, t, 30)
    out.check("triple lacunary at (0.3, 0.2, 0.1)", abs(lhs - rhs), 1e-6)
    return out


def criterion_5() -> Outcome:
    out = Outcome("Laguerre suite: Laplace representation, lacunary and truncated-Bessel generating functions")
    for n in range(6):
        for x, y in ((0.4, 1.1), (-0.7, 0.3), (1.2, -0.5)):
            p = {"n": n, "x": x, "y": y}
            rep = catalog.run_identity("laguerre_laplace", p)
            out.check(f"laplace n={n} x={x} y={y}", rep.abs_err, 1e-8)
            # independent half-line quadrature of the same integrand
            ref, _ = spi.quad(lambda s: math.exp(-s) * sf.laguerre2(n, x * s, y), 0, np.inf,
                              epsabs=1e-13, epsrel=1e-13)
            out.check(f"laplace (scipy) n={n} x={x} y={y}", abs(ref - (y - x) ** n), 1e-8)
    for p in ({"x": 0.5, "y": 0.8, "xi": 0.3}, {"x": -1.0, "y": 1.5, "xi": 0.2}, {"x": 0.7, "y": -0.4, "xi": 0.9}):
        lhs = math.fsum(p["xi"] ** n * sf.laguerre2(2 * n, p["x"], p["y"]) for n in range(200))
        out.check(f"lacunary gf {p}", abs(lhs - gen.laguerre_lacunary_gf(**p)), 1e-8)
    for p in ({"x": 0.5, "y": 0.8, "xi": 0.7}, {"x": 2.0, "y": -0.5, "xi": 1.2}):
        lhs = math.fsum(p["xi"] ** n / math.factorial(n) * sf.bessel_truncated_poly(n, p["x"], p["y"])
                        for n in range(150))
        out.check(f"truncated-Bessel gf {p}", abs(lhs - gen.bessel_trunc_gf(**p)), 1e-8)
    return out


def criterion_6() -> Outcome:
    out = Outcome("Mittag-Leffler line integral = pi/Gamma(beta + 1/2) at beta in {0.5, 1}")
    for beta in (0.5, 1.0):
        rep = catalog.run_identity("ML_gaussianlike", {"beta": beta})
        expected = math.pi / math.gamma(beta + 0.5)
        out.check(f"quadrature beta={beta}", abs(rep.lhs - expected), 1e-6)
    # at beta = 1 the integrand is (1 - exp(-x^2))/x^2; integrating by parts gives 2 sqrt(pi)
    elementary, _ = spi.quad(lambda x: -math.expm1(-x * x) / (x * x) if x else 1.0, -np.inf, np.inf,
                             epsabs=1e-12, epsrel=1e-12)
    out.check("elementary oracle at beta=1", abs(elementary - 2 * math.sqrt(math.pi)), 1e-6)
    out.check("closed form at beta=1 is 2 sqrt(pi)",
              abs(gen.mittag_leffler_gaussian_integral(1.0) - 2 * math.sqrt(math.pi)), 1e-12)
    return out


def criterion_7() -> Outcome:
    out = Outcome("quartic Gaussian: z-route and s-route agree")
    for x, y in ((1.0, 1.0), (0.5, 2.0)):
        rep = catalog.run_identity("quartic_gaussian", {"x": x, "y": y})
        out.check(f"catalog routes at ({x}, {y})", rep.abs_err, 1e-6)
        z_ref, _ = spi.quad(lambda z: math.exp(-x * z * z - y * z ** 4), -np.inf, np.inf, epsabs=1e-13)
        out.check(f"scipy z-route vs s-route at ({x}, {y})", abs(z_ref - sf.quartic_gaussian_integral(x, y)), 1e-6)
    return out


def criterion_8() -> Outcome:
    out = Outcome("polynomial identities exact to 1e-10")
    trinomial = [{"m": m, "n": n, "a": a, "b": b, "c": c, "x": x}
                 for m in range(5) for n in range(7)
                 for a, b, c, x in ((1.0, 2.0, 1.0, 0.7), (-0.6, 1.3, 0.4, -1.1))]
    _catalog_checks(out, "trinomial_derivative", trinomial, 1e-10)
    pts = [{"n": n, "x": x, "y": y} for n in range(7) for x, y in ((0.5, 0.3), (-1.2, 0.8))]
    for identity_id in ("assoc_index_dup", "assoc_arg_dup", "assoc_xn", "heat_reduction_half", "heat_reduction_zero"):
        _catalog_checks(out, identity_id, pts, 1e-10)
    nielsen = [{"n": n, "m": m, "x": 0.5, "y": 0.3} for n in range(7) for m in range(7)]
    _catalog_checks(out, "nielsen", nielsen, 1e-10)
    return out


def criterion_9() -> Outcome:
    out = Outcome("PDE properties by finite differences")
    for identity_id in ("heat_equation", "ghp_pde", "ghp_complementary"):
        entry = catalog.get_entry(identity_id)
        n_grid = len(entry.grid)
        _catalog_checks(out, identity_id, catalog.points_for(entry, n_grid + 20, seed=7), 1e-5)
    return out


def criterion_10() -> Outcome:
    out = Outcome("inverse Borel after Borel is the identity on random order-25 series")
    rng = np.random.default_rng(20241015)
    for k in range(100):
        alpha = (0.5, 1.0)[k % 2]
        g = (1.0, 2.0)[(k // 2) % 2]
        f = from_coefficients(rng.uniform(-1, 1, 26))
        T = ops.borel(alpha, g)
        fwd, _ = ops.apply_transform(f, T)
        back, _ = ops.apply_transform(fwd, T.inverted())
        rel = np.abs(back.coeffs - f.coeffs) / np.maximum(np.abs(f.coeffs), 1e-300)
        out.check(f"series {k} (alpha={alpha}, gamma={g})", float(np.max(rel)), 1e-12)
    return out


def criterion_11(tmp_dir: Path) -> Outcome:
    out = Outcome("CLI verify exits 0 with no failures; JSON byte-identical across two runs")
    files = [tmp_dir / "run1.json", tmp_dir / "run2.json"]
    codes = []
    for f in files:
        with contextlib.redirect_stdout(sys.stderr):
            codes.append(cli.main(["verify", "--format", "json", "--output", str(f)]))
    out.require(f"exit codes {codes}", codes == [0, 0])
    a, b = (f.read_bytes() for f in files)
    out.require("byte-identical JSON", a == b)
    records = json.loads(a)
    fails = [r["id"] for r in records if r["status"] == "fail"]
    out.require(f"no failures ({fails[:5]})", not fails)
    out.require("every record has the report fields", all(set(catalog.IdentityReport.FIELDS) <= set(r) for r in records))
    return out


CRITERIA = {
    1: criterion_1, 2: criterion_2, 3: criterion_3, 4: criterion_4, 5: criterion_5, 6: criterion_6,
    7: criterion_7, 8: criterion_8, 9: criterion_9, 10: criterion_10,
}


def _emit(line: str, capsys=None) -> None:
    if capsys is not None:
        with capsys.disabled():
            print("\n" + line)
    else:
        print(line)


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number, capsys):
    out = CRITERIA[number]()
    _emit(out.line(number), capsys)
    assert out.ok, out.line(number)


def test_criterion_11_cli_contract(tmp_path, capsys):
    out = criterion_11(tmp_path)
    _emit(out.line(11), capsys)
    assert out.ok, out.line(11)


if __name__ == "__main__":
    import tempfile

    results = {n: fn() for n, fn in CRITERIA.items()}
    with tempfile.TemporaryDirectory() as d:
        results[11] = criterion_11(Path(d))
    for n in sorted(results):
        print(results[n].line(n))
    sys.exit(0 if all(r.ok for r in results.values()) else 1)
