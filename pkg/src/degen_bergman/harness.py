"""Parameter sweeps, rate fits and the acceptance runner.

A sweep evaluates one family over a list of parameter values and kernel
points, attaches the matching predictor to every row and fits the law that
the family is expected to follow:

* node and second cusp: ``psi - log k_0 ~ C / (-log|lam|)``;
* first cusp: ``|k_lam - limit| ~ |lam|^slope``.

:func:`acceptance_run` executes the numbered acceptance criteria and
returns one verdict per criterion.
"""
import csv
import io
import json
import math
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import asymptotics as asy
from .kernel import (intrinsic_kernel_at, jacobian_density, kernel_at,
                     kernel_generic, normalization_kernel)
from .periods import compute_periods, det_im_Z
from .quadrature import (QuadratureConfig, SegmentIntegral, adaptive_oracle,
                         segment_period)
from .surface import (FamilyKind, make_family, normalization_curve,
                      chain_basis, symplectic_basis, symplectic_form,
                      transform_basis)

__all__ = [
    "SweepConfig", "SweepReport", "Verdict", "CSV_COLUMNS", "lambda_grid",
    "run_sweep", "fit_loglog", "fit_log_inverse", "phase_average",
    "acceptance_run", "SUITES", "worker_count",
]

CSV_COLUMNS = (
    "lambda_re", "lambda_im", "abs_lambda", "z_re", "z_im", "k_lambda", "k0",
    "psi", "psi_minus_logk0", "predicted", "ratio", "det_imZ", "mu_lambda",
    "sym_defect", "min_eig",
)
FIT_POINTS = 6
SEED = 20240611


def worker_count():
    """Worker cap from ``DEGEN_BERGMAN_THREADS`` (default: logical cores)."""
    env = os.environ.get("DEGEN_BERGMAN_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return os.cpu_count() or 1


def _map(fn, items):
    items = list(items)
    n = min(worker_count(), len(items))
    if n <= 1 or len(items) < 4:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=n) as ex:
        return list(ex.map(fn, items))


def lambda_grid(start, end, per_decade=2, phases=(0.0,)):
    """Geometric grid of moduli from `start` down to `end`, times phases."""
    start, end = abs(float(start)), abs(float(end))
    if not (start > 0 and end > 0):
        raise ValueError("grid moduli must be positive")
    per_decade = int(per_decade)
    if per_decade < 1:
        raise ValueError("points per decade must be positive")
    n = int(round(abs(math.log10(start / end)) * per_decade))
    mods = np.logspace(math.log10(start), math.log10(end), n + 1)
    return [complex(m * np.exp(1j * ph)) for m in mods for ph in phases]


# ----------------------------------------------------------------- fits

def fit_loglog(xs, ys):
    """Least-squares line through ``(log x, log y)``: slope, intercept, R^2."""
    xs, ys = np.asarray(xs, dtype=float), np.asarray(ys, dtype=float)
    if xs.size < 3 or xs.size != ys.size:
        raise ValueError("need at least 3 paired points")
    if np.any(xs <= 0) or np.any(ys <= 0):
        raise ValueError("log-log fit needs positive data")
    d = np.diff(xs)
    if not (np.all(d > 0) or np.all(d < 0)):
        raise ValueError("abscissae must be strictly monotone")
    lx, ly = np.log(xs), np.log(ys)
    slope, icpt = np.polyfit(lx, ly, 1)
    res = ly - (slope * lx + icpt)
    tot = np.sum((ly - ly.mean()) ** 2)
    r2 = 1.0 - np.sum(res ** 2) / tot if tot > 0 else 1.0
    return float(slope), float(icpt), float(r2)


def fit_log_inverse(lams, Es):
    """Fit ``E = C / (-log|lam|)`` through the origin; return ``C`` and residuals."""
    mods = np.abs(np.asarray(lams, dtype=complex))
    E = np.asarray(Es, dtype=float)
    if mods.size < 3 or mods.size != E.size:
        raise ValueError("need at least 3 paired points")
    if np.all(mods == mods[0]):
        raise ValueError("degenerate design: all |lambda| equal")
    if not np.all(np.diff(mods) < 0):
        raise ValueError("|lambda| must be strictly decreasing")
    x = 1.0 / (-np.log(mods))
    C = float(x @ E / (x @ x))
    return C, E - C * x


# --------------------------------------------------------------- sweeps

@dataclass(frozen=True)
class SweepConfig:
    kind: str
    genus: int
    proots: tuple
    lams: tuple
    zs: tuple = (0.3 + 0j,)
    quad: QuadratureConfig = QuadratureConfig()
    fit_points: int = FIT_POINTS

    def spec(self, lam):
        return make_family(self.kind, self.genus, tuple(self.proots), lam)


@dataclass(frozen=True)
class Verdict:
    cid: str
    name: str
    passed: bool
    measured: dict
    expected: str

    def line(self):
        tag = "PASS" if self.passed else "FAIL"
        parts = ", ".join(f"{k}={_fmt(v)}" for k, v in self.measured.items())
        return f"[{tag}] criterion {self.cid} ({self.name}): {parts} | expected {self.expected}"


def _fmt(v):
    if isinstance(v, float):
        return f"{v:.4g}"
    if isinstance(v, (list, tuple)):
        return "[" + ", ".join(_fmt(x) for x in v) + "]"
    return str(v)


@dataclass
class SweepReport:
    rows: list = field(default_factory=list)
    fits: dict = field(default_factory=dict)
    verdicts: dict = field(default_factory=dict)
    errors: list = field(default_factory=list)

    @property
    def passed(self):
        return all(v.passed for v in self.verdicts.values())

    def to_csv(self):
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        for r in self.rows:
            w.writerow([repr(float(r[c])) for c in CSV_COLUMNS])
        return buf.getvalue()

    def to_dict(self):
        return {
            "rows": [{c: float(r[c]) for c in CSV_COLUMNS} for r in self.rows],
            "fits": self.fits,
            "verdicts": {k: {"passed": v.passed, "name": v.name,
                             "measured": v.measured, "expected": v.expected}
                         for k, v in self.verdicts.items()},
            "errors": self.errors,
        }

    def to_json(self, **kw):
        return json.dumps(self.to_dict(), **kw)


def _predictor(cfg, spec0, pd0):
    kind = FamilyKind(cfg.kind)
    if kind is FamilyKind.NODE:
        star = asy.star_vector(cfg.genus, spec0.P)
        return lambda z: math.pi * asy.node_prediction(z, pd0, star)
    if kind is FamilyKind.CUSP_II:
        return lambda z: asy.cuspII_prediction(z, spec0, pd0)
    return lambda z: asy.cuspI_limit(z, spec0, pd0)


def _row_job(args):
    cfg, lam, pd0, preds = args
    out = []
    try:
        spec = cfg.spec(lam)
        pd = compute_periods(spec, cfg=cfg.quad)
    except Exception as exc:  # recorded, the sweep continues
        return [], f"lambda={lam!r}: {exc}"
    L = -math.log(abs(lam))
    det = det_im_Z(pd)
    for z, pred in zip(cfg.zs, preds):
        k = kernel_at(spec, pd, z)
        k0 = normalization_kernel(spec, pd0, z)
        psi = math.log(k)
        E = psi - math.log(k0)
        if FamilyKind(cfg.kind) is FamilyKind.CUSP_I:
            ratio = k / pred
        else:
            ratio = E * L / pred
        out.append({
            "lambda_re": lam.real, "lambda_im": lam.imag, "abs_lambda": abs(lam),
            "z_re": complex(z).real, "z_im": complex(z).imag,
            "k_lambda": k, "k0": k0, "psi": psi, "psi_minus_logk0": E,
            "predicted": pred, "ratio": ratio, "det_imZ": det,
            "mu_lambda": jacobian_density(pd), "sym_defect": pd.sym_defect,
            "min_eig": pd.min_eig,
        })
    return out, None


Z_SEPARATION = 0.05


def _check_points(cfg, zs):
    """Every ``z`` nonzero and ``z^2`` at least 0.05 from all branch points."""
    if not zs:
        raise ValueError("at least one evaluation point is required")
    for lam in cfg.lams:
        try:
            roots = cfg.spec(lam).roots
        except ValueError:
            continue
        for z in zs:
            if z == 0:
                raise ValueError("evaluation points must be nonzero")
            if min(abs(z * z - r) for r in roots) < Z_SEPARATION:
                raise ValueError(f"z={z!r}: z^2 is within {Z_SEPARATION} of a branch point")


def run_sweep(cfg):
    """Evaluate the family over ``cfg.lams x cfg.zs`` and fit its law."""
    kind = FamilyKind(cfg.kind)
    if kind is FamilyKind.GENERIC:
        raise ValueError("sweeps need a degeneration family")
    zs = tuple(complex(z) for z in cfg.zs)
    _check_points(cfg, zs)
    cfg = SweepConfig(cfg.kind, cfg.genus, tuple(cfg.proots),
                      tuple(complex(x) for x in cfg.lams), zs, cfg.quad, cfg.fit_points)
    spec0 = None
    for lam in cfg.lams:
        try:
            spec0 = cfg.spec(lam)
            break
        except ValueError:
            continue
    if spec0 is None:
        raise ValueError("no admissible lambda in the sweep")
    pd0 = compute_periods(normalization_curve(spec0), cfg=cfg.quad)
    pred_fn = _predictor(cfg, spec0, pd0)
    preds = [pred_fn(z) for z in zs]
    results = _map(_row_job, [(cfg, lam, pd0, preds) for lam in cfg.lams])
    rep = SweepReport()
    for rows, err in results:
        rep.rows.extend(rows)
        if err:
            rep.errors.append(err)
    rep.rows.sort(key=lambda r: (-r["abs_lambda"], math.atan2(r["lambda_im"], r["lambda_re"]),
                                 r["z_re"], r["z_im"]))
    rep.fits = _fit_rows(cfg, rep.rows, pd0)
    return rep


def _fit_rows(cfg, rows, pd0):
    kind = FamilyKind(cfg.kind)
    fits = {}
    for z in cfg.zs:
        sel = [r for r in rows if r["z_re"] == z.real and r["z_im"] == z.imag
               and r["lambda_im"] == 0.0 and r["lambda_re"] > 0]
        sel = sel[-cfg.fit_points:]
        key = f"z={z.real!r}{z.imag:+}i"
        if len(sel) < 3:
            continue
        lams = [r["abs_lambda"] for r in sel]
        if kind is FamilyKind.CUSP_I:
            rem = [abs(r["k_lambda"] - r["predicted"]) for r in sel]
            if min(rem) > 0:
                s, c, r2 = fit_loglog(lams, rem)
                fits[key] = {"law": "remainder_power", "slope": s, "intercept": c, "r2": r2}
        else:
            C, res = fit_log_inverse(lams, [r["psi_minus_logk0"] for r in sel])
            fits[key] = {"law": "log_inverse", "C": C, "predicted": sel[0]["predicted"],
                         "relative_deviation": C / sel[0]["predicted"] - 1.0,
                         "residuals": [float(x) for x in res]}
    jl = [r for r in rows if r["lambda_im"] == 0.0 and r["lambda_re"] > 0]
    seen, jrows = set(), []
    for r in jl:
        if r["abs_lambda"] not in seen:
            seen.add(r["abs_lambda"])
            jrows.append(r)
    jrows = jrows[-cfg.fit_points:]
    if len(jrows) >= 3:
        devs = [math.log(r["mu_lambda"]) - asy.jacobian_prediction(kind, pd0, r["abs_lambda"])
                for r in jrows]
        fits["jacobian"] = {"deviation": devs}
        if kind is FamilyKind.CUSP_I and min(abs(d) for d in devs) > 0:
            s, c, r2 = fit_loglog([r["abs_lambda"] for r in jrows], [abs(d) for d in devs])
            fits["jacobian"].update(slope=s, r2=r2)
    return fits


def phase_average(spec_template, abs_lam, n_phases, z, cfg=None, pd0=None):
    """Mean of ``k_lam(z) - limit(z)`` over ``lam_j = |lam| exp(2 pi i j / n)``."""
    if FamilyKind(spec_template.kind) is not FamilyKind.CUSP_I:
        raise ValueError("phase averaging applies to the first cusp family")
    n_phases = int(n_phases)
    if n_phases < 8:
        raise ValueError("at least 8 phases are needed to cancel quarter powers")
    cfg = cfg or QuadratureConfig()
    if pd0 is None:
        pd0 = compute_periods(normalization_curve(spec_template), cfg=cfg)
    lim = asy.cuspI_limit(z, spec_template, pd0)
    vals = []
    for j in range(n_phases):
        lam = abs(abs_lam) * np.exp(2j * np.pi * j / n_phases)
        spec = spec_template.with_lambda(complex(lam))
        vals.append(kernel_at(spec, compute_periods(spec, cfg=cfg), z) - lim)
    return float(np.mean(vals))


# ----------------------------------------------------------- acceptance

Z_TEST = 0.3 + 0j
G2 = (2.0, 3.0)
G3 = (2.0, 3.0, 4.0, 5.0)


def _decades(hi, lo, per=1):
    return lambda_grid(hi, lo, per)


def _monotone(devs, inversions=1):
    bad = sum(1 for a, b in zip(devs, devs[1:]) if b > a)
    return bad <= inversions


def _family_rows(kind, proots, lams, z=Z_TEST):
    cfg = SweepConfig(kind, len(proots) // 2 + 1, proots, tuple(lams), (z,))
    return run_sweep(cfg)


def _crit1():
    out, ok = {}, True
    for name, proots in (("g2", G2), ("g3", G3)):
        t0 = time.perf_counter()
        pd = compute_periods(make_family("node", len(proots) // 2 + 1, proots, 1e-3))
        dt = time.perf_counter() - t0
        good = pd.sym_defect <= 1e-8 and pd.min_eig > 0 and dt <= 5.0
        ok &= good
        out[f"{name}_sym_defect"] = pd.sym_defect
        out[f"{name}_min_eig"] = pd.min_eig
        out[f"{name}_seconds"] = dt
    return Verdict("1", "period validity", ok, out, "sym_defect<=1e-8, min_eig>0, <=5 s per curve")


def random_segment_suite(n=100, seed=SEED):
    """Randomized segment instances for the oracle comparison."""
    rng = np.random.default_rng(seed)

    def disk():
        return complex(np.sqrt(rng.uniform()) * np.exp(2j * np.pi * rng.uniform()))
    out = []
    while len(out) < n:
        p, q = disk(), disk()
        if abs(p - q) < 1e-3:
            continue
        m = int(rng.integers(0, 5))
        others = tuple(complex(rng.uniform(1.5, 10.0) * np.exp(2j * np.pi * rng.uniform()))
                       for _ in range(m))
        out.append(SegmentIntegral(int(rng.integers(0, 3)), p, q, others))
    return out


def _crit2():
    t0 = time.perf_counter()
    errs = []
    for si in random_segment_suite():
        a, b = segment_period(si), adaptive_oracle(si)
        errs.append(abs(a - b) / abs(b))
    dt = time.perf_counter() - t0
    worst = max(errs)
    return Verdict("2", "quadrature oracle equivalence", worst <= 1e-9 and dt <= 30.0,
                   {"max_rel_error": worst, "seconds": dt}, "max rel error <=1e-9 within 30 s")


def _log_law(kind, proots, lams, expected):
    rep = _family_rows(kind, proots, lams)
    rows = [r for r in rep.rows]
    E = [r["psi_minus_logk0"] for r in rows]
    L = [-math.log(r["abs_lambda"]) for r in rows]
    C, _ = fit_log_inverse([r["abs_lambda"] for r in rows], E)
    devs = [abs(e * l / expected - 1.0) for e, l in zip(E, L)]
    lin = [(math.exp(e) - 1.0) * l / expected for e, l in zip(E, L)]
    return C, devs, lin, rows


def _crit3():
    k = asy.genus2_constants(*G2)
    expected = math.pi * asy.node_prediction_genus2(Z_TEST, k.c, k.c1)
    C, devs, lin, _ = _log_law("node", G2, lambda_grid(1e-6, 1e-12, 2), expected)
    rel = abs(C / expected - 1.0)
    ok = rel <= 0.10 and devs[-1] < devs[0]
    return Verdict("3", "node genus-2 log law", ok,
                   {"C": C, "expected": expected, "rel_dev": rel,
                    "dev_1e-6": devs[0], "dev_1e-12": devs[-1],
                    "linearized_ratio_1e-12": lin[-1]},
                   "|C/expected-1|<=0.10 and deviation shrinking")


def _crit4():
    spec = make_family("node", 3, G3, 1e-3)
    pd0 = compute_periods(normalization_curve(spec))
    expected = math.pi * asy.node_prediction(Z_TEST, pd0, asy.star_vector(3, spec.P))
    C, devs, lin, _ = _log_law("node", G3, lambda_grid(1e-6, 1e-12, 2), expected)
    rel = abs(C / expected - 1.0)
    ok = rel <= 0.15 and _monotone(devs)
    return Verdict("4", "node genus-3 log law", ok,
                   {"C": C, "expected": expected, "rel_dev": rel,
                    "dev_deepest": devs[-1], "linearized_ratio_deepest": lin[-1]},
                   "|C/expected-1|<=0.15, monotone trend")


def _crit5():
    rep = _family_rows("cusp1", G2, lambda_grid(1e-4, 1e-12, 2))
    lams = [r["abs_lambda"] for r in rep.rows]
    rem = [abs(r["k_lambda"] - r["predicted"]) for r in rep.rows]
    slope, _, r2 = fit_loglog(lams, rem)
    rel = rem[-1] / rep.rows[-1]["k_lambda"]
    ok = abs(slope - 0.25) <= 0.05 and rel <= 1e-2
    return Verdict("5", "cusp I limit", ok, {"slope": slope, "r2": r2, "rel_remainder_1e-12": rel},
                   "slope 0.25+-0.05, relative remainder <=1e-2 at 1e-12")


def _crit6():
    spec = make_family("cusp1", 2, G2, 1e-6)
    pd0 = compute_periods(normalization_curve(spec))
    mods = [1e-6, 1e-8, 1e-10]
    avg = [phase_average(spec, m, 8, Z_TEST, pd0=pd0) for m in mods]
    raw = [abs(kernel_at(spec.with_lambda(m), compute_periods(spec.with_lambda(m)), Z_TEST)
               - asy.cuspI_limit(Z_TEST, spec, pd0)) for m in mods]
    slope, _, _ = fit_loglog(mods, [abs(a) for a in avg])
    raw_slope, _, _ = fit_loglog(mods, raw)
    return Verdict("6", "cusp I phase averaging", slope >= 0.3,
                   {"averaged_slope": slope, "unaveraged_slope": raw_slope,
                    "averaged_over_unaveraged": [a / r for a, r in zip(avg, raw)]},
                   "averaged-remainder slope >=0.3")


def _crit7():
    k = asy.genus2_constants(*G2)
    exp2 = math.pi * k.tau.imag / abs(Z_TEST) ** 4
    lams = _decades(1e-2, 1e-10)
    _, devs, lin, _ = _log_law("cusp2", G2, lams, exp2)
    spec3 = make_family("cusp2", 3, G3, 1e-10)
    pd03 = compute_periods(normalization_curve(spec3))
    exp3 = asy.cuspII_prediction(Z_TEST, spec3, pd03)
    _, devs3, lin3, _ = _log_law("cusp2", G3, [1e-8, 1e-9, 1e-10], exp3)
    ok = devs[-1] <= 0.10 and _monotone(devs) and devs3[-1] <= 0.15
    return Verdict("7", "cusp II log law", ok,
                   {"g2_dev_1e-10": devs[-1], "g2_monotone": _monotone(devs),
                    "g3_dev_1e-10": devs3[-1], "g2_linearized_ratio": lin[-1],
                    "g3_linearized_ratio": lin3[-1]},
                   "g2 within 10% at 1e-10 improving, g3 within 15%")


def _crit8():
    node = _family_rows("node", G2, _decades(1e-2, 1e-10))
    spec = make_family("node", 2, G2, 1e-3)
    d0 = det_im_Z(compute_periods(normalization_curve(spec)))
    nd = [abs(math.log(r["mu_lambda"]) + math.log(-math.log(r["abs_lambda"]))
              - math.log(math.pi / d0)) for r in node.rows]
    cspec = make_family("cusp1", 2, G2, 1e-4)
    cd0 = det_im_Z(compute_periods(normalization_curve(cspec)))
    lams = lambda_grid(1e-4, 1e-10, 2)
    cdev = [abs(math.log(jacobian_density(compute_periods(cspec.with_lambda(l)))) + math.log(cd0))
            for l in lams]
    slope, _, _ = fit_loglog([abs(l) for l in lams], cdev)
    node_ok = nd[-1] <= 0.1 and _monotone(nd, 0)
    ok = node_ok and abs(slope - 0.5) <= 0.1
    return Verdict("8", "Jacobian densities", ok,
                   {"node_dev_1e-10": nd[-1], "node_decreasing": _monotone(nd, 0),
                    "cusp1_slope": slope},
                   "node dev <=0.1 at 1e-10 and decreasing; cusp I slope 0.5+-0.1")


def _slope_of(kind, proots, entry, lams, which="A"):
    vals = []
    for lam in lams:
        pd = compute_periods(make_family(kind, len(proots) // 2 + 1, proots, lam))
        M = pd.A if which == "A" else pd.B
        vals.append(abs(M[entry]))
    return fit_loglog([abs(l) for l in lams], vals)[0]


def _crit9():
    t0 = time.perf_counter()
    lams = _decades(1e-4, 1e-12)
    checks = {
        "node_A21": (_slope_of("node", G2, (1, 0), lams), 1.0, 0.1),
        "cusp1_A11": (_slope_of("cusp1", G2, (0, 0), lams), -0.25, 0.03),
        "cusp1_A21": (_slope_of("cusp1", G2, (1, 0), lams), 0.25, 0.03),
        "cusp2_A11": (_slope_of("cusp2", G2, (0, 0), lams), -0.5, 0.05),
        "cusp2_A21": (_slope_of("cusp2", G2, (1, 0), lams), 1.5, 0.1),
        "cusp2_B21": (_slope_of("cusp2", G2, (1, 0), lams, "B"), 0.5, 0.05),
        "cusp2_g3_A31": (_slope_of("cusp2", G3, (2, 0), lams), 3.5, 0.2),
    }
    dt = time.perf_counter() - t0
    ok = all(abs(s - e) <= w for s, e, w in checks.values()) and dt <= 120
    meas = {k: v[0] for k, v in checks.items()}
    meas["seconds"] = dt
    return Verdict("9", "lemma growth rates", ok, meas,
                   "slopes 1.0+-0.1, -0.25/0.25+-0.03, -0.5+-0.05, 1.5+-0.1, 0.5+-0.05, 3.5+-0.2; <=120 s")


def _crit10():
    ts = [1e4, 1e6, 1e8]
    dev = {w: [abs(l / r - 1.0) for l, r in (asy.reference_asymptotes(t, w, 2.0) for t in ts)]
           for w in ("I", "II", "alpha")}
    mono = all(_monotone(d, 0) for d in dev.values())
    ok = mono and dev["I"][1] <= 0.15 and dev["II"][2] <= 1e-3 and dev["alpha"][2] <= 1e-3
    return Verdict("10", "reference asymptotes", ok,
                   {"I_dev": dev["I"], "II_dev": dev["II"], "alpha2_dev": dev["alpha"],
                    "monotone": mono},
                   "monotone; (I) <=0.15 at 1e6; (II), (alpha=2) <=1e-3 at 1e8")


def _crit11():
    out = {}
    for kind in ("node", "cusp1", "cusp2"):
        spec = make_family(kind, 2, G2, 1e-10)
        psi = math.log(kernel_at(spec, compute_periods(spec), Z_TEST))
        out[kind] = abs(psi / math.log(1e-10))
    return Verdict("11", "psi boundedness", all(v <= 0.01 for v in out.values()),
                   {f"{k}_ratio": v for k, v in out.items()}, "|psi/log|lam|| <=0.01 at 1e-10")


def _consistency_specs():
    for kind, proots in (("node", G2), ("node", G3), ("cusp1", G2), ("cusp2", G2), ("cusp2", G3)):
        for lam in (1e-4, 1e-8, 1e-12):
            yield make_family(kind, len(proots) // 2 + 1, proots, lam)


def _swap(g):
    S = np.zeros((2 * g, 2 * g), dtype=np.int64)
    S[:g, g:] = np.eye(g, dtype=np.int64)
    S[g:, :g] = -np.eye(g, dtype=np.int64)
    return S


def _crit12():
    zs = (Z_TEST, 0.2 + 0.25j)
    gen_err, basis_err, intr_err = 0.0, 0.0, 0.0
    for spec in _consistency_specs():
        pd = compute_periods(spec)
        alt = [compute_periods(spec, symplectic_basis(spec)),
               compute_periods(spec, transform_basis(chain_basis(spec), _swap(spec.genus)))]
        for z in zs:
            k = kernel_at(spec, pd, z)
            gen_err = max(gen_err, abs(kernel_generic(spec, pd, z) / k - 1))
            ki = intrinsic_kernel_at(spec, pd, z)
            for q in alt:
                basis_err = max(basis_err, abs(kernel_at(spec, q, z) / k - 1))
                intr_err = max(intr_err, abs(intrinsic_kernel_at(spec, q, z) / ki - 1))
    k = asy.genus2_constants(*G2)
    zc = compute_periods(normalization_curve(make_family("node", 2, G2, 1e-3))).Z[0, 0]
    zt = compute_periods(normalization_curve(make_family("cusp1", 2, G2, 1e-3))).Z[0, 0]
    const_err = max(abs(k.c - zc), abs(k.tau - zt))
    ok = gen_err <= 1e-10 and basis_err <= 1e-8 and const_err <= 1e-8
    return Verdict("12", "internal consistency", ok,
                   {"generic_rel_err": gen_err, "basis_rel_err": basis_err,
                    "normalized_basis_rel_err": intr_err, "constants_err": const_err},
                   "<=1e-10 generic, <=1e-8 basis, <=1e-8 constants")


CRITERIA = {
    "1": _crit1, "2": _crit2, "3": _crit3, "4": _crit4, "5": _crit5, "6": _crit6,
    "7": _crit7, "8": _crit8, "9": _crit9, "10": _crit10, "11": _crit11, "12": _crit12,
}

SUITES = {
    "full": tuple(CRITERIA),
    "periods": ("1",),
    "quadrature": ("2",),
    "theorems": ("3", "4", "5", "6", "7", "8"),
    "lemmas": ("9",),
    "asymptotes": ("10",),
    "corollary": ("11",),
    "consistency": ("12",),
}


def acceptance_run(suite="full", echo=None):
    """Run the selected criteria; `suite` is a suite name or comma-separated ids."""
    if suite in SUITES:
        ids = SUITES[suite]
    else:
        ids = tuple(s.strip() for s in str(suite).split(",") if s.strip())
        unknown = [i for i in ids if i not in CRITERIA]
        if unknown or not ids:
            raise ValueError(f"unknown suite or criterion: {suite!r}")
    rep = SweepReport()
    t0 = time.perf_counter()
    for cid in ids:
        v = CRITERIA[cid]()
        rep.verdicts[cid] = v
        if echo:
            echo(v.line())
    rep.fits["seconds"] = time.perf_counter() - t0
    return rep
