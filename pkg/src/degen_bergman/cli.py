"""Command-line front end.

Subcommands::

    periods    period matrices of one curve (JSON)
    kernel     kernel samples over lambda values and points z
    constants  genus-2 constants for P = (x - a)(x - b) (JSON)
    sweep      parameter sweep with fits (CSV or JSON)
    verify     acceptance suite; exit status 0 iff every verdict passes

Complex literals are written ``RE``, ``IMi``, ``RE+IMi`` or ``RE-IMi`` with
optional exponents (``1e-4-2.5e-1i``); ``j`` may replace ``i``.  A lambda
range is ``START:END:PER_DECADE``.

Settings come from three layers: built-in defaults, a JSON file given with
``--config`` (keys named like the long flags, with dashes or underscores),
then explicit flags.
"""
import argparse
import json
import math
import sys

from . import __version__
from .algebra import AlgebraError, RootPoly, format_complex, parse_complex
from .asymptotics import genus2_constants
from .harness import SUITES, SweepConfig, acceptance_run, lambda_grid, run_sweep
from .kernel import jacobian_density, kernel_at, kernel_generic, normalization_kernel
from .periods import compute_periods
from .quadrature import QuadratureConfig
from .surface import FamilyKind, generic_curve, make_family, normalization_curve

__all__ = ["main", "run", "effective_config", "build_parser", "DEFAULTS"]

SUBCOMMANDS = ("periods", "kernel", "constants", "sweep", "verify")
DEFAULTS = {
    "family": "node", "genus": 2, "a": None, "b": None, "proots": None,
    "leading": "1", "lambda": None, "z": ["0.3"], "order": None, "out": None,
    "format": None, "suite": "full",
}
KEYS = tuple(DEFAULTS)


class UsageError(ValueError):
    """Inconsistent or unparsable settings (exit status 2)."""


def build_parser():
    p = argparse.ArgumentParser(
        prog="degen-bergman",
        description="Period matrices and kernel asymptotics of degenerating "
                    "hyperelliptic curves.",
        epilog="Complex literals: RE, IMi, RE+IMi, RE-IMi (exponents allowed, j for i). "
               "Lambda ranges: START:END:PER_DECADE.  Precedence: flags > --config > defaults.")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="subcommand", required=True)
    for name in SUBCOMMANDS:
        s = sub.add_parser(name)
        s.add_argument("--config", metavar="FILE", help="JSON file with settings")
        s.add_argument("--print-config", action="store_true",
                       help="print the effective settings as JSON and exit")
        s.add_argument("--family", choices=[k.value for k in FamilyKind], default=None)
        s.add_argument("--genus", type=int, default=None)
        s.add_argument("--a", default=None, help="first root of P (genus 2)")
        s.add_argument("--b", default=None, help="second root of P (genus 2)")
        s.add_argument("--proots", nargs="+", default=None,
                       help="roots of P; for --family custom, all roots of f")
        s.add_argument("--leading", default=None, help="leading coefficient")
        s.add_argument("--lambda", dest="lambda_", default=None,
                       help="value or START:END:PER_DECADE")
        s.add_argument("--z", nargs="+", default=None, help="evaluation points")
        s.add_argument("--order", type=int, default=None, help="starting quadrature order")
        s.add_argument("--out", default=None, help="output file (UTF-8)")
        s.add_argument("--format", choices=("csv", "json"), default=None)
        s.add_argument("--suite", default=None,
                       help=f"{', '.join(SUITES)} or comma-separated criterion ids")
    return p


def _load_config(path):
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read config {path!r}: {exc}") from exc
    if not isinstance(data, dict):
        raise UsageError("config file must hold a JSON object")
    out = {}
    for k, v in data.items():
        key = k.replace("-", "_")
        if key == "lambda_":
            key = "lambda"
        if key not in KEYS:
            raise UsageError(f"unknown config key {k!r}")
        out[key] = v
    return out


def _normalize(cfg):
    """Canonical string/int forms so that flags and files compare equal."""
    out = dict(cfg)
    for key in ("a", "b", "leading", "lambda"):
        if out[key] is not None and not isinstance(out[key], str):
            out[key] = repr(out[key]) if not isinstance(out[key], complex) \
                else format_complex(out[key])
    for key in ("proots", "z"):
        v = out[key]
        if v is not None:
            if isinstance(v, (str, int, float)):
                v = [v]
            out[key] = [x if isinstance(x, str) else repr(x) for x in v]
    if out["genus"] is not None:
        out["genus"] = int(out["genus"])
    if out["order"] is not None:
        out["order"] = int(out["order"])
    return out


def effective_config(argv):
    """``(subcommand, settings, print_only)`` after layering defaults, file and flags."""
    ns = build_parser().parse_args(argv)
    cfg = dict(DEFAULTS)
    if ns.config:
        cfg.update(_load_config(ns.config))
    flags = {k: getattr(ns, "lambda_" if k == "lambda" else k) for k in KEYS}
    cfg.update({k: v for k, v in flags.items() if v is not None})
    return ns.subcommand, _normalize(cfg), ns.print_config


# ------------------------------------------------------------- building

def _curve_params(cfg):
    kind = FamilyKind(cfg["family"])
    g = cfg["genus"]
    lead = parse_complex(cfg["leading"])
    if cfg["proots"] is not None:
        roots = tuple(parse_complex(r) for r in cfg["proots"])
    elif cfg["a"] is not None and cfg["b"] is not None:
        roots = (parse_complex(cfg["a"]), parse_complex(cfg["b"]))
    else:
        raise UsageError("give --proots or both --a and --b")
    return kind, g, roots, lead


def _lambdas(cfg):
    text = cfg["lambda"]
    if text is None:
        raise UsageError("--lambda is required")
    if ":" in text:
        parts = text.split(":")
        if len(parts) != 3:
            raise UsageError("lambda range must be START:END:PER_DECADE")
        try:
            start, end, per = float(parts[0]), float(parts[1]), int(parts[2])
            return lambda_grid(start, end, per)
        except ValueError as exc:
            raise UsageError(f"bad lambda range {text!r}: {exc}") from exc
    return [parse_complex(text)]


def _family(kind, g, roots, lead, lam):
    return make_family(kind, g, RootPoly(roots, lead), lam)


def _quad(cfg):
    if cfg["order"] is None:
        return QuadratureConfig()
    n = cfg["order"]
    return QuadratureConfig(order=n, max_order=max(QuadratureConfig().max_order, n))


def _emit(text, cfg):
    if cfg["out"]:
        with open(cfg["out"], "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _rows_text(rows, columns, fmt):
    if fmt == "json":
        clean = [[None if math.isnan(v) else v for v in r] for r in rows]
        return json.dumps([dict(zip(columns, r)) for r in clean]) + "\n"
    lines = [",".join(columns)]
    lines += [",".join(repr(float(v)) for v in r) for r in rows]
    return "\n".join(lines) + "\n"


def _cmd_periods(cfg):
    kind, g, roots, lead = _curve_params(cfg)
    if kind is FamilyKind.GENERIC:
        spec = generic_curve(roots, lead)
    else:
        lams = _lambdas(cfg)
        if len(lams) != 1:
            raise UsageError("periods takes a single lambda value")
        spec = _family(kind, g, roots, lead, lams[0])
    pd = compute_periods(spec, cfg=_quad(cfg))
    _emit(pd.to_json() + "\n", cfg)
    return 0


KERNEL_COLUMNS = ("lambda_re", "lambda_im", "z_re", "z_im", "k_lambda", "k0",
                  "psi", "mu_lambda")


def _cmd_kernel(cfg):
    kind, g, roots, lead = _curve_params(cfg)
    zs = [parse_complex(z) for z in cfg["z"]]
    quad = _quad(cfg)
    rows = []
    if kind is FamilyKind.GENERIC:
        spec = generic_curve(roots, lead)
        pd = compute_periods(spec, cfg=quad)
        mu = jacobian_density(pd)
        for z in zs:
            k = kernel_generic(spec, pd, z)
            rows.append((math.nan, math.nan, z.real, z.imag, k, math.nan, math.log(k), mu))
    else:
        lams = _lambdas(cfg)
        spec0 = _family(kind, g, roots, lead, lams[0])
        pd0 = compute_periods(normalization_curve(spec0), cfg=quad)
        for lam in lams:
            spec = spec0.with_lambda(lam)
            pd = compute_periods(spec, cfg=quad)
            mu = jacobian_density(pd)
            for z in zs:
                k = kernel_at(spec, pd, z)
                rows.append((lam.real, lam.imag, z.real, z.imag, k,
                             normalization_kernel(spec, pd0, z), math.log(k), mu))
    _emit(_rows_text(rows, KERNEL_COLUMNS, cfg["format"] or "csv"), cfg)
    return 0


def _cmd_constants(cfg):
    if cfg["genus"] != 2:
        raise UsageError("constants needs genus 2")
    _, _, roots, _ = _curve_params(cfg)
    if len(roots) != 2:
        raise UsageError("constants needs exactly two roots a, b")
    k = genus2_constants(*roots, cfg=_quad(cfg))
    _emit(json.dumps(k.to_dict()) + "\n", cfg)
    return 0


def _cmd_sweep(cfg):
    kind, g, roots, lead = _curve_params(cfg)
    if kind is FamilyKind.GENERIC:
        raise UsageError("sweep needs a degeneration family")
    if lead != 1:
        raise UsageError("sweeps use a monic P")
    lams = _lambdas(cfg)
    zs = tuple(parse_complex(z) for z in cfg["z"])
    rep = run_sweep(SweepConfig(kind.value, g, roots, tuple(lams), zs, _quad(cfg)))
    for err in rep.errors:
        print(err, file=sys.stderr)
    text = rep.to_csv() if (cfg["format"] or "csv") == "csv" else rep.to_json() + "\n"
    _emit(text, cfg)
    return 0


def _cmd_verify(cfg):
    suite = cfg["suite"]
    try:
        rep = acceptance_run(suite, echo=print)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    print(f"{sum(v.passed for v in rep.verdicts.values())}/{len(rep.verdicts)} criteria passed "
          f"in {rep.fits['seconds']:.1f} s")
    if cfg["out"]:
        with open(cfg["out"], "w", encoding="utf-8") as fh:
            fh.write(rep.to_json(indent=1) + "\n")
    return 0 if rep.passed else 1


COMMANDS = {"periods": _cmd_periods, "kernel": _cmd_kernel, "constants": _cmd_constants,
            "sweep": _cmd_sweep, "verify": _cmd_verify}


def run(argv=None):
    """Execute the command line `argv`; return the exit status."""
    try:
        sub, cfg, print_only = effective_config(argv)
    except SystemExit as exc:  # argparse reports usage errors itself
        return int(exc.code or 0)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if print_only:
        print(json.dumps(cfg, sort_keys=True))
        return 0
    try:
        return COMMANDS[sub](cfg)
    except (UsageError, AlgebraError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ArithmeticError as exc:
        print(f"computation failed: {exc}", file=sys.stderr)
        return 1


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
