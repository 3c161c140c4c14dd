"""mahlerctl command-line interface.

Exit status: 0 on success, 2 on invalid input (including unmet hypotheses),
3 when root certification runs out of precision.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import os
import sys
from dataclasses import dataclass, fields
from typing import Optional, Sequence

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib

from . import matrixlen, measures, numfield, search
from .polycore import PolynomialError, format_poly, parse_poly
from .roots import PrecisionExhausted

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_PRECISION = 3

CONFIG_FILE = "mahlerctl.toml"
ENV_PREFIX = "MAHLERCTL_"


@dataclass
class Config:
    precision_bits: int = 128
    tolerance: float = 1e-9
    strict_det: bool = False
    output: str = "text"

    def validate(self) -> None:
        if not 64 <= self.precision_bits <= 1024:
            raise ValueError(f"precision_bits must be in [64, 1024], got {self.precision_bits}")
        if self.output not in ("text", "json"):
            raise ValueError(f"output must be text or json, got {self.output!r}")
        if not self.tolerance > 0:
            raise ValueError("tolerance must be positive")


def _coerce(name: str, value):
    kind = {f.name: f.type for f in fields(Config)}[name]
    if kind in ("bool", bool):
        if isinstance(value, str):
            return value.strip().lower() in ("1", "true", "yes", "on")
        return bool(value)
    if kind in ("int", int):
        return int(value)
    if kind in ("float", float):
        return float(value)
    return str(value)


def load_config(path: Optional[str] = None, environ=None) -> Config:
    """Defaults, then the config file, then MAHLERCTL_* environment variables."""
    environ = os.environ if environ is None else environ
    cfg = Config()
    names = {f.name for f in fields(Config)}
    path = path or environ.get(ENV_PREFIX + "CONFIG") or (CONFIG_FILE if os.path.exists(CONFIG_FILE) else None)
    if path:
        with open(path, "rb") as fh:
            data = tomllib.load(fh)
        for key, value in data.items():
            if key not in names:
                raise ValueError(f"unknown config key {key!r} in {path}")
            setattr(cfg, key, _coerce(key, value))
    for name in names:
        env = environ.get(ENV_PREFIX + name.upper())
        if env is not None:
            setattr(cfg, name, _coerce(name, env))
    return cfg


# ---------------------------------------------------------------------------


def _fmt(x: float, digits: int = 10) -> str:
    return f"{x:.{digits}f}"


class _Out:
    def __init__(self, cfg: Config, out_path: Optional[str], stream):
        self.cfg = cfg
        self.path = out_path
        self.stream = stream
        self.lines: list[str] = []

    def emit(self, payload: dict, text: str) -> None:
        s = json.dumps(payload, sort_keys=True) if self.cfg.output == "json" else text
        print(s, file=self.stream)
        self.lines.append(s)

    def close(self) -> None:
        if self.path:
            with open(self.path, "w", encoding="utf-8") as fh:
                fh.write("\n".join(self.lines) + "\n")


def _report_text(r: measures.MeasureReport) -> str:
    lines = [
        f"degree              {r.degree}",
        f"mahler              {_fmt(r.mahler)} ± {r.mahler_err:.1e}",
        f"translation_length  {_fmt(r.translation_length)} ± {r.length_err:.1e}",
        f"lower_bound         {_fmt(r.lower_bound)}",
        f"upper_bound         {_fmt(r.upper_bound)}",
        f"equality_case       {r.equality_case}",
        f"root_product        {r.inputs_echo.get('root_product')}",
    ]
    if r.matrix_length is not None:
        lines.append(f"matrix_length       {_fmt(r.matrix_length)} ± {r.matrix_length_err:.1e}")
    return "\n".join(lines)


def cmd_mahler(args, cfg, out):
    p = parse_poly(args.poly)
    v, e = measures.mahler_measure(p, cfg.precision_bits)
    out.emit({"poly": format_poly(p), "mahler": v, "mahler_err": e}, _fmt(v))


def cmd_translen_poly(args, cfg, out):
    p = parse_poly(args.poly)
    v, e = measures.translation_length_poly(p, cfg.precision_bits)
    out.emit({"poly": format_poly(p), "translation_length": v, "length_err": e}, _fmt(v))


def cmd_translen_mat(args, cfg, out):
    x = matrixlen.parse_matrix(args.matrix)
    v, e = matrixlen.translation_length_matrix(x, strict_det=cfg.strict_det)
    out.emit({"matrix": matrixlen.format_matrix(x), "translation_length": v, "length_err": e}, _fmt(v))


def cmd_bounds(args, cfg, out):
    p = parse_poly(args.poly)
    r = measures.check_bounds(p, strict=cfg.strict_det, tolerance=cfg.tolerance, precision=cfg.precision_bits)
    out.emit(r.to_dict(), _report_text(r))


def cmd_bounds_mat(args, cfg, out):
    x = matrixlen.parse_matrix(args.matrix)
    r = matrixlen.verify_theorem_a(x, strict_det=cfg.strict_det, tolerance=cfg.tolerance, precision=cfg.precision_bits)
    out.emit(r.to_dict(), _report_text(r))


def cmd_corollary(args, cfg, out):
    p = parse_poly(args.poly)
    b = measures.corollary_bounds(p, strict=cfg.strict_det)
    text = "\n".join(f"{k:<13} {_fmt(v)}" for k, v in b._asdict().items())
    out.emit(dict(b._asdict(), poly=format_poly(p)), text)


def cmd_classical(args, cfg, out):
    p = parse_poly(args.poly)
    r = measures.mahler_classical_inequalities(p, cfg.precision_bits)
    text = "\n".join(
        [
            f"L(p) <= 2^n M(p)          {r.length_le_mahler}  (margin {r.length_margin:.6g})",
            f"2^n M(p) <= 2^n L(p)      {r.mahler_le_length}  (margin {r.mahler_margin:.6g})",
            f"|disc| <= n^n M^(2n-2)    {r.disc_le_mahler}  (log margin {r.disc_log_margin:.6g})",
        ]
    )
    out.emit(r.to_dict(), text)


def cmd_f(args, cfg, out):
    if args.voutier:
        v = measures.voutier_bound(args.n)
        out.emit({"n": args.n, "value": v, "branch": "voutier_branch", "diagnostic": True}, _fmt(v, 6))
        return
    r = measures.lower_bound_function(args.n)
    out.emit(r.to_dict(), _fmt(r.value, 6))


def cmd_sysbound(args, cfg, out):
    v = measures.systole_lower_bound(args.n)
    out.emit({"n": args.n, "systole_lower_bound": v}, _fmt(v, 6))


def cmd_silverman(args, cfg, out):
    v = measures.silverman_disc_bound(args.p, args.log_mahler)
    out.emit({"p": args.p, "log_mahler": args.log_mahler, "log_disc_norm_bound": v}, _fmt(v, 6))


def cmd_embed(args, cfg, out):
    f = numfield.load_field(args.fieldfile)
    y = numfield.load_field_matrix(f, args.matrixfile)
    big = numfield.iota1(f, y)
    rep = numfield.verify_integrality(f, y)
    exact = numfield.char_poly_exact(big)
    num = numfield.iota2_char_poly(f, y)
    diff = max(abs(float(a) - b) / max(1.0, abs(float(a))) for a, b in zip(exact.coeffs, num))
    payload = {
        "field": f.label or format_poly(f.min_poly),
        "iota1": [[str(v) for v in row] for row in big],
        "char_poly": rep.char_poly,
        "integral": rep.passed,
        "non_integral": rep.non_integral,
        "iota2_char_poly": [float(c) for c in num],
        "iota2_max_rel_diff": diff,
    }
    text = "\n".join(
        [
            "iota1 = " + ";".join(",".join(str(v) for v in row) for row in big),
            f"char_poly = {rep.char_poly}",
            f"integral = {rep.passed}",
            f"iota2 agreement (max rel diff) = {diff:.2e}",
        ]
    )
    out.emit(payload, text)
    if not rep.passed:
        return EXIT_INVALID


def cmd_search(args, cfg, out):
    spec = search.SearchSpec(args.degree, args.height, args.reciprocal, args.workers)
    rows: list = []
    rec = search.enumerate_and_minimize(
        spec, cfg.precision_bits, report_threshold=args.report_threshold, rows_out=rows
    )
    if args.report_threshold is not None:
        fh = open(args.csv, "w", newline="", encoding="utf-8") if args.csv else sys.stderr
        w = csv.writer(fh)
        w.writerow(["coeffs", "measure", "kind"])
        for coeffs, m, kind in rows:
            w.writerow([",".join(map(str, coeffs)), repr(m), kind])
        if args.csv:
            fh.close()
    text = "\n".join(
        [
            f"best_measure        {_fmt(rec.best_measure)} ± {rec.best_measure_err:.1e}",
            f"witness             {format_poly(rec.witness)}",
            f"ties                {' | '.join(format_poly(t) for t in rec.ties)}",
            f"candidates_scanned  {rec.candidates_scanned}",
            f"cyclotomic_skipped  {rec.cyclotomic_skipped}",
            f"wall_time           {rec.wall_time:.2f} s",
        ]
    )
    out.emit(rec.to_dict(), text)


def cmd_verify_all(args, cfg, out):
    from .acceptance import run_all

    results = run_all(stream=out.stream if cfg.output == "text" else None)
    if cfg.output == "json":
        out.emit({"criteria": [r.to_dict() for r in results]}, "")
    return EXIT_OK if all(r.passed for r in results) else 1


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    # SUPPRESS keeps a subparser from overwriting a flag given before the subcommand
    common = argparse.ArgumentParser(add_help=False, argument_default=argparse.SUPPRESS)
    common.add_argument("--precision", type=int, dest="precision_bits", help="working precision in bits (64-1024)")
    common.add_argument("--tolerance", type=float, help="comparison tolerance for bound checks")
    common.add_argument("--json", action="store_const", const="json", dest="output", help="JSON output")
    common.add_argument("--strict-det", action="store_const", const=True, dest="strict_det",
                        help="require det = 1 exactly instead of |det| = 1")
    common.add_argument("--config", help=f"config file (default ./{CONFIG_FILE})")
    common.add_argument("--out", help="also write output to this file")

    ap = argparse.ArgumentParser(prog="mahlerctl", description=__doc__.splitlines()[0], parents=[common])
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.set_defaults(fn=fn)
        return sp

    add("mahler", cmd_mahler, "Mahler measure of a polynomial").add_argument("poly")
    add("translen-poly", cmd_translen_poly, "translation length of a polynomial").add_argument("poly")
    add("translen-mat", cmd_translen_mat, "translation length of a semisimple matrix").add_argument("matrix")
    add("bounds", cmd_bounds, "Mahler/length sandwich for a polynomial").add_argument("poly")
    add("bounds-mat", cmd_bounds_mat, "Mahler/length sandwich for a matrix").add_argument("matrix")
    add("corollary", cmd_corollary, "length and discriminant bounds on translation length").add_argument("poly")
    add("classical", cmd_classical, "length/discriminant vs Mahler measure inequalities").add_argument("poly")
    sp = add("f", cmd_f, "lower bound f(n) on log Mahler measure")
    sp.add_argument("n", type=int)
    sp.add_argument("--voutier", action="store_true", help="evaluate the Voutier expression directly")
    add("sysbound", cmd_sysbound, "systole lower bound 2√2/√n · f(n)").add_argument("n", type=int)
    sp = add("silverman", cmd_silverman, "log discriminant-norm bound from a Mahler measure")
    sp.add_argument("p", type=int)
    sp.add_argument("log_mahler", type=float)
    sp = add("embed", cmd_embed, "block embedding and integrality of a matrix over a number field")
    sp.add_argument("fieldfile")
    sp.add_argument("matrixfile")
    sp = add("search", cmd_search, "smallest Mahler measure > 1 in a coefficient box")
    sp.add_argument("--degree", type=int, default=10)
    sp.add_argument("--height", type=int, default=1)
    sp.add_argument("--reciprocal", action="store_true")
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--report-threshold", type=float, default=None)
    sp.add_argument("--csv", default=None, help="CSV file for --report-threshold rows (default stderr)")
    add("verify-all", cmd_verify_all, "run the acceptance suite")
    return ap


def run(argv: Optional[Sequence[str]] = None, stdout=None, stderr=None, environ=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = load_config(getattr(args, "config", None), environ)
        for name in ("precision_bits", "tolerance", "output", "strict_det"):
            v = getattr(args, name, None)
            if v is not None:
                setattr(cfg, name, v)
        cfg.validate()
    except (ValueError, OSError, tomllib.TOMLDecodeError) as exc:
        print(f"mahlerctl: {exc}", file=stderr)
        return EXIT_INVALID
    out = _Out(cfg, getattr(args, "out", None), stdout)
    try:
        code = args.fn(args, cfg, out)
    except PrecisionExhausted as exc:
        print(f"mahlerctl: precision exhausted: {exc}", file=stderr)
        return EXIT_PRECISION
    except (PolynomialError, matrixlen.MatrixParseError) as exc:
        print(f"mahlerctl: {exc}", file=stderr)
        return EXIT_INVALID
    except (ValueError, ArithmeticError, OSError, json.JSONDecodeError) as exc:
        print(f"mahlerctl: {exc}", file=stderr)
        return EXIT_INVALID
    out.close()
    return code or EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
