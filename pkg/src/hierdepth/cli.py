"""Command-line front end.

Subcommands: tradeoff, chain, reproduce, arc-check, jets, surface.

Experiment settings come from an optional flat ``key = value`` file
(``--config``) and are overridden by flags.  Exit codes: 0 success (including
refuted claims), 2 invalid configuration, 3 search cap exceeded, 4 internal
inconsistency between independent oracles.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
import tempfile
from dataclasses import dataclass
from typing import Sequence

from . import arcs, jets, reproduce, surface
from .code import DEFAULT_DISTANCE_CAP, EvaluationSet, LinearCode, eval_code
from .curve import ELLIPTIC, P1, CurvePoint, CurveSpec, affine_points
from .errors import HierDepthError, InternalInconsistency, SearchTooLarge
from .filtration import build_chain, distance_premise_breaks, optimal_index, tradeoff
from .gf import FieldSpec
from .rrspace import rr_basis

EXIT_CONFIG = 2
EXIT_CAP = 3
EXIT_INTERNAL = 4

DEFAULTS = {
    "p": 5,
    "k": 1,
    "modulus": None,
    "curve": ELLIPTIC,
    "a": 1,
    "b": 1,
    "gamma": "all-affine",
    "m": None,
    "distance_cap": DEFAULT_DISTANCE_CAP,
    "subset_cap": arcs.DEFAULT_SUBSET_CAP,
    "format": None,
    "out": None,
    "seed": 0,
}
INT_KEYS = {"p", "k", "a", "b", "m", "distance_cap", "subset_cap", "seed"}


class ConfigError(Exception):
    pass


def read_config(path: str) -> dict:
    """Parse a flat key = value file; '#' starts a comment."""
    out = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ConfigError(f"{path}:{lineno}: expected key = value")
            key, value = (s.strip() for s in line.split("=", 1))
            key = key.replace("-", "_")
            if key not in DEFAULTS:
                raise ConfigError(f"{path}:{lineno}: unknown key {key!r}")
            out[key] = value
    return out


def _int_list(text: str) -> list[int]:
    return [int(tok) for tok in re.split(r"[,\s]+", text.strip()) if tok]


@dataclass
class ExperimentConfig:
    field: FieldSpec
    curve: CurveSpec
    gamma: EvaluationSet
    m: int | None
    distance_cap: int
    subset_cap: int
    format: str | None
    out: str | None
    seed: int

    @classmethod
    def resolve(cls, args: argparse.Namespace, need_gamma: bool = True) -> ExperimentConfig:
        settings = dict(DEFAULTS)
        if getattr(args, "config", None):
            settings.update(read_config(args.config))
        for key in DEFAULTS:
            val = getattr(args, key, None)
            if val is not None:
                settings[key] = val
        try:
            for key in INT_KEYS:
                if settings[key] is not None:
                    settings[key] = int(settings[key])
            modulus = settings["modulus"]
            if isinstance(modulus, str):
                modulus = tuple(_int_list(modulus))
            field = FieldSpec(settings["p"], settings["k"], modulus)
            kind = str(settings["curve"]).lower()
            if kind not in (P1, ELLIPTIC):
                raise ConfigError(f"--curve must be {P1!r} or {ELLIPTIC!r}")
            if kind == P1:
                curve = CurveSpec.projective_line(field)
            else:
                curve = CurveSpec(ELLIPTIC, field, field.from_index(settings["a"] % field.q),
                                  field.from_index(settings["b"] % field.q))
            gamma = parse_gamma(curve, str(settings["gamma"])) if need_gamma else None
        except (ValueError, HierDepthError) as exc:
            raise ConfigError(str(exc)) from exc
        fmt = settings["format"]
        if fmt is not None and fmt not in ("csv", "json"):
            raise ConfigError("--format must be csv or json")
        return cls(field, curve, gamma, settings["m"], settings["distance_cap"], settings["subset_cap"],
                   fmt, settings["out"], settings["seed"])


def _element(field: FieldSpec, token: str):
    """Integer tokens are element indices (plain residues when k = 1)."""
    return field.from_index(int(token) % field.q if field.k == 1 else int(token))


def parse_point(curve: CurveSpec, text: str) -> CurvePoint:
    toks = [t for t in re.split(r"[,:\s]+", text.strip()) if t]
    if curve.is_elliptic:
        if len(toks) != 2:
            raise ConfigError(f"expected x,y for a point, got {text!r}")
        return curve.point(_element(curve.field, toks[0]), _element(curve.field, toks[1]))
    if len(toks) != 1:
        raise ConfigError(f"expected a single x value, got {text!r}")
    return curve.point(_element(curve.field, toks[0]))


def parse_gamma(curve: CurveSpec, text: str) -> EvaluationSet:
    """'all-affine', 'idx:0,2,5' (indices into the affine points) or an explicit list.

    Explicit lists are comma separated x values on P^1 and x:y pairs on
    elliptic curves.
    """
    text = text.strip()
    pts = affine_points(curve)
    if text == "all-affine":
        return EvaluationSet(curve, tuple(pts))
    if text.startswith("idx:"):
        return EvaluationSet(curve, tuple(pts[i] for i in _int_list(text[4:])))
    if curve.is_elliptic:
        return EvaluationSet(curve, tuple(parse_point(curve, tok) for tok in text.split(",") if tok.strip()))
    return EvaluationSet(curve, tuple(parse_point(curve, tok) for tok in text.split(",") if tok.strip()))


def parse_matrix(field: FieldSpec, text: str) -> list[list]:
    rows = [r for r in text.split(";") if r.strip()]
    return [[_element(field, tok) for tok in re.split(r"[,\s]+", row.strip()) if tok] for row in rows]


def write_output(text: str, path: str | None) -> None:
    """Write atomically (temp file + rename), or to stdout without a path."""
    if path is None:
        sys.stdout.write(text)
        return
    directory = os.path.dirname(os.path.abspath(path))
    os.makedirs(directory, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _info(cfg: ExperimentConfig, line: str) -> None:
    # tables own stdout unless they go to a file
    print(line, file=sys.stdout if cfg.out else sys.stderr)


# -- subcommands --------------------------------------------------------------------------

def cmd_tradeoff(args) -> int:
    cfg = ExperimentConfig.resolve(args)
    if cfg.m is None:
        raise ConfigError("--m is required")
    chain = build_chain(cfg.curve, cfg.gamma, cfg.m, cfg.distance_cap)
    table = tradeoff(chain)
    text = table.to_csv() if (cfg.format or "csv") == "csv" else _dump(table.to_json())
    write_output(text, cfg.out)
    opt = optimal_index(chain)
    _info(cfg, f"i*_formula={opt.i_star_formula} i*_empirical={opt.i_star_empirical} "
               f"agrees={str(opt.agrees).lower()}")
    breaks = distance_premise_breaks(chain)
    if breaks:
        _info(cfg, "distance premise d_i = n - i fails at levels " + ",".join(map(str, breaks)))
    return 0


def cmd_chain(args) -> int:
    cfg = ExperimentConfig.resolve(args)
    if cfg.m is None:
        raise ConfigError("--m is required")
    chain = build_chain(cfg.curve, cfg.gamma, cfg.m, cfg.distance_cap)
    if cfg.format == "csv":
        write_output(tradeoff(chain).to_csv(), cfg.out)
    else:
        write_output(_dump(chain.to_json()), cfg.out)
    return 0


def cmd_reproduce(args) -> int:
    cfg = ExperimentConfig.resolve(args, need_gamma=False)
    claims = reproduce.run_all(cfg.distance_cap, cfg.seed)
    write_output(reproduce.render(claims), cfg.out)
    for line in reproduce.summary_lines(claims):
        print(line, file=sys.stderr)
    return 0


def cmd_arc_check(args) -> int:
    cfg = ExperimentConfig.resolve(args, need_gamma=args.matrix is None)
    result: dict = {}
    if args.matrix is not None:
        rows = parse_matrix(cfg.field, args.matrix)
        if not rows or any(len(r) != len(rows[0]) for r in rows):
            raise ConfigError("--matrix must be a non-empty rectangular matrix")
        points = arcs.columns_as_points(rows)
        code = LinearCode.from_matrix(cfg.field, rows)
    else:
        if cfg.m is None:
            raise ConfigError("arc-check needs --matrix or --m")
        code = eval_code(rr_basis(cfg.curve, cfg.m), cfg.gamma)
        points = arcs.columns_as_points(code)
        result["code"] = code.to_json(cfg.distance_cap)
    r = len(points[0].coords) - 1
    report = arcs.is_k_arc(points, r, cfg.subset_cap)
    result["arc"] = report.to_json()
    result["points"] = [p.to_json() for p in points]
    if r >= 1:
        result["bound"] = arcs.arc_size_bound(r, cfg.field.q)
    if code.k == len(points[0].coords):
        check = arcs.mds_iff_arc(code, cfg.distance_cap, cfg.subset_cap)
        if not check.equivalent:
            raise InternalInconsistency(f"MDS and arc oracles disagree: {check}")
        result["mds_iff_arc"] = check._asdict()
    write_output(_dump(result), cfg.out)
    return 0


def cmd_jets(args) -> int:
    cfg = ExperimentConfig.resolve(args, need_gamma=False)
    result: dict = {}
    if args.center is not None:
        center = parse_point(cfg.curve, args.center)
        x_jet = _int_list(args.x_jet) if args.x_jet else None
        y_jet = _int_list(args.y_jet) if args.y_jet else None
        if x_jet is None and y_jet is None:
            arc = jets.default_arc(cfg.curve, center, args.N)
        else:
            arc = jets.lift_arc(cfg.curve, center, args.N, x_jet=x_jet, y_jet=y_jet)
        result["arc"] = arc.to_json()
    else:
        arc = None
    if args.divisor is not None:
        pts = [parse_point(cfg.curve, tok) for tok in args.divisor.split(",") if tok.strip()]
        if arc is not None:
            result["contact"] = jets.contact_profile(arc, pts).to_json()
        best, witness = jets.max_contact(cfg.curve, pts, args.N)
        result["max_contact"] = {
            "h": len(pts),
            "max_count": best,
            "witness": None if witness is None else witness.to_json(),
            "max_multiplicity": jets.max_multiplicity(pts),
            "equals_h": best == len(pts),
        }
    if not result:
        raise ConfigError("jets needs --center and/or --divisor")
    write_output(_dump(result), cfg.out)
    return 0


def cmd_surface(args) -> int:
    out_path = args.out
    if args.p2_degree is not None:
        d = args.p2_degree
        if d < 0:
            raise ConfigError("--p2-degree must be >= 0")
        filt = surface.p2_filtration(d)
        num = surface.SurfaceNumerics.p2(d)
        result = {
            "d": d,
            "h": surface.depth_formula(num),
            "h_dual": surface.dual_depth_formula(num),
            "monomials": filt.names(),
            "exponents": [list(m) for m in filt.monomials],
            "restriction": surface.restrict_to_line(filt).to_json(),
        }
    elif None not in (args.c1_sq, args.c1_dot_k, args.chi):
        result = surface.formula_report(surface.SurfaceNumerics(args.c1_sq, args.c1_dot_k, args.chi))
    else:
        raise ConfigError("surface needs --p2-degree or all of --c1-sq, --c1-dot-k, --chi")
    write_output(_dump(result), out_path)
    return 0


# -- parser -------------------------------------------------------------------------------

def _common() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    g = common.add_argument_group("global")
    g.add_argument("--config", help="flat key = value file; flags override it")
    g.add_argument("--format", choices=["csv", "json"])
    g.add_argument("--out", help="output file (written atomically); stdout if omitted")
    g.add_argument("--distance-cap", dest="distance_cap", type=int)
    g.add_argument("--subset-cap", dest="subset_cap", type=int)
    g.add_argument("--seed", type=int)
    return common


def _experiment() -> argparse.ArgumentParser:
    exp = argparse.ArgumentParser(add_help=False)
    g = exp.add_argument_group("experiment")
    g.add_argument("--p", type=int, help="field characteristic (default 5)")
    g.add_argument("--k", type=int, help="extension degree (default 1)")
    g.add_argument("--modulus", help="modulus coefficients, lowest degree first")
    g.add_argument("--curve", choices=[P1, ELLIPTIC], help="default elliptic")
    g.add_argument("--a", type=int, help="elliptic coefficient a (element index)")
    g.add_argument("--b", type=int, help="elliptic coefficient b (element index)")
    g.add_argument("--gamma", help="all-affine | idx:i,j,... | explicit point list")
    g.add_argument("--m", type=int, help="maximal divisor degree")
    return exp


def build_parser() -> argparse.ArgumentParser:
    common, exp = _common(), _experiment()
    parser = argparse.ArgumentParser(prog="hierdepth", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("tradeoff", parents=[common, exp], help="rate/distance table of a code chain")
    p.set_defaults(func=cmd_tradeoff)
    p = sub.add_parser("chain", parents=[common, exp], help="full chain JSON with discrepancy report")
    p.set_defaults(func=cmd_chain)
    p = sub.add_parser("reproduce", parents=[common], help="verify every claim and write a report")
    p.set_defaults(func=cmd_reproduce)
    p = sub.add_parser("arc-check", parents=[common, exp], help="arc test on generator columns")
    p.add_argument("--matrix", help="generator rows separated by ';', entries by ','")
    p.set_defaults(func=cmd_arc_check)
    p = sub.add_parser("jets", parents=[common, exp], help="truncated arcs and contact orders")
    p.add_argument("--center", help="arc center, x,y (or x on P1)")
    p.add_argument("--N", type=int, default=jets.DEFAULT_N, help="truncation order")
    p.add_argument("--x-jet", dest="x_jet", help="prescribed x(t) coefficients")
    p.add_argument("--y-jet", dest="y_jet", help="prescribed y(t) coefficients")
    p.add_argument("--divisor", help="degree-one divisor points, e.g. 0:1,0:1,2:1")
    p.set_defaults(func=cmd_jets)
    p = sub.add_parser("surface", parents=[common], help="depth formula and P2 monomial chain")
    p.add_argument("--p2-degree", dest="p2_degree", type=int)
    p.add_argument("--c1-sq", dest="c1_sq", type=int)
    p.add_argument("--c1-dot-k", dest="c1_dot_k", type=int)
    p.add_argument("--chi", type=int)
    p.set_defaults(func=cmd_surface)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_CONFIG if exc.code else 0
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        parser.print_usage(sys.stderr)
        return EXIT_CONFIG
    except SearchTooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except InternalInconsistency as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except HierDepthError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
