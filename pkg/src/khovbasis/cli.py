"""Command line driver: ``khovbasis {subduct,khovanskii,muvak,homogenize} PROBLEM``.

Problem files are TOML::

    ring = ["x", "y"]
    generators = ["x", "x + y", "y + y^2"]
    valuations = ["weight(0,1)"]
    degrees = [[2, 0, 0], ...]          # one per generator, free part first
    weights = [[0, 0, 1]]               # homogenize only
    signs = [-1]                        # homogenize only, default -1

    [delta]
    free = 1
    torsion = [2, 2]

    [options]
    max_iter = 1000
    max_rounds = 20
    method = "bayer"
    target = "-y"
    target_degree = [0]
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass, field
from typing import Any, Dict, List, Tuple

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib

from .grading import TRIVIAL, DeltaDegree, DeltaGrading, DeltaGroup
from .groebner import Ideal, PairLimitExceeded
from .homogenize import BayerPreconditionError, WeightSystem, multi_homogenize
from .khovanskii import RunStatus, khovanskii_basis, verify_khovanskii
from .muvak import muvak_basis
from .parse import ParseError, parse_poly, parse_valuation
from .poly import Poly, PolyRing, format_poly
from .subduction import InhomogeneousError, Status, subduct
from .valuation import MonomialValuation

EXIT_OK, EXIT_INPUT, EXIT_CAP = 0, 1, 2

KNOWN_KEYS = {"ring", "generators", "valuations", "degrees", "weights", "signs", "delta", "options"}
KNOWN_OPTIONS = {"max_iter", "max_rounds", "method", "target", "target_degree", "normalize"}


@dataclass
class ProblemFile:
    ring: PolyRing
    generators: List[Poly]
    group: DeltaGroup = TRIVIAL
    degrees: List[DeltaDegree] = field(default_factory=list)
    valuations: List[MonomialValuation] = field(default_factory=list)
    weights: List[List[int]] = field(default_factory=list)
    signs: List[int] = field(default_factory=list)
    options: Dict[str, Any] = field(default_factory=dict)
    text: str = ""

    @property
    def grading(self) -> DeltaGrading:
        return DeltaGrading(self.group, tuple(self.degrees))

    def parse(self, expr: str) -> Poly:
        line, col = _locate(self.text, expr)
        return parse_poly(expr, self.ring, line, col)


def _locate(text: str, s: str):
    """Line and column of the first quoted occurrence of s (1, 1 if absent)."""
    for q in ('"', "'"):
        pos = text.find(q + s + q)
        if pos >= 0:
            pos += 1
            line = text.count("\n", 0, pos) + 1
            col = pos - (text.rfind("\n", 0, pos) + 1) + 1
            return line, col
    return 1, 1


def _int_list(x, what) -> List[int]:
    if not isinstance(x, list) or not all(isinstance(a, int) and not isinstance(a, bool) for a in x):
        raise ParseError(f"{what} must be a list of integers")
    return list(x)


def parse_problem_file(text: str) -> ProblemFile:
    try:
        data = tomllib.loads(text)
    except tomllib.TOMLDecodeError as e:
        msg = str(e)
        line = getattr(e, "lineno", None) or 1
        col = getattr(e, "colno", None) or 1
        raise ParseError(msg, line, col) from None
    unknown = set(data) - KNOWN_KEYS
    if unknown:
        raise ParseError(f"unknown keys: {', '.join(sorted(unknown))}")
    names = data.get("ring")
    if not isinstance(names, list) or not names or not all(isinstance(n, str) for n in names):
        raise ParseError("'ring' must be a nonempty list of variable names")
    try:
        ring = PolyRing(tuple(names))
    except ValueError as e:
        raise ParseError(str(e)) from None
    prob = ProblemFile(ring, [], text=text)
    gens = data.get("generators", [])
    if not isinstance(gens, list) or not all(isinstance(g, str) for g in gens):
        raise ParseError("'generators' must be a list of expression strings")
    prob.generators = [prob.parse(g) for g in gens]

    delta = data.get("delta", {})
    if not isinstance(delta, dict):
        raise ParseError("'delta' must be a table")
    free = delta.get("free", 0)
    torsion = _int_list(delta.get("torsion", []), "delta.torsion")
    try:
        prob.group = DeltaGroup(int(free), tuple(torsion))
    except (TypeError, ValueError) as e:
        raise ParseError(f"invalid delta group: {e}") from None
    if "degrees" in data:
        degs = data["degrees"]
        if not isinstance(degs, list):
            raise ParseError("'degrees' must be a list of integer lists")
        degs = [_int_list(d, "each degree") for d in degs]
        if len(degs) != len(prob.generators):
            raise ParseError(f"{len(prob.generators)} generators but {len(degs)} degrees")
        for d in degs:
            if len(d) != prob.group.length:
                raise ParseError(f"degree {d} does not have {prob.group.length} entries")
        prob.degrees = [prob.group.reduce(d) for d in degs]
    elif prob.group.is_trivial:
        prob.degrees = [() for _ in prob.generators]
    else:
        raise ParseError("'degrees' is required when the delta group is nontrivial")

    vals = data.get("valuations", [])
    if not isinstance(vals, list) or not all(isinstance(v, str) for v in vals):
        raise ParseError("'valuations' must be a list of spec strings")
    prob.valuations = [parse_valuation(v, ring.names) for v in vals]

    if "weights" in data:
        ws = data["weights"]
        if not isinstance(ws, list):
            raise ParseError("'weights' must be a list of integer rows")
        prob.weights = [_int_list(w, "each weight row") for w in ws]
        if any(len(w) != ring.nvars for w in prob.weights):
            raise ParseError(f"weight rows must have {ring.nvars} entries")
    prob.signs = _int_list(data.get("signs", [-1] * len(prob.weights)), "signs")
    if len(prob.signs) != len(prob.weights) or any(s not in (1, -1) for s in prob.signs):
        raise ParseError("'signs' needs one entry (+1 or -1) per weight row")

    opts = data.get("options", {})
    if not isinstance(opts, dict):
        raise ParseError("'options' must be a table")
    unknown = set(opts) - KNOWN_OPTIONS
    if unknown:
        raise ParseError(f"unknown options: {', '.join(sorted(unknown))}")
    prob.options = dict(opts)
    return prob


# --------------------------------------------------------------------------
# reports

def _fmt_value(g) -> Any:
    return g[0] if len(g) == 1 else list(g)


def _run_subduct(prob: ProblemFile, opts) -> Tuple[Dict[str, Any], int]:
    target = opts.target if opts.target is not None else prob.options.get("target")
    if target is None:
        raise ParseError("subduct needs a target (--target or options.target)")
    f = prob.parse(target)
    delta = opts.target_degree if opts.target_degree is not None else prob.options.get("target_degree")
    res = subduct(f, prob.generators, prob.valuations[0], prob.grading, opts.max_iter, delta)
    return {
        "command": "subduct",
        "target": format_poly(f),
        "status": str(res.status),
        "iterations": res.iterations,
        "h": format_poly(res.h),
        "r": format_poly(res.r),
        "trail": [_fmt_value(g) for g in res.trail],
        "used": [i + 1 for i in res.used],
    }, EXIT_CAP if res.status is Status.ITERATION_CAP_HIT else EXIT_OK


def _run_khovanskii(prob: ProblemFile, opts) -> Tuple[Dict[str, Any], int]:
    v = prob.valuations[0]
    run = khovanskii_basis(prob.generators, v, prob.grading, opts.max_rounds, opts.max_iter,
                           prob.options.get("normalize", True))
    rep: Dict[str, Any] = {
        "command": "khovanskii",
        "status": str(run.status),
        "rounds": run.rounds,
        "basis": [format_poly(b) for b in run.basis],
        "degrees": [list(d) for d in run.degrees],
    }
    if run.status is RunStatus.COMPLETE:
        cert = verify_khovanskii(run.basis, v, run.grading, opts.max_iter)
        rep["verified"] = cert.verdict
    if opts.emit_certificates:
        rep["certificates"] = [{
            "round": i + 1,
            "kernel": [format_poly(g) for g in rl.kernel],
            "added": [format_poly(g) for g in rl.added],
            "deferred": [format_poly(g) for g in rl.deferred],
        } for i, rl in enumerate(run.log)]
    return rep, EXIT_OK if run.status is RunStatus.COMPLETE else EXIT_CAP


def _run_muvak(prob: ProblemFile, opts) -> Tuple[Dict[str, Any], int]:
    run = muvak_basis(prob.generators, prob.valuations, prob.grading, opts.max_rounds, opts.method,
                      prob.options.get("normalize", True))
    rep: Dict[str, Any] = {
        "command": "muvak",
        "status": str(run.status),
        "rounds": run.rounds,
        "basis": [format_poly(b) for b in run.basis],
        "degrees": [list(d) for d in run.degrees],
    }
    if opts.emit_certificates:
        rep["certificates"] = [{
            "round": i + 1,
            "W": [list(r) for r in rnd.ideals.W],
            "I_hom": [format_poly(g) for g in rnd.ideals.I_hom.gens],
            "J_hom": [[format_poly(g) for g in J.gens] for J in rnd.ideals.J_hom],
            "offenders": [[format_poly(g) for g in o] for o in rnd.offenders],
            "added": [format_poly(g) for g in rnd.added],
        } for i, rnd in enumerate(run.log)]
    return rep, EXIT_OK if run.status is RunStatus.COMPLETE else EXIT_CAP


def _run_homogenize(prob: ProblemFile, opts) -> Tuple[Dict[str, Any], int]:
    if not prob.weights:
        raise ParseError("homogenize needs 'weights'")
    ws = WeightSystem(tuple(tuple(w) for w in prob.weights), tuple(prob.signs))
    H = multi_homogenize(Ideal(prob.ring, prob.generators), ws, opts.method)
    return {
        "command": "homogenize",
        "method": opts.method,
        "ring": list(H.ring.names),
        "generators": [format_poly(g) for g in H.gens],
    }, EXIT_OK


COMMANDS = {
    "subduct": _run_subduct,
    "khovanskii": _run_khovanskii,
    "muvak": _run_muvak,
    "homogenize": _run_homogenize,
}


def render_text(rep: Dict[str, Any]) -> str:
    lines = []
    for key, val in rep.items():
        if key == "certificates":
            lines.append("certificates:")
            for c in val:
                lines.append(f"  round {c['round']}:")
                for k2, v2 in c.items():
                    if k2 != "round":
                        lines.append(f"    {k2}: {json.dumps(v2)}")
        elif key in ("basis", "generators"):
            lines.append(f"{key}:")
            lines.extend(f"  {p}" for p in val)
        elif isinstance(val, (list, bool)) or val is None:
            lines.append(f"{key}: {json.dumps(val)}")
        else:
            lines.append(f"{key}: {val}")
    return "\n".join(lines) + "\n"


def _resolve(args, prob: ProblemFile):
    """Fill unset command line options from the problem file, then defaults."""
    o = prob.options
    args.max_iter = args.max_iter if args.max_iter is not None else int(o.get("max_iter", 1000))
    args.max_rounds = args.max_rounds if args.max_rounds is not None else int(o.get("max_rounds", 20))
    args.method = args.method or o.get("method", "bayer")
    if args.method not in ("bayer", "saturation"):
        raise ParseError(f"unknown method {args.method!r}")
    if not hasattr(args, "target"):
        args.target = None
        args.target_degree = None
    if isinstance(args.target_degree, str):
        try:
            args.target_degree = [int(x) for x in args.target_degree.split(",") if x.strip()]
        except ValueError:
            raise ParseError("--target-degree must be comma separated integers") from None
    return args


def run_command(cmd: str, prob: ProblemFile, opts=None):
    """Run one subcommand; returns (report dict, exit code)."""
    if opts is None:
        opts = _resolve(build_parser().parse_args([cmd, "-"]), prob)
    if cmd not in COMMANDS:
        raise ValueError(f"unknown command {cmd!r}")
    if cmd != "homogenize" and not prob.generators:
        raise ParseError("no generators given")
    if cmd in ("subduct", "khovanskii", "muvak") and not prob.valuations:
        raise ParseError(f"{cmd} needs at least one valuation")
    return COMMANDS[cmd](prob, opts)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="khovbasis", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("problem", help="problem file (TOML), or - for stdin")
    common.add_argument("--max-iter", type=int, default=None, help="subduction iteration cap")
    common.add_argument("--max-rounds", type=int, default=None, help="round cap")
    common.add_argument("--method", choices=["bayer", "saturation"], default=None)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--emit-certificates", action="store_true")
    common.add_argument("-v", "--verbose", action="store_true")
    for name in COMMANDS:
        sp = sub.add_parser(name, parents=[common])
        if name == "subduct":
            sp.add_argument("--target", default=None, help="expression to subduct")
            sp.add_argument("--target-degree", default=None,
                            help="Delta-degree of the target, comma separated")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s: %(message)s")
    try:
        text = sys.stdin.read() if args.problem == "-" else open(args.problem, encoding="utf-8").read()
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    try:
        prob = parse_problem_file(text)
        _resolve(args, prob)
        rep, code = run_command(args.command, prob, args)
    except (ParseError, InhomogeneousError, BayerPreconditionError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except PairLimitExceeded as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CAP
    if args.json:
        sys.stdout.write(json.dumps(rep, indent=2) + "\n")
    else:
        sys.stdout.write(render_text(rep))
    return code


if __name__ == "__main__":
    sys.exit(main())
