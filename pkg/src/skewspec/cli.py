"""Command-line front end.

Exit codes: 0 ok, 1 a property or bound violation was found, 2 bad input,
3 numerical failure.
"""

from __future__ import annotations

import argparse
import csv
import io as _io
import json
import re
import sys
from pathlib import Path

import numpy as np

from . import bounds, search
from .characterize import SPECTRAL_TOL, characterize, has_i_sqrt_delta_eigenvalue, orthogonal_max_degree_vertices
from .coloring import ColoringError, OrientedColoring, coloring_violation
from .generators import from_spec
from .graph import GraphError, OrientedGraph, skew_adjacency
from .io import parse_graph6, read_graph6_file, read_oriented, read_undirected
from .spectra import EigenError, exact_determinant, skew_spectrum

EXIT_OK, EXIT_VIOLATION, EXIT_INPUT, EXIT_NUMERIC = 0, 1, 2, 3


class InputError(Exception):
    pass


def _round(x):
    """Floats to 9 significant digits, recursively."""
    if isinstance(x, (float, np.floating)):
        return float(f"{float(x):.9g}")
    if isinstance(x, (np.integer,)):
        return int(x)
    if isinstance(x, dict):
        return {k: _round(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, np.ndarray)):
        return [_round(v) for v in x]
    return x


def dumps(obj) -> str:
    return json.dumps(_round(obj), sort_keys=True)


def _fmt(x) -> str:
    return f"{x:.9g}" if isinstance(x, float) else str(x)


def _oriented_input(args) -> OrientedGraph:
    if not args.input:
        raise InputError("an input file is required (-i/--input)")
    return read_oriented(args.input)


def _undirected_input(args):
    if getattr(args, "graph", None):
        return from_spec(args.graph)
    if not args.input:
        raise InputError("give a graph with -i/--input or --graph family:args")
    return read_undirected(args.input)


def read_coloring(path, n: int) -> OrientedColoring:
    """Classes either as ``{0,2},{1}`` groups or one whitespace-separated class per line."""
    text = Path(path).read_text()
    groups = re.findall(r"\{([^}]*)\}", text)
    if not groups:
        groups = [line for line in text.splitlines() if line.strip() and not line.startswith("#")]
    try:
        classes = [[int(v) for v in re.split(r"[\s,]+", g.strip()) if v] for g in groups]
    except ValueError:
        raise ColoringError(f"{path}: colouring classes must list integer vertices") from None
    return OrientedColoring.from_classes(classes, n)


# ---------------------------------------------------------------------------
# commands


def cmd_spectrum(args, out) -> int:
    o = _oriented_input(args)
    spec = skew_spectrum(o)
    det = exact_determinant(skew_adjacency(o))
    report = {
        "n": o.n,
        "m": o.m,
        "sigma": spec.sigma.tolist(),
        "rho_s": spec.radius,
        "energy": spec.energy,
        "det_s": det.value,
        "pfaffian": det.pfaffian,
    }
    if args.format == "json":
        print(dumps(report), file=out)
    else:
        print("sigma [" + ", ".join(f"{s:.6f}" for s in spec.sigma) + "]", file=out)
        for key in ("rho_s", "energy", "det_s", "pfaffian"):
            print(f"{key} {_fmt(report[key])}", file=out)
    return EXIT_OK


def cmd_bounds(args, out) -> int:
    o = _oriented_input(args)
    chi = None
    if args.coloring:
        col = read_coloring(args.coloring, o.n)
        reason = coloring_violation(o, col.labels)
        if reason:
            raise ColoringError(f"invalid oriented colouring: {reason}")
        chi = col.k
    report = bounds.full_report(o, chi_o=chi, seed=args.seed)
    print(dumps(report.to_dict()), file=out)
    bad = report.violations()
    for msg in bad:
        print(f"bound violation: {msg}", file=sys.stderr)
    return EXIT_VIOLATION if bad else EXIT_OK


def cmd_characterize(args, out) -> int:
    o = _oriented_input(args)
    result = characterize(o, tol=args.tol_spectral)
    print(dumps(result.to_dict()), file=out)
    return EXIT_OK


def cmd_scan(args, out) -> int:
    graphs = None
    if args.input:
        graphs = read_graph6_file(args.input)
    violations = search.exhaustive_property_scan(args.n_max, args.property, graphs=graphs,
                                                 sample=args.sample, seed=args.seed,
                                                 threads=args.threads)
    for v in violations:
        print(dumps(_outcome_dict(v)), file=out)
    summary = f"{len(violations)} violations"
    print(summary, file=out if args.format == "text" else sys.stderr)
    return EXIT_VIOLATION if violations else EXIT_OK


def _outcome_dict(obj) -> dict:
    d = json.loads(obj.to_json())
    d.pop("elapsed", None)
    return d


def cmd_search(args, out) -> int:
    if args.kind == "min-rho":
        G = _undirected_input(args)
        found = search.min_rho_orientation(G)
    else:
        found = search.find_orthogonality_counterexample(
            budget=args.budget, seed=args.seed, n_range=(args.n_min, args.n_max), delta=args.delta)
    if found is None:
        print("none found", file=out)
        return EXIT_OK
    if args.format == "text":
        print(f"value {found.value:.9g}", file=out)
        print("arcs " + " ".join(f"{t}->{h}" for t, h in found.arcs), file=out)
        for k, v in sorted(found.extra.items()):
            print(f"{k} {v}", file=out)
    else:
        print(dumps(_outcome_dict(found)), file=out)
    return EXIT_OK


GAMMA_FIELDS = ["n", "m", "delta", "det", "in_gamma", "log_bound", "mc_improved", "winner"]


def gamma_row(n, m, delta, det) -> dict:
    row = dict(n=n, m=m, delta=delta, det=det, in_gamma=bounds.in_gamma(n, m, delta, det))
    try:
        lb, mc = bounds.log_bound(n, delta, det), bounds.mc_improved(n, m, det)
    except ValueError:
        lb = mc = None
    row.update(log_bound=lb, mc_improved=mc)
    if not row["in_gamma"]:
        row["winner"] = "not in gamma"
    else:
        row["winner"] = "log" if lb > mc else "mc_improved"
    return row


def cmd_gamma_compare(args, out) -> int:
    if args.sweep:
        tuples = bounds.sample_gamma(args.sweep, seed=args.seed)
    elif None not in (args.n, args.m, args.delta, args.det):
        tuples = [(args.n, args.m, args.delta, args.det)]
    else:
        raise InputError("give --n --m --delta --det, or --sweep COUNT")
    rows = [gamma_row(*t) for t in tuples]
    if args.format == "json":
        for row in rows:
            print(dumps(row), file=out)
    elif args.format == "csv":
        buf = _io.StringIO()
        w = csv.DictWriter(buf, GAMMA_FIELDS, lineterminator="\n")
        w.writeheader()
        w.writerows(_round(r) for r in rows)
        out.write(buf.getvalue())
    else:
        for r in rows:
            vals = "  ".join(f"{k}={_fmt(_round(r[k]))}" for k in GAMMA_FIELDS[:-1])
            print(f"{vals}  {r['winner']}", file=out)
    inside = [r for r in rows if r["in_gamma"]]
    wins = sum(r["winner"] == "log" for r in inside)
    if args.sweep:
        pct = 100.0 * wins / len(inside) if inside else 0.0
        print(f"log wins {wins}/{len(inside)} ({pct:.1f}%) within gamma", file=sys.stderr)
    return EXIT_OK if wins == len(inside) else EXIT_VIOLATION


def _replay_one(rec: dict) -> str | None:
    """Re-check a JSON-lines witness; the message says what is (still) wrong, None if clean."""
    o = OrientedGraph(rec["n"], [tuple(a) for a in rec["arcs"]])
    if "property" in rec:
        G = parse_graph6(rec["graph6"])
        batch = search.Batch(G, np.array([rec["code"]], dtype=np.int64))
        if batch.G.edges != o.underlying.edges:
            raise InputError("witness arcs do not match its graph6 string")
        if not bool(search.PROPERTIES[rec["property"]](batch)[0]):
            return f"{rec['property']} violated"
        return None
    extra = rec.get("extra", {})
    if "vertex" in extra:
        spec = skew_spectrum(o)
        ok = (extra["vertex"] in orthogonal_max_degree_vertices(o)
              and has_i_sqrt_delta_eigenvalue(o, search.EIGENVALUE_TOL, spec)
              and spec.radius > np.sqrt(o.max_degree))
        return None if ok else "counterexample does not re-verify"
    value = skew_spectrum(o).radius
    return None if abs(value - rec["value"]) <= 1e-7 else f"radius {value:.9g} != {rec['value']}"


def cmd_replay(args, out) -> int:
    if not args.input:
        raise InputError("replay needs -i/--input with JSON lines")
    status = EXIT_OK
    for lineno, line in enumerate(Path(args.input).read_text().splitlines(), start=1):
        if not line.strip() or not line.lstrip().startswith("{"):
            continue
        try:
            rec = json.loads(line)
            msg = _replay_one(rec)
        except (KeyError, TypeError, json.JSONDecodeError) as exc:
            raise InputError(f"line {lineno}: not a witness record ({exc})") from None
        print(f"line {lineno}: {msg or 'ok'}", file=out)
        if msg:
            status = EXIT_VIOLATION
    return status


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="skewspec", description="Skew spectra and energy bounds of oriented graphs.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-i", "--input", help="input file (oriented edge list, or graph6 where noted)")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--threads", type=int, default=1)
    common.add_argument("--tol-spectral", type=float, default=SPECTRAL_TOL)
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help, formats=("text", "json"), default="text"):
        sp = sub.add_parser(name, parents=[common], help=help)
        sp.add_argument("--format", choices=formats, default=default)
        sp.set_defaults(func=func)
        return sp

    add("spectrum", cmd_spectrum, "sigma vector, radius, energy, det and Pfaffian")
    sp = add("bounds", cmd_bounds, "every bound as a JSON report", formats=("json",), default="json")
    sp.add_argument("--coloring", help="oriented colouring to use for the chromatic bound")
    add("characterize", cmd_characterize, "sqrt(max degree) characterisation checks",
        formats=("json",), default="json")

    sp = add("scan", cmd_scan, "check a named property on every orientation")
    sp.add_argument("property", choices=sorted(search.PROPERTIES))
    sp.add_argument("--n-max", type=int, default=5)
    sp.add_argument("--sample", type=int, help="random orientations instead of all")

    sp = add("search", cmd_search, "min-rho orientation or orthogonality counterexample", default="json")
    sp.add_argument("kind", choices=["min-rho", "counterexample"])
    sp.add_argument("--graph", help="graph spec such as cycle:4 or gnp:8,0.4,1 (min-rho)")
    sp.add_argument("--budget", type=float, default=60.0, help="seconds (counterexample)")
    sp.add_argument("--n-min", type=int, default=8)
    sp.add_argument("--n-max", type=int, default=12)
    sp.add_argument("--delta", type=int, default=6)

    sp = add("gamma-compare", cmd_gamma_compare, "log bound against mc_improved on the large sparse class",
             formats=("text", "csv", "json"))
    sp.add_argument("--n", type=int)
    sp.add_argument("--m", type=int)
    sp.add_argument("--delta", type=int)
    sp.add_argument("--det", type=int)
    sp.add_argument("--sweep", type=int, metavar="COUNT", help="deterministic samples from --seed")

    add("replay", cmd_replay, "re-check JSON-lines witnesses from scan or search")
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (EigenError, ArithmeticError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except (GraphError, ColoringError, InputError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
