"""Command-line front end.

Machine-readable results go to stdout as JSON lines; a human-readable table
goes to stderr.  Exit status is 0 on success and 2 on malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Sequence

from . import closed_forms, constructions
from .census import MATRICES, census
from .errors import ExpDqError
from .expdist import charpoly, charpoly_at_q, first_difference, numeric_spectrum
from .graph import Graph, construct, emit_graph6, parse_graph6, read_graph6_lines
from .invariants import summary
from .polyring import GaussianRational, parse_scalar

SMALL_ENOUGH = 12  # cross-check closed forms by direct computation up to this n


def _emit(obj: dict) -> None:
    print(json.dumps(obj, sort_keys=True), flush=True)


def _err(text: str = "") -> None:
    print(text, file=sys.stderr)


def _read_lines(path: str | None) -> list[str]:
    if path is None or path == "-":
        raw = sys.stdin.read().splitlines()
    else:
        with open(path) as fh:
            raw = fh.read().splitlines()
    return [text for _, text, _ in read_graph6_lines(raw)]


def _graph(text: str) -> Graph:
    return parse_graph6(text)


# -- census -----------------------------------------------------------------


def cmd_census(args) -> int:
    matrices = [m.strip() for m in args.matrices.split(",") if m.strip()]
    bad = [m for m in matrices if m not in MATRICES]
    if bad:
        raise argparse.ArgumentTypeError(f"unknown matrix {bad[0]!r}")
    lines = _read_lines(args.input)
    report = census(lines, matrices, jobs=args.jobs)
    for m in matrices:
        for cls in report.classes.get(m, []):
            _emit({"matrix": m, "class": cls})
    tab = report.crosstab()
    _emit({"summary": {"graphs": report.count, **tab}})
    _err(f"graphs read: {report.count}")
    for key, value in tab.items():
        _err(f"  {key:<12} {value}")
    return 0


# -- charpoly ---------------------------------------------------------------


def cmd_charpoly(args) -> int:
    for text in args.graph6:
        g = _graph(text)
        p = charpoly(g)
        s = summary(p)
        _emit({"graph6": text, "charpoly": str(p), "summary": s.to_dict()})
        _err(f"{text}: n={g.n} edges={s.edges} diameter={s.diameter} components={list(s.components.sizes)}")
        _err(f"  {p}")
    return 0


# -- compare ----------------------------------------------------------------


def _numeric_difference(g: Graph, qg, h: Graph, qh):
    ca = numeric_spectrum(g, qg).clusters()
    cb = numeric_spectrum(h, qh).clusters()
    for (va, ma), (vb, mb) in zip(ca, cb):
        if abs(va - vb) > 1e-7 or ma != mb:
            return {"a": [va, ma], "b": [vb, mb]}
    if len(ca) != len(cb):
        return {"a": ca[len(cb):] or None, "b": cb[len(ca):] or None}
    return None


def cmd_compare(args) -> int:
    g, h = _graph(args.a), _graph(args.b)
    if args.at_q is None and args.at_q_b is None:
        pg, ph = charpoly(g), charpoly(h)
        same = pg == ph
        out = {"mode": "symbolic", "cospectral": same}
        if not same:
            diff = first_difference(pg, ph)
            if diff is not None:
                dq, dx, ca, cb = diff
                out["difference"] = {"q_degree": dq, "x_degree": dx, "a": ca, "b": cb}
        _emit(out)
        _err("cospectral for every q" if same else "not cospectral")
        return 0
    qa = parse_scalar(args.at_q if args.at_q is not None else args.at_q_b)
    qb = parse_scalar(args.at_q_b) if args.at_q_b is not None else qa
    ua, ub = charpoly_at_q(g, qa), charpoly_at_q(h, qb)
    same = g.n == h.n and ua == ub
    out = {"mode": "at_q", "q_a": str(qa), "q_b": str(qb), "cospectral": same}
    if not same:
        if isinstance(qa, GaussianRational) or isinstance(qb, GaussianRational):
            out["difference"] = {"a": str(ua), "b": str(ub)}
        else:
            out["difference"] = _numeric_difference(g, Fraction(qa), h, Fraction(qb))
    _emit(out)
    where = f"q={qa}" if qa == qb else f"q={qa} vs q={qb}"
    _err(f"cospectral at {where}" if same else f"not cospectral at {where}")
    return 0


# -- family -----------------------------------------------------------------


def cmd_family(args) -> int:
    name, params = args.name, args.params
    g = construct(name, *params)
    if name == "cycle":
        if args.q is None:
            raise ExpDqError("cycle spectra are numeric: pass --q")
        q = Fraction(parse_scalar(args.q))
        spec = closed_forms.spectrum_cycle(*params, q)
        direct = numeric_spectrum(g, q).eigenvalues
        ok = all(abs(a - b) < 1e-9 for a, b in zip(spec.eigenvalues, direct))
        for value, mult in spec.clusters():
            _emit({"family": name, "params": params, "q": str(q), "eigenvalue": value, "multiplicity": mult})
            _err(f"{value:.10g}  x{mult}")
        _emit({"family": name, "params": params, "cross_check": ok})
        _err(f"cross-check: {'OK' if ok else 'MISMATCH'}")
        return 0
    spec = closed_forms.family_spectrum(name, *params)
    q = Fraction(parse_scalar(args.q)) if args.q is not None else None
    for lam, m in spec.pairs:
        row = {"family": name, "params": params, "eigenvalue": str(lam), "multiplicity": m}
        if q is not None:
            row["value"] = str(lam.eval(q, 0))
        _emit(row)
        _err(f"{lam}  x{m}")
    for f, m in spec.factors:
        _emit({"family": name, "params": params, "factor": str(f), "multiplicity": m})
        _err(f"roots of {f}  x{m}")
    check = None
    if g.n <= SMALL_ENOUGH:
        check = spec.charpoly() == charpoly(g)
    _emit({"family": name, "params": params, "n": g.n, "cross_check": check})
    _err("cross-check: " + {None: "skipped (graph too large)", True: "OK", False: "MISMATCH"}[check])
    return 0


# -- construct --------------------------------------------------------------


def _emit_pair(kind: str, a: Graph, b: Graph, **extra) -> None:
    ga, gb = emit_graph6(a), emit_graph6(b)
    sep = constructions.separate(a, b)
    _emit({"construction": kind, "g": ga, "h": gb, "separator": sep, **extra})
    _err(f"{kind}: {ga}  {gb}  ({sep})")


def cmd_construct(args) -> int:
    if args.kind == "unicyclic":
        pair = constructions.unicyclic_pair(args.k)
        _emit_pair("unicyclic", pair.g1, pair.g2, k=args.k, cospectral=True)
    elif args.kind == "glue":
        g1, g2, h = _graph(args.g1), _graph(args.g2), _graph(args.h)
        a, b, certified = constructions.glue_cospectral(g1, args.u1, g2, args.u2, h, args.v)
        _emit_pair("glue", a, b, certified=certified)
    else:
        g = _graph(args.graph6)
        configs = constructions.find_switch_configs(g)
        if not configs:
            _err("no switching configuration")
        for c in configs:
            h = constructions.apply_switch(g, c)
            _emit_pair(
                "switch", g, h,
                g1=c.g1, g2=c.g2, h1=c.h1, h2=c.h2, S=sorted(c.S), variant=c.variant,
            )
    return 0


# -- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="expdq", description="Exponential distance matrix toolkit")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("census", help="cospectral classes over a graph6 stream")
    c.add_argument("input", nargs="?", help="graph6 file (default: stdin)")
    c.add_argument("--matrices", default="dq,a,d", help="comma list from dq,a,d")
    c.add_argument("--jobs", type=int, default=1)
    c.set_defaults(func=cmd_census)

    c = sub.add_parser("charpoly", help="symbolic D_q polynomial and invariants")
    c.add_argument("graph6", nargs="+")
    c.set_defaults(func=cmd_charpoly)

    c = sub.add_parser("compare", help="cospectrality of two graphs")
    c.add_argument("a")
    c.add_argument("b")
    c.add_argument("--at-q", dest="at_q", help="exact q literal, e.g. 1/2, -2, 2i")
    c.add_argument("--at-q-b", dest="at_q_b", help="a different q for the second graph")
    c.set_defaults(func=cmd_compare)

    c = sub.add_parser("family", help="closed-form family spectrum")
    c.add_argument("name", choices=["complete", "hypercube", "kneser", "wheel", "cycle", "empty"])
    c.add_argument("params", type=int, nargs="+")
    c.add_argument("--q", help="also evaluate at this q (required for cycle)")
    c.set_defaults(func=cmd_family)

    c = sub.add_parser("construct", help="build verified cospectral pairs")
    kinds = c.add_subparsers(dest="kind", required=True)
    u = kinds.add_parser("unicyclic")
    u.add_argument("k", type=int)
    gl = kinds.add_parser("glue")
    gl.add_argument("g1")
    gl.add_argument("u1", type=int)
    gl.add_argument("g2")
    gl.add_argument("u2", type=int)
    gl.add_argument("h")
    gl.add_argument("v", type=int)
    sw = kinds.add_parser("switch")
    sw.add_argument("graph6")
    c.set_defaults(func=cmd_construct)
    return p


def _glue_q_values(argv: list[str]) -> list[str]:
    # argparse mistakes "-1/3" or "-2i" for an option, so bind it to its flag
    out: list[str] = []
    it = iter(argv)
    for tok in it:
        if tok in ("--at-q", "--at-q-b", "--q"):
            val = next(it, None)
            out.append(tok if val is None else f"{tok}={val}")
        else:
            out.append(tok)
    return out


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(_glue_q_values(list(sys.argv[1:] if argv is None else argv)))
    try:
        return args.func(args)
    except (ExpDqError, argparse.ArgumentTypeError) as exc:
        _err(f"error: {exc}")
        return 2
    except OSError as exc:
        _err(f"error: {exc}")
        return 2


if __name__ == "__main__":
    sys.exit(main())
