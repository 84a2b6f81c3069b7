"""Command-line interface.

Exit codes: 0 success / everything verified, 1 validation or verification
failure, 2 usage or I/O error.  ``--format structured`` emits one JSON
document per invocation; identical input, configuration and seed produce
byte-identical output.  ``--figures DIR`` renders profile figures to files
next to the textual output; ``--dot FILE`` writes the 1-skeleton and dual
graph (with any reported cycles highlighted) as DOT text.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import report
from .analysis import (
    VerificationError,
    bridge_from_hamiltonian,
    hamiltonian_cycle,
    run_checks,
    three_geodesics,
    three_stable_geodesics,
)
from .moves import classify_cycle
from .oracle import brute_force_width, catalog, generate
from .shelling import (
    DEFAULT_BOUND,
    BoundExceeded,
    local_extrema,
    profile,
    thin_position,
)
from .triangulation import (
    TriangulationError,
    embedded_cycle,
    parse_triangulation,
    serialize_triangulation,
    validate_sphere,
)


def _load(path: str):
    text = Path(path).read_text(encoding="utf-8")
    return parse_triangulation(text), Path(path).stem


def _load_valid(path: str):
    """Load and require a valid sphere; most commands assume one."""
    t, name = _load(path)
    rep = validate_sphere(t)
    if not rep.ok:
        raise TriangulationError(
            f"{name} is not a valid triangulated 2-sphere: "
            + "; ".join(f.witness for f in rep.failures)
        )
    return t, name


def _emit(args, record: dict, text: str) -> None:
    if args.format == "structured":
        sys.stdout.write(report.dumps(record))
    else:
        print(text)


def _figures_dir(args) -> Path | None:
    if getattr(args, "figures", None) is None:
        return None
    d = Path(args.figures)
    d.mkdir(parents=True, exist_ok=True)
    return d


def _maybe_profile_figure(args, name, prof, ext) -> None:
    d = _figures_dir(args)
    if d is None:
        return
    from .plots import save_profile_figure

    save_profile_figure(prof, ext.maxima, ext.minima, d / f"{name}_profile.png", title=name)


def _maybe_dot(args, t, cycles=None, name="triangulation") -> None:
    if getattr(args, "dot", None) is None:
        return
    Path(args.dot).write_text(report.to_dot(t, cycles, name=name), encoding="utf-8")


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def cmd_validate(args) -> int:
    t, name = _load(args.path)
    rep = validate_sphere(t)
    rec = report.base_record("validate", name)
    rec.update(
        {
            "ok": rep.ok,
            "vertices": t.n_vertices,
            "edges": t.n_edges,
            "faces": t.n_faces,
            "failures": [{"invariant": f.invariant, "witness": f.witness} for f in rep.failures],
        }
    )
    lines = [f"{name}: V={t.n_vertices} E={t.n_edges} F={t.n_faces}"]
    if rep.ok:
        lines.append("valid triangulated 2-sphere")
    else:
        lines.extend(f"FAIL {f.invariant}: {f.witness}" for f in rep.failures)
    _emit(args, rec, "\n".join(lines))
    _maybe_dot(args, t, name=name)
    return 0 if rep.ok else 1


def cmd_thin(args) -> int:
    t, name = _load_valid(args.path)
    order, width = thin_position(t, strategy=args.strategy, bound=args.bound)
    prof = profile(t, order)
    ext = local_extrema(prof)
    rec = report.width_record("thin", name, args.strategy, order, width, prof, ext)
    text = (
        f"{name}: width {list(width)}\n"
        f"ordering {list(order)}\n"
        f"profile  {list(prof)}\n"
        f"maxima at {list(ext.maxima)}, minima at {list(ext.minima)}"
    )
    _emit(args, rec, text)
    _maybe_profile_figure(args, name, prof, ext)
    if args.dot:
        from .shelling import prefix_boundaries

        cycles = prefix_boundaries(t, order)
        marked = {f"min@{k}": cycles[k - 1] for k in ext.minima}
        marked.update({f"max@{k}": cycles[k - 1] for k in ext.maxima})
        _maybe_dot(args, t, marked, name=name)
    return 0


def cmd_bridge(args) -> int:
    t, name = _load_valid(args.path)
    h = hamiltonian_cycle(t)
    rec = report.base_record("bridge", name)
    if h is None:
        rec.update({"bridge": None, "hamiltonian": None})
        _emit(args, rec, f"{name}: no Hamiltonian cycle, hence no bridge ordering")
        return 0
    order = bridge_from_hamiltonian(t, h)
    prof = profile(t, order)
    ext = local_extrema(prof)
    rec.update(
        {
            "hamiltonian": list(h.vertices),
            "width": [t.n_vertices],
            "ordering": list(order),
            "profile": list(prof),
            "maxima": list(ext.maxima),
            "minima": list(ext.minima),
        }
    )
    text = (
        f"{name}: bridge ordering with peak {t.n_vertices}\n"
        f"hamiltonian {list(h.vertices)}\n"
        f"ordering {list(order)}\n"
        f"profile  {list(prof)}"
    )
    _emit(args, rec, text)
    _maybe_profile_figure(args, name, prof, ext)
    _maybe_dot(args, t, {"hamiltonian": h}, name=name)
    return 0


def _cycles_payload(pairs):
    return [
        {"vertices": list(c.vertices), "length": len(c), "provenance": str(prov)}
        for c, prov in pairs
    ]


def cmd_geodesics(args) -> int:
    t, name = _load_valid(args.path)
    rec = report.base_record("geodesics", name)
    lines = [f"{name}:"]
    code = 0
    try:
        rep = three_geodesics(t, strategy=args.strategy, bound=args.bound)
        rec["geodesics"] = {
            "stable": _cycles_payload(rep.stable),
            "unstable": _cycles_payload(rep.unstable),
        }
        lines.append("geodesics from thin position:")
        for c, prov in rep.unstable:
            lines.append(f"  unstable {list(c.vertices)}  [{prov}]")
        for c, prov in rep.stable:
            lines.append(f"  stable   {list(c.vertices)}  [{prov}]")
        srep = three_stable_geodesics(t, strategy=args.strategy, bound=args.bound)
        if srep.exceptional is not None:
            rec["stable_geodesics"] = {"exceptional": srep.exceptional, "cycles": []}
            lines.append(f"stable geodesics: exceptional sphere ({srep.exceptional})")
        else:
            rec["stable_geodesics"] = {
                "exceptional": None,
                "cycles": _cycles_payload(srep.cycles),
            }
            lines.append("stable geodesics:")
            for c, prov in srep.cycles:
                lines.append(f"  stable   {list(c.vertices)}  [{prov}]")
        marked = {str(prov): c for c, prov in list(rep.unstable) + list(rep.stable)}
        if srep.exceptional is None:
            for c, prov in srep.cycles:
                marked.setdefault(str(prov), c)
        _maybe_dot(args, t, marked, name=name)
    except VerificationError as exc:
        rec["error"] = {"check": exc.check, "witness": exc.witness}
        lines.append(f"VERIFICATION FAILURE {exc.check}: {exc.witness}")
        code = 1
    _emit(args, rec, "\n".join(lines))
    return code


def cmd_classify(args) -> int:
    t, name = _load_valid(args.path)
    try:
        vertices = [int(x) for x in args.cycle.split(",")]
        c = embedded_cycle(t, vertices)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    cls = classify_cycle(t, c)
    rec = report.base_record("classify", name)
    rec.update(
        {
            "cycle": list(c.vertices),
            "class": cls.tag,
            "shortenings": [
                {"face": m.face, "side": m.side, "replaced": [list(e) for e in m.replaced_edges]}
                for m in cls.shortenings
            ],
        }
    )
    _emit(args, rec, f"{name}: {list(c.vertices)} is {cls.tag}")
    _maybe_dot(args, t, {"cycle": c}, name=name)
    return 0


def cmd_verify(args) -> int:
    instances = []
    if args.catalog:
        instances = [(e.name, e.triangulation) for e in catalog()]
    for path in args.paths:
        t, name = _load_valid(path)
        instances.append((name, t))
    if not instances:
        print("error: give input files or --catalog", file=sys.stderr)
        return 2
    rows = []
    for name, t in instances:
        rows.extend(run_checks(t, instance=name, strategy=args.strategy, bound=args.bound))
        if _figures_dir(args) is not None:
            order, _ = thin_position(t, strategy=args.strategy, bound=args.bound)
            prof = profile(t, order)
            _maybe_profile_figure(args, name, prof, local_extrema(prof))
    ok = all(r.status != "failed" for r in rows)
    rec = report.base_record("verify", "catalog" if args.catalog else "files")
    rec.update({"rows": report.check_rows(rows), "all_verified": ok})
    text = report.format_check_table(rows) + (
        "\nall checks verified" if ok else "\nSOME CHECKS FAILED"
    )
    _emit(args, rec, text)
    return 0 if ok else 1


def cmd_gen(args) -> int:
    params = {}
    if args.name == "bipyramid":
        if args.k is None:
            print("error: bipyramid needs -k", file=sys.stderr)
            return 2
        params["k"] = args.k
    if args.name == "stacked":
        params.update({"seed": args.seed, "splits": args.splits})
    if args.name == "flipped":
        params.update({"seed": args.seed, "flips": args.flips})
    try:
        t = generate(args.name, **params)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    rep = validate_sphere(t)
    assert rep.ok, f"generator produced an invalid sphere: {rep.failures}"
    header = f"# {args.name}"
    if params:
        header += " " + " ".join(f"{k}={v}" for k, v in sorted(params.items()))
    out = Path(args.out)
    out.write_text(header + "\n" + serialize_triangulation(t), encoding="utf-8")
    print(f"wrote {out} (V={t.n_vertices} E={t.n_edges} F={t.n_faces})")
    return 0


def cmd_oracle(args) -> int:
    t, name = _load_valid(args.path)
    oracle_width = brute_force_width(t, bound=args.bound)
    _, search_width = thin_position(t, strategy="branch-and-bound", bound=args.bound)
    agree = oracle_width == search_width
    rec = report.base_record("oracle", name)
    rec.update(
        {
            "brute_force_width": list(oracle_width),
            "search_width": list(search_width),
            "agree": agree,
        }
    )
    _emit(
        args,
        rec,
        f"{name}: brute force {list(oracle_width)}, search {list(search_width)}"
        + (" (agree)" if agree else " (MISMATCH)"),
    )
    return 0 if agree else 1


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def _add_common(p, figures=True, dot=True):
    p.add_argument("--format", choices=("text", "structured"), default="text",
                   help="text report or a single JSON document")
    if figures:
        p.add_argument("--figures", metavar="DIR",
                       help="render profile figures into DIR")
    if dot:
        p.add_argument("--dot", metavar="FILE",
                       help="write skeleton and dual graph as DOT text")


def _add_search(p):
    p.add_argument("--strategy", choices=("exhaustive", "branch-and-bound"),
                   default="branch-and-bound")
    p.add_argument("--bound", type=int, default=DEFAULT_BOUND,
                   help=f"face bound for exhaustive operations (default {DEFAULT_BOUND})")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trisphere",
        description="Thin position, width and PL geodesics of triangulated 2-spheres.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check the sphere invariants of a .tri file")
    p.add_argument("path")
    _add_common(p, figures=False)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("thin", help="find a minimal-width (thin) ordering")
    p.add_argument("path")
    _add_search(p)
    _add_common(p)
    p.set_defaults(func=cmd_thin)

    p = sub.add_parser("bridge", help="find a bridge ordering or report none")
    p.add_argument("path")
    _add_common(p)
    p.set_defaults(func=cmd_bridge)

    p = sub.add_parser("geodesics", help="extract and verify geodesics")
    p.add_argument("path")
    _add_search(p)
    _add_common(p)
    p.set_defaults(func=cmd_geodesics)

    p = sub.add_parser("classify", help="classify one cycle given as v1,v2,...")
    p.add_argument("path")
    p.add_argument("--cycle", required=True, metavar="V1,V2,...")
    _add_common(p, figures=False)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify", help="run the structural checks per instance")
    p.add_argument("paths", nargs="*", metavar="PATH")
    p.add_argument("--catalog", action="store_true", help="use the built-in catalog")
    _add_search(p)
    _add_common(p, dot=False)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="generate a triangulation into a .tri file")
    p.add_argument("name", choices=("tetrahedron", "double-tetrahedron", "bipyramid",
                                    "octahedron", "icosahedron", "stacked", "flipped"))
    p.add_argument("-k", type=int, help="bipyramid equator length")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--splits", type=int, default=1)
    p.add_argument("--flips", type=int, default=10)
    p.add_argument("-o", "--out", required=True)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("oracle", help="cross-check search width against brute force")
    p.add_argument("path")
    p.add_argument("--bound", type=int, default=DEFAULT_BOUND)
    p.add_argument("--format", choices=("text", "structured"), default="text")
    p.set_defaults(func=cmd_oracle)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except TriangulationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except BoundExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except VerificationError as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
