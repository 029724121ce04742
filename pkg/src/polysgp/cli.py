"""Command-line front end.

One subcommand per computation: ``msg`` (minimal generators), the three
ring-property deciders ``is-cm`` / ``is-gorenstein`` / ``is-buchsbaum``,
``gaps`` (the finite gap region), ``decompose`` (the structural report),
``family`` (the shipped Gorenstein tetrahedra), ``oracle-check`` (slow
definitional recomputation and diff), and ``export`` (geometry for
external viewers).

Input is a small text document naming the polytope by its vertices:

    # any line may carry a comment
    vertices
      3 3 2
      2 3 1
      1 2 3
      3/2, 3, 9/2
      [2.0625, 3.375, 3.9375]

Coordinates are integers, exact decimals, or fractions ``p/q``; commas,
brackets and parentheses are interchangeable with spaces.  An input path
of ``-`` (the default) reads standard input, so commands pipe:

    polysgp family --gorenstein --k 3 | polysgp is-gorenstein

Exit status: 0 for any computed verdict (including "no"), 2 when the
configuration falls outside the decided cases or a budget ran out, 1 for
malformed input.  Output is deterministic byte for byte; ``--format
structured`` emits canonical JSON.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from itertools import product
from typing import Optional, Sequence

from . import oracle
from .decomposition import (
    classify,
    gap_points,
    gap_region,
    ray_chord_class,
    ray_period,
    slab_integer_points,
    slabs,
)
from .errors import (
    BadParameter,
    BoxTooSmall,
    DegenerateInput,
    NotAGap,
    OriginInside,
    OutsideCone,
    ParseError,
    PolysgpError,
    UnsupportedCase,
)
from .geometry import Point3, Polyhedron, dilate, hull_union
from .rings import (
    apery_table,
    gorenstein_family,
    is_buchsbaum,
    is_cohen_macaulay,
    is_gorenstein,
)
from .semigroup import (
    SemigroupHandle,
    build,
    in_cone_int,
    member_int,
    minimal_generators,
    apery_intersection,
)

_INPUT_ERRORS = (
    ParseError,
    BadParameter,
    DegenerateInput,
    OriginInside,
    OutsideCone,
    NotAGap,
    BoxTooSmall,
    OSError,
)


# ---------------------------------------------------------------------------
# input parsing


_PUNCT = str.maketrans({c: " " for c in ",[]()"})


def parse_vertices(text: str) -> list[Point3]:
    """Parse a vertex document to exact points.

    Raises ParseError with the 1-based line and column of the first
    offending token.
    """
    rows: list[Point3] = []
    saw_header = False
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        if not saw_header:
            head = line.strip()
            if head.rstrip(":") != "vertices":
                raise ParseError(
                    "expected a 'vertices' header, got %r" % head, ln,
                    1 + len(line) - len(line.lstrip()),
                )
            saw_header = True
            continue
        cleaned = line.translate(_PUNCT)
        tokens: list[tuple[int, str]] = []
        col = 0
        for piece in cleaned.split(" "):
            if piece:
                tokens.append((col + 1, piece))
            col += len(piece) + 1
        if len(tokens) != 3:
            raise ParseError(
                "each vertex needs exactly three coordinates, got %d"
                % len(tokens),
                ln,
                tokens[0][0] if tokens else 1,
            )
        coords = []
        for col, tok in tokens:
            try:
                coords.append(Fraction(tok))
            except (ValueError, ZeroDivisionError):
                raise ParseError("bad coordinate %r" % tok, ln, col) from None
        rows.append(Point3(*coords))
    if not saw_header:
        raise ParseError("empty input: expected a 'vertices' document", 1, 1)
    if not rows:
        raise ParseError("the vertices list is empty", 1, 1)
    return rows


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _load_handle(path: str) -> SemigroupHandle:
    return build(parse_vertices(_read_text(path)))


# ---------------------------------------------------------------------------
# output rendering


def _fstr(v: Fraction) -> str:
    return str(v.numerator) if v.denominator == 1 else "%d/%d" % (
        v.numerator,
        v.denominator,
    )


def _pstr(p) -> str:
    if isinstance(p, Point3):
        return " ".join(_fstr(c) for c in p.as_tuple())
    return " ".join(str(c) for c in p)


def _jsonable(obj):
    """Exact JSON image: fractions become strings, points become lists."""
    if isinstance(obj, Point3):
        return [_jsonable(c) for c in obj.as_tuple()]
    if isinstance(obj, Fraction):
        return obj.numerator if obj.denominator == 1 else _fstr(obj)
    if isinstance(obj, bool) or obj is None:
        return obj
    if isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = sorted(obj) if isinstance(obj, (set, frozenset)) else obj
        return [_jsonable(v) for v in items]
    return str(obj)


def _emit_json(record: dict) -> None:
    print(json.dumps(_jsonable(record), sort_keys=True, indent=2))


def _vertex_document(points: Sequence[Point3], comment: str) -> str:
    lines = ["# %s" % comment, "vertices"]
    lines += ["  %s" % _pstr(p) for p in points]
    return "\n".join(lines)


def _check_format(fmt: str, allowed: tuple[str, ...]) -> None:
    if fmt not in allowed:
        raise BadParameter(
            "format %r does not apply here (choose from %s)"
            % (fmt, ", ".join(allowed))
        )


def _validate_common(args) -> None:
    if getattr(args, "threads", 1) < 1:
        raise BadParameter("--threads must be at least 1")
    if getattr(args, "budget_layers", 1) < 1:
        raise BadParameter("--budget-layers must be positive")


# ---------------------------------------------------------------------------
# subcommands


def _cmd_msg(args) -> int:
    h = _load_handle(args.input)
    gens = minimal_generators(h, budget_layers=args.budget_layers)
    tuples = sorted(gens.int_tuples())
    status = 0 if gens.certified else 2

    oracle_lines: list[str] = []
    oracle_ok = True
    if args.oracle:
        box = oracle.default_box(h)
        naive = oracle.naive_msg(h, box)
        inside = {g for g in tuples if max(g) <= box.max_coord}
        missing = sorted(naive - inside)
        extra = sorted(inside - naive)
        if missing or extra:
            oracle_ok = False
            for p in missing:
                oracle_lines.append("oracle only: %s" % (_pstr(p),))
            for p in extra:
                oracle_lines.append("main only: %s" % (_pstr(p),))
        else:
            oracle_lines.append(
                "oracle: ok, %d generators match inside the box" % len(naive)
            )
    if not oracle_ok:
        status = max(status, 2)

    if args.format == "structured":
        record = {
            "command": "msg",
            "certified": gens.certified,
            "count": len(tuples),
            "generators": tuples,
            "layers_scanned": gens.layers_scanned,
        }
        if args.oracle:
            record["oracle_ok"] = oracle_ok
        _emit_json(record)
    else:
        label = "certified" if gens.certified else "partial, budget hit"
        print("generators: %d (%s)" % (len(tuples), label))
        for g in tuples:
            print("  %s" % (_pstr(g),))
        for line in oracle_lines:
            print(line)
    return status


_PROPERTY_RUNNERS = {
    "is-cm": ("Cohen-Macaulay", lambda h, a: is_cohen_macaulay(h)),
    "is-gorenstein": (
        "Gorenstein",
        lambda h, a: is_gorenstein(h, budget_layers=a.budget_layers),
    ),
    "is-buchsbaum": (
        "Buchsbaum",
        lambda h, a: is_buchsbaum(h, budget_layers=a.budget_layers),
    ),
}


def _cmd_property(args) -> int:
    _, run = _PROPERTY_RUNNERS[args.command]
    h = _load_handle(args.input)
    v = run(h, args)
    if args.format == "structured":
        record = {
            "command": args.command,
            "property": v.property,
            "verdict": v.verdict,
            "case": v.case_used,
            "witness": None
            if v.witness is None
            else {
                "point": v.witness.point,
                "generator_indices": list(v.witness.indices),
            },
            "diagnostics": v.diagnostics,
        }
        _emit_json(record)
    else:
        print("property: %s" % v.property)
        print("verdict: %s" % v.verdict)
        print("case: %s" % v.case_used)
        if v.witness is None:
            print("witness: none")
        else:
            i, j = v.witness.indices
            print(
                "witness: gap %s with member translates along ray "
                "generators %d and %d" % (_pstr(v.witness.point), i, j)
            )
        for key in sorted(v.diagnostics):
            val = v.diagnostics[key]
            if isinstance(val, (list, tuple, set, frozenset)):
                val = ", ".join(
                    _pstr(x) if isinstance(x, (Point3, tuple)) else str(x)
                    for x in (sorted(val) if isinstance(val, (set, frozenset)) else val)
                )
            print("%s: %s" % (key, val))
    return 0 if v.verdict in ("yes", "no") else 2


def _cmd_gaps(args) -> int:
    h = _load_handle(args.input)
    region = gap_region(h)
    pts = gap_points(h, region, extra_periods=args.extra_periods)
    tuples = [p.int_tuple() for p in pts]
    status = 0

    oracle_lines: list[str] = []
    if args.oracle:
        top = max((max(t) for t in tuples), default=1)
        box = oracle.box_for(h, top + 1)
        oracle_gaps = oracle.scan_gaps(h, box)
        wrong = sorted(t for t in tuples if t not in oracle_gaps)
        if wrong:
            status = 2
            for p in wrong:
                oracle_lines.append("not a gap by the oracle: %s" % (_pstr(p),))
        else:
            oracle_lines.append(
                "oracle: ok, all %d points confirmed as gaps" % len(tuples)
            )

    if args.format == "structured":
        record = {
            "command": "gaps",
            "overlap_level": region.overlap,
            "separation_level": region.separation,
            "base_level": region.base_level,
            "periods": {str(k): v for k, v in sorted(region.periods.items())},
            "count": len(tuples),
            "points": tuples,
        }
        if args.oracle:
            record["oracle_ok"] = status == 0
        _emit_json(record)
    else:
        print("overlap_level: %d" % region.overlap)
        print(
            "separation_level: %s"
            % ("unavailable" if region.separation is None else region.separation)
        )
        print("base_level: %d" % region.base_level)
        print("gap points: %d" % len(tuples))
        for t in tuples:
            print("  %s" % (_pstr(t),))
        for line in oracle_lines:
            print(line)
    return status


def _cmd_decompose(args) -> int:
    h = _load_handle(args.input)
    cls = classify(h)
    sep_reason = None
    try:
        from .decomposition import separation_level

        separation_level(h, cls)
    except (UnsupportedCase, BadParameter) as exc:
        sep_reason = str(exc)
    region = gap_region(h, cls)

    verts = h.body.vertices
    names = (
        ("point_extremal", cls.point_extremal),
        ("entry_extremal", cls.entry_extremal),
        ("exit_extremal", cls.exit_extremal),
        ("entry_inner", cls.entry_inner),
        ("exit_inner", cls.exit_inner),
    )
    rays = []
    for i, r in enumerate(h.rays):
        entry = {
            "index": i,
            "direction": r.int_tuple(),
            "chord": ray_chord_class(h, cls, i),
            "period": ray_period(h, i),
        }
        if h.simplicial:
            entry["generator"] = h.ray_generators[i]
        rays.append(entry)
    corners = [
        {
            "ray": s.ray,
            "level": s.level,
            "fan_size": len(s.fan),
            "integer_points": len(slab_integer_points(s)),
        }
        for s in region.corner_templates
    ]
    bridges = [
        {
            "rays": [s.ray, s.next_ray],
            "level": s.level,
            "integer_points": len(slab_integer_points(s)),
        }
        for s in region.bridge_templates
    ]

    if args.format == "structured":
        record = {
            "command": "decompose",
            "simplicial": h.simplicial,
            "rays": rays,
            "vertex_classes": {
                name: [verts[i] for i in idxs] for name, idxs in names
            },
            "overlap_level": region.overlap,
            "separation_level": region.separation,
            "separation_unavailable_reason": sep_reason,
            "base_level": region.base_level,
            "hull_part_vertices": list(region.hull_part.vertices),
            "corner_slabs": corners,
            "bridge_slabs": bridges,
        }
        _emit_json(record)
    else:
        print("rays: %d (%s)" % (len(h.rays), "simplicial" if h.simplicial else "not simplicial"))
        for entry in rays:
            line = "  ray %d: direction %s, chord %s, period %d" % (
                entry["index"],
                _pstr(entry["direction"]),
                entry["chord"],
                entry["period"],
            )
            if "generator" in entry:
                line += ", generator %s" % _pstr(entry["generator"])
            print(line)
        print("vertex classes:")
        for name, idxs in names:
            shown = ("; ".join(_pstr(verts[i]) for i in idxs)) or "none"
            print("  %s: %s" % (name, shown))
        print("overlap_level: %d" % region.overlap)
        if region.separation is None:
            print("separation_level: unavailable (%s)" % sep_reason)
        else:
            print("separation_level: %d" % region.separation)
        print("base_level: %d" % region.base_level)
        print(
            "corner slabs at the base level: %d (%s)"
            % (
                len(corners),
                ", ".join(
                    "ray %d with %d integer points"
                    % (c["ray"], c["integer_points"])
                    for c in corners
                )
                or "none",
            )
        )
        print(
            "bridge slabs at the base level: %d (%s)"
            % (
                len(bridges),
                ", ".join(
                    "rays %d-%d with %d integer points"
                    % (b["rays"][0], b["rays"][1], b["integer_points"])
                    for b in bridges
                )
                or "none",
            )
        )
    return 0


def _cmd_family(args) -> int:
    pts = gorenstein_family(args.k)
    if args.format == "structured":
        record = {"command": "family", "k": args.k, "vertices": pts}
        if args.table:
            table = apery_table(args.k)
            record["apery_rows"] = [list(row) for row in table.rows]
            record["empty_rows_checked"] = list(table.empty_rows_checked)
        _emit_json(record)
    else:
        print(_vertex_document(pts, "Gorenstein family member, k = %d" % args.k))
        if args.table:
            table = apery_table(args.k)
            for j, row in enumerate(table.rows):
                shown = "; ".join(_pstr(p) for p in row) or "empty"
                print("# apery row y=%d: %s" % (j, shown))
    return 0


def _cmd_oracle_check(args) -> int:
    h = _load_handle(args.input)
    if args.box is not None:
        if args.box < 1:
            raise BadParameter("--box must be at least 1")
        box = oracle.box_for(h, args.box)
    else:
        box = oracle.default_box(h)
    if args.max_layer is not None:
        box = oracle.Box(box.max_coord, args.max_layer)

    failures = 0
    print("box: coordinates up to %d, layers up to %d" % (box.max_coord, box.max_layer))

    grid = list(product(range(box.max_coord + 1), repeat=3))
    main_members = {p for p in grid if member_int(h, p)[0]}
    oracle_members = oracle.scan_semigroup(h, box)
    diff = main_members ^ oracle_members
    if diff:
        failures += 1
        print("membership: MISMATCH at %d points" % len(diff))
        for p in sorted(diff)[:10]:
            side = "main only" if p in main_members else "oracle only"
            print("  %s (%s)" % (_pstr(p), side))
    else:
        print("membership: ok, %d member points" % len(main_members))

    main_gaps = {
        p for p in grid if p not in main_members and in_cone_int(h, p)
    }
    oracle_gaps = oracle.scan_gaps(h, box)
    diff = main_gaps ^ oracle_gaps
    if diff:
        failures += 1
        print("gaps: MISMATCH at %d points" % len(diff))
        for p in sorted(diff)[:10]:
            side = "main only" if p in main_gaps else "oracle only"
            print("  %s (%s)" % (_pstr(p), side))
    else:
        print("gaps: ok, %d gap points" % len(main_gaps))

    gens = minimal_generators(h, budget_layers=args.budget_layers)
    if gens.certified:
        inside = {g for g in gens.int_tuples() if max(g) <= box.max_coord}
        naive = oracle.naive_msg(h, box)
        diff = inside ^ naive
        if diff:
            failures += 1
            print("generators: MISMATCH at %d points" % len(diff))
            for p in sorted(diff)[:10]:
                side = "main only" if p in inside else "oracle only"
                print("  %s (%s)" % (_pstr(p), side))
        else:
            print("generators: ok, %d generators" % len(inside))
    else:
        print("generators: skipped (layer budget hit before certification)")

    if h.simplicial:
        rays_main = {r.int_tuple() for r in h.rays}
        rays_oracle = set(oracle.cone_rays(h))
        if rays_main != rays_oracle:
            failures += 1
            print("rays: MISMATCH (main %s, oracle %s)" % (
                sorted(rays_main), sorted(rays_oracle)))
        else:
            print("rays: ok, %d extremal rays" % len(rays_main))

        ap = apery_intersection(h, budget_layers=args.budget_layers)
        elems = {p.int_tuple() for p in ap.elements}
        if ap.complete and all(max(t) <= box.max_coord for t in elems):
            naive_ap = oracle.naive_apery(h, box)
            diff = elems ^ naive_ap
            if diff:
                failures += 1
                print("apery: MISMATCH at %d points" % len(diff))
                for p in sorted(diff)[:10]:
                    side = "main only" if p in elems else "oracle only"
                    print("  %s (%s)" % (_pstr(p), side))
            else:
                print("apery: ok, %d elements" % len(elems))
        else:
            print("apery: skipped (incomplete or outside the box)")
    else:
        print("rays: skipped (not simplicial)")
        print("apery: skipped (not simplicial)")

    print("result: %s" % ("ok" if failures == 0 else "%d mismatches" % failures))
    return 0 if failures == 0 else 2


def _mesh_vertex_lines(out: list[str], pts: Sequence[Point3]) -> None:
    for p in pts:
        out.append("# exact %s" % _pstr(p))
        out.append(
            "v %s %s %s"
            % tuple("%.9g" % float(c) for c in p.as_tuple())
        )


def _mesh_object(
    out: list[str], name: str, poly: Optional[Polyhedron],
    loose: Sequence[Point3], base: int,
) -> int:
    """Append one named object; returns the new global vertex count."""
    out.append("o %s" % name)
    if poly is not None:
        _mesh_vertex_lines(out, poly.vertices)
        for cyc in poly.facet_vertices:
            out.append("f " + " ".join(str(base + 1 + i) for i in cyc))
        return base + len(poly.vertices)
    _mesh_vertex_lines(out, loose)
    out.append("# flat piece, no faces")
    return base + len(loose)


def _cmd_export(args) -> int:
    h = _load_handle(args.input)
    if args.level < 1:
        raise BadParameter("--level must be at least 1")
    k = args.level

    if args.kind == "slabs":
        _check_format(args.format, ("structured", "mesh"))
        cls = classify(h)
        ss = slabs(h, cls, k)
        if args.format == "structured":
            record = {
                "command": "export",
                "kind": "slabs",
                "level": k,
                "corner": [
                    {
                        "ray": s.ray,
                        "level": s.level,
                        "apexes": list(s.apex_pair),
                        "fan": list(s.fan),
                        "integer_points": sorted(slab_integer_points(s)),
                    }
                    for s in ss.corner
                ],
                "bridge": [
                    {
                        "rays": [s.ray, s.next_ray],
                        "level": s.level,
                        "triangles": [list(t) for t in s.triangles],
                        "integer_points": sorted(slab_integer_points(s)),
                    }
                    for s in ss.bridge
                ],
            }
            _emit_json(record)
            return 0
        out: list[str] = ["# slab decomposition at level %d" % k]
        base = 0
        for s in ss.corner:
            base = _mesh_object(
                out, "corner_ray%d_level%d" % (s.ray, s.level),
                s.hull(), s.vertex_list(), base,
            )
        for s in ss.bridge:
            base = _mesh_object(
                out, "bridge_%d_%d_level%d" % (s.ray, s.next_ray, s.level),
                s.body, s.vertex_list(), base,
            )
        print("\n".join(out))
        return 0

    if args.kind == "layer":
        poly = hull_union(_dilate_body(h, k), _dilate_body(h, k + 1))
        label = "layer closure between levels %d and %d" % (k, k + 1)
        name = "layer_%d" % k
    else:
        poly = _dilate_body(h, k)
        label = "dilation at level %d" % k
        name = "dilation_%d" % k

    if args.format == "structured":
        record = {
            "command": "export",
            "kind": args.kind,
            "level": k,
            "vertices": list(poly.vertices),
            "facets": [
                {"normal": list(f.int_tuple()[:3]), "offset": f.int_tuple()[3]}
                for f in poly.facets
            ],
            "faces": [list(cyc) for cyc in poly.facet_vertices],
        }
        _emit_json(record)
    elif args.format == "mesh":
        out = ["# %s" % label]
        _mesh_object(out, name, poly, (), 0)
        print("\n".join(out))
    else:
        print(_vertex_document(poly.vertices, label))
    return 0


def _dilate_body(h: SemigroupHandle, k: int) -> Polyhedron:
    scaled = dilate(h.body, k)
    assert isinstance(scaled, Polyhedron)
    return scaled


# ---------------------------------------------------------------------------
# argument wiring


class _Parser(argparse.ArgumentParser):
    """Argument errors surface as ParseError so exit codes stay uniform."""

    def error(self, message):
        self.print_usage(sys.stderr)
        raise ParseError(message)


def _build_parser() -> _Parser:
    ap = _Parser(prog="polysgp", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, formats=("text", "structured")):
        p.add_argument(
            "--format", choices=formats, default="text",
            help="output format (default text)",
        )
        p.add_argument(
            "--threads", type=int, default=1,
            help="worker cap; computations here run in-process",
        )

    def with_input(p):
        p.add_argument(
            "input", nargs="?", default="-",
            help="vertex document path, or - for stdin (default)",
        )

    p = sub.add_parser("msg", help="minimal generating set")
    with_input(p)
    common(p)
    p.add_argument("--budget-layers", type=int, default=400)
    p.add_argument(
        "--oracle", action="store_true",
        help="recompute inside a box by brute force and diff",
    )

    for name, (label, _run) in _PROPERTY_RUNNERS.items():
        p = sub.add_parser(name, help="decide the %s property" % label)
        with_input(p)
        common(p)
        p.add_argument("--budget-layers", type=int, default=400)

    p = sub.add_parser("gaps", help="enumerate the gap region")
    with_input(p)
    common(p)
    p.add_argument(
        "--extra-periods", type=int, default=2,
        help="slab periods to enumerate past the base level",
    )
    p.add_argument("--oracle", action="store_true")

    p = sub.add_parser("decompose", help="structural decomposition report")
    with_input(p)
    common(p)

    p = sub.add_parser("family", help="emit a Gorenstein family member")
    common(p)
    p.add_argument("--k", type=int, required=True, help="family parameter, k >= 2")
    p.add_argument(
        "--gorenstein", action="store_true",
        help="accepted for clarity; the family is the Gorenstein one",
    )
    p.add_argument(
        "--table", action="store_true",
        help="also print the Apery intersection rows",
    )

    p = sub.add_parser("oracle-check", help="diff against the slow oracle")
    with_input(p)
    common(p, formats=("text",))
    p.add_argument("--budget-layers", type=int, default=400)
    p.add_argument("--box", type=int, default=None, help="coordinate bound")
    p.add_argument("--max-layer", type=int, default=None)

    p = sub.add_parser("export", help="emit geometry for viewers")
    with_input(p)
    common(p, formats=("text", "structured", "mesh"))
    p.add_argument(
        "--kind", choices=("dilation", "layer", "slabs"), default="dilation",
    )
    p.add_argument("--level", type=int, default=1)

    return ap


_HANDLERS = {
    "msg": _cmd_msg,
    "is-cm": _cmd_property,
    "is-gorenstein": _cmd_property,
    "is-buchsbaum": _cmd_property,
    "gaps": _cmd_gaps,
    "decompose": _cmd_decompose,
    "family": _cmd_family,
    "oracle-check": _cmd_oracle_check,
    "export": _cmd_export,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        _validate_common(args)
        return _HANDLERS[args.command](args)
    except _INPUT_ERRORS as exc:
        print("error [%s]: %s" % (type(exc).__name__, exc), file=sys.stderr)
        return 1
    except PolysgpError as exc:
        # unsupported configurations, exhausted budgets, failed invariants
        print("error [%s]: %s" % (type(exc).__name__, exc), file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
