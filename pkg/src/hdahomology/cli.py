"""Command-line surface.

Exit codes: 0 success, 1 a validation or decision failure (including a
"false" answer from points-to), 2 parse, usage, or I/O errors.  All
output is deterministic for identical inputs.
"""
from __future__ import annotations

import argparse
import sys

from .errors import DocumentError, HdaError
from .formats import (build_complex, build_hda, build_subdivision,
                      document_of, export_dot, format_vector, load_document,
                      save_document, serialize_document)
from .hograph import homology_graph, points_to
from .homology import (class_reduce, euler_characteristic,
                       homology_presentation, parse_ring, pushforward_class,
                       zero_class)
from .precubical import Path, PrecubicalSubset
from .reach import concepts_of, reachability
from .reduction import reduce_with_trace
from .subdivision import (check_abstraction, lift_path, subdivide,
                          subdivide_hda)


def _class_by_name(P, ring, name):
    if name == "zero":
        return zero_class(P, 0, ring)
    try:
        return homology_presentation(P, ring).class_by_name(name)
    except KeyError:
        raise DocumentError(f"unknown class name {name!r}; use 'zero' or a "
                            f"generator name like 'H1.g0'") from None


def _parse_counts(text: str):
    if "=" not in text:
        try:
            return int(text)
        except ValueError:
            raise DocumentError(f"counts {text!r}: expected an integer or "
                                f"edge=count pairs") from None
    table = {}
    for part in text.split(","):
        if "=" not in part:
            raise DocumentError(f"counts entry {part!r}: expected edge=count")
        edge, _, value = part.partition("=")
        try:
            table[edge.strip()] = int(value)
        except ValueError:
            raise DocumentError(f"counts entry {part!r}: bad integer") from None
    return table


def _subdivision_of(doc, Q):
    pair = build_subdivision(doc, Q)
    if pair is None:
        raise DocumentError("document has no subdivision block")
    return pair


# ------------------------------------------------------------- commands

def _cmd_validate(args):
    doc = load_document(args.file)
    Q = build_complex(doc)
    counts = [len(Q.cells(n)) for n in range(Q.dim + 1)]
    print(f"valid {doc.name}: degree counts {counts}")
    hda = build_hda(doc, Q)
    if hda is not None:
        print(f"hda block ok: {len(hda.initial)} initial, "
              f"{len(hda.final)} final, {len(hda.labels)} labels")
    pair = build_subdivision(doc, Q)
    if pair is not None:
        P, f = pair
        print(f"subdivision block ok: source {doc.subdivision.source.name} "
              f"with {sum(len(P.cells(n)) for n in range(P.dim + 1))} cubes")
    return 0


def _cmd_homology(args):
    doc = load_document(args.file)
    P = build_complex(doc)
    ring = parse_ring(args.ring)
    pres = homology_presentation(P, ring)
    gens = pres.generators()
    for d in pres.data:
        line = f"H{d.degree}: rank {d.betti}"
        if d.torsion:
            line += ", torsion " + "+".join(f"Z/{t}" for t in d.torsion)
        print(line)
        for name, cls, order in gens:
            if cls.degree != d.degree:
                continue
            suffix = f" (order {order})" if order else ""
            print(f"  {name}{suffix} = "
                  f"{format_vector(P, d.degree, cls.vector)}")
    print(f"euler characteristic {euler_characteristic(P)}")
    return 0


def _cmd_reach(args):
    doc = load_document(args.file)
    P = build_complex(doc)
    R = reachability(P)
    for v in R.vertices:
        print(f"{v} -> {' '.join(sorted(R.reachable_from(v)))}")
    return 0


def _cmd_concepts(args):
    doc = load_document(args.file)
    P = build_complex(doc)
    for i, c in enumerate(concepts_of(P, args.limit)):
        ext = ", ".join(c.sorted_extent())
        intent = ", ".join(c.sorted_intent())
        print(f"{i}: extent {{{ext}}} intent {{{intent}}}")
    return 0


def _cmd_hograph(args):
    doc = load_document(args.file)
    P = build_complex(doc)
    ring = parse_ring(args.ring)
    G = homology_graph(P, ring, args.limit)
    if args.dot:
        sys.stdout.write(export_dot(G))
        return 0
    print("nodes:")
    for n in G.nodes:
        print(f"  {n.name} degree={n.degree} order={n.order}")
    print("edges:")
    for a, b in G.edges:
        print(f"  {a} -> {b}")
    print("concepts:")
    for i, r in enumerate(G.concept_records):
        ext = ", ".join(sorted(r.concept.extent))
        intent = ", ".join(sorted(r.concept.intent))
        print(f"  {i}: extent {{{ext}}} intent {{{intent}}} "
              f"sources [{', '.join(r.source_nodes)}] "
              f"targets [{', '.join(r.target_nodes)}]")
    return 0


def _cmd_points_to(args):
    doc = load_document(args.file)
    P = build_complex(doc)
    ring = parse_ring(args.ring)
    alpha = _class_by_name(P, ring, args.src)
    beta = _class_by_name(P, ring, args.dst)
    result = points_to(P, alpha, beta, args.limit)
    print("true" if result else "false")
    return 0 if result else 1


def _cmd_subdivide(args):
    doc = load_document(args.file)
    P = build_complex(doc)
    counts = _parse_counts(args.counts)
    hda = build_hda(doc, P)
    if hda is not None:
        B, f = subdivide_hda(hda, counts)
        Q = B.complex
    else:
        B = None
        Q, f = subdivide(P, counts)
    name = args.name or f"{doc.name}-subdivided"
    out = document_of(name, Q, hda=B, subdivision=f, source_doc=doc)
    if args.output:
        save_document(out, args.output)
        print(f"wrote {args.output}")
    else:
        sys.stdout.write(serialize_document(out))
    return 0


def _cmd_check_abstraction(args):
    doc = load_document(args.file)
    Q = build_complex(doc)
    B = build_hda(doc, Q)
    if B is None:
        raise DocumentError("target document has no hda block")
    P, f = _subdivision_of(doc, Q)
    A = build_hda(doc.subdivision.source, P)
    if A is None:
        raise DocumentError("subdivision source has no hda block")
    report = check_abstraction(f, A, B)
    print(f"abstraction ok: {report.edges_checked} edges checked, "
          f"initial {sorted(report.initial)}, final {sorted(report.final)}")
    return 0


def _cmd_map_class(args):
    doc = load_document(args.file)
    Q = build_complex(doc)
    P, f = _subdivision_of(doc, Q)
    ring = parse_ring(args.ring)
    alpha = _class_by_name(P, ring, args.name)
    image = pushforward_class(f, alpha)
    print(f"f_*({args.name}) = "
          f"{format_vector(Q, image.degree, image.vector)}")
    reduced = class_reduce(Q, image)
    print(f"canonical form = {format_vector(Q, image.degree, reduced)}")
    return 0


def _cmd_lift_path(args):
    doc = load_document(args.file)
    Q = build_complex(doc)
    P, f = _subdivision_of(doc, Q)
    edges = tuple(e for e in args.edges.split(",") if e) if args.edges else ()
    omega = Path(Q, args.start, edges)
    lifted = lift_path(f, omega)
    print(f"start {lifted.start}")
    print("edges " + (" ".join(lifted.edges) if lifted.edges else "(none)"))
    print(f"target {lifted.target}")
    return 0


def _cmd_reduce(args):
    doc = load_document(args.file)
    Q = build_complex(doc)
    P, f = _subdivision_of(doc, Q)
    cells = [c for c in args.cells.split(",") if c]
    A = PrecubicalSubset(Q, cells)
    final, trace = reduce_with_trace(f, A)
    for i, step in enumerate(trace):
        print(f"step {i + 1}: removed carrier {step.cube} "
              f"(degree {step.degree}), {step.cells_before} -> "
              f"{step.cells_after} cells")
    if not trace:
        print("nothing broken: subset already reduced")
    print(f"result ({len(final.members)} cells): "
          + " ".join(sorted(final.members)))
    return 0


# -------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hdah",
        description="Exact homology, pointing relation, subdivision, and "
                    "reduction tools for precubical sets and HDAs.")
    sub = parser.add_subparsers(dest="command", required=True)

    def cmd(name, func, help):
        p = sub.add_parser(name, help=help)
        p.add_argument("file", help="JSON document")
        p.set_defaults(func=func)
        return p

    cmd("validate", _cmd_validate, "validate a document and all its blocks")

    p = cmd("homology", _cmd_homology, "presentation with generators")
    p.add_argument("--ring", default="z", help="z or fp:<p> (default z)")

    cmd("reach", _cmd_reach, "vertex reachability table")

    p = cmd("concepts", _cmd_concepts, "Galois concepts of reachability")
    p.add_argument("--limit", type=int, default=100_000)

    p = cmd("hograph", _cmd_hograph, "homology graph (text or DOT)")
    p.add_argument("--ring", default="z")
    p.add_argument("--limit", type=int, default=100_000)
    p.add_argument("--dot", action="store_true", help="emit DOT")

    p = cmd("points-to", _cmd_points_to,
            "does one class point to another (exit 1 on 'false')")
    p.add_argument("--from", dest="src", required=True, metavar="CLASS")
    p.add_argument("--to", dest="dst", required=True, metavar="CLASS")
    p.add_argument("--ring", default="z")
    p.add_argument("--limit", type=int, default=100_000)

    p = cmd("subdivide", _cmd_subdivide, "refine along per-edge counts")
    p.add_argument("--counts", required=True,
                   help="an integer for all edges, or e1=2,e2=3 pairs")
    p.add_argument("--name", default=None, help="name of the output document")
    p.add_argument("--output", default=None, help="write to a file")

    cmd("check-abstraction", _cmd_check_abstraction,
        "verify labels and marked states across a subdivision")

    p = cmd("map-class", _cmd_map_class, "pushforward of a source generator")
    p.add_argument("--name", required=True, metavar="CLASS")
    p.add_argument("--ring", default="z")

    p = cmd("lift-path", _cmd_lift_path,
            "lift a target path through the subdivision")
    p.add_argument("--start", required=True, help="start vertex in the target")
    p.add_argument("--edges", default="", help="comma-separated target edges")

    p = cmd("reduce", _cmd_reduce, "remove broken cubes from a subset")
    p.add_argument("--cells", required=True,
                   help="comma-separated cells of the target subset")
    return parser


def run(argv) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code else 0
    try:
        return args.func(args)
    except DocumentError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except HdaError as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return 1
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
