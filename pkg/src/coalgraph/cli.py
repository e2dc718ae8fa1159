"""Command-line entry point.

Exit codes: 0 success, 1 validation failure, 2 enumeration guard exceeded,
3 parse error.
"""

import argparse
import json
import os
import sys
from pathlib import Path

from . import guard
from .constructions import (
    ColorSet,
    cofree_cochain,
    cofree_graph,
    colored_graph,
    coproduct_graphs,
    equalizer_graphs,
    lift_coloring,
    product_graphs,
)
from .covariety import (
    GraphClass,
    birkhoff_check,
    closure_H,
    closure_S,
    closure_Sigma,
    cogenerated_by_pattern,
    enumerate_graphs,
    pattern_of_class,
    satisfies,
)
from .dot import export_dot
from .errors import CoalgraphError, FunctorMismatch, ParseError, SizeGuardExceeded, ValidationError
from .finset import FinSet
from .graph import (
    SubgraphSpec,
    enumerate_homs,
    enumerate_subgraphs,
    find_isomorphism,
    image_factorization,
    is_isomorphism,
    largest_subcoalgebra,
    validate_hom,
)
from .serialize import (
    emit_graph,
    emit_hom,
    emit_pattern,
    parse_functor,
    read_coloring,
    read_graph,
    read_hom,
    read_pattern,
)

EXIT_OK, EXIT_INVALID, EXIT_GUARD, EXIT_PARSE = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARSE, f"{self.prog}: error: {message}\n")


def _atoms(text):
    return [a for a in text.split(",") if a] if text else []


def _colorset(args):
    return ColorSet(FinSet.of(_atoms(args.vcolors)), FinSet.of(_atoms(args.ecolors)))


def _write(path, text):
    Path(path).write_text(text)


def _ref(target, relative_to):
    """Path of ``target`` as seen from the directory holding ``relative_to``."""
    return os.path.relpath(Path(target).resolve(), Path(relative_to).resolve().parent)


def _out(args, text):
    if getattr(args, "output", None):
        _write(args.output, text)
    else:
        sys.stdout.write(text)


def _graph_class(paths):
    graphs = [read_graph(p) for p in paths]
    if not graphs:
        raise ValidationError(["a class needs at least one graph"])
    functors = {repr(g.functor) for g in graphs}
    if len(functors) > 1:
        raise FunctorMismatch("all graphs in a class must share the functor")
    return GraphClass(graphs[0].functor, graphs)


def _write_class(k, outdir):
    out = Path(outdir)
    out.mkdir(parents=True, exist_ok=True)
    for i, g in enumerate(k):
        _write(out / f"member_{i:03d}.graph", emit_graph(g))


def _summary(g):
    return f"{len(g.vertices)} vertices, {len(g.edges)} edges"


# -- subcommands -------------------------------------------------------------


def cmd_validate(args):
    path = Path(args.file)
    if path.suffix == ".hom":
        read_hom(path)
    elif path.suffix == ".pattern":
        read_pattern(path)
    elif path.suffix == ".coloring":
        read_coloring(path)
    else:
        read_graph(path)
    print("ok")
    return EXIT_OK


def cmd_hom_check(args):
    # read_hom already raises ValidationError on a failing square
    h = read_hom(args.hom)
    print("true" if not validate_hom(h) else "false")
    return EXIT_OK


def cmd_hom_enum(args):
    a, b = read_graph(args.src), read_graph(args.dst)
    homs = enumerate_homs(a, b, args.max_enum)
    print(len(homs))
    if args.output:
        out = Path(args.output)
        out.mkdir(parents=True, exist_ok=True)
        for i, h in enumerate(homs):
            target = out / f"hom_{i:03d}.hom"
            _write(target, emit_hom(h, _ref(args.src, target), _ref(args.dst, target)))
    return EXIT_OK


def cmd_iso_check(args):
    if len(args.files) == 1:
        result = is_isomorphism(read_hom(args.files[0]))
    elif len(args.files) == 2:
        result = find_isomorphism(read_graph(args.files[0]), read_graph(args.files[1])) is not None
    else:
        raise ParseError("iso-check takes one .hom or two .graph files", "argv")
    print("true" if result else "false")
    return EXIT_OK


def cmd_factorize(args):
    h = read_hom(args.hom)
    im, epi, mono = image_factorization(h)
    prefix = Path(args.output)
    img_path = prefix.with_suffix(".image.graph")
    epi_path = prefix.with_suffix(".epi.hom")
    mono_path = prefix.with_suffix(".mono.hom")
    _write(img_path, emit_graph(im))
    src_ref = Path(args.hom).parent / _hom_field(args.hom, "src")
    dst_ref = Path(args.hom).parent / _hom_field(args.hom, "dst")
    _write(epi_path, emit_hom(epi, _ref(src_ref, epi_path), _ref(img_path, epi_path)))
    _write(mono_path, emit_hom(mono, _ref(img_path, mono_path), _ref(dst_ref, mono_path)))
    print(f"image: {_summary(im)}")
    return EXIT_OK


def _hom_field(path, name):
    return json.loads(Path(path).read_text())[name]


def cmd_subgraphs(args):
    subs = enumerate_subgraphs(read_graph(args.graph), args.max_enum)
    print(len(subs))
    if args.output:
        out = Path(args.output)
        out.mkdir(parents=True, exist_ok=True)
        for i, g in enumerate(subs):
            _write(out / f"sub_{i:03d}.graph", emit_graph(g))
    return EXIT_OK


def cmd_cogenerate(args):
    path = Path(args.file)
    if path.suffix == ".pattern":
        g = cogenerated_by_pattern(read_pattern(path), args.max_enum)
    else:
        if args.vkeep is None or args.ekeep is None:
            raise ParseError("--vkeep and --ekeep are required for a .graph input", "argv")
        spec = SubgraphSpec(FinSet.of(_atoms(args.vkeep)), FinSet.of(_atoms(args.ekeep)))
        g = largest_subcoalgebra(read_graph(path), spec)
    _out(args, emit_graph(g))
    return EXIT_OK


def cmd_product(args):
    a, b = read_graph(args.left), read_graph(args.right)
    prod, pi_a, pi_b = product_graphs(a, b, args.max_enum)
    _out(args, emit_graph(prod))
    if args.output and args.projections:
        for h, src, name in ((pi_a, args.left, "pi0"), (pi_b, args.right, "pi1")):
            target = Path(args.output).with_suffix(f".{name}.hom")
            _write(target, emit_hom(h, _ref(args.output, target), _ref(src, target)))
    return EXIT_OK


def cmd_coproduct(args):
    s, _, _ = coproduct_graphs(read_graph(args.left), read_graph(args.right))
    _out(args, emit_graph(s))
    return EXIT_OK


def cmd_equalizer(args):
    eq, _ = equalizer_graphs(read_hom(args.first), read_hom(args.second))
    _out(args, emit_graph(eq))
    return EXIT_OK


def cmd_cofree(args):
    g, _ = cofree_graph(parse_functor(args.functor), _colorset(args), args.max_enum)
    _out(args, emit_graph(g))
    return EXIT_OK


def cmd_cochain(args):
    stages, stable = cofree_cochain(parse_functor(args.functor), _colorset(args), args.max_enum)
    for i, st in enumerate(stages):
        print(f"X{i}: {len(st.first)} {len(st.second)}")
    print(f"stabilized: {'true' if stable else 'false'}")
    return EXIT_OK


def cmd_lift(args):
    c = read_coloring(args.coloring)
    cofree, _ = cofree_graph(c.graph.functor, c.colorset, args.max_enum)
    h = lift_coloring(c, cofree)
    target = Path(args.output)
    cofree_path = target.with_suffix(".cofree.graph")
    _write(cofree_path, emit_graph(cofree))
    graph_ref = Path(args.coloring).parent / _hom_field(args.coloring, "graph")
    _write(target, emit_hom(h, _ref(graph_ref, target), _ref(cofree_path, target)))
    print(f"lifted into cofree graph with {_summary(cofree)}")
    return EXIT_OK


def cmd_color(args):
    c = read_coloring(args.coloring)
    _out(args, emit_graph(colored_graph(c.graph, c)))
    return EXIT_OK


def cmd_satisfies(args):
    print("true" if satisfies(read_graph(args.graph), read_pattern(args.pattern), args.max_enum) else "false")
    return EXIT_OK


def cmd_pattern_of(args):
    k = _graph_class(args.graphs)
    _out(args, emit_pattern(pattern_of_class(k, _colorset(args), args.max_enum)))
    return EXIT_OK


_CLOSURES = {"s": "S", "h": "H", "c": "Sigma", "σ": "Sigma"}


def cmd_closure(args):
    k = _graph_class(args.graphs)
    ops = [_CLOSURES.get(ch.lower()) for ch in args.ops]
    if None in ops:
        raise ParseError(f"--ops letters must be among s, h, c: {args.ops!r}", "argv")
    # innermost operator is the rightmost letter
    for op in reversed(ops):
        if op == "S":
            k = closure_S(k, args.max_enum)
        elif op == "H":
            k = closure_H(k, args.max_enum)
        else:
            k = closure_Sigma(k, args.max_summands, args.max_enum)
    print(len(k))
    for g in k:
        print(_summary(g))
    if args.output:
        _write_class(k, args.output)
    return EXIT_OK


def cmd_birkhoff(args):
    k = _graph_class(args.graphs)
    universe = enumerate_graphs(k.functor, args.universe_vertices, args.universe_edges, args.max_enum)
    report = birkhoff_check(k, universe, _colorset(args), args.max_summands, args.max_enum, args.rounds)
    print(f"universe: {len(universe)}")
    print(f"S H Sigma(K): {len(report.left)}")
    print(f"Graph(Pat(K)): {len(report.right)}")
    print(f"only left: {len(report.only_left)}")
    print(f"only right: {len(report.only_right)}")
    print(f"status: {report.status}")
    return EXIT_INVALID if report.status == "fail" else EXIT_OK


def cmd_export_dot(args):
    _out(args, export_dot(read_graph(args.graph)))
    return EXIT_OK


# -- parser ------------------------------------------------------------------


def build_parser():
    parser = _Parser(prog="coalgraph", description="Graphs as coalgebras over Set x Set.")
    parser.add_argument("--max-enum", type=int, default=None, help="enumeration guard (default 4096)")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, fn, *positional, output=False, colors=False, functor=False):
        p = sub.add_parser(name)
        for arg in positional:
            if arg.endswith("..."):
                p.add_argument(arg[:-3], nargs="+")
            else:
                p.add_argument(arg)
        if output:
            p.add_argument("-o", "--output")
        if functor:
            p.add_argument("--functor", required=True)
        if colors:
            p.add_argument("--vcolors", required=True)
            p.add_argument("--ecolors", required=True)
        p.set_defaults(func=fn)
        return p

    add("validate", cmd_validate, "file")
    add("hom-check", cmd_hom_check, "hom")
    add("hom-enum", cmd_hom_enum, "src", "dst", output=True)
    add("iso-check", cmd_iso_check, "files...")
    add("factorize", cmd_factorize, "hom", output=True).set_defaults(output="factor")
    add("subgraphs", cmd_subgraphs, "graph", output=True)
    p = add("cogenerate", cmd_cogenerate, "file", output=True)
    p.add_argument("--vkeep")
    p.add_argument("--ekeep")
    p = add("product", cmd_product, "left", "right", output=True)
    p.add_argument("--projections", action="store_true")
    add("coproduct", cmd_coproduct, "left", "right", output=True)
    add("equalizer", cmd_equalizer, "first", "second", output=True)
    add("cofree", cmd_cofree, output=True, colors=True, functor=True)
    add("cochain", cmd_cochain, colors=True, functor=True)
    add("lift", cmd_lift, "coloring", output=True).set_defaults(output="lift.hom")
    add("color", cmd_color, "coloring", output=True)
    add("satisfies", cmd_satisfies, "graph", "pattern")
    add("pattern-of", cmd_pattern_of, "graphs...", output=True, colors=True)
    p = add("closure", cmd_closure, "graphs...", output=True)
    p.add_argument("--ops", default="shc", help="letters s (subgraphs), h (images), c (coproducts); rightmost applied first")
    p.add_argument("--max-summands", type=int, default=2)
    p = add("birkhoff", cmd_birkhoff, "graphs...", colors=True)
    p.add_argument("--universe-vertices", type=int, required=True)
    p.add_argument("--universe-edges", type=int, required=True)
    p.add_argument("--max-summands", type=int, default=2)
    p.add_argument("--rounds", type=int, default=None, help="closure passes (default: until stable)")
    add("export-dot", cmd_export_dot, "graph", output=True)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.max_enum is None:
        args.max_enum = guard.default_limit()
    try:
        return args.func(args)
    except SizeGuardExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (ParseError, FileNotFoundError) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ValidationError as exc:
        for v in exc.violations:
            print(v, file=sys.stderr)
        return EXIT_INVALID
    except CoalgraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
