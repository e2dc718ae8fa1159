"""JSON document formats for functors, elements, graphs, homs, patterns
and colorings.

Functors:  "Id" | "P12" | "Pow" | {"const":[atoms]} | {"prod":[F,F]}
           | {"sum":[F,F]} | {"comp":[F,F]}
Elements:  "atom" | {"pair":[e,e]} | {"inl":e} | {"inr":e} | {"set":[e,...]}
           | {"c":atom} | "unit"

The string ``"unit"`` is reserved for the unit element and cannot name an atom.
"""

import json
from pathlib import Path

from .constructions import ColorSet, Coloring
from .covariety import Pattern
from .errors import ParseError, ValidationError
from .finset import FinFunction, FinSet
from .functor import (
    Atom,
    Comp,
    Const,
    ConstVal,
    Id,
    Inl,
    Inr,
    P12,
    Pair,
    Pow,
    Prod,
    SetOf,
    Sum,
    Unit,
)
from .graph import FGraph, GraphHom, validate_graph, validate_hom

_NULLARY = {"Id": Id, "P12": P12, "Pow": Pow}
_BINARY = {"prod": Prod, "sum": Sum, "comp": Comp}


def functor_to_json(f):
    if isinstance(f, (Id, P12, Pow)):
        return repr(f)
    if isinstance(f, Const):
        return {"const": list(f.values)}
    if isinstance(f, Prod):
        return {"prod": [functor_to_json(f.left), functor_to_json(f.right)]}
    if isinstance(f, Sum):
        return {"sum": [functor_to_json(f.left), functor_to_json(f.right)]}
    if isinstance(f, Comp):
        return {"comp": [functor_to_json(f.outer), functor_to_json(f.inner)]}
    raise TypeError(f"not a FunctorExpr: {f!r}")


def functor_from_json(obj, where="functor"):
    if isinstance(obj, str):
        if obj in _NULLARY:
            return _NULLARY[obj]()
        raise ParseError(f"unknown functor tag {obj!r}", where)
    if isinstance(obj, dict) and len(obj) == 1:
        (tag, arg), = obj.items()
        if tag == "const":
            return Const(FinSet.of(_atoms(arg, f"{where}.const")))
        if tag in _BINARY:
            if not isinstance(arg, list) or len(arg) != 2:
                raise ParseError(f"{tag} takes two functors", where)
            return _BINARY[tag](
                functor_from_json(arg[0], f"{where}.{tag}[0]"),
                functor_from_json(arg[1], f"{where}.{tag}[1]"),
            )
        raise ParseError(f"unknown functor tag {tag!r}", where)
    raise ParseError(f"malformed functor {obj!r}", where)


def parse_functor(text):
    """Functor from JSON text; a bare tag such as ``P12`` is accepted too."""
    text = text.strip()
    if text in _NULLARY:
        return _NULLARY[text]()
    try:
        return functor_from_json(json.loads(text))
    except json.JSONDecodeError as exc:
        raise ParseError(str(exc), "functor") from exc


def elem_to_json(e):
    if isinstance(e, Atom):
        return e.name
    if isinstance(e, Pair):
        return {"pair": [elem_to_json(e.left), elem_to_json(e.right)]}
    if isinstance(e, Inl):
        return {"inl": elem_to_json(e.value)}
    if isinstance(e, Inr):
        return {"inr": elem_to_json(e.value)}
    if isinstance(e, SetOf):
        return {"set": [elem_to_json(m) for m in e.members]}
    if isinstance(e, ConstVal):
        return {"c": e.value}
    if isinstance(e, Unit):
        return "unit"
    raise TypeError(f"not an FElem: {e!r}")


def elem_from_json(obj, where="element"):
    if isinstance(obj, str):
        return Unit() if obj == "unit" else Atom(obj)
    if isinstance(obj, dict) and len(obj) == 1:
        (tag, arg), = obj.items()
        if tag == "pair":
            if not isinstance(arg, list) or len(arg) != 2:
                raise ParseError("pair takes two elements", where)
            return Pair(elem_from_json(arg[0], where), elem_from_json(arg[1], where))
        if tag == "inl":
            return Inl(elem_from_json(arg, where))
        if tag == "inr":
            return Inr(elem_from_json(arg, where))
        if tag == "set":
            if not isinstance(arg, list):
                raise ParseError("set takes a list", where)
            return SetOf(tuple(elem_from_json(m, where) for m in arg))
        if tag == "c":
            if not isinstance(arg, str):
                raise ParseError("constant must be a string", where)
            return ConstVal(arg)
    raise ParseError(f"malformed element {obj!r}", where)


def _atoms(obj, where):
    if not isinstance(obj, list) or not all(isinstance(a, str) for a in obj):
        raise ParseError("expected a list of strings", where)
    return obj


def _mapping(obj, where):
    if not isinstance(obj, dict) or not all(isinstance(v, str) for v in obj.values()):
        raise ParseError("expected an object of strings", where)
    return obj


def _load(text, what):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, f"{what} line {exc.lineno}") from exc
    if not isinstance(doc, dict):
        raise ParseError("top level must be an object", what)
    return doc


def _field(doc, name, what):
    if name not in doc:
        raise ParseError("missing field", f"{what}.{name}")
    return doc[name]


def _dumps(obj):
    return json.dumps(obj, ensure_ascii=False)


def _emit_object(pairs, indent="  "):
    if not pairs:
        return "{}"
    inner = (",\n").join(f"{indent}  {_dumps(k)}: {v}" for k, v in pairs)
    return "{\n" + inner + "\n" + indent + "}"


# -- graphs ------------------------------------------------------------------


def graph_to_json(g):
    return {
        "functor": functor_to_json(g.functor),
        "vertices": list(g.vertices),
        "edges": {e: elem_to_json(g.structure[e]) for e in g.edges},
    }


def graph_from_json(doc, what="graph"):
    functor = functor_from_json(_field(doc, "functor", what), f"{what}.functor")
    vertices = _atoms(_field(doc, "vertices", what), f"{what}.vertices")
    edges = _field(doc, "edges", what)
    if not isinstance(edges, dict):
        raise ParseError("expected an object", f"{what}.edges")
    structure = {e: elem_from_json(v, f"{what}.edges.{e}") for e, v in edges.items()}
    g = FGraph.build(functor, FinSet.of(vertices), structure)
    bad = validate_graph(g)
    if bad:
        raise ValidationError(bad)
    return g


def parse_graph(text):
    return graph_from_json(_load(text, "graph"))


def emit_graph(g):
    edges = [(e, _dumps(elem_to_json(g.structure[e]))) for e in g.edges]
    return (
        "{\n"
        f'  "functor": {_dumps(functor_to_json(g.functor))},\n'
        f'  "vertices": {_dumps(list(g.vertices))},\n'
        f'  "edges": {_emit_object(edges)}\n'
        "}\n"
    )


def read_graph(path):
    return parse_graph(Path(path).read_text())


def write_graph(g, path):
    Path(path).write_text(emit_graph(g))


# -- homomorphisms -----------------------------------------------------------


def parse_hom(text, base_dir="."):
    """Hom document; ``src``/``dst`` are graph files relative to ``base_dir``."""
    doc = _load(text, "hom")
    base = Path(base_dir)
    src = read_graph(base / _field(doc, "src", "hom"))
    dst = read_graph(base / _field(doc, "dst", "hom"))
    try:
        vmap = FinFunction(src.vertices, dst.vertices, _mapping(_field(doc, "vmap", "hom"), "hom.vmap"))
        emap = FinFunction(src.edges, dst.edges, _mapping(_field(doc, "emap", "hom"), "hom.emap"))
    except Exception as exc:
        if isinstance(exc, ParseError):
            raise
        raise ValidationError([str(exc)]) from exc
    h = GraphHom(src, dst, vmap, emap)
    bad = validate_hom(h)
    if bad:
        raise ValidationError(bad)
    return h


def emit_hom(h, src_ref, dst_ref):
    return (
        "{\n"
        f'  "src": {_dumps(str(src_ref))},\n'
        f'  "dst": {_dumps(str(dst_ref))},\n'
        f'  "vmap": {_emit_object([(k, _dumps(v)) for k, v in h.vmap.items()])},\n'
        f'  "emap": {_emit_object([(k, _dumps(v)) for k, v in h.emap.items()])}\n'
        "}\n"
    )


def read_hom(path):
    path = Path(path)
    return parse_hom(path.read_text(), path.parent)


# -- patterns and colorings --------------------------------------------------


def _colorset_from_json(obj, where):
    if not isinstance(obj, dict):
        raise ParseError("expected an object", where)
    return ColorSet(
        FinSet.of(_atoms(_field(obj, "vcolors", where), f"{where}.vcolors")),
        FinSet.of(_atoms(_field(obj, "ecolors", where), f"{where}.ecolors")),
    )


def _colorset_json(x):
    return _dumps({"vcolors": list(x.vcolors), "ecolors": list(x.ecolors)})


def parse_pattern(text):
    doc = _load(text, "pattern")
    p = Pattern(
        _colorset_from_json(_field(doc, "colorset", "pattern"), "pattern.colorset"),
        functor_from_json(_field(doc, "functor", "pattern"), "pattern.functor"),
        FinSet.of(_atoms(_field(doc, "vkeep", "pattern"), "pattern.vkeep")),
        FinSet.of(_atoms(_field(doc, "ekeep", "pattern"), "pattern.ekeep")),
    )
    bad = p.violations()
    if bad:
        raise ValidationError(bad)
    return p


def emit_pattern(p):
    return (
        "{\n"
        f'  "functor": {_dumps(functor_to_json(p.functor))},\n'
        f'  "colorset": {_colorset_json(p.colorset)},\n'
        f'  "vkeep": {_dumps(list(p.pvertices))},\n'
        f'  "ekeep": {_dumps(list(p.pedges))}\n'
        "}\n"
    )


def read_pattern(path):
    return parse_pattern(Path(path).read_text())


def parse_coloring(text, base_dir="."):
    """Coloring document: a graph file reference, a color set and both maps."""
    doc = _load(text, "coloring")
    g = read_graph(Path(base_dir) / _field(doc, "graph", "coloring"))
    x = _colorset_from_json(_field(doc, "colorset", "coloring"), "coloring.colorset")
    try:
        vcol = FinFunction(g.vertices, x.vcolors, _mapping(_field(doc, "vcol", "coloring"), "coloring.vcol"))
        ecol = FinFunction(g.edges, x.ecolors, _mapping(_field(doc, "ecol", "coloring"), "coloring.ecol"))
    except ParseError:
        raise
    except Exception as exc:
        raise ValidationError([str(exc)]) from exc
    return Coloring(g, vcol, ecol)


def emit_coloring(c, graph_ref):
    return (
        "{\n"
        f'  "graph": {_dumps(str(graph_ref))},\n'
        f'  "colorset": {_colorset_json(c.colorset)},\n'
        f'  "vcol": {_emit_object([(k, _dumps(v)) for k, v in c.vcol.items()])},\n'
        f'  "ecol": {_emit_object([(k, _dumps(v)) for k, v in c.ecol.items()])}\n'
        "}\n"
    )


def read_coloring(path):
    path = Path(path)
    return parse_coloring(path.read_text(), path.parent)
