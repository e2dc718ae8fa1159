"""Graphviz DOT export for undirected, directed and colored graphs."""

from .errors import UnsupportedFunctorForDot
from .functor import Comp, Const, Id, P12, Prod


def _q(atom):
    return '"' + atom.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _unwrap_colored(f):
    """Base functor of ``X_E × F(X_V × Id)``, or ``None``."""
    if (
        isinstance(f, Prod)
        and isinstance(f.left, Const)
        and isinstance(f.right, Comp)
        and isinstance(f.right.inner, Prod)
        and isinstance(f.right.inner.left, Const)
        and f.right.inner.right == Id()
    ):
        return f.right.outer
    return None


def _endpoints(base, s):
    if isinstance(base, P12):
        members = s.members
        return (members[0], members[-1])
    return (s.left, s.right)


def export_dot(g):
    base = _unwrap_colored(g.functor)
    colored = base is not None
    if not colored:
        base = g.functor
    if base == P12():
        kind, arrow = "graph", "--"
    elif base == Prod(Id(), Id()):
        kind, arrow = "digraph", "->"
    else:
        raise UnsupportedFunctorForDot(f"no DOT rendering for {g.functor!r}")

    vlabels = {v: v for v in g.vertices}
    lines = []
    for e in g.edges:
        s = g.structure[e]
        label = e
        if colored:
            label = f"{e}: {s.left.value}"
            s = s.right
        ends = []
        for end in _endpoints(base, s):
            if colored:
                vlabels[end.right.name] = f"{end.right.name}: {end.left.value}"
                end = end.right
            ends.append(end.name)
        lines.append(f"  {_q(ends[0])} {arrow} {_q(ends[1])} [label={_q(label)}];")
    nodes = [f"  {_q(v)} [label={_q(vlabels[v])}];" for v in g.vertices]
    return f"{kind} {{\n" + "\n".join(nodes + lines) + ("\n" if nodes or lines else "") + "}\n"

