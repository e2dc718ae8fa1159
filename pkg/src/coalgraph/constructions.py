"""Limits, colimits and cofree graphs in the category of F-graphs."""

from collections import defaultdict
from dataclasses import dataclass

from . import guard
from .errors import ColorSetMismatch, FunctorMismatch, NotParallel
from .finset import (
    TERMINAL,
    FinFunction,
    FinSet,
    SetPair,
    all_functions,
    coproduct,
    equalizer,
    pair_atom,
    product,
    pullback,
)
from .functor import Comp, Const, ConstVal, Id, Pair, Prod, apply_obj, encode, fmap
from .graph import FGraph, GraphHom, SubgraphSpec, image_under, inclusion_hom, largest_subcoalgebra


@dataclass(frozen=True)
class ColorSet:
    vcolors: FinSet
    ecolors: FinSet

    @classmethod
    def of(cls, vcolors, ecolors):
        return cls(FinSet.of(vcolors), FinSet.of(ecolors))


TERMINAL_COLORS = ColorSet(TERMINAL, TERMINAL)


@dataclass(frozen=True)
class Coloring:
    graph: FGraph
    vcol: FinFunction
    ecol: FinFunction

    @property
    def colorset(self):
        return ColorSet(self.vcol.cod, self.ecol.cod)


def _same_functor(a, b):
    if a.functor != b.functor:
        raise FunctorMismatch(f"{a.functor!r} vs {b.functor!r}")


def _encoded(elems):
    names = {encode(s): s for s in elems}
    if len(names) != len(elems):
        raise ValueError("element encodings collide; rename atoms containing (),{}")
    return names


def coproduct_graphs(a, b):
    _same_functor(a, b)
    vs, inl_v, inr_v = coproduct(a.vertices, b.vertices)
    es, inl_e, inr_e = coproduct(a.edges, b.edges)
    structure = {}
    for g, inj_v, inj_e in ((a, inl_v, inl_e), (b, inr_v, inr_e)):
        for e in g.edges:
            structure[inj_e(e)] = image_under(g.functor, inj_v, g.structure[e])
    s = FGraph(a.functor, vs, es, structure)
    return s, GraphHom(a, s, inl_v, inl_e), GraphHom(b, s, inr_v, inr_e)


def product_graphs(a, b, limit=None):
    """Binary product; its edges are the pullback of ``g_a × g_b`` against
    ``F(π_a) × F(π_b)``.

    Edge atoms read ``((ea,eb)#k)`` where ``k`` indexes the admissible
    structure elements of that edge pair in canonical order.
    """
    _same_functor(a, b)
    f = a.functor
    verts, pv_a, pv_b = product(a.vertices, b.vertices)
    fa = _encoded(apply_obj(f, a.vertices, limit))
    fb = _encoded(apply_obj(f, b.vertices, limit))
    fprod = _encoded(apply_obj(f, verts, limit))
    target, _, _ = product(FinSet(tuple(fa)), FinSet(tuple(fb)))
    epairs, pe_a, pe_b = product(a.edges, b.edges)

    # alpha: ∏E -> ∏ F V_i,  beta: F(∏V) -> ∏ F V_i
    alpha = FinFunction(
        epairs,
        target,
        {p: pair_atom(encode(a.structure[pe_a(p)]), encode(b.structure[pe_b(p)])) for p in epairs},
    )
    beta = FinFunction(
        FinSet(tuple(fprod)),
        target,
        {
            name: pair_atom(encode(image_under(f, pv_a, s)), encode(image_under(f, pv_b, s)))
            for name, s in fprod.items()
        },
    )
    pb_set, pb_beta, pb_alpha = pullback(alpha, beta)

    admissible = defaultdict(list)
    for x in pb_set:
        admissible[pb_beta(x)].append(fprod[pb_alpha(x)])
    structure, emap_a, emap_b = {}, {}, {}
    for p in epairs:
        for k, s in enumerate(sorted(admissible[p], key=lambda s: s.sort_key)):
            name = f"({p}#{k})"
            structure[name] = s
            emap_a[name] = pe_a(p)
            emap_b[name] = pe_b(p)
    prod = FGraph.build(f, verts, structure)
    pi_a = GraphHom(prod, a, pv_a, FinFunction(prod.edges, a.edges, emap_a))
    pi_b = GraphHom(prod, b, pv_b, FinFunction(prod.edges, b.edges, emap_b))
    return prod, pi_a, pi_b


def equalizer_graphs(h1, h2):
    """Equalizer of parallel homs: the subcoalgebra cogenerated by the
    componentwise Set equalizer."""
    if h1.src != h2.src or h1.dst != h2.dst:
        raise NotParallel("homomorphisms must share source and target")
    vkeep, _ = equalizer(h1.vmap, h2.vmap)
    ekeep, _ = equalizer(h1.emap, h2.emap)
    sub = largest_subcoalgebra(h1.src, SubgraphSpec(vkeep, ekeep))
    return sub, inclusion_hom(sub, h1.src)


def cofree_graph(f, x, limit=None):
    """Cofree graph ``(X_V, X_E × F X_V, projection)`` and its counit coloring."""
    elems = _encoded(apply_obj(f, x.vcolors, limit))
    edges, to_color, to_elem = product(x.ecolors, FinSet(tuple(elems)))
    g = FGraph(f, x.vcolors, edges, {e: elems[to_elem(e)] for e in edges})
    return g, Coloring(g, FinFunction.identity(x.vcolors), to_color)


def terminal_graph(f):
    return cofree_graph(f, TERMINAL_COLORS)[0]


def cofree_cochain(f, x, limit=None):
    """First four stages ``X^0 .. X^3`` of the terminal sequence for the
    cofree graph over ``x``.

    Stage ``n+1`` is ``(X_V, X_E × F(X^n_V))`` starting from ``(1, 1)``.
    Returns ``(stages, stabilized)`` where ``stabilized`` tells whether the
    connecting map ``X^3 -> X^2`` is bijective in both components.
    """
    stages = [SetPair(TERMINAL, TERMINAL)]
    edge_parts = [None]
    for _ in range(3):
        elems = _encoded(apply_obj(f, stages[-1].first, limit))
        edges, to_color, to_elem = product(x.ecolors, FinSet(tuple(elems)))
        edge_parts.append({e: (to_color(e), elems[to_elem(e)]) for e in edges})
        stages.append(SetPair(x.vcolors, edges))

    # connecting map X^3 -> X^2 is id on X_V and id × F(X^2_V -> X^1_V) on edges
    link_v = FinFunction.identity(x.vcolors)
    lookup = {cs: e for e, cs in edge_parts[2].items()}
    table = {e: lookup[(c, image_under(f, link_v, s))] for e, (c, s) in edge_parts[3].items()}
    link_e = FinFunction(stages[3].second, stages[2].second, table)
    stabilized = link_v.is_bijective() and link_e.is_bijective()
    return stages, stabilized


def all_colorings(g, x, limit=None):
    guard.check(
        "colorings", len(x.vcolors) ** len(g.vertices) * len(x.ecolors) ** len(g.edges), limit
    )
    for vcol in all_functions(g.vertices, x.vcolors):
        for ecol in all_functions(g.edges, x.ecolors):
            yield Coloring(g, vcol, ecol)


def lift_coloring(c, cofree):
    """The unique hom ``γ̄: G -> C X`` with ``ε_X ∘ γ̄ = γ``."""
    g = c.graph
    if cofree.functor != g.functor or cofree.vertices != c.vcol.cod:
        raise ColorSetMismatch("cofree graph was built for another functor or color set")
    emap = {}
    for e in g.edges:
        s = image_under(g.functor, c.vcol, g.structure[e])
        target = pair_atom(c.ecol(e), encode(s))
        if target not in cofree.edges or cofree.structure[target] != s:
            raise ColorSetMismatch(f"no cofree edge {target}")
        emap[e] = target
    return GraphHom(g, cofree, c.vcol, FinFunction(g.edges, cofree.edges, emap))


def restrict_along_counit(h, counit):
    """Coloring ``ε_X ∘ U(h)`` induced by a hom into the cofree graph."""
    return Coloring(h.src, h.vmap.then(counit.vcol), h.emap.then(counit.ecol))


def colored_functor(f, x):
    return Prod(Const(x.ecolors), Comp(f, Prod(Const(x.vcolors), Id())))


def colored_graph(g, c):
    """Same carriers, structure ``e ↦ (γ_E(e), g(e) with v relabeled (γ_V(v), v))``."""
    relabel = lambda a: Pair(ConstVal(c.vcol(a.name)), a)  # noqa: E731
    structure = {
        e: Pair(ConstVal(c.ecol(e)), fmap(g.functor, relabel, g.structure[e])) for e in g.edges
    }
    return FGraph(colored_functor(g.functor, c.colorset), g.vertices, g.edges, structure)
