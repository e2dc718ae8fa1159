"""Patterns (coequations) over cofree graphs, their satisfaction relation,
the closure operators S, H and Σ, and a bounded Co-Birkhoff check."""

from collections import defaultdict
from dataclasses import dataclass, field
from functools import reduce
from itertools import combinations_with_replacement, product

from more_itertools import set_partitions

from . import guard
from .constructions import all_colorings, cofree_graph, coproduct_graphs, lift_coloring
from .errors import FunctorMismatch, ValidationError
from .finset import FinFunction, FinSet
from .functor import apply_obj
from .graph import (
    FGraph,
    SubgraphSpec,
    are_isomorphic,
    dedupe_isomorphic,
    enumerate_subgraphs,
    image_factorization,
    image_under,
    invariant,
    largest_subcoalgebra,
)


@dataclass(frozen=True)
class Pattern:
    """Sub-pair of the carrier of the cofree graph over ``colorset``."""

    colorset: object
    functor: object
    pvertices: FinSet
    pedges: FinSet

    def violations(self, limit=None):
        cofree, _ = cofree_graph(self.functor, self.colorset, limit)
        out = [f"vertex {v}: not a color" for v in self.pvertices if v not in cofree.vertices]
        out += [f"edge {e}: not a cofree edge" for e in self.pedges if e not in cofree.edges]
        return out

    def issubset(self, other):
        return self.pvertices.issubset(other.pvertices) and self.pedges.issubset(other.pedges)


def full_pattern(functor, colorset, limit=None):
    cofree, _ = cofree_graph(functor, colorset, limit)
    return Pattern(colorset, functor, cofree.vertices, cofree.edges)


@dataclass
class GraphClass:
    """Finite class of F-graphs, one representative per isomorphism class."""

    functor: object
    members: list = field(default_factory=list)

    def __post_init__(self):
        for g in self.members:
            if g.functor != self.functor:
                raise FunctorMismatch(f"{g.functor!r} in a class of {self.functor!r}")
        self.members = dedupe_isomorphic(self.members)

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def find(self, g):
        """The member isomorphic to ``g``, or ``None``."""
        key = invariant(g)
        for h in self.members:
            if invariant(h) == key and are_isomorphic(g, h):
                return h
        return None

    def __contains__(self, g):
        return self.find(g) is not None

    def issubset(self, other):
        return all(g in other for g in self.members)

    def same_as(self, other):
        return len(self) == len(other) and self.issubset(other)

    def minus(self, other):
        return GraphClass(self.functor, [g for g in self.members if g not in other])

    def union(self, other):
        return GraphClass(self.functor, self.members + other.members)


# -- patterns ----------------------------------------------------------------


def cogenerated_by_pattern(p, limit=None):
    """Largest subgraph of the cofree graph contained in the pattern."""
    cofree, _ = cofree_graph(p.functor, p.colorset, limit)
    return largest_subcoalgebra(cofree, SubgraphSpec(p.pvertices, p.pedges))


def _lifted_images(g, colorset, limit):
    cofree, _ = cofree_graph(g.functor, colorset, limit)
    for c in all_colorings(g, colorset, limit):
        im, _, _ = image_factorization(lift_coloring(c, cofree))
        yield c, im


def satisfies(g, p, limit=None):
    """``g ⊨ p``: every lifted coloring lands inside the cogenerated subgraph."""
    if g.functor != p.functor:
        raise FunctorMismatch(f"{g.functor!r} vs {p.functor!r}")
    target = cogenerated_by_pattern(p, limit)
    for _, im in _lifted_images(g, p.colorset, limit):
        if not (im.vertices.issubset(target.vertices) and im.edges.issubset(target.edges)):
            return False
    return True


def pattern_of_class(k, x, limit=None):
    """Least pattern over ``x`` that every member of ``k`` satisfies."""
    pv, pe = set(), set()
    for g in k:
        for _, im in _lifted_images(g, x, limit):
            pv.update(im.vertices)
            pe.update(im.edges)
    return Pattern(x, k.functor, FinSet(tuple(pv)), FinSet(tuple(pe)))


def graphs_of_pattern(p, universe, limit=None):
    return GraphClass(universe.functor, [g for g in universe if satisfies(g, p, limit)])


# -- closures ----------------------------------------------------------------


def closure_S(k, limit=None):
    out = []
    for g in k:
        out += enumerate_subgraphs(g, limit)
    return GraphClass(k.functor, list(k.members) + out)


def quotients(g, limit=None):
    """Every homomorphic image of ``g``, realized as a quotient.

    Vertex blocks are named by their least member; edges may only be merged
    when their pushed-forward structures coincide.
    """
    out = []
    for vblocks in set_partitions(g.vertices.elements):
        rep = {v: min(block) for block in vblocks for v in block}
        qv = FinFunction(g.vertices, FinSet(tuple(rep.values())), rep)
        groups = defaultdict(list)
        for e in g.edges:
            groups[image_under(g.functor, qv, g.structure[e])].append(e)
        group_list = list(groups.items())
        for eblocks in product(*(set_partitions(es) for _, es in group_list)):
            structure = {}
            for (s, _), blocks in zip(group_list, eblocks):
                for block in blocks:
                    structure[min(block)] = s
            out.append(FGraph.build(g.functor, qv.cod, structure))
            guard.check("quotients", len(out), limit)
    return out


def closure_H(k, limit=None):
    out = []
    for g in k:
        out += dedupe_isomorphic(quotients(g, limit))
    return GraphClass(k.functor, list(k.members) + out)


def closure_Sigma(k, maxsummands, limit=None):
    """All coproducts of between one and ``maxsummands`` members (repetition allowed)."""
    out = []
    for r in range(1, maxsummands + 1):
        for summands in combinations_with_replacement(k.members, r):
            out.append(reduce(lambda a, b: coproduct_graphs(a, b)[0], summands))
            guard.check("coproducts", len(out), limit)
    return GraphClass(k.functor, out)


# -- universes and the Co-Birkhoff check -------------------------------------


def enumerate_graphs(functor, max_vertices, max_edges, limit=None):
    """All F-graphs with at most the given numbers of vertices and edges, up to iso."""
    out = []
    for n in range(max_vertices + 1):
        verts = FinSet(tuple(f"v{i}" for i in range(n)))
        elems = apply_obj(functor, verts, limit)
        for m in range(max_edges + 1):
            for choice in combinations_with_replacement(elems, m):
                out.append(FGraph.build(functor, verts, {f"e{i}": s for i, s in enumerate(choice)}))
                guard.check("universe candidates", len(out), limit)
    return GraphClass(functor, out)


@dataclass
class BirkhoffReport:
    left: GraphClass
    right: GraphClass
    only_left: GraphClass
    only_right: GraphClass

    @property
    def status(self):
        if len(self.only_left):
            return "fail"
        if len(self.only_right):
            return "inconclusive at bounds"
        return "pass"

    @property
    def passed(self):
        return self.status == "pass"


def _shsigma_in_universe(k, universe, maxsummands, limit):
    """Members of ``universe`` lying in ``S H Σ(k)``, without materializing the
    whole subgraph closure."""
    hsigma = closure_H(closure_Sigma(k, maxsummands, limit), limit)
    found = {}
    for g in hsigma:
        for sub in enumerate_subgraphs(g, limit):
            hit = universe.find(sub)
            if hit is not None:
                found[id(hit)] = hit
    return found


def birkhoff_check(k, universe, x, maxsummands, limit=None, rounds=None):
    """Compare ``S H Σ(k) ∩ universe`` with ``Graph(Pat(k)) ∩ universe``.

    A single pass of the bounded closures misses graphs that need more than
    ``maxsummands`` summands, so the left side is iterated: each round feeds
    ``k`` plus everything found so far back through ``S H Σ``, until nothing
    new appears or ``rounds`` passes have run.  Every graph produced lies in
    the covariety generated by ``k``.

    Both sides are reported as universe members.  A graph on the left but not
    the right refutes soundness; the converse only means the bounds are too
    small to exhibit it.
    """
    if k.functor != universe.functor:
        raise FunctorMismatch("class and universe use different functors")
    found = {}
    done = 0
    while rounds is None or done < rounds:
        seeds = GraphClass(k.functor, list(k.members) + list(found.values()))
        fresh = _shsigma_in_universe(seeds, universe, maxsummands, limit)
        done += 1
        if fresh.keys() <= found.keys():
            break
        found.update(fresh)
    left = GraphClass(universe.functor, [g for g in universe if id(g) in found])
    right = graphs_of_pattern(pattern_of_class(k, x, limit), universe, limit)
    return BirkhoffReport(left, right, left.minus(right), right.minus(left))


def require_valid_pattern(p, limit=None):
    bad = p.violations(limit)
    if bad:
        raise ValidationError(bad)
    return p
