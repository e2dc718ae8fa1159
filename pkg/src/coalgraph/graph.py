"""F-graphs ``(V, E, g: E -> F V)``, their homomorphisms, images and
subcoalgebras."""

from collections import Counter, defaultdict
from dataclasses import dataclass
from itertools import combinations, product

from . import guard
from .errors import FunctorMismatch, SpecOutOfRange
from .finset import FinFunction, FinSet, all_functions
from .functor import Atom, elem_check, encode, fmap, support


@dataclass(frozen=True, eq=True)
class FGraph:
    functor: object
    vertices: FinSet
    edges: FinSet
    structure: dict

    @classmethod
    def build(cls, functor, vertices, structure):
        """Graph whose edge set is the key set of ``structure``."""
        if not isinstance(vertices, FinSet):
            vertices = FinSet.of(vertices)
        return cls(functor, vertices, FinSet(tuple(structure)), dict(structure))

    def __call__(self, edge):
        return self.structure[edge]

    def sizes(self):
        return (len(self.vertices), len(self.edges))

    def restrict(self, vkeep, ekeep):
        return FGraph(self.functor, vkeep, ekeep, {e: self.structure[e] for e in ekeep})

    def __repr__(self):
        body = ", ".join(f"{e}:{encode(self.structure[e])}" for e in self.edges)
        return f"FGraph({self.functor!r}, V={self.vertices!r}, E=[{body}])"


@dataclass(frozen=True)
class GraphHom:
    src: FGraph
    dst: FGraph
    vmap: FinFunction
    emap: FinFunction

    def then(self, other):
        """``other ∘ self``."""
        return GraphHom(self.src, other.dst, self.vmap.then(other.vmap), self.emap.then(other.emap))

    def key(self):
        return (self.vmap.key(), self.emap.key())

    def is_injective(self):
        return self.vmap.is_injective() and self.emap.is_injective()

    def is_surjective(self):
        return self.vmap.is_surjective() and self.emap.is_surjective()

    def inverse(self):
        return GraphHom(self.dst, self.src, self.vmap.inverse(), self.emap.inverse())


@dataclass(frozen=True)
class SubgraphSpec:
    vkeep: FinSet
    ekeep: FinSet


def identity_hom(g):
    return GraphHom(g, g, FinFunction.identity(g.vertices), FinFunction.identity(g.edges))


def image_under(f, vmap, s):
    return fmap(f, lambda x: Atom(vmap(x.name)), s)


def validate_graph(g):
    violations = []
    if set(g.structure) != set(g.edges):
        missing = sorted(set(g.edges) - set(g.structure))
        extra = sorted(set(g.structure) - set(g.edges))
        violations += [f"edge {e}: no structure value" for e in missing]
        violations += [f"edge {e}: structure given for unknown edge" for e in extra]
    for e in g.edges:
        if e in g.structure and not elem_check(g.functor, g.vertices, g.structure[e]):
            violations.append(f"edge {e}: ill-typed structure {encode(g.structure[e])}")
    return violations


def validate_hom(h):
    violations = []
    if h.src.functor != h.dst.functor:
        return ["functors differ"]
    for name, fn, dom, cod in (
        ("vmap", h.vmap, h.src.vertices, h.dst.vertices),
        ("emap", h.emap, h.src.edges, h.dst.edges),
    ):
        if fn.dom != dom or fn.cod != cod:
            violations.append(f"{name}: wrong domain or codomain")
    if violations:
        return violations
    f = h.src.functor
    for e in h.src.edges:
        try:
            mapped = image_under(f, h.vmap, h.src.structure[e])
        except KeyError:
            violations.append(f"{e}: structure mentions unmapped vertex")
            continue
        if h.dst.structure[h.emap(e)] != mapped:
            violations.append(f"{e}: square fails ({encode(mapped)} != {encode(h.dst.structure[h.emap(e)])})")
    return violations


def _edges_by_structure(g):
    index = defaultdict(list)
    for e in g.edges:
        index[g.structure[e]].append(e)
    return index


def enumerate_homs(a, b, limit=None):
    """All homomorphisms ``a -> b``, ordered by (vertex table, edge table).

    Vertex maps are brute-forced; for each one the admissible edge images are
    exactly the edges of ``b`` carrying the pushed-forward structure.
    """
    if a.functor != b.functor:
        raise FunctorMismatch(f"{a.functor!r} vs {b.functor!r}")
    guard.check("vertex maps", len(b.vertices) ** len(a.vertices), limit)
    index = _edges_by_structure(b)
    found = []
    for vmap in all_functions(a.vertices, b.vertices):
        choices = []
        for e in a.edges:
            targets = index.get(image_under(a.functor, vmap, a.structure[e]))
            if not targets:
                break
            choices.append(targets)
        else:
            for targets in product(*choices):
                emap = FinFunction(a.edges, b.edges, zip(a.edges, targets))
                found.append(GraphHom(a, b, vmap, emap))
                guard.check("homomorphisms", len(found), limit)
    return found


def is_isomorphism(h):
    return h.vmap.is_bijective() and h.emap.is_bijective()


def image_factorization(h):
    """Split ``h`` into a surjective hom onto its image and the inclusion."""
    vimg = h.vmap.image()
    eimg = h.emap.image()
    im = h.dst.restrict(vimg, eimg)
    epi = GraphHom(
        h.src,
        im,
        FinFunction(h.src.vertices, vimg, h.vmap.table),
        FinFunction(h.src.edges, eimg, h.emap.table),
    )
    mono = GraphHom(im, h.dst, FinFunction.inclusion(vimg, h.dst.vertices), FinFunction.inclusion(eimg, h.dst.edges))
    return im, epi, mono


def is_subcoalgebra(g, vkeep, ekeep):
    return all(support(g.functor, g.structure[e]).issubset(vkeep) for e in ekeep)


def largest_subcoalgebra(g, spec):
    """Largest subgraph of ``g`` inside ``spec``.

    Vertices carry no structure, so one filter pass over the edges suffices.
    """
    if not spec.vkeep.issubset(g.vertices) or not spec.ekeep.issubset(g.edges):
        raise SpecOutOfRange("subgraph spec is not contained in the graph")
    kept = FinSet(
        tuple(e for e in spec.ekeep if support(g.functor, g.structure[e]).issubset(spec.vkeep))
    )
    return g.restrict(spec.vkeep, kept)


def _subsets(s):
    for k in range(len(s) + 1):
        for sub in combinations(s.elements, k):
            yield FinSet(sub)


def enumerate_subgraphs(g, limit=None):
    """Every subcoalgebra of ``g``: vertex subsets with any admissible edge subset."""
    guard.check("subgraph candidates", 2 ** (len(g.vertices) + len(g.edges)), limit)
    supports = {e: support(g.functor, g.structure[e]) for e in g.edges}
    out = []
    for vkeep in _subsets(g.vertices):
        eligible = FinSet(tuple(e for e in g.edges if supports[e].issubset(vkeep)))
        for ekeep in _subsets(eligible):
            out.append(g.restrict(vkeep, ekeep))
    return out


def inclusion_hom(sub, g):
    return GraphHom(sub, g, FinFunction.inclusion(sub.vertices, g.vertices), FinFunction.inclusion(sub.edges, g.edges))


# -- isomorphism -------------------------------------------------------------


def _vertex_signatures(g):
    sig = {v: [] for v in g.vertices}
    for e in g.edges:
        supp = support(g.functor, g.structure[e])
        for v in supp:
            sig[v].append(len(supp))
    return {v: tuple(sorted(s)) for v, s in sig.items()}


def invariant(g):
    """Cheap isomorphism invariant used as a prefilter."""
    sizes = sorted(len(support(g.functor, g.structure[e])) for e in g.edges)
    return (repr(g.functor), len(g.vertices), len(g.edges), tuple(sizes), tuple(sorted(_vertex_signatures(g).values())))


def find_isomorphism(a, b):
    """An isomorphism ``a -> b`` or ``None``, by backtracking over bijections."""
    if a.functor != b.functor or invariant(a) != invariant(b):
        return None
    sig_a = _vertex_signatures(a)
    sig_b = _vertex_signatures(b)
    order = list(a.vertices)
    target_counts = Counter(b.structure.values())
    index = _edges_by_structure(b)

    def finish(assign):
        vmap = FinFunction(a.vertices, b.vertices, assign)
        mapped = {e: image_under(a.functor, vmap, a.structure[e]) for e in a.edges}
        if Counter(mapped.values()) != target_counts:
            return None
        pools = {s: list(es) for s, es in index.items()}
        emap = {e: pools[mapped[e]].pop(0) for e in a.edges}
        return GraphHom(a, b, vmap, FinFunction(a.edges, b.edges, emap))

    def extend(i, assign, used):
        if i == len(order):
            return finish(assign)
        v = order[i]
        for w in b.vertices:
            if w in used or sig_b[w] != sig_a[v]:
                continue
            assign[v] = w
            used.add(w)
            hit = extend(i + 1, assign, used)
            if hit is not None:
                return hit
            used.discard(w)
            del assign[v]
        return None

    return extend(0, {}, set())


def are_isomorphic(a, b):
    return find_isomorphism(a, b) is not None


def dedupe_isomorphic(graphs):
    """Keep the first representative of every isomorphism class, in input order."""
    buckets = defaultdict(list)
    kept = []
    for g in graphs:
        bucket = buckets[invariant(g)]
        if any(are_isomorphic(g, h) for h in bucket):
            continue
        bucket.append(g)
        kept.append(g)
    return kept
