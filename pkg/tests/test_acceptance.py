"""Exit criteria.  Each test carries a ``criterion`` marker; the terminal
summary prints one PASS/FAIL line per criterion."""

import json
import shutil
import time
from collections import Counter
from itertools import combinations
from pathlib import Path

import pytest
from hypothesis import HealthCheck, given, settings, strategies as st

from coalgraph.cli import main
from coalgraph.constructions import (
    ColorSet,
    all_colorings,
    cofree_cochain,
    cofree_graph,
    coproduct_graphs,
    equalizer_graphs,
    lift_coloring,
    product_graphs,
    restrict_along_counit,
)
from coalgraph.covariety import GraphClass, birkhoff_check, enumerate_graphs
from coalgraph.finset import FinFunction, FinSet
from coalgraph.functor import (
    Comp,
    Const,
    Id,
    P12,
    Pow,
    Prod,
    Sum,
    apply_mor,
    apply_obj,
    elem_check,
    support,
)
from coalgraph.graph import enumerate_homs, image_factorization, is_subcoalgebra, validate_graph, validate_hom
from coalgraph.serialize import emit_coloring, emit_graph, emit_hom, emit_pattern, read_coloring, read_graph, read_hom, read_pattern

from corpus import DIRECTED, DIRECTED_CORPUS, EDGELESS1, K2, L1, UNDIRECTED_CORPUS, uedge

GOLDEN = Path(__file__).parent / "golden"
X_RG = ColorSet.of(["r", "g"], ["1", "2"])


class Timer:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.seconds = time.perf_counter() - self.start


# -- 1 -----------------------------------------------------------------------


@pytest.mark.criterion(1, "cofree reproduction")
def test_cofree_reproduction():
    with Timer() as t:
        g, eps = cofree_graph(P12(), X_RG)
    assert g.sizes() == (2, 6)
    got = Counter((eps.ecol(e), g.structure[e]) for e in g.edges)
    expected = Counter(
        (c, s) for c in ("1", "2") for s in (uedge("r"), uedge("g"), uedge("r", "g"))
    )
    assert got == expected
    loops = [e for e in g.edges if len(g.structure[e].members) == 1]
    assert Counter(g.structure[e] for e in loops) == {uedge("r"): 2, uedge("g"): 2}
    assert t.seconds < 1


# -- 2 -----------------------------------------------------------------------


@pytest.mark.criterion(2, "cochain stabilization")
def test_cochain_stabilization():
    functors = [Id(), P12(), DIRECTED, Sum(Id(), P12())]
    with Timer() as t:
        for f in functors:
            for nv in range(4):
                for ne in range(4):
                    x = ColorSet.of([f"c{i}" for i in range(nv)], [f"k{i}" for i in range(ne)])
                    stages, stable = cofree_cochain(f, x)
                    assert stable, (f, nv, ne)
                    assert stages[2].sizes() == stages[3].sizes()
    assert t.seconds < 5


# -- 3 -----------------------------------------------------------------------


@pytest.mark.criterion(3, "product example")
def test_product_example():
    with Timer() as t:
        prod, _, _ = product_graphs(K2, K2)
        other, _, _ = product_graphs(K2, L1)
    assert len(prod.edges) == 2
    assert {prod.structure[e] for e in prod.edges} == {
        uedge("(v,v)", "(w,w)"),
        uedge("(v,w)", "(w,v)"),
    }
    assert len(other.edges) == 1
    assert t.seconds < 1


# -- 4 -----------------------------------------------------------------------

CORPORA = [UNDIRECTED_CORPUS, DIRECTED_CORPUS]
LIMIT = 10**6


def _homs(a, b, cache):
    key = (id(a), id(b))
    if key not in cache:
        cache[key] = enumerate_homs(a, b, LIMIT)
    return cache[key]


def _check_product(corpus, cache):
    for a in corpus:
        for b in corpus:
            prod, pa, pb = product_graphs(a, b, LIMIT)
            for t in corpus:
                mediators = Counter(
                    (m.then(pa).key(), m.then(pb).key()) for m in enumerate_homs(t, prod, LIMIT)
                )
                for ta in _homs(t, a, cache):
                    for tb in _homs(t, b, cache):
                        assert mediators[(ta.key(), tb.key())] == 1
                assert sum(mediators.values()) == len(_homs(t, a, cache)) * len(_homs(t, b, cache))


def _check_coproduct(corpus, cache):
    for a in corpus:
        for b in corpus:
            s, ia, ib = coproduct_graphs(a, b)
            for t in corpus:
                mediators = Counter((ia.then(m).key(), ib.then(m).key()) for m in enumerate_homs(s, t, LIMIT))
                for ta in _homs(a, t, cache):
                    for tb in _homs(b, t, cache):
                        assert mediators[(ta.key(), tb.key())] == 1
                assert sum(mediators.values()) == len(_homs(a, t, cache)) * len(_homs(b, t, cache))


def _check_equalizer(corpus, cache):
    pairs = 0
    for a in corpus:
        for b in corpus:
            homs = _homs(a, b, cache)
            for h1 in homs:
                for h2 in homs:
                    eq, inc = equalizer_graphs(h1, h2)
                    assert inc.then(h1).key() == inc.then(h2).key()
                    pairs += 1
                    for t in corpus:
                        factored = Counter(m.then(inc).key() for m in enumerate_homs(t, eq, LIMIT))
                        for u in _homs(t, a, cache):
                            agree = u.then(h1).key() == u.then(h2).key()
                            assert factored[u.key()] == (1 if agree else 0)
    return pairs


@pytest.mark.criterion(4, "universal properties")
def test_universal_properties():
    with Timer() as t:
        pairs = 0
        for corpus in CORPORA:
            assert all(len(g.vertices) <= 3 and len(g.edges) <= 3 for g in corpus)
            cache = {}
            _check_product(corpus, cache)
            _check_coproduct(corpus, cache)
            pairs += _check_equalizer(corpus, cache)
    assert pairs > 0
    assert t.seconds < 60


# -- 5 -----------------------------------------------------------------------


@pytest.mark.criterion(5, "adjunction bijection")
def test_adjunction_bijection():
    with Timer() as t:
        for g in UNDIRECTED_CORPUS + DIRECTED_CORPUS:
            for nv, ne in ((1, 1), (2, 2)):
                x = ColorSet.of([f"c{i}" for i in range(nv)], [f"k{i}" for i in range(ne)])
                cofree, eps = cofree_graph(g.functor, x)
                homs = enumerate_homs(g, cofree, LIMIT)
                assert len(homs) == nv ** len(g.vertices) * ne ** len(g.edges)
                hom_keys = {h.key() for h in homs}
                for h in homs:
                    assert lift_coloring(restrict_along_counit(h, eps), cofree).key() == h.key()
                for c in all_colorings(g, x, LIMIT):
                    lifted = lift_coloring(c, cofree)
                    assert lifted.key() in hom_keys
                    back = restrict_along_counit(lifted, eps)
                    assert back.vcol == c.vcol and back.ecol == c.ecol
    assert t.seconds < 30


# -- 6 -----------------------------------------------------------------------


@pytest.mark.criterion(6, "factorization")
def test_factorization():
    count = 0
    for corpus in CORPORA:
        for a in corpus:
            for b in corpus:
                for h in enumerate_homs(a, b):
                    im, epi, mono = image_factorization(h)
                    assert epi.then(mono).key() == h.key()
                    assert epi.is_surjective() and mono.is_injective()
                    assert validate_hom(epi) == [] and validate_hom(mono) == []
                    assert validate_graph(im) == []
                    assert is_subcoalgebra(b, im.vertices, im.edges)
                    count += 1
    assert count > 0


# -- 7 -----------------------------------------------------------------------


@pytest.mark.criterion(7, "co-birkhoff at bounds")
def test_co_birkhoff():
    with Timer() as t:
        universe = enumerate_graphs(P12(), 2, 2)
        classes = {
            "edgeless-1v": GraphClass(P12(), [EDGELESS1]),
            "L1": GraphClass(P12(), [L1]),
            "universe": universe,
        }
        x22 = ColorSet.of(["r", "g"], ["1", "2"])
        for name, k in classes.items():
            report = birkhoff_check(k, universe, x22, 2)
            assert report.status == "pass", name
            assert report.left.same_as(report.right)

        colorsets = [ColorSet.of([f"c{i}" for i in range(a)], [f"k{i}" for i in range(b)])
                     for a in (1, 2) for b in (1, 2)]
        extra = {"K2": GraphClass(P12(), [K2]), "pair": GraphClass(P12(), [K2, L1])}
        for k in list(classes.values()) + list(extra.values()):
            for x in colorsets:
                for rounds in (1, None):
                    report = birkhoff_check(k, universe, x, 2, rounds=rounds)
                    assert len(report.only_left) == 0
    assert t.seconds < 120


# -- 8 -----------------------------------------------------------------------

LAW_FUNCTORS = [
    Id(),
    Const(FinSet.of(["0", "1"])),
    P12(),
    Pow(),
    DIRECTED,
    Sum(Id(), P12()),
    Comp(P12(), Prod(Const(FinSet.of(["r", "g"])), Id())),
    Prod(Const(FinSet.of(["1", "2"])), Comp(DIRECTED, Prod(Const(FinSet.of("r")), Id()))),
    Comp(Pow(), Sum(Id(), Const(FinSet.of("k")))),
]

small_sets = st.integers(0, 4).map(lambda n: FinSet(tuple(f"x{i}" for i in range(n))))


@st.composite
def law_case(draw, f):
    a = draw(small_sets.filter(len))
    b = draw(st.integers(1, 4).map(lambda n: FinSet(tuple(f"y{i}" for i in range(n)))))
    c = draw(st.integers(1, 4).map(lambda n: FinSet(tuple(f"z{i}" for i in range(n)))))
    m1 = FinFunction(a, b, {x: draw(st.sampled_from(b.elements)) for x in a})
    m2 = FinFunction(b, c, {y: draw(st.sampled_from(c.elements)) for y in b})
    s = draw(st.sampled_from(apply_obj(f, a)))
    return a, m1, m2, s


def _check_laws(f, case):
    a, m1, m2, s = case
    assert apply_mor(f, FinFunction.identity(a), s) == s
    assert apply_mor(f, m1.then(m2), s) == apply_mor(f, m2, apply_mor(f, m1, s))
    image = apply_mor(f, m1, s)
    assert image in set(apply_obj(f, m1.cod))
    supp = support(f, s)
    assert elem_check(f, supp, s)
    if len(supp) <= 3:
        proper = [FinSet(sub) for k in range(len(supp)) for sub in combinations(supp.elements, k)]
    else:
        proper = [FinSet(tuple(y for y in supp if y != x)) for x in supp]
    assert not any(elem_check(f, sub, s) for sub in proper)


@pytest.mark.criterion(8, "functor-law property suite")
@pytest.mark.parametrize("f", LAW_FUNCTORS, ids=repr)
def test_functor_laws(f):
    calls = []

    @settings(max_examples=500, derandomize=True, deadline=None,
              suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much])
    @given(law_case(f))
    def check(case):
        calls.append(1)
        _check_laws(f, case)

    check()
    assert len(calls) >= 500


# -- 9 -----------------------------------------------------------------------


def _reemit(path):
    doc = json.loads(path.read_text())
    if path.suffix == ".graph":
        return emit_graph(read_graph(path))
    if path.suffix == ".hom":
        return emit_hom(read_hom(path), doc["src"], doc["dst"])
    if path.suffix == ".pattern":
        return emit_pattern(read_pattern(path))
    return emit_coloring(read_coloring(path), doc["graph"])


def _commands():
    graphs = sorted(p.name for p in GOLDEN.glob("*.graph"))
    drawable = ["k2.graph", "l1.graph", "edgeless1.graph", "empty.graph", "path3.graph", "k2loop.graph",
                "dloop.graph", "arrow.graph", "cycle2.graph", "colored_k2.graph", "cofree_rg.graph"]
    cmds = [["validate", p.name] for p in sorted(GOLDEN.iterdir())]
    cmds += [["subgraphs", g] for g in graphs if g != "cofree_rg.graph"]
    cmds += [["export-dot", g] for g in drawable]
    cmds += [["iso-check", g, g] for g in graphs]
    cmds += [
        ["hom-check", "k2_swap.hom"],
        ["hom-enum", "k2.graph", "l1.graph", "-o", "homs"],
        ["iso-check", "k2_swap.hom"],
        ["factorize", "k2_to_l1.hom", "-o", "fac"],
        ["cogenerate", "edgeless.pattern", "-o", "cg.graph"],
        ["cogenerate", "loops_only.pattern", "-o", "cg2.graph"],
        ["cogenerate", "k2.graph", "--vkeep", "v", "--ekeep", "e", "-o", "cg3.graph"],
        ["product", "k2.graph", "k2.graph", "-o", "prod.graph", "--projections"],
        ["product", "dloop.graph", "cycle2.graph", "-o", "dprod.graph"],
        ["coproduct", "l1.graph", "k2.graph", "-o", "cop.graph"],
        ["equalizer", "k2_id.hom", "k2_swap.hom", "-o", "eq.graph"],
        ["cofree", "--functor", "P12", "--vcolors", "r,g", "--ecolors", "1,2", "-o", "c.graph"],
        ["cochain", "--functor", '{"sum":["Id","P12"]}', "--vcolors", "a,b,c", "--ecolors", "x,y"],
        ["lift", "k2_rg.coloring", "-o", "lift.hom"],
        ["color", "k2_rg.coloring", "-o", "col.graph"],
        ["satisfies", "k2.graph", "edgeless.pattern"],
        ["satisfies", "arrow.graph", "loops_only.pattern"],
        ["pattern-of", "l1.graph", "k2.graph", "--vcolors", "r,g", "--ecolors", "1", "-o", "p.pattern"],
        ["closure", "l1.graph", "k2.graph", "--ops", "shc", "--max-summands", "2", "-o", "closed"],
        ["birkhoff", "l1.graph", "--universe-vertices", "2", "--universe-edges", "2",
         "--vcolors", "r,g", "--ecolors", "1,2"],
    ]
    return cmds


@pytest.mark.criterion(9, "format round-trip")
def test_format_round_trip(tmp_path, monkeypatch, capsys):
    files = sorted(GOLDEN.iterdir())
    assert len(files) == 20
    for path in files:
        assert _reemit(path) == path.read_text(), path.name

    for path in files:
        shutil.copy(path, tmp_path / path.name)
    monkeypatch.chdir(tmp_path)
    failures = []
    for argv in _commands():
        code = main(argv)
        if code != 0:
            failures.append((argv, code, capsys.readouterr().err))
    assert failures == []
    produced = [p for p in tmp_path.rglob("*") if p.suffix in (".graph", ".hom", ".pattern")]
    for p in produced:
        assert main(["validate", str(p)]) == 0, p
