"""Finite graphs as coalgebras for ``(V, E) -> (1, F V)`` over Set x Set."""

from .constructions import (
    ColorSet,
    Coloring,
    cofree_cochain,
    cofree_graph,
    colored_graph,
    coproduct_graphs,
    equalizer_graphs,
    lift_coloring,
    product_graphs,
    restrict_along_counit,
    terminal_graph,
)
from .covariety import (
    GraphClass,
    Pattern,
    birkhoff_check,
    closure_H,
    closure_S,
    closure_Sigma,
    cogenerated_by_pattern,
    enumerate_graphs,
    graphs_of_pattern,
    pattern_of_class,
    satisfies,
)
from .finset import FinFunction, FinSet, SetPair, coproduct, equalizer, product, pullback
from .functor import (
    Atom,
    Comp,
    Const,
    ConstVal,
    FElem,
    FunctorExpr,
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
    apply_mor,
    apply_obj,
    elem_check,
    support,
)
from .graph import (
    FGraph,
    GraphHom,
    SubgraphSpec,
    enumerate_homs,
    enumerate_subgraphs,
    image_factorization,
    is_isomorphism,
    largest_subcoalgebra,
    validate_graph,
    validate_hom,
)
