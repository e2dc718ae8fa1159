"""Type-functor expressions over finite sets and their elements.

A :class:`FunctorExpr` names an endofunctor ``F`` on finite sets built from
identity, constants, binary products and sums, the singleton-or-pair
functor ``P12``, the finite powerset ``Pow`` and composition.  Elements of
``F(V)`` are :class:`FElem` trees whose leaves at identity positions are
:class:`Atom` values drawn from ``V``.
"""

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from math import comb

from . import guard
from .errors import IllTypedElement
from .finset import FinSet


# -- functor expressions -----------------------------------------------------


class FunctorExpr:
    __slots__ = ()


@dataclass(frozen=True)
class Id(FunctorExpr):
    def __repr__(self):
        return "Id"


@dataclass(frozen=True)
class P12(FunctorExpr):
    def __repr__(self):
        return "P12"


@dataclass(frozen=True)
class Pow(FunctorExpr):
    def __repr__(self):
        return "Pow"


@dataclass(frozen=True)
class Const(FunctorExpr):
    values: FinSet

    def __repr__(self):
        return f"Const({self.values!r})"


@dataclass(frozen=True)
class Prod(FunctorExpr):
    left: FunctorExpr
    right: FunctorExpr

    def __repr__(self):
        return f"Prod({self.left!r}, {self.right!r})"


@dataclass(frozen=True)
class Sum(FunctorExpr):
    left: FunctorExpr
    right: FunctorExpr

    def __repr__(self):
        return f"Sum({self.left!r}, {self.right!r})"


@dataclass(frozen=True)
class Comp(FunctorExpr):
    """``Comp(outer, inner)(V) = outer(inner(V))``."""

    outer: FunctorExpr
    inner: FunctorExpr

    def __repr__(self):
        return f"Comp({self.outer!r}, {self.inner!r})"


# -- elements ----------------------------------------------------------------


class FElem:
    @cached_property
    def sort_key(self):
        return _key(self)

    def __lt__(self, other):
        return self.sort_key < other.sort_key

    def __str__(self):
        return encode(self)


@dataclass(frozen=True)
class Atom(FElem):
    name: str


@dataclass(frozen=True)
class Pair(FElem):
    left: FElem
    right: FElem


@dataclass(frozen=True)
class Inl(FElem):
    value: FElem


@dataclass(frozen=True)
class Inr(FElem):
    value: FElem


@dataclass(frozen=True)
class SetOf(FElem):
    """Finite set of elements; stored sorted by canonical key, duplicates dropped."""

    members: tuple = ()

    def __post_init__(self):
        uniq = {m: None for m in self.members}
        object.__setattr__(self, "members", tuple(sorted(uniq, key=_key)))


@dataclass(frozen=True)
class ConstVal(FElem):
    value: str


@dataclass(frozen=True)
class Unit(FElem):
    pass


def _key(e):
    # nested tuples compare like the prefix token stream of the tree
    if isinstance(e, Atom):
        return (0, e.name)
    if isinstance(e, Pair):
        return (1, e.left.sort_key, e.right.sort_key)
    if isinstance(e, Inl):
        return (2, e.value.sort_key)
    if isinstance(e, Inr):
        return (3, e.value.sort_key)
    if isinstance(e, SetOf):
        return (4, tuple(m.sort_key for m in e.members))
    if isinstance(e, ConstVal):
        return (5, e.value)
    if isinstance(e, Unit):
        return (6,)
    raise TypeError(f"not an FElem: {e!r}")


def encode(e):
    """Human-readable text of an element, e.g. ``(1,{g,r})``.

    Injective on the elements of any single ``F(V)`` as long as atoms avoid
    the characters ``(),{}``.
    """
    if isinstance(e, Atom):
        return e.name
    if isinstance(e, Pair):
        return f"({encode(e.left)},{encode(e.right)})"
    if isinstance(e, Inl):
        return f"inl({encode(e.value)})"
    if isinstance(e, Inr):
        return f"inr({encode(e.value)})"
    if isinstance(e, SetOf):
        return "{" + ",".join(encode(m) for m in e.members) + "}"
    if isinstance(e, ConstVal):
        return e.value
    if isinstance(e, Unit):
        return "unit"
    raise TypeError(f"not an FElem: {e!r}")


# -- object action -----------------------------------------------------------


def size(f, n):
    """``|F(V)|`` for ``|V| = n`` without enumerating."""
    if isinstance(f, Id):
        return n
    if isinstance(f, Const):
        return len(f.values)
    if isinstance(f, P12):
        return n + comb(n, 2)
    if isinstance(f, Pow):
        return 2**n
    if isinstance(f, Prod):
        return size(f.left, n) * size(f.right, n)
    if isinstance(f, Sum):
        return size(f.left, n) + size(f.right, n)
    if isinstance(f, Comp):
        return size(f.outer, size(f.inner, n))
    raise TypeError(f"not a FunctorExpr: {f!r}")


def _guarded(f, n, limit):
    # intermediate results of Comp are checked too
    if isinstance(f, Comp):
        _guarded(f.inner, n, limit)
        _guarded(f.outer, size(f.inner, n), limit)
    elif isinstance(f, (Prod, Sum)):
        _guarded(f.left, n, limit)
        _guarded(f.right, n, limit)
    elif isinstance(f, Pow):
        guard.check(f"Pow over {n} elements", 2**n, limit)
    guard.check(f"enumerating {f!r}", size(f, n), limit)


def _enumerate(f, base):
    if isinstance(f, Id):
        return list(base)
    if isinstance(f, Const):
        return [ConstVal(c) for c in f.values]
    if isinstance(f, P12):
        out = [SetOf((x,)) for x in base]
        out += [SetOf(pair) for pair in combinations(base, 2)]
        return sorted(out, key=_key)
    if isinstance(f, Pow):
        out = [SetOf(sub) for k in range(len(base) + 1) for sub in combinations(base, k)]
        return sorted(out, key=_key)
    if isinstance(f, Prod):
        lefts = _enumerate(f.left, base)
        rights = _enumerate(f.right, base)
        return [Pair(a, b) for a in lefts for b in rights]
    if isinstance(f, Sum):
        return [Inl(a) for a in _enumerate(f.left, base)] + [
            Inr(b) for b in _enumerate(f.right, base)
        ]
    if isinstance(f, Comp):
        return _enumerate(f.outer, _enumerate(f.inner, base))
    raise TypeError(f"not a FunctorExpr: {f!r}")


def apply_obj(f, v, limit=None):
    """All elements of ``F(v)`` in canonical order."""
    _guarded(f, len(v), limit)
    base = [Atom(a) for a in v]
    return sorted(_enumerate(f, base), key=_key)


# -- typing ------------------------------------------------------------------


def _check(f, leaf_ok, s):
    if isinstance(f, Id):
        return leaf_ok(s)
    if isinstance(f, Const):
        return isinstance(s, ConstVal) and s.value in f.values
    if isinstance(f, (P12, Pow)):
        if not isinstance(s, SetOf):
            return False
        if isinstance(f, P12) and len(s.members) not in (1, 2):
            return False
        return all(leaf_ok(m) for m in s.members)
    if isinstance(f, Prod):
        return (
            isinstance(s, Pair)
            and _check(f.left, leaf_ok, s.left)
            and _check(f.right, leaf_ok, s.right)
        )
    if isinstance(f, Sum):
        if isinstance(s, Inl):
            return _check(f.left, leaf_ok, s.value)
        if isinstance(s, Inr):
            return _check(f.right, leaf_ok, s.value)
        return False
    if isinstance(f, Comp):
        return _check(f.outer, lambda x: _check(f.inner, leaf_ok, x), s)
    raise TypeError(f"not a FunctorExpr: {f!r}")


def elem_check(f, v, s):
    """True iff ``s`` is an element of ``F(v)``."""
    return _check(f, lambda x: isinstance(x, Atom) and x.name in v, s)


def _well_shaped(f, s):
    return _check(f, lambda x: isinstance(x, Atom), s)


# -- morphism action ---------------------------------------------------------


def fmap(f, leaf, s):
    """Rebuild ``s`` with every identity-position leaf replaced by ``leaf(x)``.

    Sets are re-canonicalized, so a pair whose members collide collapses to a
    singleton.
    """
    if isinstance(f, Id):
        return leaf(s)
    if isinstance(f, Const):
        return s
    if isinstance(f, (P12, Pow)):
        return SetOf(tuple(leaf(m) for m in s.members))
    if isinstance(f, Prod):
        return Pair(fmap(f.left, leaf, s.left), fmap(f.right, leaf, s.right))
    if isinstance(f, Sum):
        if isinstance(s, Inl):
            return Inl(fmap(f.left, leaf, s.value))
        return Inr(fmap(f.right, leaf, s.value))
    if isinstance(f, Comp):
        return fmap(f.outer, lambda x: fmap(f.inner, leaf, x), s)
    raise TypeError(f"not a FunctorExpr: {f!r}")


def apply_mor(f, m, s):
    """``F(m)(s)`` for a finite function ``m``."""
    if not elem_check(f, m.dom, s):
        raise IllTypedElement(f"{encode(s)} is not in {f!r} over {m.dom!r}")
    return fmap(f, lambda x: Atom(m(x.name)), s)


def support(f, s):
    """Smallest vertex set ``V'`` with ``s`` in ``F(V')``."""
    if not _well_shaped(f, s):
        raise IllTypedElement(f"{encode(s)} does not have the shape of {f!r}")
    found = set()

    def harvest(x):
        found.add(x.name)
        return x

    fmap(f, harvest, s)
    return FinSet(tuple(found))
