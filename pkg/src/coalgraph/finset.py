"""Finite sets of string atoms, total functions between them, and the
elementary limits and colimits in Set used by the graph layer."""

from dataclasses import dataclass
from itertools import product as _cartesian

from .errors import CodomainMismatch, DomainMismatch, InvalidFunction

TERMINAL_ATOM = "*"


def pair_atom(x, y):
    return f"({x},{y})"


def tag_atom(i, x):
    return f"{i}:{x}"


@dataclass(frozen=True)
class FinSet:
    """Duplicate-free, lexicographically ordered tuple of atoms."""

    elements: tuple = ()

    def __post_init__(self):
        elems = tuple(sorted(set(self.elements)))
        if not all(isinstance(a, str) for a in elems):
            raise TypeError("FinSet atoms must be strings")
        object.__setattr__(self, "elements", elems)
        object.__setattr__(self, "_members", frozenset(elems))

    @classmethod
    def of(cls, *atoms):
        if len(atoms) == 1 and not isinstance(atoms[0], str):
            atoms = tuple(atoms[0])
        return cls(tuple(atoms))

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, atom):
        return atom in self._members

    def issubset(self, other):
        return self._members <= other._members

    def __repr__(self):
        return "{" + ", ".join(self.elements) + "}"


TERMINAL = FinSet.of(TERMINAL_ATOM)


class FinFunction:
    """A total function ``dom -> cod`` given by an explicit table."""

    __slots__ = ("dom", "cod", "_table")

    def __init__(self, dom, cod, table):
        table = dict(table)
        missing = [x for x in dom if x not in table]
        if missing:
            raise InvalidFunction(f"no value for {missing}")
        extra = [x for x in table if x not in dom]
        if extra:
            raise InvalidFunction(f"{extra} not in domain")
        outside = [(x, y) for x, y in table.items() if y not in cod]
        if outside:
            raise InvalidFunction(f"values outside codomain: {outside}")
        self.dom = dom
        self.cod = cod
        self._table = {x: table[x] for x in dom}

    @classmethod
    def identity(cls, s):
        return cls(s, s, {x: x for x in s})

    @classmethod
    def constant(cls, dom, cod, value):
        return cls(dom, cod, {x: value for x in dom})

    @classmethod
    def to_terminal(cls, s):
        return cls.constant(s, TERMINAL, TERMINAL_ATOM)

    @classmethod
    def inclusion(cls, sub, s):
        return cls(sub, s, {x: x for x in sub})

    @property
    def table(self):
        return dict(self._table)

    def items(self):
        return self._table.items()

    def __call__(self, x):
        return self._table[x]

    def then(self, other):
        """``other ∘ self``."""
        if self.cod != other.dom:
            raise DomainMismatch("cannot compose: codomain/domain differ")
        return FinFunction(self.dom, other.cod, {x: other(y) for x, y in self.items()})

    def image(self):
        return FinSet(tuple(self._table.values()))

    def is_injective(self):
        return len(set(self._table.values())) == len(self.dom)

    def is_surjective(self):
        return set(self._table.values()) == set(self.cod)

    def is_bijective(self):
        return self.is_injective() and self.is_surjective()

    def inverse(self):
        if not self.is_bijective():
            raise InvalidFunction("only bijections have inverses")
        return FinFunction(self.cod, self.dom, {y: x for x, y in self.items()})

    def restrict(self, sub):
        return FinFunction(sub, self.cod, {x: self._table[x] for x in sub})

    def key(self):
        return tuple(self._table[x] for x in self.dom)

    def __eq__(self, other):
        if not isinstance(other, FinFunction):
            return NotImplemented
        return self.dom == other.dom and self.cod == other.cod and self._table == other._table

    def __hash__(self):
        return hash((self.dom, self.cod, self.key()))

    def __repr__(self):
        body = ", ".join(f"{x}->{y}" for x, y in self.items())
        return f"FinFunction({body})"


def compose(g, f):
    """``g ∘ f``."""
    return f.then(g)


@dataclass(frozen=True)
class SetPair:
    first: FinSet
    second: FinSet

    def sizes(self):
        return (len(self.first), len(self.second))


def all_functions(dom, cod):
    """Every function ``dom -> cod``, ordered lexicographically by value tuple."""
    for values in _cartesian(cod.elements, repeat=len(dom)):
        yield FinFunction(dom, cod, zip(dom.elements, values))


def product(a, b):
    """Cartesian product with atoms ``(x,y)`` and both projections."""
    pairs = {pair_atom(x, y): (x, y) for x in a for y in b}
    p = FinSet(tuple(pairs))
    left = FinFunction(p, a, {k: xy[0] for k, xy in pairs.items()})
    right = FinFunction(p, b, {k: xy[1] for k, xy in pairs.items()})
    return p, left, right


def coproduct(a, b):
    """Disjoint union with atoms tagged ``0:x`` / ``1:y`` and both injections."""
    s = FinSet(tuple(tag_atom(0, x) for x in a) + tuple(tag_atom(1, y) for y in b))
    inl = FinFunction(a, s, {x: tag_atom(0, x) for x in a})
    inr = FinFunction(b, s, {y: tag_atom(1, y) for y in b})
    return s, inl, inr


def equalizer(f, g):
    if f.dom != g.dom or f.cod != g.cod:
        raise DomainMismatch("equalizer needs parallel functions")
    sub = FinSet(tuple(x for x in f.dom if f(x) == g(x)))
    return sub, FinFunction.inclusion(sub, f.dom)


def pullback(f, g):
    """Pullback of ``f: A -> C`` and ``g: B -> C``.

    Returns the set of agreeing pairs ``(x,y)`` together with the leg into
    ``A`` and the leg into ``B``.
    """
    if f.cod != g.cod:
        raise CodomainMismatch("pullback needs a common codomain")
    pairs = {pair_atom(x, y): (x, y) for x in f.dom for y in g.dom if f(x) == g(y)}
    p = FinSet(tuple(pairs))
    to_a = FinFunction(p, f.dom, {k: xy[0] for k, xy in pairs.items()})
    to_b = FinFunction(p, g.dom, {k: xy[1] for k, xy in pairs.items()})
    return p, to_a, to_b
