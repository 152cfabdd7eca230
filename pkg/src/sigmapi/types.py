"""Objects of the free sum/product term calculus.

Types are finite trees built from the initial object ``0``, the terminal
object ``1``, named generator objects, binary sums and binary products.
Nodes are hash-consed: constructing a type twice yields the same object,
so equality is identity and hashing is constant-time.  Treat instances
as immutable.
"""

from __future__ import annotations

from functools import lru_cache
from typing import NamedTuple


class GuardExceeded(RuntimeError):
    """An exhaustive computation would exceed its resource guard."""


_INTERN: dict = {}


def _intern(cls, *fields):
    key = (cls, *fields)
    node = _INTERN.get(key)
    if node is None:
        node = object.__new__(cls)
        for name, value in zip(cls.__slots__, fields):
            object.__setattr__(node, name, value)
        # setdefault is atomic under the GIL: concurrent constructors of
        # the same node converge on a single canonical object
        node = _INTERN.setdefault(key, node)
    return node


class ObjectType:
    __slots__ = ()
    __hash__ = object.__hash__

    def __eq__(self, other):
        return self is other

    def __ne__(self, other):
        return self is not other

    def __add__(self, other: "ObjectType") -> "Sum":
        return Sum(self, other)

    def __mul__(self, other: "ObjectType") -> "Prod":
        return Prod(self, other)

    def __repr__(self) -> str:
        return format_type(self)


class Zero(ObjectType):
    __slots__ = ()
    __match_args__ = ()
    __hash__ = object.__hash__

    def __new__(cls):
        return _intern(cls)


class One(ObjectType):
    __slots__ = ()
    __match_args__ = ()
    __hash__ = object.__hash__

    def __new__(cls):
        return _intern(cls)


class Gen(ObjectType):
    __slots__ = ("name",)
    __match_args__ = ("name",)
    __hash__ = object.__hash__

    def __new__(cls, name: str):
        return _intern(cls, name)


class Sum(ObjectType):
    __slots__ = ("left", "right")
    __match_args__ = ("left", "right")
    __hash__ = object.__hash__

    def __new__(cls, left: ObjectType, right: ObjectType):
        return _intern(cls, left, right)

    def component(self, index: int) -> ObjectType:
        return self.left if index == 0 else self.right


class Prod(ObjectType):
    __slots__ = ("left", "right")
    __match_args__ = ("left", "right")
    __hash__ = object.__hash__

    def __new__(cls, left: ObjectType, right: ObjectType):
        return _intern(cls, left, right)

    def component(self, index: int) -> ObjectType:
        return self.left if index == 0 else self.right


ZERO = Zero()
ONE = One()


class TypeMetrics(NamedTuple):
    size: int
    height: int


@lru_cache(maxsize=None)
def metrics(t: ObjectType) -> TypeMetrics:
    """Node count and height of a type tree.

    Generators count as leaves (size 1, height 1) so the metrics stay
    defined in the presence of generator objects; the size/height bounds
    on terms are only asserted for the generator-free fragment.
    """
    match t:
        case Zero() | One() | Gen():
            return TypeMetrics(1, 1)
        case Sum(left, right) | Prod(left, right):
            l, r = metrics(left), metrics(right)
            return TypeMetrics(1 + l.size + r.size, 1 + max(l.height, r.height))
    raise TypeError(f"not a type: {t!r}")


@lru_cache(maxsize=None)
def type_pointed(t: ObjectType) -> bool:
    """Whether the homset from ``1`` into ``t`` is inhabited.

    Generators are atomic: there is no map from the empty product into a
    generator object, hence they are not pointed.
    """
    match t:
        case One():
            return True
        case Zero() | Gen():
            return False
        case Prod(left, right):
            return type_pointed(left) and type_pointed(right)
        case Sum(left, right):
            return type_pointed(left) or type_pointed(right)
    raise TypeError(f"not a type: {t!r}")


@lru_cache(maxsize=None)
def type_copointed(t: ObjectType) -> bool:
    """Whether the homset from ``t`` into ``0`` is inhabited (dual of pointed)."""
    match t:
        case Zero():
            return True
        case One() | Gen():
            return False
        case Prod(left, right):
            return type_copointed(left) or type_copointed(right)
        case Sum(left, right):
            return type_copointed(left) and type_copointed(right)
    raise TypeError(f"not a type: {t!r}")


@lru_cache(maxsize=None)
def contains_gen(t: ObjectType) -> bool:
    match t:
        case Gen():
            return True
        case Sum(left, right) | Prod(left, right):
            return contains_gen(left) or contains_gen(right)
        case _:
            return False


@lru_cache(maxsize=None)
def gen_names(t: ObjectType) -> frozenset[str]:
    match t:
        case Gen(name):
            return frozenset((name,))
        case Sum(left, right) | Prod(left, right):
            return gen_names(left) | gen_names(right)
        case _:
            return frozenset()


def format_type(t: ObjectType) -> str:
    """Render a type in the surface syntax: ``*`` binds tighter than ``+``,
    both right-associative, parentheses where needed."""
    return _fmt_sum(t)


def _fmt_sum(t: ObjectType) -> str:
    if isinstance(t, Sum):
        left = _fmt_prod(t.left)
        return f"{left} + {_fmt_sum(t.right)}"
    return _fmt_prod(t)


def _fmt_prod(t: ObjectType) -> str:
    if isinstance(t, Prod):
        return f"{_fmt_atom(t.left)} * {_fmt_prod(t.right)}"
    return _fmt_atom(t)


def _fmt_atom(t: ObjectType) -> str:
    match t:
        case Zero():
            return "0"
        case One():
            return "1"
        case Gen(name):
            return name
        case _:
            return f"({_fmt_sum(t)})"


def iter_types(max_size: int, atoms: tuple[ObjectType, ...] = (ZERO, ONE)):
    """Yield every type over the given atoms with size <= max_size.

    Deterministic order: by size, then structurally.  Used by the test
    sweeps; sizes of sum/product trees over unit atoms are always odd.
    """
    by_size: dict[int, list[ObjectType]] = {1: list(atoms)}
    yield from by_size[1]
    for size in range(2, max_size + 1):
        acc: list[ObjectType] = []
        for left_size in range(1, size - 1):
            right_size = size - 1 - left_size
            if right_size < 1:
                continue
            for left in by_size.get(left_size, ()):
                for right in by_size.get(right_size, ()):
                    acc.append(Sum(left, right))
                    acc.append(Prod(left, right))
        by_size[size] = acc
        yield from acc
