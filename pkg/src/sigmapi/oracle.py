"""Ground-truth engine: equivalence-class closure, homset enumeration,
and path search in the diagram of cardinals.

Two parallel cut-free terms denote the same arrow exactly when they are
related by the permuting conversions: the tuple/cotuple distribution
laws, projection/injection commutation, the exchange of a cotuple of
tuples with a tuple of cotuples, and the unit laws (``p_i ! = !``,
``s_j ? = ?``, ``{!,!} = !``, ``<?,?> = ?``, and ``! = ?`` at ``0 -> 1``).
The closure applies every law as a bidirectional rewrite at every
position until a fixpoint; it is exponential but exact, and is the only
equality route for terms over generator objects.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterator, Optional

from .graph import EMPTY_GRAPH, GeneratorGraph
from .terms import (
    BANG,
    QUEST,
    Bang,
    Cotuple,
    GenArrow,
    Inj,
    Proj,
    Quest,
    Term,
    Tuple,
    term_sort_key,
)
from .types import (
    Gen,
    GuardExceeded,
    ObjectType,
    Prod,
    Sum,
    ONE,
    ZERO,
    format_type,
)

DEFAULT_GUARD = 10**6


@dataclass(frozen=True)
class EqClass:
    dom: ObjectType
    cod: ObjectType
    members: frozenset[Term]
    canonical: Term

    def __contains__(self, t: Term) -> bool:
        return t in self.members

    def __len__(self) -> int:
        return len(self.members)


def _root_rewrites(t: Term, dom: ObjectType, cod: ObjectType) -> Iterator[Term]:
    """One-step images of ``t`` under the permuting conversions applied at
    the root, in both directions."""
    match t:
        case Proj(i, Tuple(u, v)):
            yield Tuple(Proj(i, u), Proj(i, v))
        case Proj(i, Inj(j, u)):
            yield Inj(j, Proj(i, u))
        case Proj(_, Bang()):
            yield BANG
        case Inj(j, Cotuple(u, v)):
            yield Cotuple(Inj(j, u), Inj(j, v))
        case Inj(j, Proj(i, u)):
            yield Proj(i, Inj(j, u))
        case Inj(_, Quest()):
            yield QUEST
    match t:
        case Tuple(Proj(i1, u), Proj(i2, v)) if i1 == i2:
            yield Proj(i1, Tuple(u, v))
        case Cotuple(Inj(j1, u), Inj(j2, v)) if j1 == j2:
            yield Inj(j1, Cotuple(u, v))
    match t:
        case Cotuple(Tuple(a, b), Tuple(c, d)):
            yield Tuple(Cotuple(a, c), Cotuple(b, d))
        case Tuple(Cotuple(a, c), Cotuple(b, d)):
            yield Cotuple(Tuple(a, b), Tuple(c, d))
        case Cotuple(Bang(), Bang()):
            yield BANG
        case Tuple(Quest(), Quest()):
            yield QUEST
        case Bang():
            if isinstance(dom, Prod):
                yield Proj(0, BANG)
                yield Proj(1, BANG)
            if isinstance(dom, Sum):
                yield Cotuple(BANG, BANG)
            if dom == ZERO and cod == ONE:
                yield QUEST
        case Quest():
            if isinstance(cod, Sum):
                yield Inj(0, QUEST)
                yield Inj(1, QUEST)
            if isinstance(cod, Prod):
                yield Tuple(QUEST, QUEST)
            if dom == ZERO and cod == ONE:
                yield BANG


def neighbours(t: Term, dom: ObjectType, cod: ObjectType) -> list[Term]:
    """One-step rewrite images of ``t`` at every position."""
    out = list(_root_rewrites(t, dom, cod))
    match t:
        case Proj(i, body):
            out.extend(Proj(i, b) for b in neighbours(body, dom.component(i), cod))
        case Inj(j, body):
            out.extend(Inj(j, b) for b in neighbours(body, dom, cod.component(j)))
        case Tuple(left, right):
            out.extend(Tuple(l, right) for l in neighbours(left, dom, cod.left))
            out.extend(Tuple(left, r) for r in neighbours(right, dom, cod.right))
        case Cotuple(left, right):
            out.extend(Cotuple(l, right) for l in neighbours(left, dom.left, cod))
            out.extend(Cotuple(left, r) for r in neighbours(right, dom.right, cod))
    return out


def class_of(t: Term, dom: ObjectType, cod: ObjectType, *,
             guard: int = DEFAULT_GUARD) -> EqClass:
    """Closure of ``t`` under the permuting conversions: a worklist
    fixpoint; raises GuardExceeded past ``guard`` members."""
    seen: set[Term] = {t}
    todo: deque[Term] = deque((t,))
    while todo:
        cur = todo.popleft()
        for image in neighbours(cur, dom, cod):
            if image not in seen:
                seen.add(image)
                if len(seen) > guard:
                    raise GuardExceeded(
                        f"class closure at {format_type(dom)} -> {format_type(cod)} "
                        f"exceeded {guard} members")
                todo.append(image)
    return EqClass(dom, cod, frozenset(seen), min(seen, key=term_sort_key))


def same_class(f: Term, g: Term, dom: ObjectType, cod: ObjectType, *,
               guard: int = DEFAULT_GUARD) -> bool:
    """Whether two parallel cut-free terms are related by the permuting
    conversions.  Breadth-first from ``f`` with early exit at ``g``."""
    if f == g:
        return True
    seen: set[Term] = {f}
    todo: deque[Term] = deque((f,))
    while todo:
        cur = todo.popleft()
        for image in neighbours(cur, dom, cod):
            if image == g:
                return True
            if image not in seen:
                seen.add(image)
                if len(seen) > guard:
                    raise GuardExceeded(
                        f"class closure at {format_type(dom)} -> {format_type(cod)} "
                        f"exceeded {guard} members")
                todo.append(image)
    return False


_ENUM_CACHE: dict[tuple[ObjectType, ObjectType, GeneratorGraph], tuple[Term, ...]] = {}


def enumerate_terms(dom: ObjectType, cod: ObjectType,
                    graph: GeneratorGraph = EMPTY_GRAPH, *,
                    guard: int = DEFAULT_GUARD) -> tuple[Term, ...]:
    """Cut-free terms ``dom -> cod`` in a fixed deterministic order:
    constructors ordered ``! < ? < p0 < p1 < s0 < s1 < tuple < cotuple <
    generator path``, recursing left to right.

    Positions with domain ``0`` or codomain ``1`` are singleton homsets;
    enumeration emits only ``?`` respectively ``!`` there instead of every
    redundant expansion, so the result is a complete system of
    representatives: every equivalence class of the homset contains at
    least one enumerated term (replace subterms out of ``0`` by ``?`` and
    into ``1`` by ``!``), and the class closure supplies the remaining
    syntactic members."""
    key = (dom, cod, graph)
    out = _ENUM_CACHE.get(key)
    if out is None:
        out = _enumerate(dom, cod, graph, guard)
        _ENUM_CACHE[key] = out
    if len(out) > guard:
        raise GuardExceeded(
            f"homset {format_type(dom)} -> {format_type(cod)} exceeds guard {guard}")
    return out


def _enumerate(dom: ObjectType, cod: ObjectType, graph: GeneratorGraph,
               guard: int) -> tuple[Term, ...]:
    acc: list[Term] = []
    if cod == ONE:
        acc.append(BANG)
    if dom == ZERO:
        acc.append(QUEST)
    if acc:  # singleton homset: the unit representatives suffice
        return tuple(acc)
    if isinstance(dom, Prod):
        for i in (0, 1):
            part = dom.component(i)
            acc.extend(Proj(i, b) for b in enumerate_terms(part, cod, graph, guard=guard))
    if isinstance(cod, Sum):
        for j in (0, 1):
            part = cod.component(j)
            acc.extend(Inj(j, b) for b in enumerate_terms(dom, part, graph, guard=guard))
    if isinstance(cod, Prod):
        lefts = enumerate_terms(dom, cod.left, graph, guard=guard)
        rights = enumerate_terms(dom, cod.right, graph, guard=guard)
        acc.extend(Tuple(l, r) for l in lefts for r in rights)
    if isinstance(dom, Sum):
        lefts = enumerate_terms(dom.left, cod, graph, guard=guard)
        rights = enumerate_terms(dom.right, cod, graph, guard=guard)
        acc.extend(Cotuple(l, r) for l in lefts for r in rights)
    if isinstance(dom, Gen) and isinstance(cod, Gen):
        acc.extend(GenArrow(dom.name, path)
                   for path in graph.paths(dom.name, cod.name, guard=guard))
    if len(acc) > guard:
        raise GuardExceeded(
            f"homset {format_type(dom)} -> {format_type(cod)} exceeds guard {guard}")
    return tuple(acc)


_PARTITION_CACHE: dict = {}


def homset_classes(dom: ObjectType, cod: ObjectType,
                   graph: GeneratorGraph = EMPTY_GRAPH, *,
                   guard: int = DEFAULT_GUARD) -> tuple[tuple[EqClass, ...], dict[Term, int]]:
    """Partition of the homset into equivalence classes, plus the member
    to class-index map.  Cached; the workhorse of the oracle test sweeps."""
    key = (dom, cod, graph)
    hit = _PARTITION_CACHE.get(key)
    if hit is not None:
        return hit
    classes: list[EqClass] = []
    index: dict[Term, int] = {}
    for t in enumerate_terms(dom, cod, graph, guard=guard):
        if t in index:
            continue
        cls = class_of(t, dom, cod, guard=guard)
        idx = len(classes)
        classes.append(cls)
        for member in cls.members:
            index[member] = idx
    result = (tuple(classes), index)
    _PARTITION_CACHE[key] = result
    return result


def clear_caches() -> None:
    _ENUM_CACHE.clear()
    _PARTITION_CACHE.clear()


# -- the diagram of cardinals -------------------------------------------------

@dataclass(frozen=True)
class CardinalSquare:
    """The four objects fixing one diagram of cardinals: the corner
    homsets are ``X0*X1 -> A_j`` and ``X_i -> A0+A1``, connected through
    the side homsets ``X_i -> A_j``."""

    x0: ObjectType
    x1: ObjectType
    a0: ObjectType
    a1: ObjectType

    def x(self, i: int) -> ObjectType:
        return self.x0 if i == 0 else self.x1

    def a(self, j: int) -> ObjectType:
        return self.a0 if j == 0 else self.a1

    @property
    def dom(self) -> ObjectType:
        return Prod(self.x0, self.x1)

    @property
    def cod(self) -> ObjectType:
        return Sum(self.a0, self.a1)

    def corner_homset(self, corner: tuple[str, int]) -> tuple[ObjectType, ObjectType]:
        kind, k = corner
        if kind == "prod":
            return self.dom, self.a(k)
        if kind == "fac":
            return self.x(k), self.cod
        raise ValueError(f"bad corner {corner!r}")


@dataclass(frozen=True)
class CardinalPath:
    """A witnessing path: corner terms ``terms[k]`` sitting in diagram
    corners ``corners[k]``, adjacent ones forming an elementary pair
    through the side term ``witnesses[k]``."""

    corners: tuple[tuple[str, int], ...]
    terms: tuple[Term, ...]
    witnesses: tuple[Term, ...]

    @property
    def length(self) -> int:
        return len(self.witnesses)


def _corner_placements(square: CardinalSquare, t: Term,
                       dom: ObjectType, cod: ObjectType) -> list[tuple[tuple[str, int], Term]]:
    """Resolve a term to diagram corners.  Corner elements resolve by
    typing; an element of the full homset ``X0*X1 -> A0+A1`` resolves
    through its outermost constructor."""
    out = []
    for j in (0, 1):
        if (dom, cod) == (square.dom, square.a(j)):
            out.append((("prod", j), t))
    for i in (0, 1):
        if (dom, cod) == (square.x(i), square.cod):
            out.append((("fac", i), t))
    if (dom, cod) == (square.dom, square.cod):
        match t:
            case Inj(j, body):
                out.append((("prod", j), body))
            case Proj(i, body):
                out.append((("fac", i), body))
            case _:
                raise ValueError(
                    "a full-homset term must start with an injection or a projection")
    if not out:
        raise ValueError(f"term {t!r} : {format_type(dom)} -> {format_type(cod)} "
                         "does not fit the square")
    return out


def cardinal_path(square: CardinalSquare, f: Term, g: Term,
                  f_typing: tuple[ObjectType, ObjectType],
                  g_typing: tuple[ObjectType, ObjectType],
                  graph: GeneratorGraph = EMPTY_GRAPH, *,
                  guard: int = DEFAULT_GUARD) -> Optional[CardinalPath]:
    """Shortest path between two corner elements in the diagram of
    cardinals, or None; adjacency is the elementary-pair relation
    ``p_i h ~ s_j h`` ranging over the side homsets."""
    starts = _corner_placements(square, f, *f_typing)
    goals = _corner_placements(square, g, *g_typing)

    def node_of(corner, term):
        d, c = square.corner_homset(corner)
        _, index = homset_classes(d, c, graph, guard=guard)
        return (corner, index[term]) if term in index else None

    # adjacency: for every side term h, p_i h in corner (prod, j) meets
    # s_j h in corner (fac, i)
    adj: dict[tuple, list[tuple[tuple, Term]]] = {}
    for i in (0, 1):
        for j in (0, 1):
            side = enumerate_terms(square.x(i), square.a(j), graph, guard=guard)
            for h in side:
                u = node_of(("prod", j), Proj(i, h))
                v = node_of(("fac", i), Inj(j, h))
                adj.setdefault(u, []).append((v, h))
                adj.setdefault(v, []).append((u, h))

    start_nodes = {}
    for corner, term in starts:
        n = node_of(corner, term)
        start_nodes.setdefault(n, (corner, term))
    goal_nodes = {}
    for corner, term in goals:
        n = node_of(corner, term)
        goal_nodes.setdefault(n, (corner, term))

    prev: dict[tuple, Optional[tuple]] = {n: None for n in start_nodes}
    via: dict[tuple, Term] = {}
    queue = deque(start_nodes)
    hit = None
    for n in start_nodes:
        if n in goal_nodes:
            hit = n
            break
    while queue and hit is None:
        cur = queue.popleft()
        for nxt, h in adj.get(cur, ()):
            if nxt in prev:
                continue
            prev[nxt] = cur
            via[nxt] = h
            if nxt in goal_nodes:
                hit = nxt
                queue.clear()
                break
            queue.append(nxt)
    if hit is None:
        return None

    nodes = [hit]
    while prev[nodes[-1]] is not None:
        nodes.append(prev[nodes[-1]])
    nodes.reverse()

    def representative(node):
        corner, idx = node
        d, c = square.corner_homset(corner)
        classes, _ = homset_classes(d, c, graph, guard=guard)
        return classes[idx].canonical

    corners = tuple(n[0] for n in nodes)
    terms = tuple(
        start_nodes[n][1] if n in start_nodes and k == 0
        else (goal_nodes[n][1] if n in goal_nodes and k == len(nodes) - 1
              else representative(n))
        for k, n in enumerate(nodes)
    )
    witnesses = tuple(via[n] for n in nodes[1:])
    return CardinalPath(corners, terms, witnesses)


def find_bouncers(square: CardinalSquare, i: int, j: int, a0: Term, a2: Term,
                  graph: GeneratorGraph = EMPTY_GRAPH, *,
                  guard: int = DEFAULT_GUARD) -> tuple[Term, ...]:
    """All side terms ``h : X_i -> A_j`` bouncing ``a0`` to ``a2``, i.e.
    with ``p_i h == p_i a0`` and ``s_j h == s_j a2`` up to conversion."""
    from .terms import infer

    side_dom, side_cod = square.x(i), square.a(j)
    infer(a0, side_dom, side_cod, graph)
    infer(a2, side_dom, side_cod, graph)
    out = []
    for h in enumerate_terms(side_dom, side_cod, graph, guard=guard):
        if not same_class(Proj(i, h), Proj(i, a0), square.dom, side_cod, guard=guard):
            continue
        if same_class(Inj(j, h), Inj(j, a2), side_dom, square.cod, guard=guard):
            out.append(h)
    return tuple(out)
