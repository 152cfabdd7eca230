"""Pointedness/copointedness annotation of terms, with witnesses.

A term is *pointed* when it factors through a point ``1 -> cod`` and
*copointed* when it factors through a copoint ``dom -> 0``; a term that
is both is the unique *disconnect* of its homset.  One bottom-up pass
computes both bits and a witness for each at every node.

Point witnesses are kept in canonical form (built from ``!``, injections
and tuples only); such terms are the sole members of their equivalence
classes, so witness agreement at a cotuple node is plain structural
equality.  Copoint witnesses are dual.  Two facts shape the rules:

* a disconnect factors through *every* point of its codomain and every
  copoint of its domain, so agreement checks may skip a component that
  is itself copointed (dually pointed);
* an injection ``s_j t`` whose body is copointed is pointed as soon as
  the codomain has a point at all, because a copointed arrow into a
  pointed object is the disconnect (dually for projections).
"""

from __future__ import annotations

from functools import lru_cache
from typing import Optional

from .compose import compose
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
    TypedTerm,
)
from .types import (
    Gen,
    ObjectType,
    One,
    Prod,
    Sum,
    Zero,
    ONE,
    ZERO,
    type_copointed,
    type_pointed,
)


@lru_cache(maxsize=None)
def point_of(t: ObjectType) -> Optional[Term]:
    """A canonical point ``1 -> t``, or None; injections prefer index 0."""
    match t:
        case One():
            return BANG
        case Zero() | Gen():
            return None
        case Prod(left, right):
            l, r = point_of(left), point_of(right)
            return Tuple(l, r) if l is not None and r is not None else None
        case Sum(left, right):
            l = point_of(left)
            if l is not None:
                return Inj(0, l)
            r = point_of(right)
            return Inj(1, r) if r is not None else None
    raise TypeError(f"not a type: {t!r}")


@lru_cache(maxsize=None)
def copoint_of(t: ObjectType) -> Optional[Term]:
    """A canonical copoint ``t -> 0``, or None; projections prefer index 0."""
    match t:
        case Zero():
            return QUEST
        case One() | Gen():
            return None
        case Sum(left, right):
            l, r = copoint_of(left), copoint_of(right)
            return Cotuple(l, r) if l is not None and r is not None else None
        case Prod(left, right):
            l = copoint_of(left)
            if l is not None:
                return Proj(0, l)
            r = copoint_of(right)
            return Proj(1, r) if r is not None else None
    raise TypeError(f"not a type: {t!r}")


def disconnect(dom: ObjectType, cod: ObjectType) -> Optional[Term]:
    """The unique pointed-and-copointed arrow ``dom -> cod`` when it
    exists (dom copointed, cod pointed), as a cut-free term."""
    c = copoint_of(dom)
    if c is None or not type_pointed(cod):
        return None
    return compose(c, QUEST)


class Annotation:
    __slots__ = ("pointed", "copointed", "point_witness", "copoint_witness")

    def __init__(self, pointed, copointed, point_witness, copoint_witness):
        self.pointed = pointed
        self.copointed = copointed
        self.point_witness = point_witness
        self.copoint_witness = copoint_witness

    @property
    def definite(self) -> bool:
        return not (self.pointed or self.copointed)

    @property
    def is_disconnect(self) -> bool:
        return self.pointed and self.copointed

    def __repr__(self):
        return (f"Annotation(pointed={self.pointed}, copointed={self.copointed}, "
                f"point_witness={self.point_witness!r}, copoint_witness={self.copoint_witness!r})")


class AnnotatedTerm:
    __slots__ = ("term", "dom", "cod", "ann", "children")

    def __init__(self, term, dom, cod, ann, children):
        self.term = term
        self.dom = dom
        self.cod = cod
        self.ann = ann
        self.children = children

    def __str__(self) -> str:
        return str(TypedTerm(self.term, self.dom, self.cod))

    def __repr__(self) -> str:
        return f"AnnotatedTerm({self.term!r} : {self.dom!r} -> {self.cod!r}, {self.ann!r})"


class VisitCounter:
    """Counts node visits; used to assert the linearity claims."""

    __slots__ = ("visits",)

    def __init__(self):
        self.visits = 0

    def tick(self):
        self.visits += 1


def _make(term, dom, cod, pointed, copointed, p_wit, c_wit, children):
    assert pointed == (p_wit is not None) and copointed == (c_wit is not None)
    return AnnotatedTerm(term, dom, cod, Annotation(pointed, copointed, p_wit, c_wit), children)


def ann_bang(dom: ObjectType) -> AnnotatedTerm:
    c = copoint_of(dom)
    return _make(BANG, dom, ONE, True, c is not None, BANG, c, ())


def ann_quest(cod: ObjectType) -> AnnotatedTerm:
    p = point_of(cod)
    return _make(QUEST, ZERO, cod, p is not None, True, p, QUEST, ())


def ann_genarrow(t: GenArrow, dom: ObjectType, cod: ObjectType) -> AnnotatedTerm:
    return _make(t, dom, cod, False, False, None, None, ())


def ann_inj(j: int, body: AnnotatedTerm, cod: Sum) -> AnnotatedTerm:
    a = body.ann
    copointed = a.copointed
    if a.pointed and not copointed:
        p_wit = Inj(j, a.point_witness)
        pointed = True
    elif copointed and type_pointed(cod):
        p_wit = point_of(cod)  # disconnect: any point serves
        pointed = True
    else:
        p_wit, pointed = None, False
    return _make(Inj(j, body.term), body.dom, cod, pointed, copointed,
                 p_wit, a.copoint_witness, (body,))


def ann_proj(i: int, body: AnnotatedTerm, dom: Prod) -> AnnotatedTerm:
    a = body.ann
    pointed = a.pointed
    if a.copointed and not pointed:
        c_wit = Proj(i, a.copoint_witness)
        copointed = True
    elif pointed and type_copointed(dom):
        c_wit = copoint_of(dom)  # disconnect: any copoint serves
        copointed = True
    else:
        c_wit, copointed = None, False
    return _make(Proj(i, body.term), dom, body.cod, pointed, copointed,
                 a.point_witness, c_wit, (body,))


def ann_tuple(left: AnnotatedTerm, right: AnnotatedTerm) -> AnnotatedTerm:
    la, ra = left.ann, right.ann
    cod = Prod(left.cod, right.cod)
    pointed = la.pointed and ra.pointed
    p_wit = Tuple(la.point_witness, ra.point_witness) if pointed else None
    # a common copoint must exist; a pointed (hence disconnect) component
    # accepts any copoint of the domain
    copointed = (la.copointed and ra.copointed
                 and (la.pointed or ra.pointed
                      or la.copoint_witness == ra.copoint_witness))
    if not copointed:
        c_wit = None
    elif not la.pointed:
        c_wit = la.copoint_witness
    elif not ra.pointed:
        c_wit = ra.copoint_witness
    else:
        c_wit = copoint_of(left.dom)
    return _make(Tuple(left.term, right.term), left.dom, cod, pointed, copointed,
                 p_wit, c_wit, (left, right))


def ann_cotuple(left: AnnotatedTerm, right: AnnotatedTerm) -> AnnotatedTerm:
    la, ra = left.ann, right.ann
    dom = Sum(left.dom, right.dom)
    copointed = la.copointed and ra.copointed
    c_wit = Cotuple(la.copoint_witness, ra.copoint_witness) if copointed else None
    pointed = (la.pointed and ra.pointed
               and (la.copointed or ra.copointed
                    or la.point_witness == ra.point_witness))
    if not pointed:
        p_wit = None
    elif not la.copointed:
        p_wit = la.point_witness
    elif not ra.copointed:
        p_wit = ra.point_witness
    else:
        p_wit = point_of(left.cod)
    return _make(Cotuple(left.term, right.term), dom, left.cod, pointed, copointed,
                 p_wit, c_wit, (left, right))


def annotate(t: Term, dom: ObjectType, cod: ObjectType,
             counter: Optional[VisitCounter] = None) -> AnnotatedTerm:
    """Annotate every node of a typed cut-free term in one bottom-up pass."""
    if counter is not None:
        counter.tick()
    match t:
        case Bang():
            return ann_bang(dom)
        case Quest():
            return ann_quest(cod)
        case GenArrow():
            return ann_genarrow(t, dom, cod)
        case Proj(i, body):
            assert isinstance(dom, Prod)
            return ann_proj(i, annotate(body, dom.component(i), cod, counter), dom)
        case Inj(j, body):
            assert isinstance(cod, Sum)
            return ann_inj(j, annotate(body, dom, cod.component(j), counter), cod)
        case Tuple(left, right):
            assert isinstance(cod, Prod)
            return ann_tuple(annotate(left, dom, cod.left, counter),
                             annotate(right, dom, cod.right, counter))
        case Cotuple(left, right):
            assert isinstance(dom, Sum)
            return ann_cotuple(annotate(left, dom.left, cod, counter),
                               annotate(right, dom.right, cod, counter))
    raise ValueError(f"annotate: not a cut-free term: {t!r}")


def annotate_typed(tt: TypedTerm, counter: Optional[VisitCounter] = None) -> AnnotatedTerm:
    return annotate(tt.term, tt.dom, tt.cod, counter)
