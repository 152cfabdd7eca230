"""Polynomial-time equality of parallel cut-free terms (generator-free).

``equal`` recurses on the typing: singleton homsets are immediate, sum
domains and product codomains decompose componentwise, points and
copoints compare syntactically, indefinite maps compare through their
witnesses, and definite maps between a product and a sum are resolved
through their four possible factorizations, with ``equivalent`` deciding
the mixed projection-versus-injection case by a trivial-bouncer search.

Terms whose domain or codomain mention generator objects are answered
``RequiresOracle``; only the exponential oracle decides those.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Union

from .annotate import (
    AnnotatedTerm,
    VisitCounter,
    ann_bang,
    ann_cotuple,
    ann_inj,
    ann_proj,
    ann_quest,
    ann_tuple,
    annotate,
)
from .factor import factor_inj, factor_proj
from .terms import Bang, Cotuple, Inj, Proj, Quest, Term, Tuple
from .types import ObjectType, Prod, Sum, ONE, ZERO, contains_gen, type_pointed


# -- verdicts ---------------------------------------------------------------

@dataclass(frozen=True)
class Disconnect:
    term: Term


@dataclass(frozen=True)
class SharedPoint:
    term: Term


@dataclass(frozen=True)
class SharedCopoint:
    term: Term


@dataclass(frozen=True)
class Bouncer:
    term: Term


@dataclass(frozen=True)
class SyntacticRecursion:
    pass


Witness = Union[Disconnect, SharedPoint, SharedCopoint, Bouncer, SyntacticRecursion]


@dataclass(frozen=True)
class Equal:
    witness: Optional[Witness] = None


@dataclass(frozen=True)
class NotEqual:
    reason: str


@dataclass(frozen=True)
class RequiresOracle:
    reason: str = "generator objects present"


Verdict = Union[Equal, NotEqual, RequiresOracle]


@dataclass
class Stats:
    calls: int = 0
    counter: VisitCounter = field(default_factory=VisitCounter)

    @property
    def steps(self) -> int:
        return self.calls + self.counter.visits


# -- componentwise decompositions (linear, annotation-maintaining) ----------

def restrict_dom(f: AnnotatedTerm, k: int, counter: Optional[VisitCounter] = None) -> AnnotatedTerm:
    """Cut-eliminated composite of the k-th domain injection with ``f``."""
    assert isinstance(f.dom, Sum)
    if counter is not None:
        counter.tick()
    part = f.dom.component(k)
    match f.term:
        case Cotuple():
            return f.children[k]
        case Inj(j, _):
            assert isinstance(f.cod, Sum)
            return ann_inj(j, restrict_dom(f.children[0], k, counter), f.cod)
        case Tuple():
            return ann_tuple(restrict_dom(f.children[0], k, counter),
                             restrict_dom(f.children[1], k, counter))
        case Bang():
            return ann_bang(part)
    raise ValueError(f"restrict_dom: unexpected shape {f.term!r}")


def restrict_cod(f: AnnotatedTerm, k: int, counter: Optional[VisitCounter] = None) -> AnnotatedTerm:
    """Cut-eliminated composite of ``f`` with the k-th codomain projection."""
    assert isinstance(f.cod, Prod)
    if counter is not None:
        counter.tick()
    part = f.cod.component(k)
    match f.term:
        case Tuple():
            return f.children[k]
        case Proj(i, _):
            assert isinstance(f.dom, Prod)
            return ann_proj(i, restrict_cod(f.children[0], k, counter), f.dom)
        case Cotuple():
            return ann_cotuple(restrict_cod(f.children[0], k, counter),
                               restrict_cod(f.children[1], k, counter))
        case Quest():
            return ann_quest(part)
    raise ValueError(f"restrict_cod: unexpected shape {f.term!r}")


# -- the decision procedure --------------------------------------------------

def equal(f: AnnotatedTerm, g: AnnotatedTerm, stats: Optional[Stats] = None) -> Verdict:
    """Decide whether two parallel annotated cut-free terms denote the
    same arrow.  Generator-free only; see the oracle otherwise."""
    if f.dom != g.dom or f.cod != g.cod:
        raise ValueError("equal: terms are not parallel")
    if contains_gen(f.dom) or contains_gen(f.cod):
        return RequiresOracle()
    return _equal(f, g, stats if stats is not None else Stats())


def decide_with_stats(f: AnnotatedTerm, g: AnnotatedTerm) -> tuple[Verdict, Stats]:
    stats = Stats()
    return equal(f, g, stats), stats


def decide_terms(f: Term, g: Term, dom: ObjectType, cod: ObjectType,
                 stats: Optional[Stats] = None) -> Verdict:
    """Convenience wrapper: annotate and decide."""
    return equal(annotate(f, dom, cod), annotate(g, dom, cod), stats)


def _component(v: Verdict, k: int) -> Verdict:
    if isinstance(v, NotEqual):
        return NotEqual(f"component {k}: {v.reason}")
    return v


def _equal(f: AnnotatedTerm, g: AnnotatedTerm, stats: Stats) -> Verdict:
    stats.calls += 1
    dom, cod = f.dom, f.cod

    # singleton homsets
    if dom == ZERO or cod == ONE:
        return Equal()

    # componentwise decomposition: domain sums first, then codomain products
    if isinstance(dom, Sum):
        for k in (0, 1):
            v = _equal(restrict_dom(f, k, stats.counter),
                       restrict_dom(g, k, stats.counter), stats)
            if not isinstance(v, Equal):
                return _component(v, k)
        return Equal(SyntacticRecursion())
    if isinstance(cod, Prod):
        for k in (0, 1):
            v = _equal(restrict_cod(f, k, stats.counter),
                       restrict_cod(g, k, stats.counter), stats)
            if not isinstance(v, Equal):
                return _component(v, k)
        return Equal(SyntacticRecursion())

    # points: maps out of 1 are injections, and injections of points are
    # monic (a cross-injection identification would need a copoint of 1)
    if dom == ONE:
        ft, gt = f.term, g.term
        assert isinstance(ft, Inj) and isinstance(gt, Inj)
        if ft.index != gt.index:
            return NotEqual("corner-mismatch")
        return _equal(f.children[0], g.children[0], stats)

    # copoints, dually
    if cod == ZERO:
        ft, gt = f.term, g.term
        assert isinstance(ft, Proj) and isinstance(gt, Proj)
        if ft.index != gt.index:
            return NotEqual("corner-mismatch")
        return _equal(f.children[0], g.children[0], stats)

    assert isinstance(dom, Prod) and isinstance(cod, Sum)
    fa, ga = f.ann, g.ann

    # indefinite maps
    if fa.is_disconnect or ga.is_disconnect:
        if fa.is_disconnect and ga.is_disconnect:
            return Equal(Disconnect(f.term))
        return NotEqual("point-mismatch" if fa.pointed != ga.pointed else "copoint-mismatch")
    if fa.pointed or ga.pointed:
        if fa.pointed != ga.pointed:
            return NotEqual("point-mismatch")
        v = _equal(annotate(fa.point_witness, ONE, cod),
                   annotate(ga.point_witness, ONE, cod), stats)
        if isinstance(v, Equal):
            return Equal(SharedPoint(fa.point_witness))
        return NotEqual("point-mismatch")
    if fa.copointed or ga.copointed:
        if fa.copointed != ga.copointed:
            return NotEqual("copoint-mismatch")
        v = _equal(annotate(fa.copoint_witness, dom, ZERO),
                   annotate(ga.copoint_witness, dom, ZERO), stats)
        if isinstance(v, Equal):
            return Equal(SharedCopoint(fa.copoint_witness))
        return NotEqual("copoint-mismatch")

    # definite maps: resolve through the four factorizations
    f_inj = _inj_factor(f, stats)
    g_inj = _inj_factor(g, stats)
    f_proj = _proj_factor(f, stats)
    g_proj = _proj_factor(g, stats)

    if f_inj is not None and g_proj is not None:
        return _equivalent(f_inj[1], f_inj[0], g_proj[1], g_proj[0], stats)
    if g_inj is not None and f_proj is not None:
        return _equivalent(g_inj[1], g_inj[0], f_proj[1], f_proj[0], stats)
    if f_inj is not None and g_inj is not None and f_inj[0] == g_inj[0]:
        v = _equal(f_inj[1], g_inj[1], stats)
        return Equal(SyntacticRecursion()) if isinstance(v, Equal) else v
    if f_proj is not None and g_proj is not None and f_proj[0] == g_proj[0]:
        v = _equal(f_proj[1], g_proj[1], stats)
        return Equal(SyntacticRecursion()) if isinstance(v, Equal) else v
    return NotEqual("corner-mismatch")


def _inj_factor(f: AnnotatedTerm, stats: Stats) -> Optional[tuple[int, AnnotatedTerm]]:
    """The unique injection factor of a definite map, if any."""
    for j in (0, 1):
        low = factor_inj(f, j, stats.counter)
        if low is not None:
            return j, low
    return None


def _proj_factor(f: AnnotatedTerm, stats: Stats) -> Optional[tuple[int, AnnotatedTerm]]:
    for i in (0, 1):
        high = factor_proj(f, i, stats.counter)
        if high is not None:
            return i, high
    return None


def _equivalent(f_low: AnnotatedTerm, j: int, g_high: AnnotatedTerm, i: int,
                stats: Stats) -> Verdict:
    """Decide ``s_j f_low == p_i g_high`` for definite corner terms.

    There is a mediating ``h : X_i -> A_j`` with ``p_i h == f_low`` and
    ``s_j h == g_high`` exactly when the two sides are equal; in the
    generator-free calculus the bouncer is trivial: when ``A_j`` is
    pointed ``s_j`` is monic and ``h`` must be the injection factor of
    the ``g`` side, otherwise ``A_j`` is copointed, ``p_i`` is epic and
    ``h`` must be the projection factor of the ``f`` side.
    """
    stats.calls += 1
    a_j = f_low.cod
    full_dom = f_low.dom
    full_cod = g_high.cod
    assert isinstance(full_dom, Prod) and isinstance(full_cod, Sum)
    if type_pointed(a_j):
        h = factor_inj(g_high, j, stats.counter)
        if h is None:
            return NotEqual("lift-failure")
        v = _equal(ann_proj(i, h, full_dom), f_low, stats)
    else:
        h = factor_proj(f_low, i, stats.counter)
        if h is None:
            return NotEqual("lift-failure")
        v = _equal(ann_inj(j, h, full_cod), g_high, stats)
    if isinstance(v, Equal):
        return Equal(Bouncer(h.term))
    return v


def equivalent(f: AnnotatedTerm, g: AnnotatedTerm, stats: Optional[Stats] = None) -> Verdict:
    """Public wrapper for the bouncer case: ``f`` must factor through an
    injection and ``g`` through a projection (both definite, product
    domain, sum codomain).  Calling it otherwise is a contract violation.
    """
    if f.dom != g.dom or f.cod != g.cod:
        raise ValueError("equivalent: terms are not parallel")
    if not (isinstance(f.dom, Prod) and isinstance(f.cod, Sum)):
        raise ValueError("equivalent: needs a product domain and a sum codomain")
    if contains_gen(f.dom) or contains_gen(f.cod):
        return RequiresOracle()
    if not (f.ann.definite and g.ann.definite):
        raise ValueError("equivalent: both terms must be definite")
    stats = stats if stats is not None else Stats()
    f_inj = _inj_factor(f, stats)
    g_proj = _proj_factor(g, stats)
    if f_inj is None or g_proj is None:
        raise ValueError("equivalent: terms do not factor as required")
    return _equivalent(f_inj[1], f_inj[0], g_proj[1], g_proj[0], stats)
