"""Linear-time factorization of a term through a coproduct injection or a
product projection.

``factor_inj(f, j)`` returns an annotated ``f'`` with ``s_j f' == f`` (up
to the permuting conversions), or None when no such factor exists; dually
``factor_proj``.  Inputs must be pre-annotated so pointedness lookups are
constant-time; the structural analysis:

* a syntactic ``s_j`` factor is taken as-is (deterministic and smallest);
* otherwise a copointed term always factors, through its copoint;
* otherwise the other injection blocks, a cotuple factors when both
  branches do, and a projection factors when its body does.
"""

from __future__ import annotations

from typing import Optional

from .annotate import (
    AnnotatedTerm,
    VisitCounter,
    ann_cotuple,
    ann_inj,
    ann_proj,
    ann_tuple,
    annotate,
)
from .compose import compose
from .terms import BANG, QUEST, Cotuple, Inj, Proj, Quest, Bang, Tuple
from .types import Prod, Sum


def factor_inj(f: AnnotatedTerm, j: int,
               counter: Optional[VisitCounter] = None) -> Optional[AnnotatedTerm]:
    """Factor ``f : X -> A0+A1`` through the injection ``s_j``."""
    assert isinstance(f.cod, Sum), "factor_inj needs a sum codomain"
    if counter is not None:
        counter.tick()
    target = f.cod.component(j)
    t = f.term
    if isinstance(t, Inj) and t.index == j:
        return f.children[0]
    if f.ann.copointed:
        low = compose(f.ann.copoint_witness, QUEST)
        return annotate(low, f.dom, target)
    match t:
        case Inj():  # the other injection, not copointed: blocked
            return None
        case Quest():  # always copointed; unreachable, kept for safety
            return annotate(QUEST, f.dom, target)
        case Cotuple():
            left = factor_inj(f.children[0], j, counter)
            if left is None:
                return None
            right = factor_inj(f.children[1], j, counter)
            if right is None:
                return None
            return ann_cotuple(left, right)
        case Proj(i, _):
            body = factor_inj(f.children[0], j, counter)
            if body is None:
                return None
            assert isinstance(f.dom, Prod)
            return ann_proj(i, body, f.dom)
    raise ValueError(f"factor_inj: unexpected shape {t!r}")


def factor_proj(f: AnnotatedTerm, i: int,
                counter: Optional[VisitCounter] = None) -> Optional[AnnotatedTerm]:
    """Factor ``f : X0*X1 -> A`` through the projection ``p_i``."""
    assert isinstance(f.dom, Prod), "factor_proj needs a product domain"
    if counter is not None:
        counter.tick()
    source = f.dom.component(i)
    t = f.term
    if isinstance(t, Proj) and t.index == i:
        return f.children[0]
    if f.ann.pointed:
        high = compose(BANG, f.ann.point_witness)
        return annotate(high, source, f.cod)
    match t:
        case Proj():  # the other projection, not pointed: blocked
            return None
        case Bang():  # always pointed; unreachable, kept for safety
            return annotate(BANG, source, f.cod)
        case Tuple():
            left = factor_proj(f.children[0], i, counter)
            if left is None:
                return None
            right = factor_proj(f.children[1], i, counter)
            if right is None:
                return None
            return ann_tuple(left, right)
        case Inj(j, _):
            body = factor_proj(f.children[0], i, counter)
            if body is None:
                return None
            assert isinstance(f.cod, Sum)
            return ann_inj(j, body, f.cod)
    raise ValueError(f"factor_proj: unexpected shape {t!r}")
