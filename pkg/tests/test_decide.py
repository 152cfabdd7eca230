import itertools

import pytest

from sigmapi import (
    Bouncer,
    Cotuple,
    Disconnect,
    Equal,
    Inj,
    NotEqual,
    Proj,
    RequiresOracle,
    SharedCopoint,
    SharedPoint,
    Tuple,
    annotate,
    decide_terms,
    decide_with_stats,
    enumerate_terms,
    equal,
    equivalent,
    iter_types,
    parse_term,
    parse_type,
    same_class,
)
from sigmapi.types import ZERO
from sigmapi.oracle import homset_classes


def _pair(fsrc, gsrc, dom, cod):
    X, A = parse_type(dom), parse_type(cod)
    return (annotate(parse_term(fsrc), X, A), annotate(parse_term(gsrc), X, A))


def test_intro_examples():
    f, g = _pair("p0 ?", "p1 ?", "0*0", "0")
    assert isinstance(equal(f, g), NotEqual)
    f, g = _pair("s0 p0 ?", "s0 p1 ?", "0*0", "0+1")
    v = equal(f, g)
    assert isinstance(v, Equal) and isinstance(v.witness, Disconnect)


def test_reflexivity():
    for src, dom, cod in (("{s0 !, s1 !}", "1+1", "1+1"), ("p0 s1 !", "1*0", "1+1")):
        f, g = _pair(src, src, dom, cod)
        assert isinstance(equal(f, g), Equal)


def test_points_disagree():
    f, g = _pair("s0 !", "s1 !", "1*1", "1+1")
    v = equal(f, g)
    assert v == NotEqual("point-mismatch")


def test_shared_point():
    # p0 s0 ! and s0 p0 ! are the same just-pointed map
    f, g = _pair("p0 s0 !", "s0 p0 !", "1*1", "1+1")
    v = equal(f, g)
    assert isinstance(v, Equal) and isinstance(v.witness, SharedPoint)
    assert v.witness.term == parse_term("s0 !")


def test_commutation_gives_bouncer():
    t = "{s0 !, s1 !}"  # a definite body 1+1 -> 1+1
    f, g = _pair(f"p0 s0 {t}", f"s0 p0 {t}", "(1+1)*1", "(1+1)+0")
    v = equal(f, g)
    assert isinstance(v, Equal) and isinstance(v.witness, Bouncer)
    # the bouncer h : X_0 -> A_0 mediates: its projection recovers the
    # injection factor of f, its injection the projection factor of g
    h = v.witness.term
    X, A = parse_type("(1+1)*1"), parse_type("(1+1)+0")
    assert same_class(Proj(0, h), parse_term(f"p0 {t}"), X, parse_type("1+1"))
    assert same_class(Inj(0, h), parse_term(f"s0 {t}"), parse_type("1+1"), A)
    assert same_class(Inj(0, Proj(0, h)), f.term, X, A)
    assert same_class(Proj(0, Inj(0, h)), g.term, X, A)


def test_lift_failure_regression():
    # frozen from an exhaustive search over small squares: both terms are
    # definite, f factors only through s1, g also factors through p1, and
    # the required lift of the g side fails
    f, g = _pair("s1 <p0 ?, p1 p0 ?>", "p1 s1 <p0 ?, p1 ?>", "0*0*0", "0+0*0")
    v = equal(f, g)
    assert v == NotEqual("lift-failure")
    assert not same_class(f.term, g.term, parse_type("0*0*0"), parse_type("0+0*0"))


def test_requires_oracle_on_generator_types():
    from sigmapi import GenArrow

    X, A = parse_type("x"), parse_type("x")
    f = annotate(GenArrow("x"), X, A)
    assert isinstance(equal(f, f), RequiresOracle)
    # generator objects anywhere in the typing defer to the oracle, even
    # when the terms themselves are generator-free
    g = annotate(parse_term("!"), parse_type("x"), parse_type("1"))
    h = annotate(parse_term("p0 !"), parse_type("x*1"), parse_type("1"))
    assert isinstance(equal(g, g), RequiresOracle)
    assert isinstance(equal(h, h), RequiresOracle)


def test_equivalent_contract():
    f, g = _pair("s0 !", "s0 !", "1*1", "1+1")
    with pytest.raises(ValueError):
        equivalent(f, g)  # indefinite input is a contract violation


def test_mixed_corner_pair_at_units():
    # s0 p0 ! and p0 s0 ! over 1*0 -> 1+0 are both the disconnect of the
    # homset, so they compare equal through the indefinite analysis (they
    # are not definite, so `equivalent` itself must not be called on them)
    f, g = _pair("s0 p0 !", "p0 s0 !", "1*0", "1+0")
    v = equal(f, g)
    assert isinstance(v, Equal) and isinstance(v.witness, Disconnect)
    with pytest.raises(ValueError):
        equivalent(f, g)


def test_equivalent_example():
    # a definite instance: the bouncer is the shared body, lifted from the
    # g side since the inner codomain 1+1 is pointed (s0 is monic)
    body = "{s0 !, s1 !}"
    f, g = _pair(f"s0 p0 {body}", f"p0 s0 {body}", "(1+1)*1", "(1+1)+0")
    v = equivalent(f, g)
    assert isinstance(v, Equal) and isinstance(v.witness, Bouncer)
    assert v.witness.term == parse_term(body)


def test_equivalence_relation_on_homset():
    X, A = parse_type("(1+1)*1"), parse_type("1+1")
    terms = enumerate_terms(X, A)
    anns = [annotate(t, X, A) for t in terms]
    eq = [[isinstance(equal(f, g), Equal) for g in anns] for f in anns]
    n = len(anns)
    for i in range(n):
        assert eq[i][i]
        for j in range(n):
            assert eq[i][j] == eq[j][i]
            for k in range(n):
                if eq[i][j] and eq[j][k]:
                    assert eq[i][k]


def test_congruence():
    X, A = parse_type("1+1"), parse_type("1+1")
    classes, index = homset_classes(X, A)
    terms = enumerate_terms(X, A)
    S = parse_type("(1+1)+(1+1)")
    for f, g in itertools.product(terms, repeat=2):
        if index[f] != index[g]:
            continue
        for j in (0, 1):
            assert isinstance(decide_terms(Inj(j, f), Inj(j, g), X, S), Equal)
        for i in (0, 1):
            P = parse_type("(1+1)*0") if i == 0 else parse_type("0*(1+1)")
            assert isinstance(decide_terms(Proj(i, f), Proj(i, g), P, A), Equal)
        assert isinstance(decide_terms(Cotuple(f, parse_term("{s0 !, s1 !}")),
                                       Cotuple(g, parse_term("{s0 !, s1 !}")),
                                       parse_type("(1+1)+(1+1)"), A), Equal)
        assert isinstance(decide_terms(Tuple(f, parse_term("!")),
                                       Tuple(g, parse_term("!")),
                                       X, parse_type("(1+1)*1")), Equal)


def test_stats_thresholds():
    # regression thresholds fixed after first measurement
    f, g = _pair("s0 p0 ?", "s0 p1 ?", "0*0", "0+1")
    v, stats = decide_with_stats(f, g)
    assert isinstance(v, Equal)
    assert stats.steps <= 200

    worst = 0
    for X in iter_types(3):
        for A in iter_types(3):
            terms = enumerate_terms(X, A)
            anns = [annotate(t, X, A) for t in terms]
            for fa in anns:
                for ga in anns:
                    _, st = decide_with_stats(fa, ga)
                    worst = max(worst, st.steps)
    assert worst <= 200


def test_reflexive_cost_close_to_equal_cost():
    # deciding t == t costs no more than deciding t == u plus slack, for
    # u in the same class (measured bound, frozen at 16)
    X, A = parse_type("(1+1)*1"), parse_type("1+1")
    terms = enumerate_terms(X, A)
    _, index = homset_classes(X, A)
    anns = {t: annotate(t, X, A) for t in terms}
    for t in terms:
        _, self_stats = decide_with_stats(anns[t], anns[t])
        for u in terms:
            if u is t or index[t] != index[u]:
                continue
            _, other_stats = decide_with_stats(anns[t], anns[u])
            assert self_stats.steps <= other_stats.steps + 16


def test_copoints_disagree():
    # both just copointed, through genuinely different copoints
    f, g = _pair("s0 p0 ?", "s0 p1 ?", "0*0", "0+0")
    v = equal(f, g)
    assert v == NotEqual("copoint-mismatch")


def test_shared_copoint():
    f, g = _pair("s0 p0 ?", "p0 s0 ?", "0*0", "0+0")
    v = equal(f, g)
    assert isinstance(v, Equal) and isinstance(v.witness, SharedCopoint)
    assert v.witness.term == parse_term("p0 ?")


def test_disconnect_witness_rechecks():
    f, g = _pair("s0 p0 ?", "s0 p1 ?", "0*0", "0+1")
    v = equal(f, g)
    assert isinstance(v.witness, Disconnect)
    w = annotate(v.witness.term, parse_type("0*0"), parse_type("0+1"))
    assert w.ann.pointed and w.ann.copointed
