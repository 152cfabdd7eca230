import pytest

from sigmapi import annotate, parse_term, parse_type
from sigmapi.oracle import homset_classes


def tt(src: str):
    return parse_term(src)


def ty(src: str):
    return parse_type(src)


def ann(src: str, dom: str, cod: str):
    return annotate(parse_term(src), parse_type(dom), parse_type(cod))


def oracle_ids(dom, cod):
    """Member -> class-index map for a homset."""
    _, index = homset_classes(dom, cod)
    return index


@pytest.fixture
def graph_xa():
    from sigmapi import make_graph

    return make_graph(["x", "a"], [("k", "x", "a")])
