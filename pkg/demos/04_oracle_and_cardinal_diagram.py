"""The exact oracle: equivalence classes, the diagram of cardinals, and
bouncers.

The oracle closes a term under the permuting conversions applied in both
directions at every position -- exponential, but exact, and the ground
truth every fast algorithm in this package is tested against.  It also
searches the diagram of cardinals: the homset from a product to a sum is
glued out of four corner homsets along elementary pairs p_i h ~ s_j h,
and equality of definite terms is witnessed by paths that bounce on one
side of the square.
"""

from sigmapi import (
    BANG,
    QUEST,
    Cotuple,
    GenArrow,
    Inj,
    Proj,
    Tuple,
    class_of,
    disconnect,
    make_graph,
    parse_term,
    parse_type,
    same_class,
)
from sigmapi.oracle import CardinalSquare, cardinal_path, find_bouncers
from sigmapi.types import ONE, ZERO

# -- classes under the permuting conversions -----------------------------------
cls = class_of(QUEST, ZERO, parse_type("1+1"))
print("class of ? : 0 -> 1+1 has", len(cls), "members:")
for m in sorted(cls.members, key=str):
    print("   ", m)

print("p0 ? == p1 ? at 0*0 -> 0:",
      same_class(parse_term("p0 ?"), parse_term("p1 ?"), parse_type("0*0"), parse_type("0")))

# -- a path in the diagram of cardinals -----------------------------------------
t = parse_term("{s0 !, s1 !}")
sq = CardinalSquare(parse_type("1+1"), ONE, parse_type("1+1"), ZERO)
full = (sq.dom, sq.cod)
path = cardinal_path(sq, Inj(0, Proj(0, t)), Proj(0, Inj(0, t)), full, full)
print("\npath joining s0 p0 t and p0 s0 t:", path.length, "elementary pair(s);",
      "witness:", path.witnesses[0])

# -- the non-trivial bouncer ------------------------------------------------------
# over generator objects, two definite maps can be joined only through a
# third, genuinely different map h: s0 coequalizes f with h, and p0
# equalizes h with g, yet f, h, g lie in three distinct classes
graph = make_graph(["x", "a"], [("k", "x", "a")])
X0, A0 = parse_type("0*0 + x"), parse_type("(1+1) * a")
z = disconnect(parse_type("0*0"), parse_type("1+1"))
k = GenArrow("x", ("k",))
f = Cotuple(Tuple(z, Proj(0, QUEST)), Tuple(Inj(0, BANG), k))
h = Cotuple(Tuple(z, Proj(1, QUEST)), Tuple(Inj(0, BANG), k))
g = Cotuple(Tuple(z, Proj(1, QUEST)), Tuple(Inj(1, BANG), k))
square = CardinalSquare(X0, ZERO, A0, ONE)

print("\nbouncer example over", X0, "->", A0)
print("  s0 f == s0 h:", same_class(Inj(0, f), Inj(0, h), X0, square.cod, ))
print("  p0 h == p0 g:", same_class(Proj(0, h), Proj(0, g), square.dom, A0))
print("  f == h:", same_class(f, h, X0, A0), "  h == g:", same_class(h, g, X0, A0))
bouncers = find_bouncers(square, 0, 0, g, f, graph)
print("  h among the bouncers joining g to f:", h in bouncers)
print("  f or g bounce themselves:", f in bouncers or g in bouncers)
