"""Terms, typing, and composition by cut elimination.

The objects of the calculus are types built from 0, 1, generators, sums
and products; the arrows are cut-free proof terms.  Raw terms may also
use identities and cuts, which `eliminate` rewrites away.
"""

from sigmapi import (
    eliminate,
    format_term,
    identity,
    infer,
    parse_term,
    parse_type,
    term_metrics,
)

# -- parse a type and a couple of terms --------------------------------------
X = parse_type("0*0")
A = parse_type("0+1")
print("domain  :", X)
print("codomain:", A)

f = parse_term("p0 ?")          # project, then the unique map out of 0
g = parse_term("<!, s1 !>")     # a tuple with an injected point
print("f =", f, "   g =", g)

# -- typing -------------------------------------------------------------------
print(infer(f, X, parse_type("0")))
print(infer(g, parse_type("1"), parse_type("1*(0+1)")))

# size and height drive the complexity bounds of the decision procedure
print("metrics of g:", term_metrics(g))

# -- cut elimination ----------------------------------------------------------
# composition is written with ';' and computed by cut elimination
raw = parse_term("p0 ? ; s0 id:0")
print("raw      :", raw)
print("cut-free :", eliminate(raw))

# identities expand to cut-free form, with unit simplifications applied
for src in ("1", "0+1", "(1+1)*1"):
    t = parse_type(src)
    print(f"identity at {src}:", format_term(identity(t)))

# beta laws: tupling against projection, injection against cotupling
print(eliminate(parse_term("<s0 !, s1 !> ; p1 id:1+1")))   # -> s1 !
print(eliminate(parse_term("s0 ! ; {s1 !, s0 !}")))        # -> s1 !
