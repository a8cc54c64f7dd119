"""
Symbolic squares of 3-partite hypergraphs
=========================================

For the bad hypergraph B the symbolic square picks up exactly one extra
generator, the product of all six vertices. We then look at the bad-triple
classifier and at a hypergraph where its prediction is wrong.
"""

from sympow.corpus import bad_hypergraph, enumerate_partite_uniform
from sympow.hypergraph import validate_simple
from sympow.monomials import Monomial, contains, power
from sympow.symbolic import (
    check_equality,
    classify_3partite_equality,
    edge_ideal,
    second_symbolic_via_bad,
    sextics_outside_square,
    sullivant_member,
    symbolic_power,
)

B = bad_hypergraph()
S2 = symbolic_power(B, 2)
print("I(B)^(2) generators:", S2.format(B.vertex_names))
print(check_equality(B, 2).to_dict(B.vertex_names))

# membership through the divisor test agrees
sextic = Monomial((1,) * 6)
print("sextic in I^(2):", sullivant_member(B, sextic, 2), contains(S2, sextic))

print("classifier:", classify_3partite_equality(B).verdict.value)

# a bad triple with no complemented edge, yet its sextic is the product of
# two other edges, so I^(2) = I^2 after all
H = validate_simple([["v0", "v1", "v2"], ["v0", "v1", "v3"], ["v0", "v2", "v4"],
                     ["v1", "v2", "v5"], ["v3", "v4", "v5"]])
print()
print(H)
print("classifier:", classify_3partite_equality(H).verdict.value)
print("actual equality:", check_equality(H, 2).equal)
print("sextic in I^2:", contains(power(edge_ideal(H), 2), Monomial((1,) * 6)))
print("sextics outside I^2:", sextics_outside_square(H))

# the I^2 + sextics description of I^(2) holds across the whole corpus
corpus = list(enumerate_partite_uniform(3, 9, 5))
agree = sum(second_symbolic_via_bad(G) == symbolic_power(G, 2) for G in corpus)
print(f"I^(2) = I^2 + sextics on {agree} of {len(corpus)} corpus hypergraphs")
