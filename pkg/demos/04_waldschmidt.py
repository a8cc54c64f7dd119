"""
Waldschmidt constants from an exact LP
======================================

The fractional chromatic number comes from an exact rational simplex; the
Waldschmidt constant is chi*/(chi* - 1). The ratios alpha(I^(m))/m approach
it from above.
"""

from fractions import Fraction

from sympow.corpus import complete_multipartite, cycle_graph
from sympow.paths import path_hypergraph_cycle
from sympow.waldschmidt import (
    fractional_chromatic,
    waldschmidt_upper_bounds,
    waldschmidt_via_chi,
)

C5 = cycle_graph(5)
sol = fractional_chromatic(C5)
print("chi*(C5) =", sol.optimum)
for S, w in sol.weights:
    print("  weight", w, "on", C5.names(sorted(S)))
print("certificate checks out:", sol.verify(C5))

print("waldschmidt(C5) =", waldschmidt_via_chi(C5))
print("alpha(I^(m))/m  =", [str(b) for b in waldschmidt_upper_bounds(C5, 4)])

for sizes in [(2, 2), (2, 2, 2), (1, 1, 1, 1)]:
    H = complete_multipartite(sizes)
    print(f"complete {len(sizes)}-partite {sizes}: chi* = {fractional_chromatic(H).optimum},"
          f" waldschmidt = {waldschmidt_via_chi(H)}")

H = path_hypergraph_cycle(5, 3)
assert waldschmidt_via_chi(H) == Fraction(5, 2)
print("waldschmidt(H_3(C_5)) =", waldschmidt_via_chi(H))
