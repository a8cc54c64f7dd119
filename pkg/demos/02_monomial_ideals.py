"""
Monomial ideal arithmetic
=========================

Ideals are kept as sorted minimal generating sets, so two ideals are equal
exactly when their generator tuples are.
"""

from sympow.monomials import (
    alpha,
    colon,
    equals,
    intersect,
    minimalize,
    parse_monomial,
    power,
    product,
    prime_power,
)

names = ["x", "y", "z"]


def ideal(*gens):
    return minimalize([parse_monomial(g, names) for g in gens])


I = ideal("x*y", "y*z", "x*y*z")   # x*y*z is redundant
J = ideal("x^2", "z")
print("I     =", I.format(names))
print("J     =", J.format(names))
print("I * J =", product(I, J).format(names))
print("I ∩ J =", intersect(I, J).format(names))
print("I : y =", colon(I, parse_monomial("y", names)).format(names))
print("alpha(I^3) =", alpha(power(I, 3)))

# the square of the prime (x, z) two ways
assert equals(prime_power(3, [0, 2], 2), power(ideal("x", "z"), 2))
print("(x,z)^2 =", prime_power(3, [0, 2], 2).format(names))
