"""
Monomial ideals as exponent arrays
==================================

A monomial ideal is stored as its minimal generators: an antichain of
exponent vectors under componentwise order.  Everything else (sums,
products, colons, saturation) is array work on those rows.
"""

from monodefect import RingContext, colon, ideal_sum, intersect, power, print_ideal, saturate

R = RingContext.standard(3)
T = R.ideal("x1*x2, x2*x3, x3*x1")
print("T        =", print_ideal(T))
print("exponents:")
print(T.exponents)

###############################################################################
# Redundant generators are dropped on construction.

print(print_ideal(R.ideal("x1*x2, x1^2*x2, x2*x3")))

###############################################################################
# Powers, sums and intersections.

print("T^2      =", print_ideal(power(T, 2)))
print("T + (x1) =", print_ideal(ideal_sum(T, R.ideal("x1"))))
print("T ∩ (x1) =", print_ideal(intersect(T, R.ideal("x1"))))

###############################################################################
# Saturating T^n by (x2, x3) removes the embedded component at that prime.
# The result is generated by x1^(n-i) x2^i x3^i.

P = R.ideal("x2, x3")
print("T^2 : P  =", print_ideal(colon(power(T, 2), P)))
for n in range(1, 5):
    print(f"sat(T^{n}) =", print_ideal(saturate(power(T, n), P)))
