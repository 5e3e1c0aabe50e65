"""
Newton polyhedra and integral closures
======================================

The integral closure of I^n is generated by the lattice points of n times
the Newton polyhedron of I.  The polyhedron is computed exactly, as a list
of rational halfspaces.
"""

from monodefect import RingContext, closure_power, newton_polyhedron, power, print_ideal

R = RingContext(("x", "y"))
I = R.ideal("x^2, y^2")
NP = newton_polyhedron(I)
print("NP(x^2, y^2):", NP.dump())
print("closure      :", print_ideal(closure_power(I, 1)))

###############################################################################
# A lopsided ideal in three variables has several facets.

R3 = RingContext.standard(3)
J = R3.ideal("x1^4, x1*x2^2, x3^3")
print()
print(newton_polyhedron(J).dump())

###############################################################################
# The closure of J^n is strictly larger than J^n.

for n in range(1, 4):
    Jn, Cn = power(J, n), closure_power(J, n)
    print(f"n = {n}: {len(Jn)} generators in J^n, {len(Cn)} in its closure")
