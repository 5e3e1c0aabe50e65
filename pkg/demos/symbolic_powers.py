"""
Symbolic powers through minimal primes
======================================

The minimal primes of a monomial ideal are generated by variables and
correspond to the minimal vertex covers of its support hypergraph.  The
n-th symbolic power keeps, for each such prime, the part of I^n that
survives after inverting the variables outside it.
"""

from monodefect import RingContext, minimal_primes, mu, power, print_ideal, symbolic_power

R = RingContext.standard(5)
C5 = R.ideal("x1*x2, x2*x3, x3*x4, x4*x5, x5*x1")

print("minimal primes of the 5-cycle:")
for P in minimal_primes(C5):
    print("  ", P.format(R))

###############################################################################
# The ordinary and symbolic powers agree for n = 1, 2 and split at n = 3,
# where x1 x2 x3 x4 x5 appears in the symbolic cube.

for n in range(1, 5):
    S, O = symbolic_power(C5, n), power(C5, n)
    print(f"n = {n}: mu(I^({n})) = {mu(S):3d}   mu(I^{n}) = {mu(O):3d}   equal: {S == O}")

print("I^(3) extra generators:",
      [str(g) for g in symbolic_power(C5, 3).gens if g not in power(C5, 3)])

###############################################################################
# Non-squarefree input works the same way.

Rxyz = RingContext(("x", "y", "z"))
I = Rxyz.ideal("x*y*z, x^2*z, y^3*x, z^4*y")
print("minimal primes:", [P.format(Rxyz) for P in minimal_primes(I)])
print("I^(2) =", print_ideal(symbolic_power(I, 2)))
