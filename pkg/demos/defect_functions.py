"""
Defect functions and their quasi-polynomials
============================================

For filtrations I_n and J_n the defect at n counts the minimal generators
of (I_n + J_n) / J_n.  For a monomial pair this is the number of
generators of I_n that do not lie in J_n.  The symbolic defect compares
symbolic powers with ordinary powers.
"""

from monodefect import (
    Ordinary,
    RingContext,
    Symbolic,
    coefficient_report,
    defect_series,
    qp_detect,
)

R = RingContext.standard(4)
I = R.ideal("x1*x2, x2*x3, x3*x1, x1*x4")
series = defect_series(Symbolic(I), Ordinary(I), 2, 14)
print(series.to_csv())

###############################################################################
# The values follow a period-2 quadratic.  Detection searches the smallest
# period, then the smallest degree, validating every fit on extra points.

qp = qp_detect(series.values, series.n_min, 6, 5)
print(qp.format())
print(coefficient_report(qp).format())

###############################################################################
# A non-squarefree ideal whose defect is eventually linear with period 5.

Rxyz = RingContext(("x", "y", "z"))
B = Rxyz.ideal("x*y*z, x^2*z, y^3*x, z^4*y")
series = defect_series(Symbolic(B), Ordinary(B), 1, 22)
print(series.values)
qp = qp_detect(series.values, 1, 6, 5)
print(qp.format())
print(coefficient_report(qp).format())
