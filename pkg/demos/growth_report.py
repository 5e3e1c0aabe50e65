"""
Comparing a defect with its integral-closure analogue
=====================================================

Passing to integral closures gives a second pair of filtrations.  The
growth report lists, for each n, the ordinary defect, the closure defect,
the kernel dimension dim T_n and mu(S_n).  The inequality
def <= def_bar + mu(S_n) holds row by row.
"""

from monodefect import Ordinary, RingContext, Symbolic, growth_report
from monodefect.filtration import growth_csv

R = RingContext.standard(3)
T = R.ideal("x1*x2, x2*x3, x3*x1")
rows = growth_report(Symbolic(T), Ordinary(T), 2, 6)
print(growth_csv(rows))

for r in rows:
    print(f"n = {r.n}: {r.defect} <= {r.defect_bar} + {r.mu_s}", r.defect <= r.defect_bar + r.mu_s)
