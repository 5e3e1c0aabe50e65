"""Defect functions of pairs of monomial-ideal filtrations."""

from .filtration import (
    Closure,
    ClosureOf,
    DefectSeries,
    Ordinary,
    Saturation,
    Scaled,
    Symbolic,
    defect,
    defect_series,
    growth_report,
    module_mu,
    realize,
    s_mu,
    t_dim,
)
from .newton import NewtonPolyhedron, closure_power, in_scaled_np, newton_polyhedron
from .ops import (
    colon,
    colon_mono,
    ideal_sum,
    intersect,
    m_multiply,
    mu,
    power,
    product,
    radical,
    saturate,
)
from .primes import MonomialPrime, minimal_primes, symbolic_power
from .quasipoly import (
    CoefficientReport,
    FitError,
    QuasiPolynomial,
    coefficient_report,
    qp_detect,
    qp_eval,
    qp_fit,
)
from .ring import (
    Monomial,
    MonomialIdeal,
    RingContext,
    contains,
    divides,
    ideal_leq,
    minimalize,
    parse_ideal,
    print_ideal,
)

__version__ = "0.1.0"
