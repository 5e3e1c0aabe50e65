"""Minimal primes and symbolic powers of monomial ideals."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .ops import intersect, power, radical, saturate
from .ring import Monomial, MonomialIdeal, RingContext


@dataclass(frozen=True, order=True)
class MonomialPrime:
    """The prime ideal generated by the variables with the given 0-based indices."""

    vars: tuple[int, ...]

    def __post_init__(self):
        v = tuple(sorted(set(int(i) for i in self.vars)))
        if not v:
            raise ValueError("a monomial prime needs at least one variable")
        if v[0] < 0:
            raise ValueError("negative variable index")
        object.__setattr__(self, "vars", v)

    def to_ideal(self, ring: RingContext) -> MonomialIdeal:
        if self.vars[-1] >= ring.num_vars:
            raise ValueError(f"variable index {self.vars[-1]} out of range")
        return MonomialIdeal(ring, np.eye(ring.num_vars, dtype=np.int64)[list(self.vars)])

    def complement_monomial(self, ring: RingContext) -> Monomial:
        """Product of the variables outside the prime."""
        inside = set(self.vars)
        return Monomial(ring, tuple(0 if i in inside else 1 for i in range(ring.num_vars)))

    def format(self, ring: RingContext) -> str:
        return "(" + ", ".join(ring.var_names[i] for i in self.vars) + ")"


def _require_proper(I: MonomialIdeal) -> None:
    if I.is_zero():
        raise ValueError("the zero ideal is not supported here")
    if I.is_unit():
        raise ValueError("the unit ideal has no primes")


def minimal_primes(I: MonomialIdeal) -> list[MonomialPrime]:
    """Minimal primes of ``I``, i.e. minimal vertex covers of the supports of
    the generators of its radical, sorted by index vector."""
    _require_proper(I)
    supports = [frozenset(np.flatnonzero(row).tolist()) for row in radical(I).exponents]
    # small supports first keeps the branching narrow
    supports.sort(key=lambda s: (len(s), sorted(s)))
    covers: set[frozenset[int]] = set()

    def extend(chosen: frozenset[int]) -> None:
        # any cover containing an already-found cover is not minimal
        if any(c <= chosen for c in covers):
            return
        for s in supports:
            if not (s & chosen):
                for v in sorted(s):
                    extend(chosen | {v})
                return
        covers.add(chosen)

    extend(frozenset())
    minimal = [c for c in covers if not any(o < c for o in covers)]
    return sorted(MonomialPrime(tuple(c)) for c in minimal)


def symbolic_power(I: MonomialIdeal, n: int) -> MonomialIdeal:
    """``I^(n)``: intersection over minimal primes P of ``I^n R_P ∩ R``.

    For a monomial ideal, localizing at P and contracting back is saturation
    by the product of the variables outside P.
    """
    _require_proper(I)
    if n < 1:
        raise ValueError("symbolic power needs n >= 1")
    In = power(I, n)
    components = []
    for P in minimal_primes(I):
        comp = P.complement_monomial(I.ring)
        if not any(comp.exponents):
            components.append(In)
        else:
            components.append(saturate(In, MonomialIdeal.principal(comp)))
    return intersect(*components)
