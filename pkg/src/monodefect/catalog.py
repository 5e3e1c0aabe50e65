"""Worked examples with known closed-form defect functions."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .filtration import FiltrationSpec, Ordinary, Saturation, Symbolic
from .ring import RingContext


@dataclass(frozen=True)
class Example:
    key: str
    description: str
    spec_i: FiltrationSpec
    spec_j: FiltrationSpec
    closed_form: Callable[[int], Fraction]
    n_min: int
    n_max: int


def _ceil_half(n: int) -> Fraction:
    return Fraction(-(-n // 2))


def _mm412(n: int) -> Fraction:
    k, odd = divmod(n, 2)
    return Fraction(2 * k * k + 2 * k if odd else 2 * k * k - 1)


def _mm411(n: int) -> Fraction:
    k, rem = divmod(n, 3)
    k = Fraction(k)
    if rem == 0:
        return Fraction(15, 2) * k**3 - Fraction(15, 2) * k**2 + 1
    if rem == 1:
        return Fraction(15, 2) * k**3 - Fraction(5, 2) * k
    return Fraction(15, 2) * k**3 + Fraction(15, 2) * k**2


_BCMM_CONST = {0: Fraction(-2), 1: Fraction(-6, 5), 2: Fraction(-7, 5),
               3: Fraction(-3, 5), 4: Fraction(-4, 5)}


def _bcmm612(n: int) -> Fraction:
    if n == 1:
        return Fraction(0)
    return Fraction(11, 5) * n + _BCMM_CONST[n % 5]


def _build() -> dict[str, Example]:
    r3 = RingContext.standard(3)
    triangle = r3.ideal("x1*x2, x2*x3, x3*x1")
    r4 = RingContext.standard(4)
    mm412 = r4.ideal("x1*x2, x2*x3, x3*x1, x1*x4")
    r5 = RingContext.standard(5)
    pentagon = r5.ideal("x1*x2, x2*x3, x3*x4, x4*x5, x5*x1")
    rxyz = RingContext(("x", "y", "z"))
    bcmm = rxyz.ideal("x*y*z, x^2*z, y^3*x, z^4*y")
    return {
        "triangle": Example(
            "triangle", "saturation by (x2, x3) vs symbolic powers of the triangle",
            Saturation(triangle, r3.ideal("x2, x3")), Symbolic(triangle),
            _ceil_half, 1, 15,
        ),
        "mm412": Example(
            "mm412", "symbolic defect of (x1x2, x2x3, x3x1, x1x4)",
            Symbolic(mm412), Ordinary(mm412), _mm412, 2, 14,
        ),
        "mm411": Example(
            "mm411", "symbolic defect of the 5-cycle edge ideal",
            Symbolic(pentagon), Ordinary(pentagon), _mm411, 2, 11,
        ),
        "bcmm612": Example(
            "bcmm612", "symbolic defect of (xyz, x^2z, y^3x, z^4y)",
            Symbolic(bcmm), Ordinary(bcmm), _bcmm612, 1, 15,
        ),
    }


EXAMPLES = _build()
