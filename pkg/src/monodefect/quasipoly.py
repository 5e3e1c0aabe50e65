"""Exact detection and fitting of eventual quasi-polynomials.

Everything is done in exact rational arithmetic: a fit either reproduces
every observed value or is rejected. There are no tolerances.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

DEFAULT_MARGIN = 2


class FitError(ValueError):
    """No exact fit for the requested shape."""


class InsufficientDataError(FitError):
    pass


class FitMismatchError(FitError):
    pass


def _trim(coeffs: Sequence[Fraction]) -> tuple[Fraction, ...]:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def poly_eval(coeffs: Sequence[Fraction], x) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


@dataclass(frozen=True)
class QuasiPolynomial:
    """``f(n) = polys[n mod period](n)`` for ``n >= valid_from``.

    Each class polynomial is a tuple of coefficients in ``n``, constant term
    first; the zero polynomial is the empty tuple.
    """

    period: int
    polys: tuple[tuple[Fraction, ...], ...]
    valid_from: int

    def __post_init__(self):
        if self.period < 1:
            raise ValueError("period must be positive")
        polys = tuple(_trim(Fraction(c) for c in p) for p in self.polys)
        if len(polys) != self.period:
            raise ValueError("need one polynomial per residue class")
        object.__setattr__(self, "polys", polys)

    @property
    def degree(self) -> int:
        """Largest class degree; -1 for the zero quasi-polynomial."""
        return max(len(p) for p in self.polys) - 1

    def is_zero(self) -> bool:
        return all(not p for p in self.polys)

    def __call__(self, n: int) -> Fraction:
        return qp_eval(self, n)

    def to_dict(self) -> dict:
        return {
            "period": self.period,
            "valid_from": self.valid_from,
            "classes": [
                {"residue": i, "coeffs": [f"{c.numerator}/{c.denominator}" for c in p]}
                for i, p in enumerate(self.polys)
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    @classmethod
    def from_dict(cls, data: dict) -> "QuasiPolynomial":
        classes = sorted(data["classes"], key=lambda c: c["residue"])
        if [c["residue"] for c in classes] != list(range(data["period"])):
            raise ValueError("classes must cover every residue exactly once")
        return cls(
            period=int(data["period"]),
            polys=tuple(tuple(Fraction(s) for s in c["coeffs"]) for c in classes),
            valid_from=int(data["valid_from"]),
        )

    def format(self, var: str = "n") -> str:
        lines = []
        for i, p in enumerate(self.polys):
            lines.append(f"n = {i} mod {self.period}: {format_poly(p, var)}")
        return "\n".join(lines)


def format_poly(coeffs: Sequence[Fraction], var: str = "n") -> str:
    terms = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if c == 0:
            continue
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        if mono and abs(c) == 1:
            body = mono
        elif mono:
            body = f"{abs(c)}*{mono}"
        else:
            body = str(abs(c))
        sign = "-" if c < 0 else "+"
        terms.append((sign, body))
    if not terms:
        return "0"
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


def qp_eval(qp: QuasiPolynomial, n: int) -> Fraction:
    if n < qp.valid_from:
        raise ValueError(f"n = {n} is below the validity threshold {qp.valid_from}")
    return poly_eval(qp.polys[n % qp.period], n)


def interpolate(xs: Sequence[int], ys: Sequence) -> tuple[Fraction, ...]:
    """Coefficients (constant first) of the unique polynomial of degree
    < len(xs) through the points, via Newton divided differences."""
    m = len(xs)
    table = [Fraction(y) for y in ys]
    newton = [table[0]]
    for level in range(1, m):
        table = [(table[i + 1] - table[i]) / (xs[i + level] - xs[i]) for i in range(m - level)]
        newton.append(table[0])
    # expand c0 + c1 (x - x0) + c2 (x - x0)(x - x1) + ... by Horner
    coeffs = [Fraction(0)] * m
    for k in range(m - 1, -1, -1):
        # coeffs <- coeffs * (x - xs[k]) + newton[k]
        shifted = [Fraction(0)] + coeffs[:-1]
        coeffs = [s - xs[k] * c for s, c in zip(shifted, coeffs)]
        coeffs[0] += newton[k]
    return _trim(coeffs)


def qp_fit(
    values: Sequence[int],
    n_start: int,
    period: int,
    degree: int,
    n0: int,
    margin: int = DEFAULT_MARGIN,
) -> QuasiPolynomial:
    """Fit a quasi-polynomial of the given period and degree bound to
    ``values[i] = f(n_start + i)`` on the window ``n >= n0``.

    Per residue class, the first ``degree + 1`` in-window points are
    interpolated and every remaining point must match exactly; each class
    needs at least ``degree + 1 + margin`` points.
    """
    if period < 1 or degree < 0 or margin < 0:
        raise ValueError("period >= 1, degree >= 0 and margin >= 0 required")
    n_end = n_start + len(values) - 1
    if n0 < n_start:
        raise ValueError("n0 lies before the first value")
    need = degree + 1 + margin
    polys = [None] * period
    for residue in range(period):
        first = n0 + (residue - n0) % period
        xs = list(range(first, n_end + 1, period))
        if len(xs) < need:
            raise InsufficientDataError(
                f"class {residue} mod {period} has {len(xs)} points on [{n0}, {n_end}], need {need}"
            )
        ys = [values[x - n_start] for x in xs]
        poly = interpolate(xs[:degree + 1], ys[:degree + 1])
        for x, y in zip(xs[degree + 1:], ys[degree + 1:]):
            if poly_eval(poly, x) != y:
                raise FitMismatchError(f"class {residue} mod {period} misses n = {x}")
        polys[residue] = poly
    return QuasiPolynomial(period, tuple(polys), n0)


def qp_detect(
    values: Sequence[int],
    n_start: int,
    p_max: int,
    d_max: int,
    margin: int = DEFAULT_MARGIN,
) -> QuasiPolynomial:
    """Smallest period, then smallest degree, then earliest start that fits.

    Raises ``FitError`` when nothing within the bounds fits.
    """
    if p_max < 0 or d_max < 0:
        raise ValueError("p_max and d_max must be nonnegative")
    n_end = n_start + len(values) - 1
    for p in range(1, p_max + 1):
        for d in range(d_max + 1):
            for n0 in range(n_start, n_end + 1):
                try:
                    return qp_fit(values, n_start, p, d, n0, margin)
                except InsufficientDataError:
                    break
                except FitMismatchError:
                    continue
    raise FitError(
        f"no quasi-polynomial with period <= {p_max} and degree <= {d_max} "
        f"fits the window [{n_start}, {n_end}]"
    )


@dataclass(frozen=True)
class CoefficientReport:
    degree: int
    leading: tuple[Fraction, ...]
    second: tuple[Fraction, ...] | None
    leading_constant: bool
    second_nonzero_constant: bool

    def format(self) -> str:
        c = self.degree
        lines = [f"degree c = {c}"]
        lines.append(f"a_{c} by class: " + ", ".join(str(x) for x in self.leading))
        if self.second is None:
            lines.append(f"a_{c - 1}: absent")
        else:
            lines.append(f"a_{c - 1} by class: " + ", ".join(str(x) for x in self.second))
        lines.append(f"leading_constant = {str(self.leading_constant).lower()}")
        lines.append(f"second_nonzero_constant = {str(self.second_nonzero_constant).lower()}")
        return "\n".join(lines)


def coefficient_report(qp: QuasiPolynomial) -> CoefficientReport:
    if qp.is_zero():
        raise ValueError("the zero quasi-polynomial has no leading coefficient")
    c = qp.degree

    def coeff(p, k):
        return p[k] if 0 <= k < len(p) else Fraction(0)

    leading = tuple(coeff(p, c) for p in qp.polys)
    second = tuple(coeff(p, c - 1) for p in qp.polys) if c >= 1 else None
    nonzero = {x for x in second if x != 0} if second is not None else set()
    return CoefficientReport(
        degree=c,
        leading=leading,
        second=second,
        leading_constant=len(set(leading)) == 1,
        second_nonzero_constant=len(nonzero) <= 1,
    )
