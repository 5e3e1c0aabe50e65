"""Filtrations of monomial ideals, defect functions and growth diagnostics."""

from __future__ import annotations

import csv
import io
import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Union

from .newton import closure_power
from .ops import intersect, m_multiply, product, saturate
from .primes import symbolic_power
from .ring import MonomialIdeal, _check_same_ring, divisible_mask, ideal_leq


class ContainmentError(ValueError):
    """J_n ⊆ I_n fails for a growth diagnostic."""

    def __init__(self, n: int, message: str | None = None):
        self.n = n
        super().__init__(message or f"J_n is not contained in I_n at n = {n}")

    def __reduce__(self):
        return (ContainmentError, (self.n, str(self)))


class SeriesError(RuntimeError):
    """A per-n computation inside a series failed."""

    def __init__(self, n: int, message: str, containment: bool = False):
        self.n = n
        self.containment = containment
        super().__init__(f"n = {n}: {message}")

    def __reduce__(self):
        return (SeriesError, (self.n, str(self).split(": ", 1)[1], self.containment))


def _at(n: int, fn, *args):
    try:
        return fn(*args)
    except ContainmentError as exc:
        raise SeriesError(n, str(exc), containment=True) from exc
    except (ValueError, ArithmeticError) as exc:
        raise SeriesError(n, str(exc)) from exc


def _proper(I: MonomialIdeal, what: str) -> None:
    if I.is_zero() or I.is_unit():
        raise ValueError(f"{what} needs a nonzero, non-unit ideal")


@dataclass(frozen=True)
class Ordinary:
    ideal: MonomialIdeal

    def __str__(self):
        return f"ordinary({self.ideal})"


@dataclass(frozen=True)
class Symbolic:
    ideal: MonomialIdeal

    def __post_init__(self):
        _proper(self.ideal, "symbolic")

    def __str__(self):
        return f"symbolic({self.ideal})"


@dataclass(frozen=True)
class Saturation:
    """``I^n : J^∞``."""

    ideal: MonomialIdeal
    by: MonomialIdeal

    def __post_init__(self):
        _check_same_ring(self.ideal.ring, self.by.ring)
        if self.by.is_zero():
            raise ValueError("saturation by the zero ideal")

    def __str__(self):
        return f"sat({self.ideal}; {self.by})"


@dataclass(frozen=True)
class Closure:
    """Integral closure of ``I^n``."""

    ideal: MonomialIdeal

    def __post_init__(self):
        if self.ideal.is_zero():
            raise ValueError("closure of the zero ideal")

    def __str__(self):
        return f"closure({self.ideal})"


@dataclass(frozen=True)
class ClosureOf:
    """Integral closure of each ideal of another filtration."""

    inner: "FiltrationSpec"

    def __str__(self):
        return f"closure_of({self.inner})"


@dataclass(frozen=True)
class Scaled:
    """``n -> inner_{a n}``."""

    inner: "FiltrationSpec"
    factor: int

    def __post_init__(self):
        if self.factor < 1:
            raise ValueError("scale factor must be a positive integer")
        if _contains_scaled(self.inner):
            raise ValueError("Scaled may not be nested inside another Scaled")

    def __str__(self):
        return f"scaled({self.inner}, {self.factor})"


FiltrationSpec = Union[Ordinary, Symbolic, Saturation, Closure, ClosureOf, Scaled]


def _contains_scaled(spec) -> bool:
    if isinstance(spec, Scaled):
        return True
    if isinstance(spec, ClosureOf):
        return _contains_scaled(spec.inner)
    return False


def spec_ring(spec: FiltrationSpec):
    if isinstance(spec, (ClosureOf, Scaled)):
        return spec_ring(spec.inner)
    return spec.ideal.ring


def realize(spec: FiltrationSpec, n: int) -> MonomialIdeal:
    """The n-th ideal of the filtration; ``n = 0`` always gives the unit ideal."""
    if n < 0:
        raise ValueError("filtration index must be nonnegative")
    if n == 0:
        return MonomialIdeal.unit(spec_ring(spec))
    return _realize(spec, n)


@lru_cache(maxsize=4096)
def _realize(spec: FiltrationSpec, n: int) -> MonomialIdeal:
    if isinstance(spec, Ordinary):
        # left fold I^n = I^(n-1) * I, reusing the cached lower power
        return spec.ideal if n == 1 else product(_realize(spec, n - 1), spec.ideal)
    if isinstance(spec, Symbolic):
        return symbolic_power(spec.ideal, n)
    if isinstance(spec, Saturation):
        return saturate(_realize(Ordinary(spec.ideal), n), spec.by)
    if isinstance(spec, Closure):
        return closure_power(spec.ideal, n)
    if isinstance(spec, ClosureOf):
        inner = _realize(spec.inner, n)
        if inner.is_zero():
            return inner
        return closure_power(inner, 1)
    if isinstance(spec, Scaled):
        return realize(spec.inner, spec.factor * n)
    raise TypeError(f"unknown filtration spec {spec!r}")


def clear_cache() -> None:
    _realize.cache_clear()


def module_mu(A: MonomialIdeal, B: MonomialIdeal) -> int:
    """Minimal number of generators of ``(A + B) / B``.

    By Nakayama this is ``dim_K (A + B) / (mA + B)``. That quotient has a
    monomial basis: a monomial lies in a sum of monomial ideals iff it lies in
    one of them, so the basis is the monomials of ``A`` outside ``mA`` and
    ``B``, which are exactly the minimal generators of ``A`` not in ``B``.
    """
    _check_same_ring(A.ring, B.ring)
    return int((~divisible_mask(A.exponents, B.exponents)).sum())


def defect(spec_i: FiltrationSpec, spec_j: FiltrationSpec, n: int) -> int:
    """``mu((I_n + J_n) / J_n)``; zero at ``n = 0``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return 0
    return module_mu(realize(spec_i, n), realize(spec_j, n))


@dataclass
class DefectSeries:
    pair: tuple[FiltrationSpec, FiltrationSpec]
    n_min: int
    n_max: int
    values: list[int]
    timings: list[float] = field(default_factory=list)

    @property
    def ns(self) -> range:
        return range(self.n_min, self.n_max + 1)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "def"])
        for n, v in zip(self.ns, self.values):
            w.writerow([n, v])
        return buf.getvalue()

    def to_dict(self) -> dict:
        return {
            "filtration_i": str(self.pair[0]),
            "filtration_j": str(self.pair[1]),
            "n_min": self.n_min,
            "n_max": self.n_max,
            "values": list(self.values),
        }


def read_series_csv(text: str) -> tuple[int, list[int]]:
    """Parse ``n,def`` CSV into ``(n_start, values)``; n must be consecutive."""
    rows = list(csv.reader(io.StringIO(text)))
    if not rows or [c.strip() for c in rows[0]] != ["n", "def"]:
        raise ValueError("series CSV must start with the header 'n,def'")
    ns, vals = [], []
    for lineno, row in enumerate(rows[1:], start=2):
        if not row:
            continue
        if len(row) != 2:
            raise ValueError(f"line {lineno}: expected two columns")
        try:
            ns.append(int(row[0]))
            vals.append(int(row[1]))
        except ValueError:
            raise ValueError(f"line {lineno}: non-integer entry") from None
    if not ns:
        raise ValueError("series CSV has no data rows")
    if ns != list(range(ns[0], ns[0] + len(ns))):
        raise ValueError("series n values must be consecutive")
    return ns[0], vals


def _timed_defect(args):
    spec_i, spec_j, n = args
    t = time.perf_counter()
    v = _at(n, defect, spec_i, spec_j, n)
    return v, time.perf_counter() - t


def _map(fn, items, jobs):
    if jobs is None:
        jobs = os.cpu_count() or 1
    if jobs <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items))


def defect_series(
    spec_i: FiltrationSpec,
    spec_j: FiltrationSpec,
    n_min: int,
    n_max: int,
    jobs: int | None = 1,
) -> DefectSeries:
    if not 1 <= n_min <= n_max:
        raise ValueError("need 1 <= n_min <= n_max")
    out = _map(_timed_defect, [(spec_i, spec_j, n) for n in range(n_min, n_max + 1)], jobs)
    return DefectSeries(
        pair=(spec_i, spec_j),
        n_min=n_min,
        n_max=n_max,
        values=[v for v, _ in out],
        timings=[t for _, t in out],
    )


# ---------------------------------------------------------------------------
# comparison with integral closures


def _check_containment(spec_i, spec_j, n):
    if n < 1:
        raise ValueError("n must be >= 1")
    if not ideal_leq(realize(spec_j, n), realize(spec_i, n)):
        raise ContainmentError(n)


def t_dim(spec_i: FiltrationSpec, spec_j: FiltrationSpec, n: int) -> int:
    """``dim_K (m Ī_n ∩ J̄_n) / m J̄_n``, requiring ``J_n ⊆ I_n``.

    Monomials of ``J̄_n`` outside ``m J̄_n`` are its minimal generators, so
    the dimension counts minimal generators of ``J̄_n`` lying in ``m Ī_n``.
    """
    _check_containment(spec_i, spec_j, n)
    i_bar = realize(ClosureOf(spec_i), n)
    j_bar = realize(ClosureOf(spec_j), n)
    return int(divisible_mask(j_bar.exponents, m_multiply(i_bar).exponents).sum())


def s_mu(spec_i: FiltrationSpec, spec_j: FiltrationSpec, n: int) -> int:
    """``mu((I_n ∩ J̄_n) / J_n)``, requiring ``J_n ⊆ I_n``."""
    _check_containment(spec_i, spec_j, n)
    A = intersect(realize(spec_i, n), realize(ClosureOf(spec_j), n))
    return module_mu(A, realize(spec_j, n))


@dataclass(frozen=True)
class GrowthRow:
    n: int
    defect: int
    defect_bar: int
    dim_t: int
    mu_s: int

    @property
    def ratio(self) -> Fraction | None:
        """``defect / defect_bar``; None when the denominator vanishes."""
        return None if self.defect_bar == 0 else Fraction(self.defect, self.defect_bar)

    @property
    def ratio_text(self) -> str:
        if self.defect_bar == 0:
            return "0/0" if self.defect == 0 else "x/0"
        r = self.ratio
        return f"{r.numerator}/{r.denominator}"

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "def": self.defect,
            "def_bar": self.defect_bar,
            "dim_T": self.dim_t,
            "mu_S": self.mu_s,
            "F": self.ratio_text,
        }


GROWTH_COLUMNS = ("n", "def", "def_bar", "dim_T", "mu_S", "F")


def _growth_row(args) -> GrowthRow:
    spec_i, spec_j, n = args
    return _at(n, _growth_row_at, spec_i, spec_j, n)


def _growth_row_at(spec_i, spec_j, n) -> GrowthRow:
    _check_containment(spec_i, spec_j, n)
    return GrowthRow(
        n=n,
        defect=defect(spec_i, spec_j, n),
        defect_bar=defect(ClosureOf(spec_i), ClosureOf(spec_j), n),
        dim_t=t_dim(spec_i, spec_j, n),
        mu_s=s_mu(spec_i, spec_j, n),
    )


def growth_report(
    spec_i: FiltrationSpec,
    spec_j: FiltrationSpec,
    n_min: int,
    n_max: int,
    jobs: int | None = 1,
) -> list[GrowthRow]:
    if not 1 <= n_min <= n_max:
        raise ValueError("need 1 <= n_min <= n_max")
    return _map(_growth_row, [(spec_i, spec_j, n) for n in range(n_min, n_max + 1)], jobs)


def growth_csv(rows: list[GrowthRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(GROWTH_COLUMNS)
    for row in rows:
        d = row.to_dict()
        w.writerow([d[c] for c in GROWTH_COLUMNS])
    return buf.getvalue()


def growth_json(rows: list[GrowthRow]) -> str:
    return json.dumps({"rows": [r.to_dict() for r in rows]}, indent=2) + "\n"
