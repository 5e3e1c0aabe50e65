"""Polynomial ring context, monomials and monomial ideals.

A monomial ideal is stored as the antichain of its minimal generators, held
as a read-only ``int64`` array of shape ``(k, r)`` in canonical order:
ascending total degree, ties broken by descending lexicographic order of the
exponent vector (so ``x1^2, x1*x2, x2^2``).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

# Exponents live in int64 arrays; sums of two in-range exponents cannot wrap.
EXPONENT_LIMIT = 2**40

_CHUNK_CELLS = 4_000_000


class RingMismatchError(ValueError):
    pass


@dataclass(frozen=True)
class RingContext:
    """The polynomial ring K[x1, ..., xr]; only the variable names matter."""

    var_names: tuple[str, ...]

    def __post_init__(self):
        names = tuple(self.var_names)
        object.__setattr__(self, "var_names", names)
        if len(names) < 1:
            raise ValueError("a ring needs at least one variable")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        for name in names:
            if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", name):
                raise ValueError(f"invalid variable name {name!r}")

    @classmethod
    def standard(cls, num_vars: int, prefix: str = "x") -> "RingContext":
        if num_vars < 1:
            raise ValueError("a ring needs at least one variable")
        return cls(tuple(f"{prefix}{i}" for i in range(1, num_vars + 1)))

    @property
    def num_vars(self) -> int:
        return len(self.var_names)

    def monomial(self, *exponents: int) -> "Monomial":
        return Monomial(self, tuple(exponents))

    def one(self) -> "Monomial":
        return Monomial(self, (0,) * self.num_vars)

    def var(self, i: int) -> "Monomial":
        """The i-th variable, 0-based."""
        e = [0] * self.num_vars
        e[i] = 1
        return Monomial(self, tuple(e))

    def ideal(self, text: str) -> "MonomialIdeal":
        return parse_ideal(text, self)


def _check_same_ring(a: RingContext, b: RingContext) -> None:
    if a != b:
        raise RingMismatchError(f"ring mismatch: {a.var_names} vs {b.var_names}")


def _check_exponents(arr: np.ndarray) -> None:
    if arr.size and (arr.min() < 0 or arr.max() >= EXPONENT_LIMIT):
        if arr.min() < 0:
            raise ValueError("negative exponent")
        raise OverflowError("exponent exceeds supported range")


@dataclass(frozen=True)
class Monomial:
    ring: RingContext
    exponents: tuple[int, ...]

    def __post_init__(self):
        exps = tuple(int(e) for e in self.exponents)
        object.__setattr__(self, "exponents", exps)
        if len(exps) != self.ring.num_vars:
            raise ValueError(
                f"expected {self.ring.num_vars} exponents, got {len(exps)}"
            )
        if any(e < 0 for e in exps):
            raise ValueError("negative exponent")
        if any(e >= EXPONENT_LIMIT for e in exps):
            raise OverflowError("exponent exceeds supported range")

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    def __mul__(self, other: "Monomial") -> "Monomial":
        _check_same_ring(self.ring, other.ring)
        return Monomial(self.ring, tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def __pow__(self, k: int) -> "Monomial":
        return Monomial(self.ring, tuple(a * k for a in self.exponents))

    def lcm(self, other: "Monomial") -> "Monomial":
        _check_same_ring(self.ring, other.ring)
        return Monomial(self.ring, tuple(map(max, self.exponents, other.exponents)))

    def gcd(self, other: "Monomial") -> "Monomial":
        _check_same_ring(self.ring, other.ring)
        return Monomial(self.ring, tuple(map(min, self.exponents, other.exponents)))

    def __str__(self) -> str:
        return format_monomial(self.exponents, self.ring)

    def __repr__(self) -> str:
        return f"Monomial({self})"


def format_monomial(exponents: Sequence[int], ring: RingContext) -> str:
    parts = []
    for name, e in zip(ring.var_names, exponents):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


def divides(a: Monomial, b: Monomial) -> bool:
    """True iff ``a`` divides ``b``."""
    _check_same_ring(a.ring, b.ring)
    return all(x <= y for x, y in zip(a.exponents, b.exponents))


# ---------------------------------------------------------------------------
# array kernels


def canonical_order(arr: np.ndarray) -> np.ndarray:
    """Sort rows by ascending degree, then descending lex."""
    if len(arr) <= 1:
        return arr
    keys = [-arr[:, j] for j in range(arr.shape[1] - 1, -1, -1)]
    keys.append(arr.sum(axis=1))
    return arr[np.lexsort(keys)]


def _packing(cands: np.ndarray, gens: np.ndarray):
    """Field width for packing rows into one uint64, or None if they don't fit.

    Each exponent gets a field of ``bits`` bits whose top bit is a guard, so
    ``((b | H) - a) & H == H`` tests ``a <= b`` in every field at once.
    """
    r = cands.shape[1]
    bits = 64 // r
    if bits < 2:
        return None
    top = max(int(cands.max(initial=0)), int(gens.max(initial=0)))
    if top >= 1 << (bits - 1):
        return None
    return bits


def _pack(arr: np.ndarray, bits: int) -> np.ndarray:
    shifts = np.arange(arr.shape[1], dtype=np.uint64) * np.uint64(bits)
    return (arr.astype(np.uint64) << shifts).sum(axis=1, dtype=np.uint64)


def divisible_mask(cands: np.ndarray, gens: np.ndarray) -> np.ndarray:
    """Boolean mask: row i of ``cands`` is a multiple of some row of ``gens``."""
    n = len(cands)
    out = np.zeros(n, dtype=bool)
    if n == 0 or len(gens) == 0:
        return out
    r = cands.shape[1]
    bits = _packing(cands, gens)
    if bits is not None:
        guard = np.uint64(sum(1 << (bits * j + bits - 1) for j in range(r)))
        pc = _pack(cands, bits) | guard
        pg = _pack(gens, bits)
        step = max(1, _CHUNK_CELLS // len(gens))
        for lo in range(0, n, step):
            diff = pc[lo:lo + step, None] - pg[None, :]
            out[lo:lo + step] = ((diff & guard) == guard).any(axis=1)
        return out
    step = max(1, _CHUNK_CELLS // (len(gens) * max(r, 1)))
    for lo in range(0, n, step):
        block = cands[lo:lo + step]
        out[lo:lo + step] = (gens[None, :, :] <= block[:, None, :]).all(axis=2).any(axis=1)
    return out


def minimal_rows(arr: np.ndarray) -> np.ndarray:
    """Divisibility-minimal rows of ``arr``, deduplicated, in canonical order.

    Rows are processed one degree layer at a time; a candidate only needs to
    be tested against the minimal rows already accepted from lower degrees
    (distinct rows of equal degree never divide each other).
    """
    arr = np.asarray(arr, dtype=np.int64)
    if arr.ndim != 2:
        raise ValueError("expected a 2-d exponent array")
    if len(arr) == 0:
        return arr.reshape(0, arr.shape[1])
    arr = np.unique(arr, axis=0)
    arr = canonical_order(arr)
    deg = arr.sum(axis=1)
    if deg[0] == 0:
        return arr[:1]
    bounds = np.flatnonzero(np.diff(deg)) + 1
    layers = np.split(arr, bounds)
    kept = [layers[0]]
    accepted = layers[0]
    for layer in layers[1:]:
        fresh = layer[~divisible_mask(layer, accepted)]
        if len(fresh):
            kept.append(fresh)
            accepted = np.concatenate([accepted, fresh])
    return accepted


class MonomialIdeal:
    """A monomial ideal given by its unique minimal generating set.

    Instances are immutable. The zero ideal has no generators; the unit ideal
    has the single generator 1.
    """

    __slots__ = ("ring", "_exps", "_hash")

    def __init__(self, ring: RingContext, exponents, *, _trusted: bool = False):
        arr = np.asarray(exponents, dtype=np.int64)
        if arr.size == 0:
            arr = arr.reshape(0, ring.num_vars)
        if arr.ndim != 2 or arr.shape[1] != ring.num_vars:
            raise ValueError(f"exponent array must have shape (k, {ring.num_vars})")
        _check_exponents(arr)
        if not _trusted:
            arr = minimal_rows(arr)
        arr = np.ascontiguousarray(arr)
        arr.flags.writeable = False
        self.ring = ring
        self._exps = arr
        self._hash = None

    # construction helpers
    @classmethod
    def zero(cls, ring: RingContext) -> "MonomialIdeal":
        return cls(ring, np.zeros((0, ring.num_vars), dtype=np.int64), _trusted=True)

    @classmethod
    def unit(cls, ring: RingContext) -> "MonomialIdeal":
        return cls(ring, np.zeros((1, ring.num_vars), dtype=np.int64), _trusted=True)

    @classmethod
    def maximal(cls, ring: RingContext) -> "MonomialIdeal":
        return cls(ring, np.eye(ring.num_vars, dtype=np.int64))

    @classmethod
    def principal(cls, m: Monomial) -> "MonomialIdeal":
        return cls(m.ring, [m.exponents])

    @property
    def exponents(self) -> np.ndarray:
        """Read-only ``(k, r)`` array of minimal generator exponents."""
        return self._exps

    @property
    def gens(self) -> tuple[Monomial, ...]:
        return tuple(Monomial(self.ring, tuple(int(e) for e in row)) for row in self._exps)

    def is_zero(self) -> bool:
        return len(self._exps) == 0

    def is_unit(self) -> bool:
        return len(self._exps) == 1 and not self._exps[0].any()

    def max_exponent(self) -> int:
        return int(self._exps.max()) if self._exps.size else 0

    def __len__(self) -> int:
        return len(self._exps)

    def __contains__(self, m: Monomial) -> bool:
        return contains(self, m)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.ring == other.ring and np.array_equal(self._exps, other._exps)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ring, self._exps.shape, self._exps.tobytes()))
        return self._hash

    def __le__(self, other: "MonomialIdeal") -> bool:
        return ideal_leq(self, other)

    def __ge__(self, other: "MonomialIdeal") -> bool:
        return ideal_leq(other, self)

    def __str__(self) -> str:
        return print_ideal(self)

    def __repr__(self) -> str:
        return f"MonomialIdeal({print_ideal(self)})"

    def __reduce__(self):
        return (MonomialIdeal, (self.ring, self._exps.copy()))


def minimalize(gens: Iterable[Monomial], ring: RingContext | None = None) -> MonomialIdeal:
    """Ideal generated by ``gens``; an empty input gives the zero ideal."""
    gens = list(gens)
    if ring is None:
        if not gens:
            raise ValueError("ring required for an empty generator list")
        ring = gens[0].ring
    for g in gens:
        _check_same_ring(ring, g.ring)
    arr = np.array([g.exponents for g in gens], dtype=np.int64).reshape(len(gens), ring.num_vars)
    return MonomialIdeal(ring, arr)


def contains(ideal: MonomialIdeal, m: Monomial) -> bool:
    _check_same_ring(ideal.ring, m.ring)
    if ideal.is_zero():
        return False
    return bool((ideal.exponents <= np.asarray(m.exponents)).all(axis=1).any())


def ideal_leq(a: MonomialIdeal, b: MonomialIdeal) -> bool:
    """Containment ``a`` ⊆ ``b``."""
    _check_same_ring(a.ring, b.ring)
    return bool(divisible_mask(a.exponents, b.exponents).all())


# ---------------------------------------------------------------------------
# text format

_TOKEN = re.compile(r"^\s*([A-Za-z_][A-Za-z0-9_]*)\s*(?:\^\s*(-?\d+))?\s*$")


class IdealSyntaxError(ValueError):
    pass


def parse_monomial(text: str, ring: RingContext) -> Monomial:
    text = text.strip()
    if text == "1":
        return ring.one()
    if not text:
        raise IdealSyntaxError("empty monomial term")
    index = {name: i for i, name in enumerate(ring.var_names)}
    exps = [0] * ring.num_vars
    for factor in text.split("*"):
        match = _TOKEN.match(factor)
        if not match:
            if factor.strip() == "1":
                continue
            raise IdealSyntaxError(f"malformed factor {factor.strip()!r} in {text!r}")
        name, power = match.group(1), match.group(2)
        if name not in index:
            raise IdealSyntaxError(f"unknown variable {name!r}")
        k = 1 if power is None else int(power)
        if k < 0:
            raise IdealSyntaxError(f"negative exponent in {factor.strip()!r}")
        exps[index[name]] += k
    return Monomial(ring, tuple(exps))


def parse_ideal(text: str, ring: RingContext) -> MonomialIdeal:
    """Parse ``"x1*x2, x2^3"``; ``"0"`` is the zero ideal, ``"1"`` the unit ideal."""
    text = text.strip()
    if text.startswith("(") and text.endswith(")"):
        text = text[1:-1].strip()
    if text == "0":
        return MonomialIdeal.zero(ring)
    if not text:
        raise IdealSyntaxError("empty ideal text (use '0' for the zero ideal)")
    return minimalize([parse_monomial(t, ring) for t in text.split(",")], ring)


def print_ideal(ideal: MonomialIdeal) -> str:
    if ideal.is_zero():
        return "0"
    return ", ".join(format_monomial(row, ideal.ring) for row in ideal.exponents)
