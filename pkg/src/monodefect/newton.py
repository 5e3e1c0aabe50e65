"""Newton polyhedra of monomial ideals and integral closures of their powers.

All polyhedral arithmetic is exact. Fourier-Motzkin rows are kept as integer
vectors (a rational row scaled by a positive integer describes the same
halfspace), and normalized by their gcd after every combination.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .ring import MonomialIdeal, RingContext, Monomial, minimal_rows


@dataclass(frozen=True)
class Halfspace:
    """``normal · a >= offset``."""

    normal: tuple[Fraction, ...]
    offset: Fraction

    def contains(self, point: Sequence) -> bool:
        return sum(c * x for c, x in zip(self.normal, point)) >= self.offset

    def __str__(self) -> str:
        lhs = " + ".join(f"{_frac(c)}*a{i + 1}" for i, c in enumerate(self.normal) if c)
        return f"{lhs} >= {_frac(self.offset)}"


def _frac(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class NewtonPolyhedron:
    """conv(exponents) + nonnegative orthant, as the halfspaces beyond the orthant."""

    ring: RingContext
    halfspaces: tuple[Halfspace, ...]

    def dump(self) -> str:
        return "\n".join(str(h) for h in self.halfspaces)

    def integer_system(self) -> tuple[np.ndarray, np.ndarray]:
        """Integer matrix ``C`` and vector ``d`` with the same solution set ``C a >= d``."""
        rows, rhs = [], []
        for h in self.halfspaces:
            scale = math.lcm(*(q.denominator for q in (*h.normal, h.offset)))
            rows.append([int(q * scale) for q in h.normal])
            rhs.append(int(h.offset * scale))
        r = self.ring.num_vars
        return (np.array(rows, dtype=np.int64).reshape(len(rows), r),
                np.array(rhs, dtype=np.int64))


def _normalize(row: tuple[int, ...]) -> tuple[int, ...]:
    g = math.gcd(*row)
    return row if g in (0, 1) else tuple(x // g for x in row)


def _rank(vectors: list[list[Fraction]]) -> int:
    rows = [list(v) for v in vectors]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        p = rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][col] != 0:
                f = rows[i][col] / p[col]
                rows[i] = [x - f * y for x, y in zip(rows[i], p)]
        rank += 1
    return rank


def _fourier_motzkin(vertices: list[tuple[int, ...]], r: int) -> list[tuple[tuple[int, ...], int]]:
    """Project { a = sum l_i v_i + s, sum l_i = 1, l >= 0, s >= 0 } onto ``a``.

    The slack ``s`` is eliminated by substitution and the last weight by the
    equation, leaving rows ``c·a + e·l + k >= 0`` in the weights
    ``l_1 .. l_{k-1}``, which are then eliminated one at a time. Each row
    carries the set of original inequalities it was combined from; rows whose
    set exceeds (eliminated + 1) elements, or strictly contains another row's
    set, are redundant (Chernikov's rules) and dropped.
    Returns ``(c, k)`` pairs meaning ``c·a + k >= 0``.
    """
    k = len(vertices)
    last = vertices[-1]
    nl = k - 1
    # row layout: r coefficients on a, nl on the weights, then the constant
    rows: dict[tuple[int, ...], frozenset[int]] = {}

    def add(row, hist, table):
        row = _normalize(tuple(row))
        old = table.get(row)
        if old is None or len(hist) < len(old):
            table[row] = hist

    for i in range(nl):
        row = [0] * (r + nl + 1)
        row[r + i] = 1
        add(row, frozenset([i]), rows)
    row = [0] * r + [-1] * nl + [1]
    add(row, frozenset([nl]), rows)
    for j in range(r):
        row = [0] * (r + nl + 1)
        row[j] = 1
        for i in range(nl):
            row[r + i] = -(vertices[i][j] - last[j])
        row[-1] = -last[j]
        add(row, frozenset([k + j]), rows)

    for step in range(nl):
        col = r + step
        pos = [(row, h) for row, h in rows.items() if row[col] > 0]
        neg = [(row, h) for row, h in rows.items() if row[col] < 0]
        nxt: dict[tuple[int, ...], frozenset[int]] = {}
        for row, h in rows.items():
            if row[col] == 0:
                add(row, h, nxt)
        limit = step + 2
        for (p, hp), (q, hq) in itertools.product(pos, neg):
            hist = hp | hq
            if len(hist) > limit:
                continue
            a, b = p[col], -q[col]
            add([b * x + a * y for x, y in zip(p, q)], hist, nxt)
        # drop rows whose history strictly contains another row's history
        items = sorted(nxt.items(), key=lambda kv: len(kv[1]))
        kept: dict[tuple[int, ...], frozenset[int]] = {}
        hists: list[frozenset[int]] = []
        for row, h in items:
            if any(o < h for o in hists):
                continue
            kept[row] = h
            hists.append(h)
        rows = kept

    out = []
    for row in rows:
        c = row[:r]
        const = row[-1]
        out.append((tuple(c), const))
    return out


def newton_polyhedron(I: MonomialIdeal) -> NewtonPolyhedron:
    """Irredundant halfspace description of NP(I) beyond the orthant.

    Candidate halfspaces come from Fourier-Motzkin elimination; a candidate is
    kept only if it defines a facet, i.e. the generators tight on it together
    with the coordinate rays parallel to it span an (r-1)-dimensional face.
    """
    if I.is_zero():
        raise ValueError("the zero ideal has no Newton polyhedron")
    r = I.ring.num_vars
    verts = [tuple(int(x) for x in row) for row in I.exponents]
    candidates = _fourier_motzkin(verts, r)
    seen = set()
    halfspaces = []
    for c, const in candidates:
        offset = -const
        if not any(c) or offset <= 0:
            # implied by the orthant
            continue
        key = _normalize(c + (offset,))
        if key in seen:
            continue
        seen.add(key)
        if not _is_facet(c, offset, verts, r):
            continue
        halfspaces.append(Halfspace(tuple(Fraction(x) for x in key[:r]), Fraction(key[r])))
    halfspaces.sort(key=lambda h: (h.offset, tuple(-x for x in h.normal)))
    return NewtonPolyhedron(I.ring, tuple(halfspaces))


def _is_facet(c, offset, verts, r) -> bool:
    tight = [v for v in verts if sum(x * y for x, y in zip(c, v)) == offset]
    if not tight:
        return False
    base = tight[0]
    span = [[Fraction(x - y) for x, y in zip(v, base)] for v in tight[1:]]
    span += [[Fraction(int(i == j)) for i in range(r)] for j in range(r) if c[j] == 0]
    if not span:
        return r == 1
    return _rank(span) == r - 1


def in_scaled_np(np_: NewtonPolyhedron, n: int, m: Monomial) -> bool:
    """Whether the exponent of ``m`` lies in ``n`` times the polyhedron."""
    if np_.ring != m.ring:
        raise ValueError("ring mismatch")
    return all(
        sum(c * x for c, x in zip(h.normal, m.exponents)) >= n * h.offset
        for h in np_.halfspaces
    )


def closure_power(I: MonomialIdeal, n: int, np_: NewtonPolyhedron | None = None) -> MonomialIdeal:
    """Integral closure of ``I**n``: minimal lattice points of ``n·NP(I)``.

    A minimal point ``a = n·c + s`` (c in the convex hull, s >= 0) has every
    ``s_i < 1``, so each coordinate is at most ``n·d_max`` where ``d_max`` is
    the largest generator exponent; the box ``[0, n·d_max]^r`` is scanned.
    """
    if I.is_zero():
        raise ValueError("the zero ideal has no integral closure here")
    if n < 1:
        raise ValueError("closure_power needs n >= 1")
    ring = I.ring
    if I.is_unit():
        return I
    if np_ is None:
        np_ = newton_polyhedron(I)
    C, d = np_.integer_system()
    side = n * I.max_exponent() + 1
    r = ring.num_vars
    grid = np.indices((side,) * r, dtype=np.int64).reshape(r, -1).T
    inside = ((grid @ C.T) >= n * d).all(axis=1).reshape((side,) * r)
    minimal = inside.copy()
    for i in range(r):
        lead = [slice(None)] * r
        lead[i] = slice(1, None)
        back = [slice(None)] * r
        back[i] = slice(None, -1)
        minimal[tuple(lead)] &= ~inside[tuple(back)]
    pts = np.argwhere(minimal).astype(np.int64)
    return MonomialIdeal(ring, minimal_rows(pts), _trusted=True)
