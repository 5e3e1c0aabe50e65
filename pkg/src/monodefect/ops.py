"""Arithmetic of monomial ideals."""

from __future__ import annotations

from functools import reduce

import numpy as np

from .ring import (
    Monomial,
    MonomialIdeal,
    RingContext,
    _check_same_ring,
    divisible_mask,
    minimal_rows,
)

# caps the size of a pairwise (k1, k2, r) block before minimalization
_PAIR_BLOCK = 2_000_000


def _pairwise(a: np.ndarray, b: np.ndarray, op) -> np.ndarray:
    """Minimal rows among ``op(a_i, b_j)`` for all pairs, built block-wise."""
    r = a.shape[1]
    if len(a) == 0 or len(b) == 0:
        return np.zeros((0, r), dtype=np.int64)
    if len(a) < len(b):
        a, b = b, a
    step = max(1, _PAIR_BLOCK // (len(b) * r))
    acc = None
    for lo in range(0, len(a), step):
        block = op(a[lo:lo + step, None, :], b[None, :, :]).reshape(-1, r)
        block = minimal_rows(block)
        if acc is None:
            acc = block
        else:
            # drop rows already implied by what has been collected so far
            block = block[~divisible_mask(block, acc)]
            acc = minimal_rows(np.concatenate([acc, block]))
    return acc


def ideal_sum(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _check_same_ring(I.ring, J.ring)
    return MonomialIdeal(I.ring, np.concatenate([I.exponents, J.exponents]))


def product(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _check_same_ring(I.ring, J.ring)
    return MonomialIdeal(I.ring, _pairwise(I.exponents, J.exponents, np.add), _trusted=True)


def power(I: MonomialIdeal, n: int) -> MonomialIdeal:
    """``I**n`` by a left fold of products, minimalizing after each step."""
    if n < 0:
        raise ValueError("power exponent must be nonnegative")
    result = MonomialIdeal.unit(I.ring)
    for _ in range(n):
        result = product(result, I)
    return result


def intersect(*ideals: MonomialIdeal) -> MonomialIdeal:
    """Intersection; generated by pairwise lcms, folded left to right."""
    if not ideals:
        raise ValueError("intersect needs at least one ideal")
    for J in ideals[1:]:
        _check_same_ring(ideals[0].ring, J.ring)

    def step(I, J):
        return MonomialIdeal(I.ring, _pairwise(I.exponents, J.exponents, np.maximum), _trusted=True)

    return reduce(step, ideals)


def colon_mono(I: MonomialIdeal, m: Monomial) -> MonomialIdeal:
    """``I : m`` for a single monomial ``m``."""
    _check_same_ring(I.ring, m.ring)
    return MonomialIdeal(I.ring, np.maximum(I.exponents - np.asarray(m.exponents), 0))


def colon(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _check_same_ring(I.ring, J.ring)
    if J.is_zero():
        raise ValueError("colon by the zero ideal is undefined here")
    return intersect(*(colon_mono(I, g) for g in J.gens))


def saturate_with_count(I: MonomialIdeal, J: MonomialIdeal) -> tuple[MonomialIdeal, int]:
    """``I : J^∞`` together with the number of colon steps taken.

    Iterates ``K <- K : J`` from ``K = I`` until two consecutive iterates
    agree; the count includes the final, stabilizing step.
    """
    _check_same_ring(I.ring, J.ring)
    if J.is_zero():
        raise ValueError("saturation by the zero ideal is undefined here")
    current = I
    steps = 0
    while True:
        nxt = colon(current, J)
        steps += 1
        if nxt == current:
            return current, steps
        current = nxt


def saturate(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    return saturate_with_count(I, J)[0]


def radical(I: MonomialIdeal) -> MonomialIdeal:
    return MonomialIdeal(I.ring, np.minimum(I.exponents, 1))


def mu(I: MonomialIdeal) -> int:
    """Minimal number of generators."""
    return len(I)


def maximal_ideal(ring: RingContext) -> MonomialIdeal:
    return MonomialIdeal.maximal(ring)


def m_multiply(I: MonomialIdeal) -> MonomialIdeal:
    return product(I, MonomialIdeal.maximal(I.ring))
