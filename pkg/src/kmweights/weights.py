"""Highest weights, offsets, pairings, integrability, dominance order.

A weight is always mu = lambda - sum_i c_i alpha_i and is stored as the
offset vector c; lambda itself enters only through its exact rational
pairings q_i = (h_i, lambda).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .cartan import GCM

Offset = tuple[int, ...]
SignedOffset = tuple[int, ...]


@dataclass(frozen=True)
class HighestWeight:
    """lambda given by its pairings q_i = (h_i, lambda), exact rationals."""

    q: tuple[Fraction, ...]

    @staticmethod
    def of(values: Iterable) -> "HighestWeight":
        return HighestWeight(tuple(Fraction(v) for v in values))

    @property
    def n(self) -> int:
        return len(self.q)


def ht(c: Sequence[int]) -> int:
    return sum(c)


def zero_offset(n: int) -> Offset:
    return (0,) * n


def unit(n: int, i: int) -> SignedOffset:
    return tuple(1 if j == i else 0 for j in range(n))


def add(c1: Sequence[int], c2: Sequence[int]) -> tuple[int, ...]:
    return tuple(x + y for x, y in zip(c1, c2))


def sub(c1: Sequence[int], c2: Sequence[int]) -> tuple[int, ...]:
    return tuple(x - y for x, y in zip(c1, c2))


def neg(c: Sequence[int]) -> tuple[int, ...]:
    return tuple(-x for x in c)


def scale(k: int, c: Sequence[int]) -> tuple[int, ...]:
    return tuple(k * x for x in c)


def is_positive(c: Sequence[int]) -> bool:
    """All entries >= 0 and not all zero."""
    return all(x >= 0 for x in c) and any(x != 0 for x in c)


def is_negative(c: Sequence[int]) -> bool:
    return all(x <= 0 for x in c) and any(x != 0 for x in c)


def cartan_pairing(g: GCM, c: Sequence[int], i: int) -> int:
    """(h_i, sum_j c_j alpha_j) = (A c)_i."""
    return sum(g.a[i][j] * c[j] for j in range(g.n))


def pairing(lam: HighestWeight, g: GCM, c: Sequence[int], i: int) -> Fraction:
    """(h_i, lambda - sum_j c_j alpha_j) = q_i - (A c)_i."""
    return lam.q[i] - cartan_pairing(g, c, i)


def integrability_set(lam: HighestWeight) -> frozenset[int]:
    """I_lambda: nodes where (h_i, lambda) is a nonnegative integer."""
    return frozenset(
        i for i, qi in enumerate(lam.q) if qi.denominator == 1 and qi >= 0
    )


def leq(c1: Offset, c2: Offset) -> bool:
    """mu1 <= mu2 in the dominance order, mu_k = lambda - c_k."""
    if len(c1) != len(c2):
        raise ValueError("rank mismatch")
    return all(x >= y for x, y in zip(c1, c2))


def in_parabolic_dominant(
    lam: HighestWeight, g: GCM, c: Sequence[int], nodes: Iterable[int]
) -> bool:
    """mu = lambda - c lies in the parabolic dominant chamber for `nodes`."""
    for i in nodes:
        p = pairing(lam, g, c, i)
        if p.denominator != 1 or p < 0:
            return False
    return True


def fraction_str(x: Fraction) -> str:
    """Canonical lowest-terms serialization, 'p' or 'p/q' with q > 0."""
    return str(x)
