"""Exact rational linear-programming feasibility.

Decides whether {x >= 0 : A x = b} is nonempty by a phase-1 simplex with
Bland's rule over Fractions.  No floating point anywhere: the affine cases
this package cares about sit exactly on the finite/indefinite boundary.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence

Row = list[Fraction]


def feasible(a: Sequence[Sequence[Fraction]], b: Sequence[Fraction]) -> Optional[list[Fraction]]:
    """Return some x >= 0 with A x = b, or None if the system is infeasible."""
    m = len(a)
    if m == 0:
        return []
    n = len(a[0])

    # Normalize to b >= 0, then append one artificial variable per row.
    tab: list[Row] = []
    rhs: Row = []
    for i in range(m):
        row = [Fraction(v) for v in a[i]]
        bi = Fraction(b[i])
        if bi < 0:
            row = [-v for v in row]
            bi = -bi
        tab.append(row)
        rhs.append(bi)

    total = n + m
    for i in range(m):
        for j in range(m):
            tab[i].append(Fraction(1 if i == j else 0))
    basis = list(range(n, total))

    # Phase-1 objective: minimize the sum of artificials.
    cost = [Fraction(0)] * total
    for j in range(n, total):
        cost[j] = Fraction(1)
    # Reduced costs relative to the artificial basis.
    z = [Fraction(0)] * total
    for j in range(total):
        z[j] = sum(tab[i][j] for i in range(m)) - cost[j]
    zval = sum(rhs)

    while True:
        enter = -1
        for j in range(total):  # Bland: smallest index with positive reduced cost
            if z[j] > 0:
                enter = j
                break
        if enter < 0:
            break
        leave = -1
        best: Optional[Fraction] = None
        for i in range(m):
            if tab[i][enter] > 0:
                ratio = rhs[i] / tab[i][enter]
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best = ratio
                    leave = i
        if leave < 0:
            break  # unbounded phase-1 cannot happen, guard anyway
        piv = tab[leave][enter]
        tab[leave] = [v / piv for v in tab[leave]]
        rhs[leave] /= piv
        for i in range(m):
            if i != leave and tab[i][enter] != 0:
                f = tab[i][enter]
                tab[i] = [u - f * v for u, v in zip(tab[i], tab[leave])]
                rhs[i] -= f * rhs[leave]
        f = z[enter]
        z = [u - f * v for u, v in zip(z, tab[leave])]
        zval -= f * rhs[leave]
        basis[leave] = enter

    if zval != 0:
        return None
    x = [Fraction(0)] * n
    for i in range(m):
        if basis[i] < n:
            x[basis[i]] = rhs[i]
    return x
