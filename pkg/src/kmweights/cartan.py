"""Generalized Cartan matrices: validation, classification, subdiagrams."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .errors import InvalidGCM
from .lp import feasible


class DiagramType(enum.Enum):
    FINITE = "Finite"
    AFFINE = "Affine"
    INDEFINITE = "Indefinite"


@dataclass(frozen=True)
class GCM:
    """An n x n generalized Cartan matrix with string node labels.

    Axioms: a[i][i] = 2, a[i][j] <= 0 off the diagonal, and
    a[i][j] = 0 iff a[j][i] = 0.
    """

    a: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...] = field(default=())

    def __post_init__(self):
        n = len(self.a)
        labels = self.labels if self.labels else tuple(str(i) for i in range(n))
        object.__setattr__(self, "labels", labels)
        if len(labels) != n:
            raise InvalidGCM(f"expected {n} labels, got {len(labels)}")
        for i, row in enumerate(self.a):
            if len(row) != n:
                raise InvalidGCM(f"row {i} has length {len(row)}, expected {n}")
            if row[i] != 2:
                raise InvalidGCM(f"a[{i}][{i}] = {row[i]} != 2")
            for j, v in enumerate(row):
                if i != j and v > 0:
                    raise InvalidGCM(f"a[{i}][{j}] = {v} > 0")
                if i != j and (v == 0) != (self.a[j][i] == 0):
                    raise InvalidGCM(
                        f"a[{i}][{j}] = {v} but a[{j}][{i}] = {self.a[j][i]}"
                    )

    @property
    def n(self) -> int:
        return len(self.a)

    def neighbors(self, i: int) -> list[int]:
        return [j for j in range(self.n) if j != i and self.a[i][j] != 0]


def parse_gcm(matrix: Sequence[Sequence[int]], labels: Optional[Sequence[str]] = None) -> GCM:
    """Validate an integer matrix (nested lists) as a GCM."""
    try:
        rows = tuple(tuple(int(v) for v in row) for row in matrix)
    except (TypeError, ValueError) as exc:
        raise InvalidGCM(f"matrix entries must be integers: {exc}") from None
    return GCM(rows, tuple(labels) if labels else ())


def components(g: GCM) -> list[tuple[int, ...]]:
    """Connected components of the Dynkin diagram, each sorted."""
    seen: set[int] = set()
    out = []
    for start in range(g.n):
        if start in seen:
            continue
        comp = {start}
        stack = [start]
        while stack:
            i = stack.pop()
            for j in g.neighbors(i):
                if j not in comp:
                    comp.add(j)
                    stack.append(j)
        seen |= comp
        out.append(tuple(sorted(comp)))
    return out


def subdiagram(g: GCM, nodes: Sequence[int]) -> GCM:
    """Principal submatrix on the given nodes, labels inherited."""
    nodes = list(nodes)
    if not all(0 <= i < g.n for i in nodes):
        raise InvalidGCM(f"nodes {nodes} not a subset of 0..{g.n - 1}")
    a = tuple(tuple(g.a[i][j] for j in nodes) for i in nodes)
    return GCM(a, tuple(g.labels[i] for i in nodes))


def _component_type(g: GCM, nodes: tuple[int, ...]) -> DiagramType:
    # Vinberg trichotomy for an indecomposable GCM A, decided by exact LP:
    #   Finite: exists u > 0 with Au > 0;  Affine: exists u > 0 with Au = 0.
    # Both systems are homogeneous, so strictness can be replaced by >= 1.
    k = len(nodes)
    a = [[Fraction(g.a[nodes[i]][nodes[j]]) for j in range(k)] for i in range(k)]
    row_sums = [sum(row) for row in a]
    # Finite: A(x + 1) - s = 1, i.e. Ax - s = 1 - A1, x, s >= 0.
    eq = [a[i] + [Fraction(-1 if i == j else 0) for j in range(k)] for i in range(k)]
    if feasible(eq, [1 - row_sums[i] for i in range(k)]) is not None:
        return DiagramType.FINITE
    # Affine: A(x + 1) = 0, i.e. Ax = -A1, x >= 0.
    if feasible(a, [-row_sums[i] for i in range(k)]) is not None:
        return DiagramType.AFFINE
    return DiagramType.INDEFINITE


def classify(g: GCM) -> list[tuple[tuple[int, ...], DiagramType]]:
    """Label each indecomposable component Finite, Affine, or Indefinite."""
    return [(comp, _component_type(g, comp)) for comp in components(g)]


def is_finite_type(g: GCM) -> bool:
    return all(t is DiagramType.FINITE for _, t in classify(g))


def symmetrizable(g: GCM) -> Optional[tuple[Fraction, ...]]:
    """A positive rational diagonal d with d_i a_ij = d_j a_ji, or None.

    Propagates d along diagram edges; a cycle with inconsistent
    proportionality makes the matrix non-symmetrizable.
    """
    d: list[Optional[Fraction]] = [None] * g.n
    for comp in components(g):
        root = comp[0]
        d[root] = Fraction(1)
        stack = [root]
        while stack:
            i = stack.pop()
            for j in g.neighbors(i):
                want = d[i] * Fraction(g.a[i][j], g.a[j][i])
                if d[j] is None:
                    d[j] = want
                    stack.append(j)
                elif d[j] != want:
                    return None
    # Clear denominators to keep the witness integral, then verify.
    assert all(v is not None and v > 0 for v in d)
    for i in range(g.n):
        for j in range(g.n):
            if d[i] * g.a[i][j] != d[j] * g.a[j][i]:
                return None
    return tuple(d)  # type: ignore[arg-type]
