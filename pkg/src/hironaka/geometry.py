"""Exact geometry of finite point sets in the nonnegative orthant.

Points are exponent vectors: tuples of nonnegative integers (or Fractions
for the rational game variant). Everything here is exact; no floats are
ever accepted or produced.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Scalar = int | Fraction
Point = tuple[Scalar, ...]
CoordinateSubset = tuple[int, ...]


class NoHittingSet(Exception):
    """No coordinate subset can hit every vertex (some vertex is the origin)."""


def _as_scalar(value) -> Scalar:
    if isinstance(value, bool):
        raise TypeError(f"not an exact scalar: {value!r}")
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        # keep integers as ints so equal configurations serialize identically
        return int(value) if value.denominator == 1 else value
    raise TypeError(f"not an exact scalar: {value!r}")


@dataclass(frozen=True)
class PointConfiguration:
    """Canonical finite point set: deduplicated, sorted lexicographically.

    Use :meth:`from_points` to build one from raw data; the plain constructor
    assumes its arguments are already canonical.
    """

    dim: int
    points: tuple[Point, ...]

    @classmethod
    def from_points(cls, points: Iterable[Sequence[Scalar]]) -> "PointConfiguration":
        converted = {tuple(_as_scalar(c) for c in p) for p in points}
        if not converted:
            raise ValueError("a configuration needs at least one point")
        dims = {len(p) for p in converted}
        if len(dims) != 1:
            raise ValueError(f"points of mixed dimension: {sorted(dims)}")
        dim = dims.pop()
        if dim < 2:
            raise ValueError(f"dimension must be >= 2, got {dim}")
        for p in converted:
            if any(c < 0 for c in p):
                raise ValueError(f"point outside the nonnegative orthant: {p}")
        return cls(dim, tuple(sorted(converted)))

    def __len__(self) -> int:
        return len(self.points)


def remove_dominated(config: PointConfiguration) -> PointConfiguration:
    """Drop every point that lies above another one componentwise.

    A point p is removed when some other q satisfies q_j <= p_j for all j;
    the survivors are the minimal points of the configuration.
    """
    points = config.points
    kept = []
    for p in points:
        dominated = False
        for q in points:
            if q is not p and all(qc <= pc for qc, pc in zip(q, p)):
                dominated = True
                break
        if not dominated:
            kept.append(p)
    return PointConfiguration(config.dim, tuple(kept))


def shift_to_axes(config: PointConfiguration) -> PointConfiguration:
    """Translate by the componentwise minimum so every axis is touched."""
    mins = [min(p[j] for p in config.points) for j in range(config.dim)]
    if all(m == 0 for m in mins):
        return config
    shifted = sorted(tuple(c - m for c, m in zip(p, mins)) for p in config.points)
    return PointConfiguration(config.dim, tuple(shifted))


def diagonal_shift(config: PointConfiguration) -> PointConfiguration:
    """Translate by t*(1,...,1) with t maximal keeping all coordinates >= 0.

    Integer coordinates only; t = min over points of their smallest coordinate.
    """
    for p in config.points:
        if any(not isinstance(c, int) for c in p):
            raise TypeError("diagonal shift requires integer coordinates")
    t = min(min(p) for p in config.points)
    if t == 0:
        return config
    shifted = sorted(tuple(c - t for c in p) for p in config.points)
    return PointConfiguration(config.dim, tuple(shifted))


def rational_feasible(
    equalities: Sequence[Sequence[Scalar]], rhs: Sequence[Scalar]
) -> bool:
    """Decide whether {x >= 0 : A x = b} is nonempty, exactly.

    Phase-one simplex over Fractions with Bland's rule, so it terminates and
    never sees a rounding error.
    """
    nrows = len(equalities)
    ncols = len(equalities[0]) if nrows else 0
    tab = []
    for row, b in zip(equalities, rhs):
        coeffs = [Fraction(c) for c in row]
        b = Fraction(b)
        if b < 0:
            coeffs = [-c for c in coeffs]
            b = -b
        tab.append(coeffs + [b])
    # one artificial variable per row; minimize their sum
    for i in range(nrows):
        for k in range(nrows):
            tab[i].insert(ncols + k, Fraction(1 if k == i else 0))
    basis = [ncols + i for i in range(nrows)]
    total = ncols + nrows
    obj = [Fraction(0)] * (total + 1)
    for j in range(ncols):
        obj[j] = -sum(tab[i][j] for i in range(nrows))
    obj[total] = -sum(tab[i][total] for i in range(nrows))

    while True:
        enter = next((j for j in range(total) if obj[j] < 0), None)
        if enter is None:
            break
        leave, best = None, None
        for i in range(nrows):
            a = tab[i][enter]
            if a > 0:
                ratio = tab[i][total] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    leave, best = i, ratio
        if leave is None:
            raise ArithmeticError("phase-one objective unbounded; inconsistent tableau")
        pivot = tab[leave][enter]
        tab[leave] = [c / pivot for c in tab[leave]]
        for i in range(nrows):
            if i != leave and tab[i][enter] != 0:
                f = tab[i][enter]
                tab[i] = [c - f * p for c, p in zip(tab[i], tab[leave])]
        if obj[enter] != 0:
            f = obj[enter]
            obj = [c - f * p for c, p in zip(obj, tab[leave])]
        basis[leave] = enter

    return obj[total] == 0


def in_positive_hull(point: Point, generators: Sequence[Point]) -> bool:
    """Exact test for point in conv(generators) + R^n_+."""
    if not generators:
        return False
    n = len(point)
    # fast paths: single-generator domination, or a coordinate below every generator
    for q in generators:
        if all(qc <= pc for qc, pc in zip(q, point)):
            return True
    for j in range(n):
        if point[j] < min(q[j] for q in generators):
            return False
    # lambda weights per generator plus one slack per coordinate
    m = len(generators)
    rows = [[Fraction(1)] * m + [Fraction(0)] * n]
    b: list[Scalar] = [1]
    for j in range(n):
        row = [Fraction(q[j]) for q in generators]
        row += [Fraction(1 if k == j else 0) for k in range(n)]
        rows.append(row)
        b.append(point[j])
    return rational_feasible(rows, b)


def newton_vertices(config: PointConfiguration) -> PointConfiguration:
    """The points that are vertices of the Newton polyhedron conv(S) + R^n_+.

    p is a vertex exactly when it cannot be written as a convex combination
    of the other points plus a nonnegative vector; decided by an exact
    rational feasibility test.
    """
    minimal = remove_dominated(config).points
    if len(minimal) == 1:
        return PointConfiguration(config.dim, minimal)
    vertices = []
    for p in minimal:
        others = [q for q in minimal if q != p]
        # against the minimal points only: dominated points never tighten the hull
        if not in_positive_hull(p, others):
            vertices.append(p)
    return PointConfiguration(config.dim, tuple(vertices))


def spread_vector(config: PointConfiguration) -> tuple[Scalar, ...]:
    """Componentwise max minus min; the zero vector exactly for singletons."""
    points = config.points
    return tuple(
        max(p[j] for p in points) - min(p[j] for p in points)
        for j in range(config.dim)
    )


def minimal_hitting_sets(config: PointConfiguration) -> list[CoordinateSubset]:
    """All minimum-cardinality coordinate sets hitting every hull vertex.

    I hits a vertex v when v_j > 0 for some j in I. Returned in lexicographic
    order; raises NoHittingSet when some vertex is the origin.
    """
    vertices = newton_vertices(config).points
    supports = []
    for v in vertices:
        support = frozenset(j for j, c in enumerate(v) if c > 0)
        if not support:
            raise NoHittingSet(f"vertex {v} has no positive coordinate")
        supports.append(support)
    n = config.dim
    for size in range(1, n + 1):
        found = [
            subset
            for subset in itertools.combinations(range(n), size)
            if all(support & set(subset) for support in supports)
        ]
        if found:
            return found
    raise NoHittingSet("no coordinate subset hits every vertex")  # pragma: no cover
