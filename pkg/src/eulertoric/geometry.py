"""Brute-force convex hull facets for small point sets.

Every n-subset of points spans a candidate hyperplane; a candidate is kept
when all points lie weakly on one side. Adequate for n <= 4 and a few dozen
points, and everything stays in exact integers.
"""
from __future__ import annotations

import itertools
from typing import Sequence

from .errors import NotFullDimensional
from .lattice import IntVector, det, pairing, primitive, rank


def hyperplane_normal(points: Sequence[Sequence[int]]) -> IntVector:
    """Integer normal to the affine hull of n points in Z^n (generalized cross product).

    Returns the zero vector when the points are affinely dependent.
    """
    base = points[0]
    diffs = [tuple(a - b for a, b in zip(q, base)) for q in points[1:]]
    n = len(base)
    out = []
    for i in range(n):
        minor = [row[:i] + row[i + 1:] for row in diffs]
        out.append((-1) ** i * det(minor))
    return tuple(out)


def affine_rank(points: Sequence[Sequence[int]]) -> int:
    base = points[0]
    return rank([tuple(a - b for a, b in zip(q, base)) for q in points[1:]]) if len(points) > 1 else 0


def hull_facets(points: Sequence[Sequence[int]]) -> list[tuple[IntVector, int]]:
    """Facets ``<normal, x> <= bound`` of conv(points), with primitive outer normals.

    Raises:
        NotFullDimensional: if the points do not affinely span Z^n.
    """
    pts = sorted(set(tuple(p) for p in points))
    n = len(pts[0])
    if affine_rank(pts) < n:
        raise NotFullDimensional("points do not span a full-dimensional polytope")
    found: dict[IntVector, int] = {}
    for subset in itertools.combinations(pts, n):
        normal = hyperplane_normal(subset)
        if not any(normal):
            continue
        normal = primitive(normal)
        c = pairing(normal, subset[0])
        if found.get(normal) == c or found.get(tuple(-x for x in normal)) == -c:
            continue
        values = [pairing(normal, p) for p in pts]
        if all(v <= c for v in values):
            found[normal] = c
        elif all(v >= c for v in values):
            found[tuple(-x for x in normal)] = -c
    return sorted(found.items())


def positively_spans(vectors: Sequence[Sequence[int]]) -> bool:
    """True iff the origin is an interior point of conv(vectors)."""
    if not vectors:
        return False
    pts = [tuple(v) for v in vectors] + [tuple(0 for _ in vectors[0])]
    try:
        facets = hull_facets(pts)
    except NotFullDimensional:
        return False
    return all(bound > 0 for _, bound in facets)
