"""Lattice polytopes: facets, lattice points, edges, very ampleness and the rectangle test."""
from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .errors import InvalidInput, NotAVertex
from .fan import Fan
from .geometry import hull_facets
from .lattice import (
    IntVector,
    is_lattice_basis,
    pairing,
    primitive,
    rank,
    solve_rational,
)


@dataclass(frozen=True)
class FacetInequality:
    """``<normal, x> <= bound`` with a primitive outer normal."""

    normal: IntVector
    bound: int

    def contains(self, x: Sequence[int]) -> bool:
        return pairing(self.normal, x) <= self.bound

    def tight_at(self, x: Sequence[int]) -> bool:
        return pairing(self.normal, x) == self.bound


@dataclass(frozen=True)
class RectangleWitness:
    v0: IntVector
    edge_basis: tuple[IntVector, ...]


@dataclass(frozen=True)
class VertexSemigroup:
    vertex: IntVector
    generators: tuple[IntVector, ...]


@dataclass(frozen=True)
class LatticePolytope:
    """Full-dimensional lattice polytope given by its vertices."""

    dim: int
    vertices: tuple[IntVector, ...]

    @classmethod
    def build(cls, vertices: Sequence[Sequence[int]]) -> "LatticePolytope":
        verts = tuple(tuple(int(x) for x in v) for v in vertices)
        if not verts:
            raise InvalidInput("a polytope needs at least one vertex")
        n = len(verts[0])
        if n == 0 or any(len(v) != n for v in verts):
            raise InvalidInput("vertices must share a positive dimension")
        if len(set(verts)) != len(verts):
            raise InvalidInput("vertices must be pairwise distinct")
        P = cls(n, verts)
        for v in verts:
            if not P._is_vertex(v):
                raise NotAVertex(f"{v} is not a vertex of the convex hull")
        return P

    @classmethod
    def from_points(cls, points: Sequence[Sequence[int]]) -> "LatticePolytope":
        """Convex hull of ``points``, keeping only the extreme points (in input order)."""
        pts = list(dict.fromkeys(tuple(int(x) for x in p) for p in points))
        hull = cls(len(pts[0]), tuple(pts))
        return cls(hull.dim, tuple(p for p in pts if hull._is_vertex(p)))

    @cached_property
    def _facets(self) -> tuple[FacetInequality, ...]:
        return tuple(FacetInequality(nrm, b) for nrm, b in hull_facets(self.vertices))

    def _is_vertex(self, v: IntVector) -> bool:
        normals = [f.normal for f in self._facets if f.tight_at(v)]
        return rank(normals) == self.dim if normals else False

    def facets_through(self, v: Sequence[int]) -> list[FacetInequality]:
        return [f for f in self._facets if f.tight_at(v)]


def facets(P: LatticePolytope) -> list[FacetInequality]:
    """Irredundant facet inequalities of ``P``, sorted by normal."""
    return list(P._facets)


def contains(P: LatticePolytope, x: Sequence[int]) -> bool:
    return all(f.contains(x) for f in P._facets)


def lattice_points(P: LatticePolytope) -> list[IntVector]:
    """All lattice points of ``P`` in lexicographic order."""
    box = [range(min(c), max(c) + 1) for c in zip(*P.vertices)]
    return [x for x in itertools.product(*box) if contains(P, x)]


def vertex_edges(P: LatticePolytope, v: Sequence[int]) -> list[IntVector]:
    """Primitive directions of the edges at vertex ``v``, in decreasing lex order."""
    v = tuple(v)
    if v not in P.vertices:
        raise NotAVertex(f"{v} is not a vertex")
    at_v = P.facets_through(v)
    out = []
    for w in P.vertices:
        if w == v:
            continue
        shared = [f.normal for f in at_v if f.tight_at(w)]
        if (rank(shared) if shared else 0) == P.dim - 1:
            out.append(primitive(tuple(a - b for a, b in zip(w, v))))
    return sorted(out, reverse=True)


def rectangle_witness_at(P: LatticePolytope, v0: Sequence[int]) -> RectangleWitness | None:
    """Check both rectangle conditions at one vertex."""
    v0 = tuple(v0)
    edges = vertex_edges(P, v0)
    if not is_lattice_basis(edges):
        return None
    for f in P._facets:
        if f.tight_at(v0):
            continue
        if any(pairing(f.normal, e) < 0 for e in edges):
            return None
    return RectangleWitness(v0, tuple(edges))


def is_inscribed_in_rectangle(P: LatticePolytope) -> RectangleWitness | None:
    """First vertex (in input order) at which ``P`` is inscribed in a rectangle, if any."""
    for v in P.vertices:
        w = rectangle_witness_at(P, v)
        if w is not None:
            return w
    return None


def vertex_semigroup(P: LatticePolytope, m: Sequence[int]) -> VertexSemigroup:
    m = tuple(m)
    if m not in P.vertices:
        raise NotAVertex(f"{m} is not a vertex")
    gens = tuple(tuple(a - b for a, b in zip(x, m)) for x in lattice_points(P))
    return VertexSemigroup(m, gens)


def _grading(P: LatticePolytope, m: IntVector) -> IntVector:
    # sum of inner facet normals at m; strictly positive on the vertex cone minus 0
    inner = [tuple(-x for x in f.normal) for f in P.facets_through(m)]
    return tuple(sum(col) for col in zip(*inner))


def semigroup_contains(S: VertexSemigroup, grading: Sequence[int], x: Sequence[int]) -> bool:
    """Membership of ``x`` in the semigroup, by memoized depth-first search.

    ``grading`` must be strictly positive on every nonzero generator, which
    bounds the search depth.
    """
    gens = [(g, pairing(grading, g)) for g in S.generators if any(g)]
    if any(d <= 0 for _, d in gens):
        raise InvalidInput("grading is not positive on the generators")

    @functools.lru_cache(maxsize=None)
    def reach(y: IntVector) -> bool:
        if not any(y):
            return True
        dy = pairing(grading, y)
        return any(
            d <= dy and reach(tuple(a - b for a, b in zip(y, g))) for g, d in gens
        )

    return reach(tuple(x))


def parallelepiped_points(basis: Sequence[IntVector]) -> list[IntVector]:
    """Lattice points of the half-open parallelepiped sum t_i b_i, 0 <= t_i < 1."""
    n = len(basis)
    corners = [
        tuple(sum(c * b[k] for c, b in zip(sel, basis)) for k in range(n))
        for sel in itertools.product((0, 1), repeat=n)
    ]
    box = [range(min(c[k] for c in corners), max(c[k] for c in corners) + 1) for k in range(n)]
    cols = tuple(zip(*basis))
    out = []
    for x in itertools.product(*box):
        t = solve_rational(cols, x)
        if all(0 <= ti < 1 for ti in t):
            out.append(x)
    return out


def is_saturated_at(P: LatticePolytope, m: Sequence[int]) -> bool:
    """Saturation of the vertex semigroup, via the half-open zonotope criterion.

    Any lattice point of the vertex cone splits as an integer combination of
    primitive edge vectors (which lie in the semigroup) plus a lattice point
    of a half-open parallelepiped over n independent edge vectors, so it is
    enough to test those finitely many points.
    """
    m = tuple(m)
    S = vertex_semigroup(P, m)
    grading = _grading(P, m)
    edges = vertex_edges(P, m)
    seen = set()
    for sub in itertools.combinations(edges, P.dim):
        if rank(sub) < P.dim:
            continue
        for x in parallelepiped_points(sub):
            if x in seen:
                continue
            seen.add(x)
            if not semigroup_contains(S, grading, x):
                return False
    return True


def is_very_ample(P: LatticePolytope) -> bool:
    return all(is_saturated_at(P, m) for m in P.vertices)


def normal_fan(P: LatticePolytope) -> Fan:
    """Inner-normal fan: one ray per facet, one maximal cone per vertex.

    Completeness is verified for dim <= 2 and asserted (true by construction)
    above that.
    """
    fs = P._facets
    rays = [tuple(-x for x in f.normal) for f in fs]
    cones = [[i for i, f in enumerate(fs) if f.tight_at(v)] for v in P.vertices]
    return Fan.build(rays, cones, complete=P.dim >= 3)
