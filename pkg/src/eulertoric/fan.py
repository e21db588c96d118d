"""Fans, Demazure roots and complete collections.

A fan is stored by its rays (primitive generators in N) and its maximal cones
(sorted tuples of 0-based ray indices); faces are derived on demand.
"""
from __future__ import annotations

import functools
import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import (
    InvalidInput,
    InvalidRay,
    NonSimplicialCone,
    NotComplete,
    NotPositivelySpanning,
    OverlappingCones,
)
from .geometry import positively_spans
from .lattice import (
    IntVector,
    coords_in_basis,
    det,
    dual_basis,
    is_lattice_basis,
    pairing,
    rank,
    solve_rational,
)

Cone = tuple[int, ...]

VERIFIED = "verified"
ASSERTED = "asserted"


@dataclass(frozen=True)
class Fan:
    """Rays plus maximal cones.

    Use :meth:`Fan.build` to construct; it normalizes cone index order and
    checks the structural invariants. ``complete_asserted`` records a
    caller-supplied completeness claim (the ``complete: true`` file flag).
    """

    dim: int
    rays: tuple[IntVector, ...]
    max_cones: tuple[Cone, ...]
    complete_asserted: bool = field(default=False, compare=False)

    @classmethod
    def build(
        cls,
        rays: Sequence[Sequence[int]],
        max_cones: Sequence[Sequence[int]],
        complete: bool = False,
    ) -> "Fan":
        rays_t = tuple(tuple(int(x) for x in r) for r in rays)
        if not rays_t:
            raise InvalidRay("a fan needs at least one ray")
        dim = len(rays_t[0])
        for i, r in enumerate(rays_t):
            if len(r) != dim or dim == 0:
                raise InvalidRay(f"ray {i} has dimension {len(r)}, expected {dim}")
            if math.gcd(*r) != 1:
                raise InvalidRay(f"ray {i} = {r} is not a primitive nonzero lattice vector")
        if len(set(rays_t)) != len(rays_t):
            raise InvalidRay("rays must be pairwise distinct")
        cones = []
        for c in max_cones:
            cone = tuple(sorted(set(int(i) for i in c)))
            if len(cone) != len(c) or not cone:
                raise InvalidInput(f"cone {list(c)} is empty or repeats a ray index")
            if cone[0] < 0 or cone[-1] >= len(rays_t):
                raise InvalidInput(f"cone {list(c)} has a ray index out of range")
            cones.append(cone)
        sets = [set(c) for c in cones]
        for a, b in itertools.permutations(range(len(cones)), 2):
            if sets[a] <= sets[b]:
                raise InvalidInput(f"maximal cones {cones[a]} and {cones[b]} are comparable")
        used = set().union(*sets) if sets else set()
        if used != set(range(len(rays_t))):
            missing = sorted(set(range(len(rays_t))) - used)
            raise InvalidInput(f"rays {missing} occur in no maximal cone")
        return cls(dim, rays_t, tuple(cones), bool(complete))

    @property
    def nrays(self) -> int:
        return len(self.rays)

    def ray_vectors(self, cone: Sequence[int]) -> list[IntVector]:
        return [self.rays[i] for i in cone]


@dataclass(frozen=True)
class FanDiagnostics:
    completeness: str
    notes: tuple[str, ...] = ()


@dataclass(frozen=True)
class DemazureRoot:
    e: IntVector
    distinguished: int


@dataclass(frozen=True)
class CompleteCollection:
    basis_rays: tuple[int, ...]
    roots: tuple[DemazureRoot, ...]


def _angle_cmp(u: IntVector, v: IntVector) -> int:
    def half(w):
        return 0 if (w[1] > 0 or (w[1] == 0 and w[0] > 0)) else 1

    hu, hv = half(u), half(v)
    if hu != hv:
        return hu - hv
    cross = u[0] * v[1] - u[1] * v[0]
    return -1 if cross > 0 else (1 if cross < 0 else 0)


def _strictly_inside_2d(a: IntVector, b: IntVector, w: IntVector) -> bool:
    # sector from a counterclockwise to b, with cross(a, b) > 0
    return a[0] * w[1] - a[1] * w[0] > 0 and w[0] * b[1] - w[1] * b[0] > 0


def _check_complete_2d(f: Fan) -> None:
    oriented = []
    for cone in f.max_cones:
        if len(cone) != 2:
            raise NotComplete(f"cone {cone} is not two-dimensional; the fan does not cover the plane")
        i, j = cone
        a, b = f.rays[i], f.rays[j]
        cross = a[0] * b[1] - a[1] * b[0]
        if cross == 0:
            raise InvalidInput(f"cone {cone} is not strictly convex")
        oriented.append((i, j) if cross > 0 else (j, i))
    for i, j in oriented:
        for k, w in enumerate(f.rays):
            if k not in (i, j) and _strictly_inside_2d(f.rays[i], f.rays[j], w):
                raise OverlappingCones(f"ray {k} lies inside cone {tuple(sorted((i, j)))}")
    # sectors of an overlap-free 2D fan are pairs of angularly adjacent rays;
    # they overlap iff two cones share a start ray, and tile iff every ray starts one
    starts = [i for i, _ in oriented]
    if len(set(starts)) != len(starts):
        raise OverlappingCones("two cones overlap")
    if len(starts) != f.nrays:
        raise NotComplete("the maximal cones leave a gap in the plane")


def validate_fan(f: Fan) -> FanDiagnostics:
    """Check the structural invariants and completeness of ``f``.

    Completeness is decided exactly in dimensions 1 and 2. In higher
    dimensions only the positive-spanning condition is checked and the result
    is reported as ``asserted``.
    """
    if not positively_spans(f.rays):
        raise NotPositivelySpanning("ray generators do not positively span N_Q")
    if f.dim == 1:
        return FanDiagnostics(VERIFIED)
    if f.dim == 2:
        _check_complete_2d(f)
        return FanDiagnostics(VERIFIED)
    notes = ["completeness in dimension >= 3 is not decided; results are conditional"]
    for cone in f.max_cones:
        if rank(f.ray_vectors(cone)) != len(cone):
            notes.append(f"cone {cone} is not simplicial")
    return FanDiagnostics(ASSERTED, tuple(notes))


@functools.lru_cache(maxsize=256)
def _validated(f: Fan) -> FanDiagnostics:
    return validate_fan(f)


def require_complete(f: Fan) -> FanDiagnostics:
    """``validate_fan`` with every failure reported as NotComplete."""
    try:
        return _validated(f)
    except NotComplete:
        raise
    except InvalidInput as exc:
        raise NotComplete(str(exc)) from exc


def _is_root(f: Fan, e: Sequence[int], rho: int) -> bool:
    return all(
        pairing(p, e) == -1 if i == rho else pairing(p, e) >= 0 for i, p in enumerate(f.rays)
    )


def _root_region_box(f: Fan, rho: int) -> list[tuple[int, int]] | None:
    n = f.dim
    others = [i for i in range(f.nrays) if i != rho]
    verts = []
    for active in itertools.combinations(others, n - 1):
        A = [f.rays[rho]] + [f.rays[i] for i in active]
        b = [-1] + [0] * (n - 1)
        x = solve_rational(A, b)
        if x is None:
            continue
        if all(sum(Fraction(p) * c for p, c in zip(f.rays[i], x)) >= 0 for i in others):
            verts.append(x)
    if not verts:
        return None
    return [
        (math.floor(min(v[k] for v in verts)), math.ceil(max(v[k] for v in verts)))
        for k in range(n)
    ]


def demazure_roots(f: Fan) -> list[DemazureRoot]:
    """All Demazure roots of a complete fan, sorted by (ray, e).

    For each ray the feasible region is a bounded polyhedron; its vertices
    come from n-subsets of active constraints and the lattice points of the
    resulting integer box are filtered by the definition.
    """
    require_complete(f)
    roots = []
    for rho in range(f.nrays):
        box = _root_region_box(f, rho)
        if box is None:
            continue
        for e in itertools.product(*(range(lo, hi + 1) for lo, hi in box)):
            if _is_root(f, e, rho):
                roots.append(DemazureRoot(tuple(e), rho))
    return roots


def complete_collections(f: Fan) -> list[CompleteCollection]:
    """Every n-subset of rays that is a lattice basis with the rest in its negative octant.

    Subsets are emitted in lexicographic order of their (ascending) ray
    indices; the j-th root is minus the j-th dual basis vector.
    """
    require_complete(f)
    out = []
    for basis_rays in itertools.combinations(range(f.nrays), f.dim):
        basis = f.ray_vectors(basis_rays)
        if not is_lattice_basis(basis):
            continue
        rest = [i for i in range(f.nrays) if i not in basis_rays]
        if all(c <= 0 for i in rest for c in coords_in_basis(basis, f.rays[i])):
            roots = tuple(
                DemazureRoot(tuple(-x for x in m), rho)
                for m, rho in zip(dual_basis(basis), basis_rays)
            )
            out.append(CompleteCollection(basis_rays, roots))
    return out


def admits_additive_action(f: Fan) -> tuple[bool, CompleteCollection | None]:
    colls = complete_collections(f)
    return (True, colls[0]) if colls else (False, None)


def smooth_max_cones(f: Fan) -> list[Cone]:
    return [
        c for c in f.max_cones if len(c) == f.dim and abs(det(f.ray_vectors(c))) == 1
    ]


def all_cones(f: Fan) -> list[Cone]:
    """Every face of every maximal cone, including the trivial cone ``()``.

    Sorted by dimension, then lexicographically.
    """
    faces = set()
    for c in f.max_cones:
        if f.dim >= 3 and rank(f.ray_vectors(c)) != len(c):
            raise NonSimplicialCone(f"cone {c} is not simplicial")
        for k in range(len(c) + 1):
            faces.update(itertools.combinations(c, k))
    return sorted(faces, key=lambda c: (len(c), c))


def sort_rays_by_angle(rays: Sequence[IntVector]) -> list[int]:
    """Indices of 2D rays in counterclockwise order starting from the positive x-axis."""
    return sorted(range(len(rays)), key=functools.cmp_to_key(lambda i, j: _angle_cmp(rays[i], rays[j])))


def fan_from_rays_2d(rays: Sequence[Sequence[int]]) -> Fan:
    """Complete 2D fan whose maximal cones join angularly adjacent rays."""
    rays_t = [tuple(r) for r in rays]
    order = sort_rays_by_angle(rays_t)
    cones = [(order[k], order[(k + 1) % len(order)]) for k in range(len(order))]
    return Fan.build(rays_t, cones)
