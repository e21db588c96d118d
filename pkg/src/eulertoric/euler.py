"""Euler points, Euler-symmetry and monomial fundamental forms of toric varieties."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence, Union

from .classgroup import (
    OrbitEquivalenceWitness,
    bazhov_equivalent,
    class_group,
)
from .errors import InvalidWitness, NotVeryAmple
from .fan import Cone, Fan, admits_additive_action, all_cones, require_complete, smooth_max_cones
from .lattice import (
    IntVector,
    coords_in_basis,
    dual_basis,
    pairing,
    unimodular_part,
)
from .polytope import (
    LatticePolytope,
    RectangleWitness,
    is_inscribed_in_rectangle,
    is_very_ample,
    lattice_points,
    rectangle_witness_at,
)


@dataclass(frozen=True)
class MonomialSymbolSystem:
    """Exponent set D(F) of a monomial fundamental form, graded by total degree."""

    n: int
    exponents: frozenset[IntVector]
    grading: dict[int, frozenset[IntVector]] = field(compare=False, hash=False, default_factory=dict)

    @classmethod
    def from_exponents(cls, n: int, exps) -> "MonomialSymbolSystem":
        exps = frozenset(tuple(e) for e in exps)
        grading: dict[int, set] = {}
        for e in exps:
            grading.setdefault(sum(e), set()).add(e)
        return cls(n, exps, {k: frozenset(v) for k, v in sorted(grading.items())})

    def degree(self, k: int) -> frozenset[IntVector]:
        return self.grading.get(k, frozenset())


def is_symbol_system(s: MonomialSymbolSystem) -> bool:
    """Contains 0 and the unit vectors, nonnegative, and closed under decrementing a coordinate.

    For monomial sets, closure under every contraction is the same thing as
    componentwise downward closure.
    """
    n = s.n
    if any(len(e) != n or min(e) < 0 for e in s.exponents):
        return False
    units = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    if (0,) * n not in s.exponents or any(u not in s.exponents for u in units):
        return False
    for e in s.exponents:
        for i in range(n):
            if e[i] > 0 and e[:i] + (e[i] - 1,) + e[i + 1:] not in s.exponents:
                return False
    return True


def _check_witness(P: LatticePolytope, w: RectangleWitness) -> None:
    if w.v0 not in P.vertices or rectangle_witness_at(P, w.v0) != w:
        raise InvalidWitness(f"{w} is not a rectangle witness for the polytope")


def fundamental_form(P: LatticePolytope, w: RectangleWitness) -> MonomialSymbolSystem:
    """D(F) at the vertex ``w.v0``: lattice points of P minus v0, in edge-basis coordinates."""
    _check_witness(P, w)
    pts = [
        coords_in_basis(w.edge_basis, tuple(a - b for a, b in zip(m, w.v0)))
        for m in lattice_points(P)
    ]
    return MonomialSymbolSystem.from_exponents(P.dim, pts)


@dataclass(frozen=True)
class EulerAction:
    """One-parameter subgroup acting with weight 1 on every edge direction at v0."""

    lam: IntVector
    points: tuple[IntVector, ...]
    ambient_weights: tuple[int, ...]


def euler_action(P: LatticePolytope, w: RectangleWitness) -> EulerAction:
    _check_witness(P, w)
    lam = tuple(sum(col) for col in zip(*dual_basis(w.edge_basis)))
    pts = tuple(lattice_points(P))
    weights = tuple(pairing(lam, tuple(a - b for a, b in zip(m, w.v0))) for m in pts)
    return EulerAction(lam, pts, weights)


@dataclass(frozen=True)
class ConeRecord:
    cone: Cone
    smooth: bool
    euler: bool | None
    target: Cone | None = None
    witness: OrbitEquivalenceWitness | None = None


@dataclass(frozen=True)
class EulerOrbitReport:
    records: tuple[ConeRecord, ...]

    def __getitem__(self, cone: Sequence[int]) -> ConeRecord:
        key = tuple(sorted(cone))
        for rec in self.records:
            if rec.cone == key:
                return rec
        raise KeyError(key)


def classify_euler_orbits(f: Fan, search_bound: int | None = None) -> EulerOrbitReport:
    """Mark which torus orbits consist of Euler points.

    A smooth orbit is Euler exactly when the Aut-orbit criterion places it in the
    Aut(X)-orbit of some smooth T-fixed point; only smooth maximal cones are
    candidate targets because automorphisms preserve smoothness. Orbits of
    non-smooth cones get ``euler=None``.
    """
    require_complete(f)
    cg = class_group(f)
    targets = smooth_max_cones(f)
    records = []
    for tau in all_cones(f):
        if not unimodular_part(f.ray_vectors(tau)):
            records.append(ConeRecord(tau, False, None))
            continue
        rec = ConeRecord(tau, True, False)
        for sigma in targets:
            ok, wit = bazhov_equivalent(f, tau, sigma, cg, search_bound)
            if ok:
                rec = ConeRecord(tau, True, True, sigma, wit)
                break
        records.append(rec)
    return EulerOrbitReport(tuple(records))


def is_euler_symmetric(obj: Union[Fan, LatticePolytope]) -> bool:
    """Euler-symmetry of a complete toric variety (fan) or of X_P (very ample polytope).

    For a fan this is the existence of a complete collection of Demazure
    roots; for a polytope it is being inscribed in a rectangle.
    """
    if isinstance(obj, Fan):
        return admits_additive_action(obj)[0]
    if not is_very_ample(obj):
        raise NotVeryAmple("the polytope is not very ample")
    return is_inscribed_in_rectangle(obj) is not None

