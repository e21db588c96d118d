"""Divisor class group, the monoids Gamma(tau), and the Aut-orbit test.

Cl(X) is presented as the cokernel of the ray-evaluation map
``M -> Z^r, m -> (<p_1, m>, ..., <p_r, m>)`` through a Smith decomposition
``U @ R @ V = S`` of the r x n ray matrix ``R``. Cokernel coordinates of
``b in Z^r`` are the entries of ``U @ b``: rows with invariant factor 1 are
dropped, rows with factor d >= 2 become residues mod d, and the last r - n
rows are the free part.
"""
from __future__ import annotations

import functools
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import ConeNotInFan, Inconclusive, InvalidInput, RaysDoNotSpan
from .fan import Cone, Fan, all_cones, require_complete
from .lattice import (
    IntMatrix,
    IntVector,
    det,
    is_lattice_basis,
    lattice_hnf,
    matvec,
    rank,
    snf,
    solve_rational,
    transpose,
)


@dataclass(frozen=True)
class ClassElement:
    free: IntVector
    torsion: IntVector = ()
    moduli: IntVector = ()

    def __post_init__(self):
        reduced = tuple(t % d for t, d in zip(self.torsion, self.moduli))
        object.__setattr__(self, "torsion", reduced)

    def _like(self, free, torsion) -> "ClassElement":
        return ClassElement(tuple(free), tuple(torsion), self.moduli)

    def __add__(self, other: "ClassElement") -> "ClassElement":
        return self._like(
            (a + b for a, b in zip(self.free, other.free)),
            (a + b for a, b in zip(self.torsion, other.torsion)),
        )

    def __sub__(self, other: "ClassElement") -> "ClassElement":
        return self + (-other)

    def __neg__(self) -> "ClassElement":
        return self._like((-a for a in self.free), (-a for a in self.torsion))

    def __rmul__(self, k: int) -> "ClassElement":
        return self._like((k * a for a in self.free), (k * a for a in self.torsion))

    def is_zero(self) -> bool:
        return not any(self.free) and not any(self.torsion)

    def order(self) -> int | None:
        """Additive order, or None when the element has infinite order."""
        if any(self.free):
            return None
        return math.lcm(1, *(d // math.gcd(t, d) for t, d in zip(self.torsion, self.moduli)))

    def as_tuple(self) -> IntVector:
        return self.free + self.torsion


@dataclass(frozen=True)
class ClassGroup:
    free_rank: int
    torsion: IntVector
    divisor_classes: tuple[ClassElement, ...]
    ray_matrix: IntMatrix
    _U: IntMatrix
    _torsion_rows: tuple[int, ...]
    _free_rows: tuple[int, ...]

    def projection(self, b: Sequence[int]) -> ClassElement:
        """Class of the divisor sum b_i D_i."""
        y = matvec(self._U, b)
        return ClassElement(
            tuple(y[i] for i in self._free_rows),
            tuple(y[i] for i in self._torsion_rows),
            self.torsion,
        )

    def zero(self) -> ClassElement:
        return ClassElement((0,) * self.free_rank, (0,) * len(self.torsion), self.torsion)

    def express(self, x: ClassElement, basis: Sequence[ClassElement]) -> IntVector:
        """Integer coordinates of ``x`` in a basis of a torsion-free class group."""
        if self.torsion:
            raise InvalidInput("coordinates in a basis need a torsion-free class group")
        mat = [b.free for b in basis]
        if not is_lattice_basis(mat):
            raise InvalidInput("the given classes do not form a basis of Cl(X)")
        return tuple(int(c) for c in solve_rational(transpose(mat), x.free))

    def preferred_basis(self) -> tuple[int, ...] | None:
        """Ray indices whose classes freely generate Cl(X), if such a choice exists.

        Uses the complement of the lexicographically first n-subset of rays
        forming a lattice basis of N, the standard presentation.
        """
        if self.torsion:
            return None
        r, n = len(self.ray_matrix), len(self.ray_matrix[0])
        for sub in itertools.combinations(range(r), n):
            if is_lattice_basis([self.ray_matrix[i] for i in sub]):
                return tuple(i for i in range(r) if i not in sub)
        return None


@functools.lru_cache(maxsize=256)
def class_group(f: Fan) -> ClassGroup:
    """Cl(X) as the cokernel of the ray-evaluation map, computed by Smith form."""
    R = f.rays
    r, n = len(R), f.dim
    if rank(R) != n:
        raise RaysDoNotSpan("ray generators do not span N_Q")
    dec = snf(R)
    inv = dec.invariants
    torsion_rows = tuple(i for i, d in enumerate(inv) if d >= 2)
    free_rows = tuple(range(n, r))
    partial = ClassGroup(
        free_rank=r - n,
        torsion=tuple(inv[i] for i in torsion_rows),
        divisor_classes=(),
        ray_matrix=R,
        _U=dec.U,
        _torsion_rows=torsion_rows,
        _free_rows=free_rows,
    )
    classes = tuple(partial.projection([int(i == j) for j in range(r)]) for i in range(r))
    return ClassGroup(
        partial.free_rank, partial.torsion, classes, R, dec.U, torsion_rows, free_rows
    )


@dataclass(frozen=True)
class ClassMonoid:
    """Submonoid of Cl(X) generated by the classes of the rays outside ``cone``."""

    generators: tuple[ClassElement, ...]
    cone: Cone = ()
    rays: tuple[int, ...] = ()

    @property
    def generator_set(self) -> frozenset[ClassElement]:
        return frozenset(self.generators)


def gamma_monoid(f: Fan, tau: Sequence[int], cg: ClassGroup) -> ClassMonoid:
    tau = tuple(sorted(tau))
    if tau not in set(all_cones(f)):
        raise ConeNotInFan(f"{tau} is not a cone of the fan")
    outside = tuple(i for i in range(f.nrays) if i not in tau)
    return ClassMonoid(tuple(cg.divisor_classes[i] for i in outside), tau, outside)


def _positive_grading(free_parts: Sequence[IntVector]) -> IntVector | None:
    """Integer functional strictly positive on every vector, or None if none exists."""
    if not free_parts:
        return ()
    k = len(free_parts[0])
    candidate = tuple(sum(col) for col in zip(*free_parts))
    if all(sum(a * b for a, b in zip(candidate, g)) > 0 for g in free_parts):
        return candidate
    from scipy.optimize import linprog

    res = linprog(
        c=[0] * k,
        A_ub=[[-x for x in g] for g in free_parts],
        b_ub=[-1] * len(free_parts),
        bounds=[(None, None)] * k,
        method="highs",
    )
    if res.status != 0:
        return None
    fr = [Fraction(x).limit_denominator(10**6) for x in res.x]
    scale = math.lcm(*(q.denominator for q in fr))
    w = tuple(int(q * scale) for q in fr)
    if all(sum(a * b for a, b in zip(w, g)) > 0 for g in free_parts):
        return w
    return None


@functools.lru_cache(maxsize=65536)
def _contains(gens: frozenset[ClassElement], x: ClassElement, search_bound: int | None) -> bool:
    if x.is_zero():
        return True
    gens_l = sorted((g for g in gens if not g.is_zero()), key=lambda g: g.as_tuple())
    if not gens_l:
        return False
    free_gens = [g for g in gens_l if any(g.free)]
    tors_gens = [g for g in gens_l if not any(g.free)]
    w = _positive_grading([g.free for g in free_gens])
    bounded = w is not None
    if not bounded and search_bound is None:
        raise Inconclusive("monoid generators do not lie in a pointed cone; supply a search bound")

    def weight(y: ClassElement) -> int:
        return sum(a * b for a, b in zip(w, y.free))

    ordered = free_gens + tors_gens
    exhausted = False

    @functools.lru_cache(maxsize=None)
    def search(i: int, y: ClassElement) -> bool:
        nonlocal exhausted
        if y.is_zero():
            return True
        if i == len(ordered):
            return False
        g = ordered[i]
        if any(g.free):
            if bounded:
                wy, wg = weight(y), weight(g)
                if wy < 0:
                    return False
                cmax = wy // wg
            else:
                cmax = search_bound
        else:
            cmax = g.order() - 1
        for c in range(cmax + 1):
            if search(i + 1, y - c * g):
                return True
        if any(g.free) and not bounded:
            exhausted = True
        return False

    found = search(0, x)
    if not found and exhausted:
        raise Inconclusive("search bound exhausted while testing monoid membership")
    return found


def monoid_contains(m: ClassMonoid, x: ClassElement, search_bound: int | None = None) -> bool:
    """Whether ``x`` is a nonnegative integer combination of the generators of ``m``.

    When the free parts of the generators lie in a pointed cone, a positive
    grading bounds every coefficient and the search is exhaustive. Otherwise
    each coefficient is capped by ``search_bound`` and running out of budget
    raises Inconclusive.
    """
    return _contains(m.generator_set, x, search_bound)


@functools.lru_cache(maxsize=65536)
def _gens_equal(a: frozenset, b: frozenset, search_bound: int | None) -> bool:
    if a == b:
        return True
    return all(_contains(b, g, search_bound) for g in a) and all(
        _contains(a, g, search_bound) for g in b
    )


def monoids_equal(a: ClassMonoid, b: ClassMonoid, search_bound: int | None = None) -> bool:
    return _gens_equal(a.generator_set, b.generator_set, search_bound)


@dataclass(frozen=True)
class Upsilon:
    """Distinct monoids among Gamma(tau), tau in the fan, with the cone assignment."""

    representatives: tuple[ClassMonoid, ...]
    assignment: dict[Cone, int]

    def cones_of(self, k: int) -> list[Cone]:
        return [c for c, j in self.assignment.items() if j == k]

    def class_of(self, monoid: ClassMonoid, search_bound: int | None = None) -> int | None:
        for k, rep in enumerate(self.representatives):
            if monoids_equal(rep, monoid, search_bound):
                return k
        return None


def upsilon(f: Fan, cg: ClassGroup, search_bound: int | None = None) -> Upsilon:
    """Group Gamma(tau) over all cones (trivial cone included) into equality classes.

    Classes are numbered by first occurrence in cone order; each
    representative is the member with the lexicographically least sorted
    generator list.
    """
    members: list[list[ClassMonoid]] = []
    assignment: dict[Cone, int] = {}
    for tau in all_cones(f):
        g = gamma_monoid(f, tau, cg)
        for k, group in enumerate(members):
            if monoids_equal(group[0], g, search_bound):
                group.append(g)
                assignment[tau] = k
                break
        else:
            assignment[tau] = len(members)
            members.append([g])

    def key(m: ClassMonoid):
        return sorted(set(x.as_tuple() for x in m.generators))

    reps = tuple(min(group, key=key) for group in members)
    return Upsilon(reps, assignment)


@dataclass(frozen=True)
class OrbitEquivalenceWitness:
    """A ray permutation ``i -> ray_permutation[i]`` and its induced automorphism of Cl(X).

    ``generator_images[k]`` is the image of the k-th cokernel generator
    (torsion generators first, then free), which determines the automorphism.
    """

    ray_permutation: tuple[int, ...]
    generator_images: tuple[ClassElement, ...]

    def apply(self, cg: ClassGroup, x: ClassElement) -> ClassElement:
        out = cg.zero()
        coeffs = x.torsion + x.free
        for c, img in zip(coeffs, self.generator_images):
            out = out + c * img
        return out


def image_lattice(f: Fan) -> IntMatrix:
    """HNF basis of the image of M in Z^r."""
    return lattice_hnf(transpose(f.rays))


def permutes_image_lattice(f: Fan, perm: Sequence[int]) -> bool:
    """Whether coordinate permutation ``e_i -> e_perm[i]`` maps the image of M onto itself."""
    L = image_lattice(f)
    moved = []
    for row in L:
        v = [0] * len(row)
        for i, x in enumerate(row):
            v[perm[i]] = x
        moved.append(tuple(v))
    inv = [0] * len(perm)
    for i, p in enumerate(perm):
        inv[p] = i
    back = []
    for row in L:
        v = [0] * len(row)
        for i, x in enumerate(row):
            v[inv[i]] = x
        back.append(tuple(v))
    return lattice_hnf(moved) == L and lattice_hnf(back) == L


def _candidate_permutations(f: Fan) -> list[tuple[int, ...]]:
    # p_i -> p_perm[i] must extend to a lattice automorphism of N, so the
    # images of n independent rays determine everything else
    rays = f.rays
    n, r = f.dim, f.nrays
    base = next(c for c in itertools.combinations(range(r), n) if rank([rays[i] for i in c]) == n)
    index = {p: i for i, p in enumerate(rays)}
    B = [rays[i] for i in base]
    out = []
    for images in itertools.permutations(range(r), n):
        C = [rays[j] for j in images]
        if rank(C) < n or abs(det(B)) != abs(det(C)):
            continue
        # A with A @ B[k] = C[k]; rows of A solve B @ a_row = C column
        A_rows = []
        ok = True
        for coord in range(n):
            sol = solve_rational(B, [c[coord] for c in C])
            if any(s.denominator != 1 for s in sol):
                ok = False
                break
            A_rows.append(tuple(int(s) for s in sol))
        if not ok or abs(det(A_rows)) != 1:
            continue
        perm = []
        for p in rays:
            q = matvec(A_rows, p)
            if q not in index:
                break
            perm.append(index[q])
        else:
            if len(set(perm)) == r:
                out.append(tuple(perm))
    return sorted(set(out))


def _apply_perm_to_monoid(cg: ClassGroup, m: ClassMonoid, perm: Sequence[int]) -> ClassMonoid:
    rays = tuple(perm[i] for i in m.rays)
    return ClassMonoid(tuple(cg.divisor_classes[i] for i in rays), (), rays)


def _generator_images(cg: ClassGroup, perm: Sequence[int]) -> tuple[ClassElement, ...]:
    # lift each cokernel generator to Z^r through U^{-1}, permute, project back
    r = len(perm)
    rows = cg._torsion_rows + cg._free_rows
    images = []
    for row in rows:
        e = [int(i == row) for i in range(r)]
        lift = solve_rational(cg._U, e)
        lift = [int(x) for x in lift]
        moved = [0] * r
        for i, x in enumerate(lift):
            moved[perm[i]] = x
        images.append(cg.projection(moved))
    return tuple(images)


@dataclass(frozen=True)
class _BazhovContext:
    upsilon: Upsilon
    automorphisms: tuple[tuple[int, ...], ...]


@functools.lru_cache(maxsize=64)
def _bazhov_context(f: Fan, cg: ClassGroup, search_bound: int | None) -> _BazhovContext:
    ups = upsilon(f, cg, search_bound)
    good = []
    for perm in _candidate_permutations(f):
        if not permutes_image_lattice(f, perm):
            continue
        if all(
            ups.class_of(_apply_perm_to_monoid(cg, rep, perm), search_bound) is not None
            for rep in ups.representatives
        ):
            good.append(perm)
    return _BazhovContext(ups, tuple(good))


def admissible_permutations(
    f: Fan, cg: ClassGroup, search_bound: int | None = None
) -> tuple[tuple[int, ...], ...]:
    """Ray permutations inducing an automorphism of Cl(X) that permutes Upsilon."""
    return _bazhov_context(f, cg, search_bound).automorphisms


def bazhov_equivalent(
    f: Fan,
    sigma: Sequence[int],
    sigma2: Sequence[int],
    cg: ClassGroup,
    search_bound: int | None = None,
) -> tuple[bool, OrbitEquivalenceWitness | None]:
    """Decide whether the torus orbits of two cones lie in the same Aut(X)-orbit.

    Searches ray permutations in lexicographic order for one that preserves
    the image of M in Z^r, maps Gamma(sigma) onto Gamma(sigma2), and permutes
    the monoids of Upsilon.
    """
    require_complete(f)
    g1 = gamma_monoid(f, sigma, cg)
    g2 = gamma_monoid(f, sigma2, cg)
    ctx = _bazhov_context(f, cg, search_bound)
    for perm in ctx.automorphisms:
        if monoids_equal(_apply_perm_to_monoid(cg, g1, perm), g2, search_bound):
            return True, OrbitEquivalenceWitness(perm, _generator_images(cg, perm))
    return False, None


def orbit_classes(
    f: Fan, cg: ClassGroup, search_bound: int | None = None
) -> list[list[Cone]]:
    """Partition of all cones into Aut(X)-orbit classes of their torus orbits."""
    classes: list[list[Cone]] = []
    for tau in all_cones(f):
        for cl in classes:
            if bazhov_equivalent(f, cl[0], tau, cg, search_bound)[0]:
                cl.append(tau)
                break
        else:
            classes.append([tau])
    return classes
