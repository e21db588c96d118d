import random

import pytest

from _corpus import BLOWUP, P2, P1P1, cone, hirzebruch
from eulertoric.classgroup import (
    ClassElement,
    ClassMonoid,
    bazhov_equivalent,
    class_group,
    gamma_monoid,
    monoid_contains,
    monoids_equal,
    orbit_classes,
    permutes_image_lattice,
    upsilon,
)
from eulertoric.errors import ConeNotInFan
from eulertoric.fan import Fan, all_cones
from eulertoric.lattice import matvec


def _coords(f, basis_labels):
    cg = class_group(f)
    basis = [cg.divisor_classes[i - 1] for i in basis_labels]
    return cg, [cg.express(x, basis) for x in cg.divisor_classes]


def test_exactness_on_random_characters():
    rng = random.Random(1)
    for f in [P2, P1P1, BLOWUP, hirzebruch(3)]:
        cg = class_group(f)
        assert cg.free_rank == f.nrays - f.dim
        for _ in range(50):
            m = [rng.randint(-20, 20) for _ in range(f.dim)]
            assert cg.projection(matvec(f.rays, m)).is_zero()


def test_torsion_class_group():
    # weighted projective plane P(1,1,2): rays (1,0),(0,1),(-1,-2)
    f = Fan.build([(1, 0), (0, 1), (-1, -2)], [(0, 1), (1, 2), (0, 2)])
    cg = class_group(f)
    assert cg.free_rank == 1 and cg.torsion == ()
    # fake projective plane quotient: rays generate an index-3 sublattice
    g = Fan.build([(1, 1), (1, -2), (-2, 1)], [(0, 1), (1, 2), (0, 2)])
    cg = class_group(g)
    assert cg.free_rank == 1 and cg.torsion == (3,)
    assert any(x.torsion != (0,) for x in cg.divisor_classes)


@pytest.mark.parametrize("s", [1, 2, 3])
def test_hirzebruch_relations(s):
    cg, coords = _coords(hirzebruch(s), (3, 2))
    assert cg.torsion == () and cg.free_rank == 2
    # coordinates in the basis [D3], [D2]
    assert coords == [(1, 0), (0, 1), (1, 0), (s, 1)]


def test_blowup_relations():
    cg, coords = _coords(BLOWUP, (3, 4, 5))
    assert cg.free_rank == 3
    assert coords[0] == (1, 1, 0)
    assert coords[1] == (0, 1, 1)
    assert coords[2:] == [(1, 0, 0), (0, 1, 0), (0, 0, 1)]


def _monoid_in_basis(f, tau, basis_labels):
    cg, coords = _coords(f, basis_labels)
    g = gamma_monoid(f, tau, cg)
    return {coords[i] for i in g.rays}


def test_gamma_examples():
    assert _monoid_in_basis(BLOWUP, cone(4), (3, 4, 5)) == {(1, 0, 0), (0, 0, 1), (1, 1, 0), (0, 1, 1)}
    expected = {
        cone(2, 3): {(0, 1, 0), (0, 0, 1), (1, 1, 0)},
        cone(1, 5): {(0, 1, 0), (1, 0, 0), (0, 1, 1)},
        cone(3, 4): {(0, 0, 1), (1, 1, 0), (0, 1, 1)},
        cone(4, 5): {(1, 0, 0), (1, 1, 0), (0, 1, 1)},
        cone(1, 2): {(1, 0, 0), (0, 1, 0), (0, 0, 1)},
    }
    for tau, gens in expected.items():
        assert _monoid_in_basis(BLOWUP, tau, (3, 4, 5)) == gens
    cg = class_group(BLOWUP)
    with pytest.raises(ConeNotInFan):
        gamma_monoid(BLOWUP, (0, 2), cg)


def test_monoid_contains_examples():
    e = lambda *v: ClassElement(tuple(v))
    m = ClassMonoid((e(1, 1, 0), e(1, 0, 1), e(0, 1, 1)))
    assert not monoid_contains(m, e(1, 1, 1))
    assert monoid_contains(m, e(2, 2, 2))
    assert monoid_contains(m, e(0, 0, 0))
    free = ClassMonoid((e(1, 0, 0), e(0, 1, 0), e(0, 0, 1)))
    assert monoid_contains(free, e(1, 1, 1))
    assert not monoid_contains(free, e(-1, 0, 0))


def test_monoids_equal():
    e = lambda *v: ClassElement(tuple(v))
    a = ClassMonoid((e(1, 0), e(0, 1)))
    b = ClassMonoid((e(1, 0), e(0, 1), e(1, 1)))
    c = ClassMonoid((e(1, 0), e(1, 1)))
    assert monoids_equal(a, b)
    assert not monoids_equal(a, c)


@pytest.mark.parametrize("s", [1, 2, 3])
def test_hirzebruch_upsilon(s):
    f = hirzebruch(s)
    cg = class_group(f)
    ups = upsilon(f, cg)
    assert len(ups.representatives) == 2
    sizes = sorted(len(ups.cones_of(k)) for k in range(2))
    assert sizes == [3, 6]
    b = next(k for k in range(2) if len(ups.cones_of(k)) == 3)
    assert sorted(ups.cones_of(b)) == sorted([cone(2), cone(1, 2), cone(2, 3)])


def test_bazhov_reflexive_and_symmetric():
    for f in [P2, hirzebruch(2), BLOWUP]:
        cg = class_group(f)
        cones = all_cones(f)
        for tau in cones:
            assert bazhov_equivalent(f, tau, tau, cg)[0]
        for a in cones:
            for b in cones:
                assert bazhov_equivalent(f, a, b, cg)[0] == bazhov_equivalent(f, b, a, cg)[0]


def test_bazhov_witness_conditions():
    for f in [hirzebruch(1), BLOWUP, P2]:
        cg = class_group(f)
        ups = upsilon(f, cg)
        for a in all_cones(f):
            for b in all_cones(f):
                ok, w = bazhov_equivalent(f, a, b, cg)
                if not ok:
                    continue
                perm = w.ray_permutation
                # (a) the permutation preserves the image of M
                assert permutes_image_lattice(f, perm)
                # the induced automorphism sends [D_i] to [D_perm(i)]
                for i, x in enumerate(cg.divisor_classes):
                    assert w.apply(cg, x) == cg.divisor_classes[perm[i]]
                # (b) Gamma(a) maps onto Gamma(b)
                ga, gb = gamma_monoid(f, a, cg), gamma_monoid(f, b, cg)
                moved = ClassMonoid(tuple(w.apply(cg, x) for x in ga.generators))
                assert monoids_equal(moved, gb)
                # (c) Upsilon is permuted
                for rep in ups.representatives:
                    img = ClassMonoid(tuple(w.apply(cg, x) for x in rep.generators))
                    assert ups.class_of(img) is not None


def test_bazhov_transitive_by_composed_witnesses():
    f = hirzebruch(2)
    cg = class_group(f)
    cones = all_cones(f)
    for a in cones:
        for b in cones:
            ok1, w1 = bazhov_equivalent(f, a, b, cg)
            if not ok1:
                continue
            for c in cones:
                ok2, w2 = bazhov_equivalent(f, b, c, cg)
                if not ok2:
                    continue
                comp = tuple(w2.ray_permutation[i] for i in w1.ray_permutation)
                assert permutes_image_lattice(f, comp)
                ga = gamma_monoid(f, a, cg)
                moved = ClassMonoid(tuple(cg.divisor_classes[comp[i]] for i in ga.rays))
                assert monoids_equal(moved, gamma_monoid(f, c, cg))
                assert bazhov_equivalent(f, a, c, cg)[0]


def test_orbit_classes_counts():
    for s in (1, 2, 3):
        f = hirzebruch(s)
        classes = orbit_classes(f, class_group(f))
        assert sum(len(c) for c in classes) == 9
        assert len(classes) == 2
    classes = orbit_classes(BLOWUP, class_group(BLOWUP))
    sigma4 = next(c for c in classes if cone(4) in c)
    assert not any(len(t) == 2 for t in sigma4)
