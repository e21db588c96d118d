import pytest

from _corpus import (
    BLOWUP,
    FIG1,
    FIG2_RIGHT,
    P1,
    P1P1,
    P2,
    angular_coverage_complete,
    brute_force_roots,
    corpus_fans_2d,
    hirzebruch,
    random_fans_2d,
)
from eulertoric.errors import NonSimplicialCone, NotComplete, NotPositivelySpanning, OverlappingCones
from eulertoric.fan import (
    VERIFIED,
    Fan,
    admits_additive_action,
    all_cones,
    complete_collections,
    demazure_roots,
    smooth_max_cones,
    validate_fan,
)
from eulertoric.lattice import coords_in_basis, pairing
from eulertoric.polytope import normal_fan


def test_validate_examples():
    assert validate_fan(P2).completeness == VERIFIED
    assert validate_fan(hirzebruch(2)).completeness == VERIFIED
    with pytest.raises(NotPositivelySpanning):
        validate_fan(Fan.build([(1, 0)], [(0,)]))


def test_validate_overlap_and_gap():
    rays = [(1, 0), (0, 1), (-1, 0), (0, -1)]
    with pytest.raises(OverlappingCones):
        extra = rays + [(1, 1)]
        validate_fan(Fan.build(extra, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)]))
    with pytest.raises(NotComplete):
        validate_fan(Fan.build(rays, [(0, 1), (1, 2), (2, 3)]))


def test_build_rejects_bad_rays():
    with pytest.raises(Exception):
        Fan.build([(2, 0), (0, 1)], [(0, 1)])
    with pytest.raises(Exception):
        Fan.build([(1, 0), (0, 1)], [(0, 1), (0,)])


def _variants(f):
    # the fan itself, one maximal cone dropped, and an extra cone across two cones
    yield f
    if len(f.max_cones) > 3:
        yield Fan.build(f.rays, f.max_cones[1:])
    # a cone spanning two adjacent cones, overlapping them
    a, b = f.max_cones[0]
    for c in f.max_cones[1:]:
        if b in c and a not in c:
            other = c[0] if c[1] == b else c[1]
            try:
                yield Fan.build(f.rays, list(f.max_cones) + [tuple(sorted((a, other)))])
            except Exception:
                pass
            break


def test_validate_agrees_with_angular_oracle():
    checked = 0
    for f in random_fans_2d(40, seed=3) + [P2, P1P1, BLOWUP, FIG1]:
        for g in _variants(f):
            try:
                verdict = validate_fan(g).completeness == VERIFIED
            except (NotComplete, OverlappingCones, NotPositivelySpanning):
                verdict = False
            except Exception:
                continue
            assert verdict == angular_coverage_complete(g), g
            checked += 1
    assert checked > 40


def test_roots_p1():
    roots = {(r.e, r.distinguished) for r in demazure_roots(P1)}
    assert roots == {((-1,), 0), ((1,), 1)}


def test_roots_p1p1():
    roots = {(r.e, r.distinguished) for r in demazure_roots(P1P1)}
    assert roots == {((-1, 0), 0), ((0, -1), 1), ((1, 0), 2), ((0, 1), 3)}


def test_roots_p2_count():
    assert len(demazure_roots(P2)) == 6


def test_roots_match_oracle_on_corpus():
    for f in corpus_fans_2d():
        got = demazure_roots(f)
        assert {(r.e, r.distinguished) for r in got} == brute_force_roots(f)
        for r in got:
            vals = [pairing(p, r.e) for p in f.rays]
            assert vals[r.distinguished] == -1
            assert all(v >= 0 for i, v in enumerate(vals) if i != r.distinguished)


def test_complete_collections_examples():
    assert (0, 1) in [c.basis_rays for c in complete_collections(P2)]
    for s in (1, 2, 3):
        H = hirzebruch(s)
        colls = {c.basis_rays: c for c in complete_collections(H)}
        assert (0, 3) in colls
        basis = [H.rays[0], H.rays[3]]
        assert coords_in_basis(basis, (0, 1)) == (0, -1)
        assert coords_in_basis(basis, (-1, s)) == (-1, -s)
    assert complete_collections(normal_fan(FIG2_RIGHT)) == []


def test_collection_invariant_on_corpus():
    for f in corpus_fans_2d():
        colls = complete_collections(f)
        assert admits_additive_action(f)[0] == bool(colls)
        for c in colls:
            for i, rho in enumerate(c.basis_rays):
                for j, root in enumerate(c.roots):
                    assert pairing(f.rays[rho], root.e) == (-1 if i == j else 0)
            for k in range(f.nrays):
                if k not in c.basis_rays:
                    assert all(pairing(f.rays[k], root.e) >= 0 for root in c.roots)


def test_admits_additive_action_examples():
    assert admits_additive_action(FIG1)[0]
    for s in (1, 2, 3):
        ok, witness = admits_additive_action(hirzebruch(s))
        assert ok and witness is not None
    assert admits_additive_action(normal_fan(FIG2_RIGHT)) == (False, None)


def test_smooth_max_cones():
    assert smooth_max_cones(P2) == list(P2.max_cones)
    f = Fan.build([(1, 0), (0, 1), (-1, -2)], [(0, 1), (1, 2), (2, 0)])
    assert smooth_max_cones(f) == [(0, 1), (1, 2)]
    assert len(smooth_max_cones(hirzebruch(3))) == 4


def test_all_cones_counts():
    assert len(all_cones(P2)) == 7
    assert len(all_cones(hirzebruch(1))) == 9
    assert len(all_cones(BLOWUP)) == 11
    assert all_cones(P2)[0] == ()


def test_all_cones_rejects_nonsimplicial_3d():
    # octahedron's normal fan has 4-ray cones
    oct_rays = [(1, 1, 1), (1, 1, -1), (1, -1, 1), (1, -1, -1),
                (-1, 1, 1), (-1, 1, -1), (-1, -1, 1), (-1, -1, -1)]
    f = Fan.build(oct_rays, [(0, 1, 2, 3), (4, 5, 6, 7), (0, 1, 4, 5), (2, 3, 6, 7),
                             (0, 2, 4, 6), (1, 3, 5, 7)], complete=True)
    with pytest.raises(NonSimplicialCone):
        all_cones(f)
