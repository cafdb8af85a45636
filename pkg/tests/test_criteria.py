import random
from fractions import Fraction

import pytest

from ckforms.catalog import parse_descriptor
from ckforms.criteria import (
    NO_OBSTRUCTION,
    OBSTRUCTION_FOUND,
    Subspace,
    antipodal_orbit_check,
    check_proper_embedded,
    cocompact_dimension_check,
    necessary_conditions,
    subspace_from_text,
)
from ckforms.errors import CapExceeded, DimensionMismatch, NotInSpan
from ckforms.linalg import vadd, vector, vscale, zero_vector
from ckforms.rootspace import build_root_system, direct_sum

from helpers import FIXTURES, rand_fraction

A4 = build_root_system("A", 4)


def _load(name, system):
    return subspace_from_text((FIXTURES / name).read_text(), system)


def test_necessary_conditions_examples():
    g = parse_descriptor("sl(11,R)")
    h = parse_descriptor("so(4,7)")
    rep = necessary_conditions(g, h, parse_descriptor("e6(-26)"))
    by_name = {c.name: c for c in rep.checks}
    assert by_name["real_rank"].lhs == 2 + 4 and by_name["real_rank"].rhs == 10
    assert by_name["ahyp_rank"].lhs == 1 + 4 and by_name["ahyp_rank"].rhs == 5
    assert rep.overall == NO_OBSTRUCTION

    rep2 = necessary_conditions(g, h, parse_descriptor("so(5,5)"))
    assert {c.name: c.lhs for c in rep2.checks}["ahyp_rank"] == 8
    assert rep2.overall == OBSTRUCTION_FOUND

    rep3 = necessary_conditions(parse_descriptor("sl(3,R)"), parse_descriptor(""),
                                parse_descriptor("sl(3,R)"))
    assert [(c.lhs, c.rhs, c.passed) for c in rep3.checks] == [(2, 2, True), (1, 1, True)]
    assert rep3.overall == NO_OBSTRUCTION


def test_overall_iff_some_check_failed():
    pool = ["sl(3,R)", "so(2,3)", "sp(2,R)", "su(1,2)", "so(4,7)", "sl(11,R)", ""]
    for gt in pool:
        for ht in pool:
            for lt in pool:
                rep = necessary_conditions(*(parse_descriptor(t) for t in (gt, ht, lt)))
                assert (rep.overall == OBSTRUCTION_FOUND) == any(
                    not c.passed for c in rep.checks)


def test_cocompact_examples():
    r = cocompact_dimension_check(parse_descriptor("sl(3,R)"), parse_descriptor("so(3)"),
                                  parse_descriptor("sl(3,R)"))
    assert (r.d_g, r.d_h, r.d_l, r.equal) == (5, 0, 5, True)
    r2 = cocompact_dimension_check(parse_descriptor("sl(11,R)"), parse_descriptor("so(4,7)"),
                                   parse_descriptor("e6(-26)"))
    assert (r2.d_g, r2.d_h, r2.d_l, r2.equal) == (65, 28, 26, False)
    r3 = cocompact_dimension_check(parse_descriptor("sl(11,R)"), parse_descriptor("sp(4,R)"),
                                   parse_descriptor(""))
    assert r3.required_d == 65 - 20 == 45


def test_subspace_reduction_and_errors():
    s = Subspace(A4, (vector([1, 0, 0, 0, -1]), vector([2, 0, 0, 0, -2])))
    assert s.dim == 1
    with pytest.raises(DimensionMismatch):
        Subspace(A4, (vector([1, 0, 0, -1]),))
    with pytest.raises(NotInSpan):
        Subspace(A4, (vector([1, 0, 0, 0, 0]),))


def test_subspace_file_format():
    sub = _load("so23_in_sl5.vec", A4)
    assert sub.dim == 2
    text = "# comment\n\n1/2 0 0 0 -1/2\n"
    assert subspace_from_text(text, A4).basis == (vector([1, 0, 0, 0, -1]),)
    assert subspace_from_text("# nothing\n", A4).dim == 0


def test_check_proper_fixtures():
    a_h = _load("a4_ah.vec", A4)
    meets = _load("a4_al_meets.vec", A4)
    clear = _load("a4_al_clear.vec", A4)

    r = check_proper_embedded(A4, a_h, meets)
    assert not r.proper
    assert r.witness == vector([1, 0, 0, 0, -1])

    assert check_proper_embedded(A4, a_h, clear).proper

    self_hit = check_proper_embedded(A4, a_h, a_h)
    assert not self_hit.proper
    assert self_hit.w_index == 0
    assert self_hit.element.is_identity()
    assert self_hit.witness == a_h.basis[0]

    a1a1 = direct_sum(build_root_system("A", 1), build_root_system("A", 1))
    s_h = Subspace(a1a1, (vector([1, -1, 0, 0]),))
    s_l = Subspace(a1a1, (vector([0, 0, 1, -1]),))
    assert check_proper_embedded(a1a1, s_h, s_l).proper


def test_check_proper_brute_force_oracle():
    # independent scan over all 120 permutation matrices
    from ckforms.weyl import enumerate_weyl
    a_h = _load("a4_ah.vec", A4)
    meets = _load("a4_al_meets.vec", A4)
    clear = _load("a4_al_clear.vec", A4)
    for a_l, expect_proper in ((meets, False), (clear, True)):
        hit = False
        for w in enumerate_weyl(A4):
            img = w.apply(a_l.basis[0])
            from ckforms.linalg import rank_of
            if rank_of([img, a_h.basis[0]]) == 1:
                hit = True
                break
        assert hit != expect_proper


def test_zero_subspace_is_proper():
    empty = Subspace(A4, ())
    full = _load("a4_ah.vec", A4)
    assert check_proper_embedded(A4, empty, full).proper
    assert check_proper_embedded(A4, full, empty).proper


def test_cap_propagates():
    f4 = build_root_system("F", 4)
    h = Subspace(f4, (vector([1, 0, 0, 0]),))
    l = Subspace(f4, (vector([0, 1, 0, 0]),))
    with pytest.raises(CapExceeded):
        check_proper_embedded(f4, h, l, cap=100)


def test_wrong_system_rejected():
    b3 = build_root_system("B", 3)
    sub = Subspace(b3, (vector([1, 0, 0]),))
    a_h = _load("a4_ah.vec", A4)
    with pytest.raises(DimensionMismatch):
        check_proper_embedded(A4, a_h, sub)


def _random_subspace(system, rng, max_dim=2):
    dim = rng.randint(1, max_dim)
    vecs = []
    for _ in range(dim):
        v = zero_vector(system.ambient_dim)
        for a in system.simple_roots:
            v = vadd(v, vscale(rand_fraction(rng), a))
        vecs.append(v)
    return Subspace(system, tuple(vecs))


@pytest.mark.parametrize("letter,rank", [("A", 4), ("B", 3)])
def test_swap_and_respan_invariance(letter, rank):
    system = build_root_system(letter, rank)
    rng = random.Random(42 + rank)
    for _ in range(15):
        a_h = _random_subspace(system, rng)
        a_l = _random_subspace(system, rng)
        verdict = check_proper_embedded(system, a_h, a_l).proper
        assert check_proper_embedded(system, a_l, a_h).proper == verdict
        # re-span both subspaces through random invertible combinations
        respanned = []
        for sub in (a_h, a_l):
            new_vecs = []
            for _ in range(sub.dim + 1):
                v = zero_vector(system.ambient_dim)
                for b in sub.basis:
                    c = Fraction(rng.randint(-3, 3))
                    v = vadd(v, vscale(c, b))
                new_vecs.append(v)
            alt = Subspace(system, tuple(new_vecs))
            if alt.dim != sub.dim:  # unlucky singular draw; keep original
                alt = sub
            respanned.append(alt)
        assert check_proper_embedded(system, respanned[0], respanned[1]).proper == verdict


def test_antipodal_orbit_check_examples():
    r = antipodal_orbit_check(A4, vector([1, 0, 0, 0, -1]))
    assert r.antipodal and r.dominant_rep == vector([1, 0, 0, 0, -1])
    assert not antipodal_orbit_check(A4, vector([4, -1, -1, -1, -1])).antipodal
    c2 = build_root_system("C", 2)
    assert antipodal_orbit_check(c2, vector([1, 1])).antipodal


def test_embedded_split_subspace_generators_are_antipodal():
    # cone generators of so(p,q) placed inside the ambient split subspace
    for name, system in (("so23_in_sl5.vec", A4),
                         ("so47_in_sl11.vec", build_root_system("A", 10))):
        sub = _load(name, system)
        for v in sub.spanning_vectors:
            assert antipodal_orbit_check(system, v).antipodal


def test_proper_fixture_consistent_with_catalog_conditions():
    # the Proper fixture corresponds to h = so(1,4), l = R^1 inside sl(5,R)
    rep = necessary_conditions(parse_descriptor("sl(5,R)"), parse_descriptor("so(1,4)"),
                               parse_descriptor("R^1"))
    assert rep.overall == NO_OBSTRUCTION
