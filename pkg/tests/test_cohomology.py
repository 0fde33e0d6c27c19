"""Chevalley-Eilenberg complex tests: Betti numbers, representatives,
induced actions, invariant subcomplexes, E2 grids."""

import pytest

from liecoh.catalog import abelian, affine, gln, heisenberg, make, r2, sl2, sl2_irrep_matrices
from liecoh.liealg import Subspace, center, levi_decomposition, radical, subalgebra_structure
from liecoh.linalg import Matrix, vec_is_zero
from liecoh.repn import (
    Representation,
    adjoint_rep,
    invariants,
    sub_and_quotient_rep,
    trivial_rep,
)
from liecoh.cohomology import (
    ce_chain_complex,
    ce_cochain_complex,
    ce_cohomology,
    ce_homology,
    e2_page,
    induced_action_on_cohomology,
    invariant_subcomplex_cohomology,
)


def test_complex_dimensions_are_binomials():
    g = sl2()
    cx = ce_cochain_complex(g, trivial_rep(g, 1))
    assert cx.degrees == (1, 3, 3, 1)
    cx = ce_cochain_complex(g, adjoint_rep(g))
    assert cx.degrees == (3, 9, 9, 3)


def test_d_squared_zero():
    for name in ("sl2", "heisenberg(3)", "gln(2)", "oscillator(4)", "affine(2)"):
        g = make(name).algebra
        for m in (trivial_rep(g, 1), adjoint_rep(g)):
            assert ce_cochain_complex(g, m).is_complex()
            assert ce_chain_complex(g, m).is_complex()


def test_degree_zero_kernel_is_invariants():
    g = heisenberg(3)
    adj = adjoint_rep(g)
    cx = ce_cochain_complex(g, adj)
    ker = cx.maps[0].null_space()
    assert len(ker) == center(g).dim
    assert ce_cohomology(g, adj).betti[0] == 1


def test_sl2_betti():
    g = sl2()
    assert ce_cohomology(g, trivial_rep(g, 1)).betti_list() == [1, 0, 0, 1]
    assert ce_cohomology(g, adjoint_rep(g)).betti_list() == [0, 0, 0, 0]
    assert ce_homology(g, trivial_rep(g, 1)).betti_list() == [1, 0, 0, 1]


def test_heisenberg_betti_and_euler():
    g = heisenberg(3)
    res = ce_cohomology(g, trivial_rep(g, 1))
    assert res.betti_list() == [1, 2, 2, 1]
    cx = ce_cochain_complex(g, trivial_rep(g, 1))
    assert cx.euler_characteristic() == res.euler_characteristic()


def test_abelian_homology_is_full():
    g = abelian(3)
    m = trivial_rep(g, 2)
    res = ce_homology(g, m)
    assert res.betti_list() == [2, 6, 6, 2]


def test_b1_counts_abelianization():
    for name in ("r2", "heisenberg(3)", "gln(2)", "sl2"):
        g = make(name).algebra
        from liecoh.liealg import derived_subalgebra
        b1 = ce_cohomology(g, trivial_rep(g, 1)).betti[1]
        assert b1 == g.dim - derived_subalgebra(g).dim


def test_representatives_are_cocycles_spanning_betti():
    g = heisenberg(3)
    m = trivial_rep(g, 1)
    res = ce_cohomology(g, m, with_representatives=True)
    cx = ce_cochain_complex(g, m)
    for p, reps in res.representatives.items():
        assert len(reps) == res.betti[p]
        for v in reps:
            if p < cx.top:
                assert vec_is_zero(cx.maps[p].mul_vec(v))


def test_homology_vs_cohomology_duality_unimodular():
    for name in ("sl2", "heisenberg(3)", "so3"):
        g = make(name).algebra
        for m in (trivial_rep(g, 1), adjoint_rep(g)):
            co = ce_cohomology(g, m).betti_list()
            ho = ce_homology(g, m).betti_list()
            assert co == ho[::-1]


def test_duality_fails_for_non_unimodular():
    g = r2()
    co = ce_cohomology(g, trivial_rep(g, 1)).betti_list()
    ho = ce_homology(g, trivial_rep(g, 1)).betti_list()
    assert co == [1, 1, 0] and ho == [1, 1, 0]
    assert co != ho[::-1]


def test_zero_dimensional_algebra():
    g = abelian(0)
    m = trivial_rep(g, 3)
    res = ce_cohomology(g, m)
    assert res.betti_list() == [3]


def test_induced_action_trivial_on_heisenberg_center():
    g = heisenberg(3)
    z = center(g)
    ind = induced_action_on_cohomology(g, z, trivial_rep(g, 1))
    assert [rep.dim for rep in ind.actions] == [1, 1]
    for rep in ind.actions:
        assert all(a.is_zero() for a in rep.action)


def test_induced_action_invariants_match_subspace_invariants():
    g = make("sl2_semidirect_irrep(1)").algebra
    r = radical(g)
    adj = adjoint_rep(g)
    ind = induced_action_on_cohomology(g, Subspace(g, r.basis, ideal=True), adj)
    # H^0(r, g) = ad-invariants of the abelian radical acting on g
    stacked = Matrix.stack([adj.action_of(v) for v in r.basis], cols=g.dim)
    assert ind.cohomology.betti[0] == len(stacked.null_space()) == ind.actions[0].dim


def test_e2_page_heisenberg():
    g = heisenberg(3)
    grid = e2_page(g, center(g), trivial_rep(g, 1))
    assert [grid[(p, 0)] for p in range(3)] == [1, 2, 1]
    assert [grid[(p, 1)] for p in range(3)] == [1, 2, 1]


def test_e2_page_zero_ideal_recovers_cohomology():
    g = sl2()
    m = adjoint_rep(g)
    grid = e2_page(g, Subspace.zero(g), m)
    direct = ce_cohomology(g, m)
    assert all(grid[(p, 0)] == direct.betti[p] for p in range(4))
    assert all(v == 0 for (p, q), v in grid.items() if q > 0)


def test_e2_page_whole_ideal():
    g = sl2()
    m = trivial_rep(g, 1)
    grid = e2_page(g, Subspace.whole(g), m)
    direct = ce_cohomology(g, m)
    assert all(grid[(0, q)] == direct.betti[q] for q in range(4))


def test_invariant_subcomplex_examples():
    # r = 2-dim abelian with the natural sl2 action
    v1 = abelian(2)
    h, e, f = sl2_irrep_matrices(1)
    zero2 = Matrix.zero(2, 2)
    adj_v1 = Representation(v1, [zero2, zero2], dim=2)
    res = invariant_subcomplex_cohomology(v1, adj_v1, (h, e, f), (h, e, f))
    assert res.betti_list() == [0, 1, 0]
    z1 = Matrix.zero(1, 1)
    res = invariant_subcomplex_cohomology(v1, trivial_rep(v1, 1), (h, e, f), (z1, z1, z1))
    assert res.betti_list() == [1, 0, 1]
    # empty outer action reduces to plain cohomology
    res = invariant_subcomplex_cohomology(v1, trivial_rep(v1, 1), (), ())
    assert res.betti_list() == ce_cohomology(v1, trivial_rep(v1, 1)).betti_list()


def test_invariant_subcomplex_rejects_incompatible_action():
    h3 = heisenberg(3)
    grading = Matrix.diagonal([1, 0, 1])  # a derivation of h3
    zero3 = Matrix.zero(3, 3)
    with pytest.raises(ValueError, match="incompatible"):
        # zero on the adjoint module contradicts ad(grading . x) != 0
        invariant_subcomplex_cohomology(h3, adjoint_rep(h3), (grading,), (zero3,))
    with pytest.raises(ValueError, match="derivations"):
        invariant_subcomplex_cohomology(h3, adjoint_rep(h3), (Matrix.identity(3),), (zero3,))


def test_invariant_subcomplex_matches_induced_invariants():
    # complete-reducibility consistency on the 5-dim perfect algebra
    g = make("sl2_semidirect_irrep(1)").algebra
    s, r = levi_decomposition(g)
    adj = adjoint_rep(g)
    rad_mod = sub_and_quotient_rep(adj, r.basis).sub
    r_alg, r_emb = subalgebra_structure(g, r.basis)
    r_adj = adjoint_rep(r_alg)

    def on_r(y):
        return Matrix.from_cols([r_emb.solve(g.bracket(y, v)) for v in r.basis], rows=r.dim)

    mats = tuple(on_r(v) for v in s.basis)
    sub = invariant_subcomplex_cohomology(r_alg, r_adj, mats, mats)
    ind = induced_action_on_cohomology(g, Subspace(g, r.basis, ideal=True), rad_mod)
    inv_dims = [len(invariants(rep)) for rep in ind.actions]
    assert sub.betti_list() == inv_dims == [0, 1, 0]
