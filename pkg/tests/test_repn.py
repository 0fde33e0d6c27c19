"""Representation-layer tests."""

import pytest

from liecoh.catalog import abelian, heisenberg, make, sl2, sl2_irrep_matrices
from liecoh.liealg import Subspace, center, levi_decomposition, radical
from liecoh.linalg import Matrix, vector
from liecoh.repn import (
    Representation,
    adjoint_rep,
    dual_rep,
    equivariant_homs,
    hom_rep,
    hom_vector_to_matrix,
    invariants,
    restrict_rep,
    sub_and_quotient_rep,
    tensor_rep,
    trivial_rep,
    validate_representation,
)


def natural_sl2_module():
    g = sl2()
    return g, Representation(g, sl2_irrep_matrices(1), dim=2)


def test_validate_representation():
    g = sl2()
    assert validate_representation(adjoint_rep(g)) == []
    assert validate_representation(trivial_rep(g, 3)) == []
    _, nat = natural_sl2_module()
    assert validate_representation(nat) == []
    broken = Representation(g, [Matrix.identity(2), Matrix.zero(2, 2), Matrix.zero(2, 2)])
    assert validate_representation(broken) != []


def test_adjoint_matches_structure_constants():
    h3 = heisenberg(3)
    adj = adjoint_rep(h3)
    # rho(x) y = z
    assert adj.action[0].mul_vec(h3.basis_vector(1)) == h3.basis_vector(2)
    assert adjoint_rep(abelian(3)) == trivial_rep(abelian(3), 3)


def test_dual_is_involutive_and_dim_preserving():
    g, nat = natural_sl2_module()
    d = dual_rep(nat)
    assert d.dim == nat.dim
    assert dual_rep(d) == nat
    assert dual_rep(trivial_rep(g, 2)) == trivial_rep(g, 2)
    assert validate_representation(d) == []


def test_tensor_and_hom():
    g, nat = natural_sl2_module()
    t = tensor_rep(nat, adjoint_rep(g))
    assert t.dim == 6
    assert validate_representation(t) == []
    hom = hom_rep(nat, nat)
    assert validate_representation(hom) == []
    triv = trivial_rep(g, 1)
    t2 = tensor_rep(triv, nat)
    assert t2.action == nat.action  # canonical identification


def test_invariants():
    g, nat = natural_sl2_module()
    assert invariants(nat) == []
    assert len(invariants(trivial_rep(g, 4))) == 4
    adj = adjoint_rep(heisenberg(3))
    inv = invariants(adj)
    assert len(inv) == center(heisenberg(3)).dim == 1


def test_equivariant_homs_schur():
    g, nat = natural_sl2_module()
    whole = Subspace.whole(g)
    count, basis = equivariant_homs(nat, nat, whole)
    assert count == 1
    f = basis[0]
    # Schur: the only equivariant endomorphism is a scalar
    assert f[0, 0] == f[1, 1] != 0 and f[0, 1] == f[1, 0] == 0
    count, _ = equivariant_homs(nat, adjoint_rep(g), whole)
    assert count == 0
    count, _ = equivariant_homs(adjoint_rep(g), adjoint_rep(g), whole)
    assert count == 1


def test_hom_vector_reshape_roundtrip():
    v = vector([1, 2, 3, 4, 5, 6])
    m = hom_vector_to_matrix(v, 2, 3)
    assert (m.rows, m.cols) == (3, 2)
    # index (a, b) = a*dimN + b encodes m_a -> sum_b v f_b
    assert m.col(0) == (1, 2, 3)
    assert m.col(1) == (4, 5, 6)


def test_restrict_rep():
    g = make("sl2_semidirect_irrep(1)").algebra
    s, r = levi_decomposition(g)
    adj = adjoint_rep(g)
    res = restrict_rep(adj, r)
    assert res.algebra.dim == 2 and res.dim == 5
    assert validate_representation(res) == []
    # the radical is abelian and acts with square zero on g
    for a in res.action:
        assert (a * a).is_zero()
    with pytest.raises(ValueError):
        # [e, v_1] = v_0 escapes span(e, v_1)
        sub = Subspace(g, [g.basis_vector(1), g.basis_vector(4)])
        restrict_rep(adj, sub)
    # restriction to the zero subalgebra keeps the space, drops all action
    zero_res = restrict_rep(adj, Subspace.zero(g))
    assert zero_res.dim == 5 and zero_res.algebra.dim == 0


def test_dual_of_adjoint_betti_matches_adjoint():
    # Killing self-duality of the semisimple adjoint module
    from liecoh.cohomology import ce_cohomology
    g = sl2()
    adj = adjoint_rep(g)
    assert ce_cohomology(g, dual_rep(adj)).betti_list() == \
        ce_cohomology(g, adj).betti_list()


def test_sub_and_quotient_rep():
    g = heisenberg(3)
    adj = adjoint_rep(g)
    z = center(g)
    sq = sub_and_quotient_rep(adj, z.basis)
    assert sq.sub.dim == 1 and sq.quotient.dim == 2
    # brackets land in the center, so the quotient module is trivial
    assert all(a.is_zero() for a in sq.quotient.action)
    assert validate_representation(sq.sub) == []
    assert validate_representation(sq.quotient) == []
    full = sub_and_quotient_rep(adj, [g.basis_vector(i) for i in range(3)])
    assert full.quotient.dim == 0
    with pytest.raises(ValueError):
        sub_and_quotient_rep(adj, [g.basis_vector(0)])  # not invariant


def test_quotient_module_matches_quotient_algebra_adjoint():
    g = make("gln(2)").algebra
    r = radical(g)
    sq = sub_and_quotient_rep(adjoint_rep(g), r.basis)
    from liecoh.liealg import quotient_algebra
    qd = quotient_algebra(g, r)
    qadj = adjoint_rep(qd.algebra)
    # induced action of g on g/r, read through the projection, is the adjoint
    # of the quotient: compare matrices on the section representatives
    for j in range(qd.algebra.dim):
        y = qd.section.col(j)
        lhs = sq.quotient.action_of(vector(y))
        assert lhs == qadj.action[j]
