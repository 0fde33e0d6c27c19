"""Structure-theory tests: series, Killing form, radicals, Levi, quotients."""

from fractions import Fraction

import pytest

from liecoh.catalog import (
    abelian,
    affine,
    gln,
    heisenberg,
    make,
    oscillator,
    r2,
    sl2,
    sl2_semidirect_irrep,
    sl2_irrep_matrices,
    so3,
)
from liecoh.liealg import (
    LieAlgebra,
    Subspace,
    center,
    change_of_basis,
    derivations,
    derived_series,
    is_derivation,
    is_nilpotent,
    is_semisimple,
    is_solvable,
    killing_form,
    levi_decomposition,
    lower_central_series,
    nilradical,
    quotient_algebra,
    radical,
    semidirect_product,
    structure_report,
    subalgebra_structure,
    validate_structure,
)
from liecoh.linalg import Matrix, vector
from liecoh.repn import Representation

F = Fraction


def test_validate_structure_accepts_catalog():
    for g in (sl2(), so3(), heisenberg(5), gln(2), affine(2), oscillator()):
        assert validate_structure(g) == []


def test_validate_structure_reports_bad_triple():
    # [x,y] = x, [y,z] = y, [x,z] = z fails Jacobi onap (x,y,z)
    bad = LieAlgebra(3, {(0, 1): {0: 1}, (1, 2): {1: 1}, (0, 2): {2: 1}}, ["x", "y", "z"])
    violations = validate_structure(bad)
    assert violations and violations[0].triple == (0, 1, 2)
    assert any(violations[0].residual)


def test_bracket_bilinear_and_antisymmetric():
    g = sl2()
    h, e, f = (g.basis_vector(i) for i in range(3))
    assert g.bracket(e, f) == h
    assert g.bracket(f, e) == tuple(-x for x in h)
    x = vector([1, 2, -3])
    assert g.bracket(x, x) == (0, 0, 0)
    assert g.bracket(vector([0, 2, 0]), f) == (F(2), 0, 0)


def test_series_dimensions():
    assert [s.dim for s in derived_series(heisenberg(3))] == [3, 1, 0]
    assert [s.dim for s in derived_series(sl2())] == [3]
    assert [s.dim for s in lower_central_series(r2())] == [2, 1]
    assert is_solvable(r2()) and not is_nilpotent(r2())
    assert is_nilpotent(heisenberg(5))


def test_center():
    assert center(heisenberg(3)).dim == 1
    assert center(sl2()).dim == 0
    assert center(abelian(4)).dim == 4
    z = center(heisenberg(3))
    assert z.contains(vector([0, 0, 5]))


def test_killing_form_values():
    k = killing_form(sl2())
    assert k.gram == Matrix(3, 3, [[8, 0, 0], [0, 0, 4], [0, 4, 0]])
    assert k.gram.det() == -128
    assert killing_form(heisenberg(3)).gram.is_zero()
    assert killing_form(abelian(3)).gram.is_zero()
    assert k.is_invariant()


def test_radical():
    assert radical(sl2()).dim == 0
    assert radical(r2()).dim == 2
    rad = radical(gln(2))
    assert rad.dim == 1
    # the identity matrix spans it: E11 + E22 in the gln(2) basis order
    assert rad.contains(vector([1, 0, 0, 1]))


def test_nilradical():
    assert nilradical(r2()).dim == 1
    assert nilradical(heisenberg(3)).dim == 3
    assert nilradical(gln(2)).dim == 1
    assert nilradical(oscillator()).dim == 3


def test_nilradical_squares_cancel_case():
    # t acts on Q^4 by the companion matrix of x^4 - 1: eigenvalues 1,-1,i,-i
    # have sum of squares zero, so a pairwise Killing-type test would wrongly
    # keep t; the associative-closure test must reject it.
    g = LieAlgebra(5, {(0, 1): {2: 1}, (0, 2): {3: 1}, (0, 3): {4: 1}, (0, 4): {1: 1}},
                   ["t", "v1", "v2", "v3", "v4"], name="quartic")
    assert validate_structure(g) == []
    k = killing_form(g)
    t = g.basis_vector(0)
    assert k.value(t, t) == 0  # the naive test is blind here
    nil = nilradical(g)
    assert nil.dim == 4
    assert not nil.contains(t)


def test_derivations_dimensions():
    assert len(derivations(sl2())) == 3
    assert len(derivations(heisenberg(3))) == 6
    assert len(derivations(abelian(3))) == 9
    for d in derivations(heisenberg(3)):
        assert is_derivation(heisenberg(3), d)


def test_structure_report_flags():
    rep = structure_report(sl2())
    assert rep.perfect and rep.semisimple and rep.unimodular
    assert rep.complete and rep.sympathetic
    rep = structure_report(r2())
    assert not rep.perfect and rep.complete and not rep.unimodular
    rep = structure_report(heisenberg(3))
    assert rep.nilpotent and rep.unimodular and not rep.complete
    rep = structure_report(affine(2))
    assert rep.complete and not rep.perfect
    # radical = scalars + translations, nilradical = translations only
    assert rep.nilradical_dim == 2 and rep.radical_dim == 3


def test_levi_decomposition():
    s, r = levi_decomposition(gln(2))
    assert s.dim == 3 and r.dim == 1
    sub, _ = subalgebra_structure(gln(2), s.basis)
    assert is_semisimple(sub)
    s, r = levi_decomposition(sl2_semidirect_irrep(1))
    assert s.dim == 3 and r.dim == 2
    s, r = levi_decomposition(r2())
    assert s.dim == 0 and r.dim == 2
    s, r = levi_decomposition(sl2())
    assert s.dim == 3 and r.dim == 0


def test_levi_on_nonabelian_radical():
    g = make("sl2_semidirect_heisenberg").algebra
    s, r = levi_decomposition(g)
    assert s.dim == 3 and r.dim == 3
    sub, _ = subalgebra_structure(g, s.basis)
    assert is_semisimple(sub)
    assert all(r.contains(v) for v in nilradical(g).basis)


def test_quotient_algebra():
    h3 = heisenberg(3)
    qd = quotient_algebra(h3, center(h3))
    assert qd.algebra.dim == 2 and not qd.algebra.bracket_table
    qd2 = quotient_algebra(h3, Subspace.whole(h3))
    assert qd2.algebra.dim == 0
    qd3 = quotient_algebra(gln(2), radical(gln(2)))
    got = structure_report(qd3.algebra)
    want = structure_report(sl2())
    assert (got.perfect, got.semisimple, got.center_dim) == (want.perfect, want.semisimple, want.center_dim)
    with pytest.raises(ValueError):
        quotient_algebra(h3, Subspace(h3, [h3.basis_vector(0)]))  # not an ideal


def test_semidirect_product():
    s = sl2()
    v = abelian(2)
    rep = Representation(s, sl2_irrep_matrices(1), dim=2)
    g = semidirect_product(s, v, rep)
    assert g.dim == 5 and validate_structure(g) == []
    assert structure_report(g).perfect
    # 0 |x r = r
    z = abelian(0)
    r = r2()
    g2 = semidirect_product(z, r, Representation(z, [], dim=2))
    assert g2.dim == 2 and g2.bracket_table == r.bracket_table
    # gl1 acting by scalar 1 on a line gives r2
    gl1 = gln(1)
    g3 = semidirect_product(gl1, abelian(1), Representation(gl1, [Matrix.identity(1)]))
    assert g3.bracket_table == r2().bracket_table


def test_semidirect_rejects_non_derivations():
    s = gln(1)
    h3 = heisenberg(3)
    # identity on h3 is not a derivation ([x,y]=z needs trace condition)
    with pytest.raises(ValueError):
        semidirect_product(s, h3, Representation(s, [Matrix.identity(3)]))


def test_change_of_basis_invariance():
    g = sl2()
    assert change_of_basis(g, Matrix.identity(3)).bracket_table == g.bracket_table
    p = Matrix(3, 3, [[1, 1, 0], [0, 1, 2], [1, 0, 1]])
    g2 = change_of_basis(g, p)
    assert validate_structure(g2) == []
    r1, r2_ = structure_report(g), structure_report(g2)
    assert r1 == r2_
    with pytest.raises(ValueError):
        change_of_basis(g, Matrix.zero(3, 3))
    # scaling the center of h3 keeps invariants
    h3 = heisenberg(3)
    p = Matrix.diagonal([1, 1, 2])
    h3b = change_of_basis(h3, p)
    assert is_nilpotent(h3b) and center(h3b).dim == 1


def test_radical_quotient_is_semisimple():
    for name in ("gln(2)", "affine(2)", "sl2_semidirect_irrep(1)", "oscillator(4)"):
        g = make(name).algebra
        qd = quotient_algebra(g, radical(g))
        if qd.algebra.dim:
            assert is_semisimple(qd.algebra)


def test_perfect_implies_radical_equals_nilradical():
    # instance check of the "perfect => solvable radical nilpotent" argument
    for name in ("sl2", "sl2_semidirect_irrep(1)", "sl2_semidirect_heisenberg"):
        g = make(name).algebra
        assert structure_report(g).perfect
        assert radical(g).basis == nilradical(g).basis


def test_report_internal_implications():
    for entry in make("sl2"), make("gln(2)"), make("affine(2)"), make("so3"):
        rep = structure_report(entry.algebra)
        assert rep.sympathetic == (rep.perfect and rep.complete)
        if rep.semisimple:
            assert rep.perfect and rep.radical_dim == 0
