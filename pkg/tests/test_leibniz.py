"""Leibniz complex tests: dimensions, cap, duality, degree-1 agreement."""

import pytest

from liecoh.catalog import abelian, heisenberg, make, sl2
from liecoh.repn import adjoint_rep, dual_rep, trivial_rep
from liecoh.cohomology import ce_cohomology
from liecoh.leibniz import (
    LeibnizComplexSpec,
    ResourceCapExceeded,
    leibniz_chain_complex,
    leibniz_cochain_complex,
    leibniz_cohomology,
    leibniz_homology,
)


def test_degree_dimensions_are_tensor_powers():
    g = sl2()
    spec = LeibnizComplexSpec(g, trivial_rep(g, 1), max_degree=4)
    cx = leibniz_cochain_complex(spec)
    assert cx.degrees == (1, 3, 9, 27, 81)


def test_abelian_differentials_vanish():
    g = abelian(2)
    spec = LeibnizComplexSpec(g, trivial_rep(g, 1), max_degree=4)
    cx = leibniz_cochain_complex(spec)
    assert all(m.is_zero() for m in cx.maps)
    res = leibniz_cohomology(spec)
    assert res.betti_list() == [1, 2, 4, 8, 16]
    res = leibniz_homology(spec)
    assert res.betti_list() == [1, 2, 4, 8, 16]


def test_d_squared_zero():
    for name in ("sl2", "heisenberg(3)", "r2", "oscillator(4)"):
        g = make(name).algebra
        for m in (trivial_rep(g, 1), adjoint_rep(g)):
            spec = LeibnizComplexSpec(g, m, max_degree=3)
            assert leibniz_cochain_complex(spec).is_complex()
            assert leibniz_chain_complex(spec).is_complex()


def test_semisimple_vanishing():
    g = sl2()
    spec = LeibnizComplexSpec(g, trivial_rep(g, 1), max_degree=4)
    res = leibniz_cohomology(spec)
    assert [res.betti[p] for p in (1, 2, 3)] == [0, 0, 0]
    res = leibniz_homology(spec)
    assert [res.betti[p] for p in (1, 2, 3)] == [0, 0, 0]
    assert res.inexact_top == 4


def test_degree_one_agrees_with_lie_cohomology():
    for name in ("sl2", "heisenberg(3)", "r2", "gln(2)", "abelian(3)"):
        g = make(name).algebra
        m = trivial_rep(g, 1)
        spec = LeibnizComplexSpec(g, m, max_degree=2)
        assert leibniz_cohomology(spec).betti[1] == ce_cohomology(g, m).betti[1]


def test_heisenberg_degree_one():
    g = heisenberg(3)
    spec = LeibnizComplexSpec(g, trivial_rep(g, 1), max_degree=3)
    assert leibniz_cohomology(spec).betti[1] == 2


def test_direct_duality():
    for name in ("sl2", "heisenberg(3)", "r2", "oscillator(4)"):
        g = make(name).algebra
        for m in (trivial_rep(g, 1), adjoint_rep(g)):
            pc = leibniz_cohomology(LeibnizComplexSpec(g, m, max_degree=3))
            ph = leibniz_homology(LeibnizComplexSpec(g, dual_rep(m), max_degree=3))
            assert [pc.betti[p] for p in range(3)] == [ph.betti[p] for p in range(3)]


def test_resource_cap():
    g = make("affine(2)").algebra  # dim 6
    spec = LeibnizComplexSpec(g, trivial_rep(g, 1), max_degree=9, resource_cap=2_000_000)
    with pytest.raises(ResourceCapExceeded) as err:
        leibniz_cochain_complex(spec)
    assert err.value.cap == 2_000_000
    assert err.value.degree >= 4


def test_spec_validation():
    g = sl2()
    with pytest.raises(ValueError):
        LeibnizComplexSpec(g, trivial_rep(g, 1), max_degree=0)
    with pytest.raises(ValueError):
        LeibnizComplexSpec(g, trivial_rep(abelian(2), 1))
