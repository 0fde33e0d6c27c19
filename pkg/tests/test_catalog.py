"""Catalog constructor tests."""

import pytest

from liecoh.catalog import default_entries, list_names, make, r2
from liecoh.liealg import center, structure_report, validate_structure
from liecoh.files import algebra_to_dict, parse_algebra_dict


def test_every_entry_validates():
    for entry in default_entries():
        assert validate_structure(entry.algebra) == [], entry.name


def test_names_and_params():
    assert "affine" in list_names()
    assert make("heisenberg(3)").algebra.dim == 3
    assert make("abelian(4)").algebra.dim == 4
    assert make("oscillator(4)").algebra.dim == 4
    with pytest.raises(KeyError):
        make("nosuch")
    with pytest.raises(KeyError):
        make("affine")  # parameter required
    with pytest.raises(KeyError):
        make("sl2(3)")  # no parameter accepted


def test_affine_1_is_r2_up_to_names():
    a = make("affine(1)").algebra
    assert a.dim == 2
    assert a.bracket_table == r2().bracket_table


def test_sl2_semidirect_irrep_construction():
    g = make("sl2_semidirect_irrep(1)").algebra
    assert g.dim == 5
    rep = structure_report(g)
    assert rep.perfect and not rep.semisimple
    assert "prop3.8-hypothesis-holds" in make("sl2_semidirect_irrep(1)").flags
    g3 = make("sl2_semidirect_irrep(3)").algebra
    assert g3.dim == 7 and validate_structure(g3) == []


def test_heisenberg_center():
    g = make("heisenberg(3)").algebra
    assert center(g).dim == 1
    g5 = make("heisenberg(5)").algebra
    assert center(g5).dim == 1
    with pytest.raises(ValueError):
        make("heisenberg(4)")


def test_reported_metadata_matches_computation():
    for entry in default_entries():
        rep = structure_report(entry.algebra)
        if "semisimple" in entry.flags:
            assert rep.semisimple
        if "complete" in entry.flags:
            assert rep.complete
        if "non-perfect" in entry.flags:
            assert not rep.perfect
        if "perfect" in entry.flags:
            assert rep.perfect
        if "nilpotent" in entry.flags:
            assert rep.nilpotent


def test_export_round_trip():
    for name in ("sl2", "affine(2)", "heisenberg(5)", "sl2_semidirect_heisenberg"):
        g = make(name).algebra
        d = algebra_to_dict(g)
        g2 = parse_algebra_dict(d)
        assert g2 == g


def test_abelian_export_has_empty_brackets():
    d = algebra_to_dict(make("abelian(2)").algebra)
    assert d["brackets"] == {}
