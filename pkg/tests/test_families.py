from __future__ import annotations

import numpy as np
import pytest

from reynolds_ideals.core import cartan_matrix, center, commutator_space, validate
from reynolds_ideals.families import (
    FamilyParams,
    PathWord,
    RewriteRule,
    build_family,
    dihedral_algebra,
    expected_t1_dim,
    reduce_path,
    sd1_algebra,
    sd2_algebra,
)
from reynolds_ideals.families import _d2b_rules, _sd2_rules  # noqa: F401  (white-box)
from reynolds_ideals.reynolds import t_space

SMALL_GRID = [(k, s) for k in (1, 2, 3) for s in (1, 2, 3)]


def test_params_validation():
    FamilyParams("d2b", 1, 1, 0)
    with pytest.raises(ValueError):
        FamilyParams("d2b", 0, 1, 0)
    with pytest.raises(ValueError):
        FamilyParams("sd1", 1, 1, 0)
    with pytest.raises(ValueError):
        FamilyParams("sd2", 1, 2, 0)  # k + t < 4
    with pytest.raises(ValueError):
        FamilyParams("d2b", 1, 1, 2)
    with pytest.raises(ValueError):
        FamilyParams("d2b", 1, 1, 0, p=4)
    with pytest.raises(ValueError):
        FamilyParams("unknown", 1, 1, 0)


def test_pathword_composability():
    PathWord(1, "abg")
    PathWord(2, "gab")
    with pytest.raises(ValueError):
        PathWord(1, "ga")  # g starts at vertex 2
    with pytest.raises(ValueError):
        PathWord(1, "ba")  # b ends at 2, a starts at 1


def test_rewrite_rule_endpoint_check():
    RewriteRule("aa", ((1, "abg"),))
    with pytest.raises(ValueError):
        RewriteRule("aa", ((1, "ab"),))  # 1->1 vs 1->2


def test_reduce_path_examples():
    rules = _d2b_rules(k=1, s=2, c=1)
    assert reduce_path(rules, "gb", 6) == {}
    assert reduce_path(rules, "aa", 6) == {"abg": 1}
    rules0 = _d2b_rules(k=1, s=2, c=0)
    assert reduce_path(rules0, "aa", 6) == {}
    sd2 = _sd2_rules(k=1, t=3, c=0)
    # h * h^2 is the socle at the second vertex, whose normal word is gab
    assert reduce_path(sd2, "hhh", 3) == {"gab": 1}
    assert reduce_path(sd2, "gb", 3) == {"hh": 1}
    assert reduce_path(sd2, "bh", 3) == {"ab": 1}


def test_block_sizes_match_cartan():
    for k, s in SMALL_GRID:
        a = dihedral_algebra(k, s, 0)
        counts = {}
        for src, tgt in a.vertex:
            counts[(src, tgt)] = counts.get((src, tgt), 0) + 1
        assert counts[(1, 1)] == 4 * k
        assert counts[(1, 2)] == 2 * k
        assert counts[(2, 1)] == 2 * k
        assert counts[(2, 2)] == k + s


def test_dihedral_dimensions():
    assert dihedral_algebra(1, 1, 0).dim == 10
    assert dihedral_algebra(2, 3, 1).dim == 21
    for k, s in SMALL_GRID:
        for c in (0, 1):
            a = dihedral_algebra(k, s, c)
            assert a.dim == 9 * k + s
            assert validate(a) == []


def test_sd1_dimensions_and_commutator_membership():
    a = sd1_algebra(1, 2, 0)
    assert a.dim == 11
    assert center(a).dim == 5
    assert commutator_space(a).dim == 6
    assert commutator_space(a).contains(a.basis_element("bg"))
    b = sd1_algebra(3, 2, 1)
    assert commutator_space(b).contains(b.basis_element("bga^2.bg"))


def test_sd2_dimensions_and_center_membership():
    for c in (0, 1):
        a = sd2_algebra(1, 3, c)
        assert a.dim == 12
        assert cartan_matrix(a).tolist() == [[4, 2], [2, 4]]
        assert center(a).dim == 6
        assert commutator_space(a).dim == 6
        assert center(a).contains(a.element({"h": 1, "a": 1}))
    assert sd2_algebra(2, 2, 0).dim == 20
    b = sd2_algebra(3, 2, 1)
    assert center(b).contains(b.element({"h": 1, "abg^2.a": 1}))


def test_listed_dihedral_center_basis_is_central():
    k, s = 3, 2
    for c in (0, 1):
        a = dihedral_algebra(k, s, c)
        z = center(a)
        for combo in (
            {"e1": 1, "e2": 1},
            {"abg": 1, "bga": 1, "gab": 1},
            {"abg^2": 1, "bga^2": 1, "gab^2": 1},
            {"bga^2.bg": 1},
            {"abg^3": 1},
            {"h": 1},
            {"h^2": 1},
        ):
            assert z.contains(a.element(combo)), combo


def test_listed_dihedral_commutator_basis_lies_in_k():
    k, s = 2, 2
    for c in (0, 1):
        a = dihedral_algebra(k, s, c)
        kk = commutator_space(a)
        members = [
            {"b": 1}, {"bga.b": 1}, {"ab": 1}, {"abg.ab": 1},
            {"g": 1}, {"gab.g": 1}, {"ga": 1}, {"gab.ga": 1},
            {"bg": 1},
            {"abg": 1, "bga": 1},
            {"abg.a": 1},
            {"bga.bg": 1},
            {"abg": 1, "gab": 1},
            # i = k: (gab)^k is the vertex-2 socle, labelled h^s here
            {"abg^2": 1, "h^2": 1},
        ]
        for combo in members:
            assert kk.contains(a.element(combo)), combo
        assert kk.dim == len(members)


def test_s_equals_one_special_case():
    a = dihedral_algebra(2, 1, 1)
    assert a.dim == 19
    assert "h" not in a.labels
    assert "gab^2" in a.labels  # socle at the second vertex
    assert validate(a) == []


def test_expected_t1_dim_examples():
    assert expected_t1_dim(FamilyParams("d2b", 1, 1, 0)) == 8
    assert expected_t1_dim(FamilyParams("d2b", 1, 1, 1)) == 7
    assert expected_t1_dim(FamilyParams("d2b", 2, 2, 0)) == 17
    assert expected_t1_dim(FamilyParams("d2b", 2, 2, 1)) == 17
    assert expected_t1_dim(FamilyParams("d2b", 3, 3, 0)) == 26
    assert expected_t1_dim(FamilyParams("d2b", 3, 3, 1)) == 25
    assert expected_t1_dim(FamilyParams("sd1", 3, 3, 0)) == 26
    assert expected_t1_dim(FamilyParams("sd2", 1, 3, 0)) == 9
    assert expected_t1_dim(FamilyParams("sd2", 1, 3, 1)) == 8
    assert expected_t1_dim(FamilyParams("sd2", 2, 3, 0)) is None
    assert expected_t1_dim(FamilyParams("sd2", 3, 4, 1)) is None


def test_pipeline_matches_expected_t1_small_grid():
    for family in ("d2b", "sd1", "sd2"):
        for k, s in SMALL_GRID:
            for c in (0, 1):
                try:
                    params = FamilyParams(family, k, s, c)
                except ValueError:
                    continue
                exp = expected_t1_dim(params)
                if exp is None:
                    continue
                assert t_space(build_family(params), 1).dim == exp, (family, k, s, c)


def test_generators_work_over_other_primes():
    a = dihedral_algebra(1, 2, 1, p=3)
    assert a.p == 3
    assert a.dim == 11
    assert validate(a) == []
    assert center(a).dim == 5
