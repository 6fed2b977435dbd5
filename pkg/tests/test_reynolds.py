from __future__ import annotations

import numpy as np
import pytest

from reynolds_ideals.core import Algebra, center, commutator_space, socle, symmetrizing_form
from reynolds_ideals.families import dihedral_algebra, sd1_algebra, sd2_algebra
from reynolds_ideals.linalg import FieldSpec, Subspace, intersect
from reynolds_ideals.reynolds import (
    CommutativeAlgebra,
    analyze,
    compare,
    fingerprint,
    power_map,
    quotient_ring,
    radical_filtration,
    reynolds_ideal,
    t_space,
)


def split_pair() -> Algebra:
    table = np.zeros((2, 2, 2), dtype=np.int64)
    table[0, 0, 0] = 1
    table[1, 1, 1] = 1
    return Algebra(
        field=FieldSpec(2),
        labels=("e1", "e2"),
        idempotents=(0, 1),
        radical_indices=(),
        table=table,
    )


def truncated_polynomials(n: int, p: int = 2) -> CommutativeAlgebra:
    """GF(p)[x]/(x^n) in the monomial basis."""
    table = np.zeros((n, n, n), dtype=np.int64)
    for i in range(n):
        for j in range(n):
            if i + j < n:
                table[i, j, i + j] = 1
    one = np.zeros(n, dtype=np.int64)
    one[0] = 1
    return CommutativeAlgebra(p=p, table=table, one=one)


# --- power map --------------------------------------------------------------

def test_power_map_identity_on_semisimple_idempotent_span():
    pm = power_map(split_pair())
    assert pm.quotient_dim == 2
    assert np.array_equal(pm.matrix, np.eye(2, dtype=np.int64))


def test_power_map_alpha_examples():
    a1 = dihedral_algebra(1, 1, 1)
    pm = power_map(a1)
    qa = pm.projector @ a1.basis_element("a") % 2
    qsoc2 = pm.projector @ a1.basis_element("gab") % 2
    assert np.array_equal(pm.matrix @ qa % 2, qsoc2)
    a0 = dihedral_algebra(1, 1, 0)
    pm0 = power_map(a0)
    assert not np.any(pm0.matrix @ (pm0.projector @ a0.basis_element("a")) % 2)


# --- T_n --------------------------------------------------------------------

def test_t1_dims_frozen_examples():
    assert t_space(dihedral_algebra(1, 1, 0), 1).dim == 8
    assert t_space(dihedral_algebra(1, 1, 1), 1).dim == 7
    assert t_space(sd2_algebra(1, 3, 0), 1).dim == 9
    assert t_space(sd2_algebra(1, 3, 1), 1).dim == 8


def test_t_space_contains_commutator_and_ascends():
    a = dihedral_algebra(2, 3, 1)
    k = commutator_space(a)
    prev = t_space(a, 1)
    assert k.is_subspace_of(prev)
    for n in (2, 3):
        cur = t_space(a, n)
        assert prev.is_subspace_of(cur)
        prev = cur


def test_t0_is_everything():
    a = dihedral_algebra(1, 1, 0)
    assert t_space(a, 0) == Subspace.full(a.dim, 2)


# --- Reynolds ideals --------------------------------------------------------

def test_reynolds_ideal_dims_and_membership():
    a0 = dihedral_algebra(1, 1, 0)
    assert reynolds_ideal(a0, 1).dim == 2
    a1 = dihedral_algebra(1, 1, 1)
    assert reynolds_ideal(a1, 1).dim == 3

    # k odd, s even > 2
    for c in (0, 1):
        x = dihedral_algebra(1, 4, c)
        ideal = reynolds_ideal(x, 1)
        if c == 0:
            assert ideal.contains(x.basis_element("h^2"))
        else:
            assert ideal.contains(x.element({"h^2": 1, "bg": 1}))
            assert not ideal.contains(x.basis_element("h^2"))


def test_socle_inside_every_ideal():
    for builder, k, s in ((dihedral_algebra, 2, 2), (sd1_algebra, 1, 3), (sd2_algebra, 2, 3)):
        for c in (0, 1):
            a = builder(k, s, c)
            soc = socle(a)
            for n in (1, 2, 3):
                assert soc.is_subspace_of(reynolds_ideal(a, n))


# --- quotient rings and radical filtrations ---------------------------------

def test_quotient_ring_degenerate_cases():
    a = dihedral_algebra(1, 1, 0)
    z = center(a)
    everything = quotient_ring(z, z, a)
    assert everything.dim == 0
    nothing = quotient_ring(z, Subspace.zero(a.dim, 2), a)
    assert nothing.dim == z.dim
    # Z of d2b(1,1,0) is spanned by 1, bg, abg, gab and every radical product vanishes
    assert radical_filtration(nothing) == [1, 3]


def test_quotient_ring_rejects_non_ideal():
    a = dihedral_algebra(1, 1, 0)
    z = center(a)
    outside = Subspace.from_rows([a.basis_element("b")], a.dim, 2)
    with pytest.raises(ValueError):
        quotient_ring(z, outside, a)


def test_radical_filtration_field_and_truncated_polynomials():
    assert radical_filtration(truncated_polynomials(1)) == [1]
    assert radical_filtration(truncated_polynomials(2)) == [1, 1]
    assert radical_filtration(truncated_polynomials(5)) == [1, 1, 1, 1, 1]
    assert radical_filtration(truncated_polynomials(4, p=3)) == [1, 1, 1, 1]


def test_radical_filtration_rejects_noncommutative():
    table = np.zeros((3, 3, 3), dtype=np.int64)
    table[0, 0, 0] = 1
    table[0, 1, 1] = table[1, 0, 1] = 1
    table[0, 2, 2] = table[2, 0, 2] = 1
    table[1, 2, 2] = 1  # x*y = z but y*x = 0
    ring = CommutativeAlgebra(p=2, table=table, one=np.array([1, 0, 0]))
    with pytest.raises(ValueError):
        radical_filtration(ring)


def test_radical_layers_sum_to_quotient_dim():
    for builder, k, s, c in ((dihedral_algebra, 2, 3, 1), (sd2_algebra, 1, 4, 0)):
        a = builder(k, s, c)
        z = center(a)
        ring = quotient_ring(z, reynolds_ideal(a, 1), a)
        assert sum(radical_filtration(ring)) == ring.dim


def test_quotient_ring_dim_k_odd_s_even():
    # dim Z/T_1^perp = ceil(k/2) + s/2 in the k odd, s even case
    for k, s in ((1, 2), (1, 4), (3, 4), (3, 2), (5, 4)):
        for c in (0, 1):
            a = dihedral_algebra(k, s, c)
            ring = quotient_ring(center(a), reynolds_ideal(a, 1), a)
            assert ring.dim == (k + 1) // 2 + s // 2, (k, s, c)


def test_dihedral_rad_layers_3_vs_2():
    # k odd, s even > 2: second radical layer of Z/T_1^perp is 3 (c=0) vs 2 (c=1)
    r0 = analyze(dihedral_algebra(3, 4, 0))
    r1 = analyze(dihedral_algebra(3, 4, 1))
    assert r0.chain[0].radical_layers[1] == 3
    assert r1.chain[0].radical_layers[1] == 2
    # k, s both even > 2
    r0 = analyze(dihedral_algebra(4, 4, 0))
    r1 = analyze(dihedral_algebra(4, 4, 1))
    assert r0.chain[0].radical_layers[1] == 3
    assert r1.chain[0].radical_layers[1] == 2


# --- reports, fingerprints, compare ------------------------------------------

def test_analyze_frozen_chains():
    r0 = analyze(dihedral_algebra(1, 1, 0))
    assert [(row.n, row.dim_t, row.dim_t_perp) for row in r0.chain] == [(1, 8, 2)]
    assert r0.chain[0].radical_layers == (1, 1)
    assert r0.n_stab == 1 and not r0.truncated
    r1 = analyze(dihedral_algebra(1, 1, 1))
    assert [(row.n, row.dim_t, row.dim_t_perp) for row in r1.chain] == [(1, 7, 3), (2, 8, 2)]
    assert r1.chain[0].radical_layers == (1,)
    assert r1.chain[1].radical_layers == (1, 1)
    assert r1.n_stab == 2


def test_stabilized_ideal_is_central_socle():
    for builder, k, s in ((dihedral_algebra, 2, 3), (sd2_algebra, 1, 4)):
        a = builder(k, s, 1)
        report, ctx = analyze(a, with_context=True)
        assert ctx.ideals[-1] == intersect(ctx.soc, ctx.centre)
        assert ctx.ideals[-1].dim == 2


def test_fingerprint_deterministic():
    fp1 = fingerprint(dihedral_algebra(2, 3, 0))
    fp2 = fingerprint(dihedral_algebra(2, 3, 0))
    assert fp1 == fp2
    assert fp1.to_bytes() == fp2.to_bytes()


def test_fingerprint_cartan_is_permutation_canonical():
    fp = fingerprint(sd2_algebra(1, 3, 0))
    # raw cartan [[4,2],[2,4]] is symmetric; canonical equals itself
    assert fp.payload["cartan"] == [[4, 2], [2, 4]]
    fp2 = fingerprint(dihedral_algebra(2, 1, 0))
    # raw [[8,4],[4,3]] -> minimal simultaneous permutation puts 3 first
    assert fp2.payload["cartan"] == [[3, 4], [4, 8]]


def test_compare_examples():
    res = compare(dihedral_algebra(3, 3, 0), dihedral_algebra(3, 3, 1))
    assert res.verdict == "DISTINGUISHED"
    assert res.field == "dim_t1_perp"
    assert (res.value_a, res.value_b) == (4, 5)

    a = dihedral_algebra(1, 2, 1)
    same = compare(a, a)
    assert same.verdict == "INCONCLUSIVE"
    assert same.field is None

    res2 = compare(sd2_algebra(2, 3, 0), sd2_algebra(2, 3, 1))
    r0 = analyze(sd2_algebra(2, 3, 0))
    r1 = analyze(sd2_algebra(2, 3, 1))
    assert [row.dim_t_perp for row in r0.chain] == [row.dim_t_perp for row in r1.chain]
    # full-fingerprint verdict recorded, not asserted
    assert res2.verdict in ("DISTINGUISHED", "INCONCLUSIVE")


def test_compare_mixed_parity_uses_radical_layers():
    res = compare(dihedral_algebra(3, 4, 0), dihedral_algebra(3, 4, 1))
    assert res.verdict == "DISTINGUISHED"
    assert res.field == "radical_layers(n=1)"
    assert res.value_a == [1, 3]
    assert res.value_b == [1, 2, 1]


def test_truncated_report_flag():
    report = analyze(dihedral_algebra(1, 1, 1), n_max=1)
    assert report.truncated
    assert report.n_stab is None


def test_report_json_shape():
    report = analyze(dihedral_algebra(1, 1, 0), meta={"family": "d2b", "k": 1, "s": 1, "c": 0, "p": 2})
    doc = report.to_dict()
    assert list(doc) == [
        "meta", "p", "dim", "dim_center", "dim_commutator", "cartan",
        "chain", "n_stab", "truncated",
    ]
    assert doc["chain"][0] == {"n": 1, "dim_t": 8, "dim_t_perp": 2, "radical_layers": [1, 1]}
