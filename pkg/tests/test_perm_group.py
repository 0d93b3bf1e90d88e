"""Permutation primitives and the group engine, cross-checked by the oracle."""

import numpy as np
import pytest

import oracle
from conjlab.errors import (
    CapExceeded,
    ElementNotInGroup,
    InvalidPermutation,
    NotASubgroup,
    NotNormal,
)
from conjlab.group import (
    Subgroup,
    direct_product,
    group_from_generators,
    is_internal_direct_product,
    trivial_group,
)
from conjlab.perm import Perm


# ----- Perm ---------------------------------------------------------------------


def test_perm_basics():
    p = Perm([1, 2, 0, 3])
    q = Perm([0, 1, 3, 2])
    assert (p * q).images == oracle.compose(p.images, q.images)
    assert p.inverse().images == oracle.inverse(p.images)
    assert p.order() == 3 and q.order() == 2
    assert Perm.identity(4).is_identity()
    assert p != q and p == Perm((1, 2, 0, 3))


def test_perm_apply_and_cycles():
    p = Perm.from_cycles([(0, 1, 2), (3, 4)], 5)
    assert p(0) == 1 and p(2) == 0 and p(3) == 4
    assert p.cycles() == [(0, 1, 2), (3, 4)]
    assert p.cycle_string() == "(0 1 2)(3 4)"
    assert Perm.identity(3).cycle_string() == "()"


def test_perm_from_cycle_string_round_trip():
    for text in ["(0 1 2)(3 4)", "()", "(2 5)(0 1 3)"]:
        p = Perm.from_cycle_string(text, 6)
        assert Perm.from_cycle_string(p.cycle_string(), 6) == p


def test_perm_conjugate_convention():
    # x^g = g^-1 * x * g, applying g last
    x = Perm.from_cycles([(0, 1)], 4)
    g = Perm.from_cycles([(0, 2)], 4)
    assert x.conjugate(g) == Perm.from_cycles([(1, 2)], 4)


def test_perm_rejects_garbage():
    with pytest.raises(InvalidPermutation):
        Perm([0, 0, 1])
    with pytest.raises(InvalidPermutation):
        Perm([1, 2, 3])
    with pytest.raises(InvalidPermutation):
        Perm.from_cycles([(0, 3)], 3)
    with pytest.raises(InvalidPermutation):
        Perm([0, 1]) * Perm([0, 1, 2])


def test_perm_accepts_numpy_row():
    p = Perm(np.array([2, 0, 1], dtype=np.int16))
    assert p.images == (2, 0, 1)


# ----- construction and membership ------------------------------------------------


def build_oracle_pair(gens):
    elements = oracle.closure(gens)
    g = group_from_generators(len(gens[0]), [Perm(t) for t in gens])
    return g, elements


@pytest.mark.parametrize(
    "gens",
    [
        oracle.cyclic_gens(6),
        oracle.dihedral_gens(5),
        oracle.symmetric_gens(4),
        oracle.alternating_gens(5),
        oracle.frobenius_gens(5, 4),
    ],
    ids=["c6", "d5", "s4", "a5", "f54"],
)
def test_closure_matches_oracle(gens):
    g, elements = build_oracle_pair(gens)
    assert g.order == len(elements)
    assert sorted(p.images for p in g.elements()) == elements


def test_heisenberg_closure_matches_oracle():
    elements = oracle.heisenberg_elements(3)
    g = group_from_generators(27, [Perm(e) for e in oracle.heisenberg_gens(3)])
    assert g.order == 27
    assert sorted(p.images for p in g.elements()) == elements


def test_membership_and_index():
    g, elements = build_oracle_pair(oracle.symmetric_gens(4))
    for t in elements:
        assert Perm(t) in g
        assert g.element(g.index_of(Perm(t))) == Perm(t)
    assert Perm(tuple(range(4))) == g.element(0)
    outsider = Perm((1, 0, 2, 3, 4))
    assert outsider not in g
    with pytest.raises(ElementNotInGroup):
        g.index_of(outsider)


def test_cap_enforced():
    with pytest.raises(CapExceeded):
        group_from_generators(5, [Perm(t) for t in oracle.symmetric_gens(5)], cap=100)


def test_trivial_group():
    t = trivial_group(3)
    assert t.order == 1 and t.is_abelian()
    assert t.conjugacy_classes()[0].size == 1


# ----- arithmetic against the oracle ----------------------------------------------


def test_mult_inverse_tables():
    g, elements = build_oracle_pair(oracle.dihedral_gens(6))
    idx = {t: i for i, t in enumerate(elements)}
    rows = [g.element(i).images for i in range(g.order)]
    for i in range(g.order):
        assert rows[g.inv_idx(i)] == oracle.inverse(rows[i])
        for j in range(0, g.order, 5):
            assert rows[g.mult_idx(i, j)] == oracle.compose(rows[i], rows[j])


def test_element_orders_match_oracle():
    g, elements = build_oracle_pair(oracle.symmetric_gens(4))
    orders = g.element_orders()
    for i in range(g.order):
        assert orders[i] == oracle.element_order(g.element(i).images)


def test_conjugacy_classes_match_oracle():
    for gens in [oracle.symmetric_gens(4), oracle.dihedral_gens(5), oracle.frobenius_gens(7, 3)]:
        g, elements = build_oracle_pair(gens)
        got = sorted(c.size for c in g.conjugacy_classes())
        want = sorted(len(c) for c in oracle.conjugacy_classes(elements))
        assert got == want
        total = sum(got)
        assert total == g.order


def test_class_members_are_actual_classes():
    g, elements = build_oracle_pair(oracle.symmetric_gens(4))
    for cls in g.conjugacy_classes():
        members = {p.images for p in cls.members()}
        rep = cls.representative.images
        want = {
            oracle.compose(oracle.compose(oracle.inverse(h), rep), h) for h in elements
        }
        assert members == want


def test_centralizer_matches_oracle():
    g, elements = build_oracle_pair(oracle.symmetric_gens(4))
    for i in range(0, g.order, 3):
        x = g.element(i).images
        got = g.centralizer(i)
        assert got.order == oracle.centralizer_order(elements, x)


def test_center():
    g, _ = build_oracle_pair(oracle.dihedral_gens(6))
    z = g.center()
    assert z.order == 2  # d6 has a central rotation
    g2, _ = build_oracle_pair(oracle.symmetric_gens(4))
    assert g2.center().order == 1


# ----- subgroups -------------------------------------------------------------------


def test_subgroup_generated_and_validation():
    g, _ = build_oracle_pair(oracle.symmetric_gens(4))
    rot = Perm.from_cycles([(0, 1, 2, 3)], 4)
    s = g.subgroup_generated([rot])
    assert s.order == 4
    assert not g.is_normal(s)
    ragged = Subgroup(g, np.array([0, g.index_of(rot)], dtype=np.int64))
    with pytest.raises(NotASubgroup):
        g.normalizer(ragged)


def test_normalizer():
    g, _ = build_oracle_pair(oracle.symmetric_gens(4))
    rot = g.subgroup_generated([Perm.from_cycles([(0, 1, 2, 3)], 4)])
    n = g.normalizer(rot)
    assert n.order == 8  # dihedral normalizer of a 4-cycle in s4


def test_sylow_subgroups():
    g, _ = build_oracle_pair(oracle.symmetric_gens(4))
    p2 = g.sylow_subgroup(2)
    p3 = g.sylow_subgroup(3)
    assert p2.order == 8 and p3.order == 3
    a5, _ = build_oracle_pair(oracle.alternating_gens(5))
    assert a5.sylow_subgroup(2).order == 4
    assert a5.sylow_subgroup(5).order == 5


def test_subgroup_conjugates_counts():
    g, _ = build_oracle_pair(oracle.symmetric_gens(4))
    syl2 = g.sylow_subgroup(2)
    assert len(g.subgroup_conjugates(syl2)) == 3
    syl3 = g.sylow_subgroup(3)
    assert len(g.subgroup_conjugates(syl3)) == 4


def test_normal_subgroups_match_oracle():
    for gens in [
        oracle.symmetric_gens(4),
        oracle.dihedral_gens(6),
        oracle.frobenius_gens(5, 4),
        oracle.cyclic_gens(12),
    ]:
        g, elements = build_oracle_pair(gens)
        got = sorted(s.order for s in g.normal_subgroups())
        assert got == oracle.normal_subgroup_orders(elements)


def test_normal_subgroup_members_are_normal():
    g, elements = build_oracle_pair(oracle.symmetric_gens(4))
    for s in g.normal_subgroups():
        members = {g.element(int(i)).images for i in s.indices}
        assert oracle.is_subgroup(elements, members)
        assert oracle.is_normal(elements, members)


def test_p_prime_core():
    g, _ = build_oracle_pair(oracle.symmetric_gens(4))
    assert g.p_prime_core(2).order == 1
    assert g.p_prime_core(3).order == 4  # the klein four subgroup
    f20, _ = build_oracle_pair(oracle.frobenius_gens(5, 4))
    assert f20.p_prime_core(2).order == 5


def test_has_normal_p_complement():
    g, _ = build_oracle_pair(oracle.symmetric_gens(4))
    assert not g.has_normal_p_complement(2)  # would need a normal order-3 subgroup
    assert not g.has_normal_p_complement(3)  # would need a normal order-8 subgroup
    d5, _ = build_oracle_pair(oracle.dihedral_gens(5))
    assert d5.has_normal_p_complement(2)
    c12, _ = build_oracle_pair(oracle.cyclic_gens(12))
    assert c12.has_normal_p_complement(2) and c12.has_normal_p_complement(3)


# ----- quotients -------------------------------------------------------------------


def test_quotient_s4_by_klein():
    g, _ = build_oracle_pair(oracle.symmetric_gens(4))
    v4 = next(s for s in g.normal_subgroups() if s.order == 4)
    q, qmap = g.quotient(v4)
    assert q.order == 6
    assert sorted(c.size for c in q.conjugacy_classes()) == [1, 2, 3]
    # projection is a homomorphism
    for i in range(0, g.order, 5):
        for j in range(0, g.order, 7):
            assert qmap.image_idx(g.mult_idx(i, j)) == q.mult_idx(
                qmap.image_idx(i), qmap.image_idx(j)
            )


def test_quotient_rejects_non_normal():
    g, _ = build_oracle_pair(oracle.symmetric_gens(4))
    rot = g.subgroup_generated([Perm.from_cycles([(0, 1, 2, 3)], 4)])
    with pytest.raises(NotNormal):
        g.quotient(rot)


def test_composition_factors():
    s4, _ = build_oracle_pair(oracle.symmetric_gens(4))
    assert sorted(f[0] for f in s4.composition_factors()) == [2, 2, 2, 3]
    assert all(ab for _, ab in s4.composition_factors())
    a5, _ = build_oracle_pair(oracle.alternating_gens(5))
    assert a5.composition_factors() == [(60, False)]
    c12, _ = build_oracle_pair(oracle.cyclic_gens(12))
    assert sorted(f[0] for f in c12.composition_factors()) == [2, 2, 3]


def test_composition_series_orders():
    s4, _ = build_oracle_pair(oracle.symmetric_gens(4))
    series = s4.composition_series()
    orders = [s.order for s in series]
    assert orders == [1, 2, 4, 12, 24]
    for low, high in zip(series, series[1:]):
        assert set(low.indices) <= set(high.indices)


# ----- products --------------------------------------------------------------------


def test_direct_product_matches_oracle():
    xs = oracle.closure(oracle.symmetric_gens(3))
    ys = oracle.closure(oracle.cyclic_gens(4))
    g = direct_product(
        group_from_generators(3, [Perm(t) for t in oracle.symmetric_gens(3)]),
        group_from_generators(4, [Perm(t) for t in oracle.cyclic_gens(4)]),
    )
    want = oracle.direct_product_elements(xs, ys)
    assert g.order == len(want)
    assert sorted(p.images for p in g.elements()) == sorted(want)


def test_internal_direct_product_recognition():
    s3 = group_from_generators(3, [Perm(t) for t in oracle.symmetric_gens(3)])
    c4 = group_from_generators(4, [Perm(t) for t in oracle.cyclic_gens(4)])
    g = direct_product(s3, c4)
    normals = g.normal_subgroups()
    sixes = [s for s in normals if s.order == 6]
    b = next(s for s in normals if s.order == 4)
    assert any(is_internal_direct_product(g, a, b) for a in sixes)
    half = next(s for s in normals if s.order == 12)
    assert not any(is_internal_direct_product(g, a, half) for a in sixes)


def test_orbit_stabilizer_small():
    for gens in [oracle.symmetric_gens(4), oracle.dihedral_gens(7)]:
        g, _ = build_oracle_pair(gens)
        for cls in g.conjugacy_classes():
            i = int(cls.indices[0])
            assert g.centralizer(i).order * cls.size == g.order
