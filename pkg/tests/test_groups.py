"""Group, character, pairing, group-ring, and automorphism arithmetic."""

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import group_presentations, make_group
from prymcover import (
    FiniteAbelianGroup,
    GroupBoundError,
    GroupRingElement,
    RationalRotation,
    automorphisms,
    pairing,
)


def doubling_order(element):
    """Oracle: count repeated additions until the identity returns."""
    count = 1
    current = element
    while not current.is_zero:
        current = current + element
        count += 1
    return count


class TestElementOrder:
    def test_examples(self):
        assert make_group((6,)).element((3,)).order() == 2
        assert make_group((2, 2)).element((1, 1)).order() == 2
        g = make_group((4, 6)).element((2, 3))
        assert doubling_order(g) == 2
        assert g.order() == 2

    def test_matches_doubling_oracle_up_to_order_48(self):
        for orders in group_presentations(48):
            for element in FiniteAbelianGroup(orders).elements():
                assert element.order() == doubling_order(element)

    def test_identity_has_order_one(self):
        assert make_group((5, 9)).zero().order() == 1


class TestPairing:
    def test_examples(self):
        G = make_group((3,))
        assert pairing(G.character((1,)), G.element((1,))) == RationalRotation(1, 3)
        H = make_group((2, 4))
        for g in H.elements():
            assert pairing(H.trivial_character(), g).is_zero
        assert pairing(H.character((1, 1)), H.element((1, 2))).is_zero

    def test_oracle_direct_modular_arithmetic(self):
        H = make_group((2, 4))
        chi, g = H.character((1, 1)), H.element((1, 2))
        expected = (Fraction(1, 2) + Fraction(2, 4)) % 1
        assert pairing(chi, g).fraction == expected

    def test_bilinear_up_to_order_24(self):
        for orders in group_presentations(24):
            G = FiniteAbelianGroup(orders)
            chars = list(G.characters())
            elems = list(G.elements())
            table = {
                (chi.coords, g.coords): pairing(chi, g).fraction
                for chi in chars
                for g in elems
            }
            for chi in chars:
                for eta in chars:
                    product = tuple(
                        (a + b) % m for a, b, m in zip(chi.coords, eta.coords, orders)
                    )
                    for g in elems:
                        key = g.coords
                        lhs = table[(product, key)]
                        rhs = (table[(chi.coords, key)] + table[(eta.coords, key)]) % 1
                        assert lhs == rhs

    def test_nondegenerate_small_groups(self):
        for orders in group_presentations(12):
            G = FiniteAbelianGroup(orders)
            for chi in G.characters():
                vanishes = all(pairing(chi, g).is_zero for g in G.elements())
                assert vanishes == chi.is_trivial

    def test_group_mismatch_rejected(self):
        with pytest.raises(ValueError, match="mismatch"):
            pairing(make_group((2,)).character((1,)), make_group((3,)).element((1,)))


class TestDualEnumeration:
    def test_order_two(self):
        G = make_group((2,))
        assert [chi.coords for chi in G.characters()] == [(0,), (1,)]

    def test_trivial_group(self):
        G = make_group(())
        assert [chi.coords for chi in G.characters()] == [()]

    def test_six_distinct_characters(self):
        G = make_group((2, 3))
        chars = list(G.characters())
        assert len(chars) == 6
        assert len(set(chars)) == 6
        assert chars[0].is_trivial


class TestRationalRotation:
    def test_canonical_representative(self):
        assert RationalRotation(3, 6) == RationalRotation(1, 2)
        assert RationalRotation(7, 3) == RationalRotation(1, 3)
        assert RationalRotation(0, 5) == RationalRotation(0, 1)

    def test_addition_wraps(self):
        total = RationalRotation(2, 3) + RationalRotation(2, 3)
        assert total == RationalRotation(1, 3)


GROUPS_FOR_RINGS = [(2,), (3,), (4,), (2, 2), (2, 3)]


@st.composite
def ring_triples(draw):
    orders = draw(st.sampled_from(GROUPS_FOR_RINGS))
    group = FiniteAbelianGroup(orders)
    elems = list(group.elements())

    def one():
        pairs = draw(
            st.lists(
                st.tuples(st.sampled_from(elems), st.integers(-3, 3)), max_size=5
            )
        )
        return GroupRingElement(group, dict(pairs))

    return one(), one(), one()


class TestGroupRing:
    def test_difference_times_sum_vanishes(self):
        G = make_group((2,))
        one = GroupRingElement.one(G)
        sigma = GroupRingElement.basis(G.element((1,)))
        assert (one - sigma) * (one + sigma) == GroupRingElement.zero(G)

    def test_multiplicative_identity(self):
        G = make_group((3, 2))
        e = GroupRingElement(
            G, {G.element((1, 0)): 2, G.element((2, 1)): -1, G.zero(): 5}
        )
        assert e * GroupRingElement.one(G) == e

    def test_two_generator_expansion(self):
        G = make_group((2, 2))
        one = GroupRingElement.one(G)
        s1 = GroupRingElement.basis(G.element((1, 0)))
        s2 = GroupRingElement.basis(G.element((0, 1)))
        product = (one - s1) * (one - s2)
        assert product.coefficient(G.zero()) == 1
        assert product.coefficient(G.element((1, 0))) == -1
        assert product.coefficient(G.element((0, 1))) == -1
        assert product.coefficient(G.element((1, 1))) == 1

    @settings(max_examples=60, deadline=None)
    @given(ring_triples())
    def test_ring_axioms(self, triple):
        a, b, c = triple
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert (a + b) * c == a * c + b * c

    @settings(max_examples=60, deadline=None)
    @given(ring_triples())
    def test_augmentation_is_a_ring_homomorphism(self, triple):
        a, b, _ = triple
        assert (a + b).augmentation() == a.augmentation() + b.augmentation()
        assert (a * b).augmentation() == a.augmentation() * b.augmentation()

    def test_zero_coefficients_dropped(self):
        G = make_group((2,))
        e = GroupRingElement(G, {G.zero(): 0, G.element((1,)): 2})
        assert G.zero() not in e.coefficients
        assert e.support == frozenset({G.element((1,))})


class TestAutomorphisms:
    def test_counts(self):
        assert len(automorphisms(make_group((2,)))) == 1
        assert len(automorphisms(make_group((3,)))) == 2
        assert len(automorphisms(make_group((2, 2)))) == 6

    @pytest.mark.parametrize("orders", [(2, 2), (4,), (2, 3)])
    def test_each_map_is_an_additive_bijection(self, orders):
        G = make_group(orders)
        elems = list(G.elements())
        for phi in automorphisms(G):
            assert sorted(phi[e].coords for e in elems) == sorted(
                e.coords for e in elems
            )
            for a in elems:
                for b in elems:
                    assert phi[a + b] == phi[a] + phi[b]

    def test_bound_enforced(self):
        with pytest.raises(GroupBoundError):
            automorphisms(make_group((5, 5)), bound=20)

    def test_trivial_group(self):
        G = make_group(())
        assert automorphisms(G) == [{G.zero(): G.zero()}]
