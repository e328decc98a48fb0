"""
Unit tests for signed permutations, symmetry censuses and presentations.
"""

import os
import random
import sys
import unittest
from itertools import combinations
from pathlib import Path

# Add project root to path for imports
project_root = Path(__file__).parent.parent.parent
sys.path.insert(0, str(project_root / 'src'))

from special_forms.config_loader import SearchConfig
from special_forms.construct import catalog, g2, kahler, named_generators, spin7
from special_forms.errors import DimensionError, IncompatiblePresentationError, SearchBoundError
from special_forms.exterior import SpecialForm, volume_form
from special_forms.invariants import table_entry
from special_forms.symmetry import (
    ElementClass,
    SignedPermutation,
    act,
    classify_element,
    close_group,
    commutator_subgroup,
    component_stabilizer,
    democracy,
    enumerate_orthogonal_census,
    enumerate_permutation_census,
    exhaustive_census,
    expand_presentation,
    is_transitive,
    orbits,
    orthogonally_democratic,
    permutation_democratic,
    small_generating_set,
    stability_group,
    symmetry_census,
)

RUN_SLOW = os.getenv("RUN_SLOW_TESTS", "").lower() in ("1", "true", "yes")


def _random_element(rng: random.Random, d: int) -> SignedPermutation:
    sigma = list(range(1, d + 1))
    rng.shuffle(sigma)
    return SignedPermutation(tuple(sigma), tuple(rng.choice((1, -1)) for _ in range(d)))


class TestSignedPermutation(unittest.TestCase):
    """Test construction and group structure of signed permutations."""

    def test_parse_spaced_and_compact(self):
        spaced = SignedPermutation.parse("(1 2 5 4 6 7 3)", 7)
        self.assertEqual(spaced.sigma, (2, 5, 1, 6, 4, 7, 3))
        compact = SignedPermutation.parse("(3)(1264758)", 8)
        self.assertEqual(compact.sigma[0], 2)
        self.assertEqual(compact.sigma[2], 3)
        ten = SignedPermutation.parse("(1 2)(10 3)", 10)
        self.assertEqual(ten.sigma[9], 3)
        self.assertEqual(SignedPermutation.parse("(90)", 10).sigma[8], 10)

    def test_invalid_cycles(self):
        with self.assertRaises(DimensionError):
            SignedPermutation.parse("(1 9)", 8)
        with self.assertRaises(DimensionError):
            SignedPermutation.parse("(1 2)(2 3)", 4)
        with self.assertRaises(ValueError):
            SignedPermutation((1, 1), (1, 1))

    def test_composition_matches_action(self):
        rng = random.Random(11)
        psi = g2()
        for _ in range(20):
            g, h = _random_element(rng, 7), _random_element(rng, 7)
            self.assertEqual(act(g * h, psi), act(g, act(h, psi)))

    def test_inverse_and_power(self):
        rng = random.Random(3)
        for _ in range(20):
            g = _random_element(rng, 6)
            self.assertTrue((g * g.inverse()).is_identity)
            self.assertTrue((g ** g.order()).is_identity)
            self.assertEqual(g ** -1, g.inverse())

    def test_cycle_types(self):
        g = SignedPermutation.parse("(1 2 5 4 6 7 3)", 8)
        self.assertEqual(g.cycle_type_label(), "1^1 7^1")
        self.assertEqual(SignedPermutation.identity(8).cycle_type_label(), "1^8")
        self.assertEqual(g.order(), 7)

    def test_negated_has_order_two(self):
        minus = SignedPermutation.identity(7).negated()
        self.assertEqual(minus.order(), 2)
        self.assertEqual(act(minus, g2()), -g2())
        self.assertEqual(minus.determinant, -1)
        self.assertFalse(minus.in_special_orthogonal())

    def test_cycle_notation(self):
        g = SignedPermutation.parse("(1 3)(2 4)", 4, eta=(1, -1, 1, 1))
        self.assertEqual(g.cycle_notation(), "(1 3)(2 4)[+-++]")
        self.assertEqual(SignedPermutation.identity(3).cycle_notation(), "()")

    def test_pair_shift_squared(self):
        shift, = named_generators("shift8")
        rho1, = named_generators("rho1")
        rho2, = named_generators("rho2")
        self.assertEqual(shift ** 2, rho1 * rho2)


class TestAction(unittest.TestCase):
    """Test the action on forms and element classification."""

    def test_action_dimension_check(self):
        with self.assertRaises(DimensionError):
            act(SignedPermutation.identity(6), g2())

    def test_transposition_on_volume_form(self):
        swap = SignedPermutation.parse("(1 2)", 4)
        self.assertEqual(classify_element(swap, volume_form(4)), ElementClass.ANTISYMMETRY)
        self.assertEqual(classify_element(swap, kahler(2)), ElementClass.NEITHER)
        double = SignedPermutation.parse("(1 2)(3 4)", 4)
        self.assertEqual(classify_element(double, kahler(2)), ElementClass.ANTISYMMETRY)
        three = SignedPermutation.parse("(1 2 3)", 4)
        self.assertEqual(classify_element(three, kahler(2)), ElementClass.NEITHER)

    def test_g21_generators_are_symmetries(self):
        for g in named_generators("G21"):
            self.assertEqual(act(g, g2()), g2())
        for g in named_generators("G168"):
            self.assertEqual(act(g, spin7()), spin7())


class TestGroups(unittest.TestCase):
    """Test closures, commutators and orbits."""

    def test_close_group_orders(self):
        self.assertEqual(len(close_group(named_generators("G21"))), 21)
        self.assertEqual(len(close_group(named_generators("G168"))), 168)
        self.assertEqual(len(close_group(named_generators("H12"))), 12)
        self.assertEqual(len(close_group([], degree=4)), 1)

    def test_close_group_bound(self):
        with self.assertRaises(SearchBoundError):
            close_group(named_generators("G168"), max_order=100)

    def test_commutator_of_g168(self):
        self.assertEqual(len(commutator_subgroup(named_generators("G168"))), 56)

    def test_small_generating_set(self):
        group = close_group(named_generators("G168"))
        gens = small_generating_set(group)
        self.assertEqual(close_group(gens), group)

    def test_orbits(self):
        g = SignedPermutation.parse("(1 2)(3 4 5)", 6)
        self.assertEqual(orbits([g], 6), [frozenset({1, 2}), frozenset({3, 4, 5}), frozenset({6})])
        self.assertFalse(is_transitive([g], 6))
        self.assertTrue(is_transitive(named_generators("H7"), 7))

    def test_h12_stabilizes_1234(self):
        g168 = close_group(named_generators("G168"))
        stabilizer = set(component_stabilizer(g168, (1, 2, 3, 4)))
        self.assertEqual(stabilizer, close_group(named_generators("H12")))


class TestPermutationCensus(unittest.TestCase):
    """Test the pure permutation census."""

    def test_g2(self):
        census = enumerate_permutation_census(g2())
        self.assertEqual(census.symmetry_order, 21)
        self.assertEqual(census.antisymmetry_count, 0)
        self.assertEqual(set(census.symmetries), close_group(named_generators("G21")))

    def test_spin7(self):
        census = enumerate_permutation_census(spin7())
        self.assertEqual(census.symmetry_order, 168)
        self.assertEqual(census.antisymmetry_count, 0)
        self.assertEqual(
            census.cycle_type_histogram(),
            {"1^1 7^1": 48, "1^2 3^2": 56, "1^8": 1, "2^1 6^1": 56, "2^4": 7},
        )

    def test_kahler(self):
        for n, order in ((2, 2), (3, 6)):
            census = enumerate_permutation_census(kahler(n))
            self.assertEqual(census.symmetry_order, order)
            self.assertEqual(census.antisymmetry_count, order)

    def test_dimension_bound(self):
        with self.assertRaises(SearchBoundError):
            enumerate_permutation_census(g2(), SearchConfig(max_dimension=6))


class TestOrthogonalCensus(unittest.TestCase):
    """Test the signed-permutation census."""

    def test_kahler_against_exhaustive(self):
        f = kahler(2)
        brute = exhaustive_census(f)
        census = symmetry_census(f)
        self.assertEqual(brute["orth_symmetries"], 32)
        self.assertEqual(brute["orth_antisymmetries"], 32)
        self.assertEqual(census.orthogonal.symmetries_full, 32)
        self.assertEqual(census.orthogonal.antisymmetries_full, 32)
        self.assertEqual(brute["perm_symmetries"], census.permutation.symmetry_order)
        self.assertEqual(brute["perm_antisymmetries"], census.permutation.antisymmetry_count)

    def test_small_forms_against_exhaustive(self):
        rng = random.Random(5)
        for d, p in ((4, 2), (5, 2), (5, 3)):
            supports = list(combinations(range(1, d + 1), p))
            chosen = rng.sample(supports, 4)
            f = SpecialForm(d, p, {s: rng.choice((1, -1)) for s in chosen})
            brute = exhaustive_census(f)
            orth = enumerate_orthogonal_census(f)
            self.assertEqual(orth.symmetries_full, brute["orth_symmetries"])
            self.assertEqual(orth.antisymmetries_full, brute["orth_antisymmetries"])

    def test_kahler3(self):
        orth = enumerate_orthogonal_census(kahler(3))
        self.assertEqual((orth.symmetries_full, orth.antisymmetries_full), (384, 384))

    def test_g2(self):
        orth = enumerate_orthogonal_census(g2())
        self.assertEqual((orth.symmetries_full, orth.antisymmetries_full), (1344, 1344))
        self.assertEqual((orth.symmetries_projective, orth.antisymmetries_projective), (672, 672))
        self.assertTrue(orth.materialized)
        self.assertTrue(all(act(g, g2()) == g2() for g in orth.symmetries[:50]))

    def test_spin7(self):
        orth = enumerate_orthogonal_census(spin7())
        self.assertEqual(orth.symmetries_full, 21504)
        self.assertEqual(orth.symmetries_projective, 10752)
        self.assertEqual(orth.antisymmetries_full, 0)

    def test_materialize_limit(self):
        orth = enumerate_orthogonal_census(spin7(), SearchConfig(materialize_limit=1000))
        self.assertFalse(orth.materialized)
        self.assertEqual(orth.symmetries_full, 21504)

    def test_sigma_parts_of_g2(self):
        orth = enumerate_orthogonal_census(g2())
        self.assertEqual(len(orth.sigma_projection), 168)
        self.assertTrue(all(all(e == 1 for e in g.eta) for g in orth.sigma_projection))
        # GL(3,2) is simple
        self.assertEqual(len(orth.projection_commutator()), 168)

    def test_sigma_parts_of_spin7(self):
        orth = enumerate_orthogonal_census(spin7())
        self.assertEqual(len(orth.sigma_projection), 1344)
        self.assertEqual(len(orth.projection_commutator()), 1344)

    @unittest.skipUnless(RUN_SLOW, "set RUN_SLOW_TESTS=1")
    def test_omega10(self):
        census = symmetry_census(catalog("omega10"))
        self.assertEqual(census.permutation.symmetry_order, 60)
        self.assertEqual(census.permutation.antisymmetry_count, 60)


class TestStabilityAndDemocracy(unittest.TestCase):
    """Test stability groups and democracy."""

    def test_stability_groups(self):
        self.assertEqual(stability_group(volume_form(4)).order, 12)
        self.assertEqual(stability_group(kahler(3)).order, 1)

    def test_democracy(self):
        self.assertEqual(democracy(g2()), "permutation")
        self.assertEqual(democracy(kahler(3)), "permutation")
        self.assertIsNone(democracy(SpecialForm(4, 2, {(1, 2): 1})))

    def test_two_notions_of_democracy(self):
        self.assertTrue(permutation_democratic(g2()))
        self.assertTrue(orthogonally_democratic(g2()))

        d3 = table_entry("D3").representative
        self.assertFalse(permutation_democratic(d3))
        self.assertTrue(orthogonally_democratic(d3))
        self.assertEqual(democracy(d3), "orthogonal")

        single = SpecialForm(4, 2, {(1, 2): 1})
        self.assertFalse(permutation_democratic(single))
        self.assertFalse(orthogonally_democratic(single))


class TestPresentations(unittest.TestCase):
    """Test regeneration of forms from seeds and generators."""

    def test_g2_from_one_component(self):
        self.assertEqual(expand_presentation([((1, 2, 7), 1)], named_generators("H7")), g2())

    def test_kahler_from_pair_shift(self):
        shift = SignedPermutation.parse("(1 3 5)(2 4 6)", 6)
        self.assertEqual(expand_presentation([((1, 2), 1)], [shift]), kahler(3))

    def test_conflict_names_both_origins(self):
        swap = SignedPermutation.parse("(1 2)", 3)
        with self.assertRaises(IncompatiblePresentationError) as ctx:
            expand_presentation([((1, 2), 1)], [swap])
        self.assertEqual(ctx.exception.support, (1, 2))
        self.assertEqual(len(ctx.exception.provenances), 2)

    def test_requires_seed(self):
        with self.assertRaises(ValueError):
            expand_presentation([], named_generators("H7"))


if __name__ == '__main__':
    unittest.main()
