"""
Unit tests for embeddings, cyclic lifts, complex-coordinate forms and the catalog.
"""

import os
import sys
import unittest
from itertools import combinations
from pathlib import Path

# Add project root to path for imports
project_root = Path(__file__).parent.parent.parent
sys.path.insert(0, str(project_root / 'src'))

from special_forms.construct import (
    NAMED_GENERATORS,
    EmbeddingSpec,
    build_omega10,
    build_psi12,
    catalog,
    catalog_names,
    complex_expand,
    coset_generation,
    extend,
    g2,
    kahler,
    kahler_power,
    lift_piece,
    named_generators,
    omega10_spec,
    omega_variant,
    pair_shift,
    pieces_compatible,
    recovered_source,
    spin7,
    su4u1_8d,
)
from special_forms.errors import CatalogError, DimensionError, IncompatibleEmbeddingError
from special_forms.exterior import SpecialForm, contract_plane, volume_form
from special_forms.symmetry import SignedPermutation, act
from special_forms.verify import omega10_reference

RUN_SLOW = os.getenv("RUN_SLOW_TESTS", "").lower() in ("1", "true", "yes")


def _plane(k: int):
    return (2 * k - 1, 2 * k)


class TestNamedGenerators(unittest.TestCase):
    """Test the generator table and the pair shift."""

    def test_unknown_name(self):
        with self.assertRaises(CatalogError):
            named_generators("G99")

    def test_degrees(self):
        self.assertEqual(named_generators("H7")[0].degree, 7)
        self.assertEqual(named_generators("Z5")[0].degree, 10)
        self.assertEqual(named_generators("Z6")[0].order(), 6)

    def test_pair_shift(self):
        self.assertEqual(pair_shift(6), SignedPermutation.parse("(1 3 5)(2 4 6)", 6))
        self.assertEqual(pair_shift(10), named_generators("Z5")[0])
        with self.assertRaises(DimensionError):
            pair_shift(7)

    def test_group_generators_are_symmetries(self):
        for name, form in (("G21", g2()), ("G168", spin7())):
            for g in named_generators(name):
                self.assertEqual(act(g, form), form, name)
        # commutator subgroups are computed from the census, never tabulated
        self.assertFalse([name for name in NAMED_GENERATORS if "commutator" in name])


class TestEmbeddingSpec(unittest.TestCase):
    """Test validation of embedding data."""

    def test_slot_count(self):
        with self.assertRaises(DimensionError):
            EmbeddingSpec(7, 8, 3, 4, ())

    def test_degree_gap_larger_than_dimension_gap(self):
        with self.assertRaises(DimensionError):
            EmbeddingSpec(7, 8, 3, 5, (8, 8))

    def test_slots_must_be_new_indices(self):
        with self.assertRaises(DimensionError):
            EmbeddingSpec(7, 8, 3, 4, (7,))

    def test_generator_degree(self):
        with self.assertRaises(DimensionError):
            EmbeddingSpec(7, 8, 3, 4, (8,), named_generators("H7"))

    def test_for_form(self):
        spec = EmbeddingSpec.for_form(g2(), 8, (8,), named_generators("H6"))
        self.assertEqual((spec.source_dim, spec.target_dim), (7, 8))
        self.assertEqual((spec.source_degree, spec.target_degree), (3, 4))


class TestExtend(unittest.TestCase):
    """Test embeddings of small forms into larger ones."""

    def test_epsilon2_to_g2(self):
        eps = volume_form(2)
        spec = EmbeddingSpec.for_form(eps, 7, (7,), named_generators("H7"))
        self.assertEqual(extend(eps, spec), g2())

    def test_kahler_to_g2(self):
        spec = EmbeddingSpec.for_form(kahler(3), 7, (7,), named_generators("H7_fix1"))
        psi = extend(kahler(3), spec)
        self.assertEqual(psi, g2())
        self.assertEqual(recovered_source(psi, spec), kahler(3))

    def test_g2_to_spin7(self):
        spec = EmbeddingSpec.for_form(g2(), 8, (8,), named_generators("H6"))
        self.assertEqual(extend(g2(), spec), spin7())

    def test_source_mismatch(self):
        spec = EmbeddingSpec.for_form(g2(), 8, (8,), named_generators("H6"))
        with self.assertRaises(DimensionError):
            extend(kahler(3), spec)

    def test_sign_conflict(self):
        swap = SignedPermutation.parse("(1 2)", 3)
        spec = EmbeddingSpec.for_form(volume_form(2), 3, (3,), [swap])
        with self.assertRaises(IncompatibleEmbeddingError) as ctx:
            extend(volume_form(2), spec)
        self.assertEqual(ctx.exception.support, (1, 2, 3))

    def test_source_not_reproduced(self):
        phi = SpecialForm(2, 1, {(1,): 1})
        swap = SignedPermutation.parse("(1 2)", 3)
        spec = EmbeddingSpec.for_form(phi, 3, (3,), [swap])
        with self.assertRaises(IncompatibleEmbeddingError):
            extend(phi, spec)

    def test_empty_source(self):
        phi = SpecialForm(7, 3, {})
        spec = EmbeddingSpec.for_form(phi, 8, (8,), named_generators("H6"))
        self.assertEqual(extend(phi, spec).weight, 0)


class TestCosetGeneration(unittest.TestCase):
    """Test regeneration from one component and a group."""

    def test_spin7_from_one_component(self):
        result = coset_generation((1, 2, 3, 4), named_generators("G168"))
        self.assertEqual(result.group_order, 168)
        self.assertEqual(result.stabilizer_order, 12)
        self.assertEqual(result.coset_count, 14)
        self.assertEqual(result.form, spin7())

    def test_g2_from_one_component(self):
        result = coset_generation((1, 2, 7), named_generators("G21"))
        self.assertEqual(result.coset_count, 7)
        self.assertEqual(result.form, g2())

    def test_requires_generators(self):
        with self.assertRaises(ValueError):
            coset_generation((1, 2), [])


class TestOmega10(unittest.TestCase):
    """Test the Z5 lift of the Spin(7) form."""

    def test_matches_reference(self):
        omega = build_omega10()
        self.assertEqual(omega.weight, 50)
        self.assertEqual(omega, omega10_reference())

    def test_pieces_agree(self):
        spec = omega10_spec()
        pieces = [lift_piece(spin7(), spec, n) for n in range(5)]
        for a, b in combinations(pieces, 2):
            self.assertTrue(pieces_compatible(a, b))

    def test_lift_piece_needs_cyclic_spec(self):
        spec = EmbeddingSpec.for_form(g2(), 8, (8,), named_generators("H8"))
        with self.assertRaises(ValueError):
            lift_piece(g2(), spec, 1)

    def test_z5_and_reflection(self):
        omega = build_omega10()
        z5, = named_generators("Z5")
        tau, = named_generators("tau10")
        self.assertEqual(act(z5, omega), omega)
        self.assertEqual(act(tau, omega), -omega)


class TestComplexForms(unittest.TestCase):
    """Test the SU(4) x U(1) forms written in complex coordinates."""

    def test_weights(self):
        weights = {v: complex_expand(v).weight for v in "ABCD"}
        self.assertEqual(weights, {"A": 10, "B": 60, "C": 40, "D": 40})

    def test_phi_a_is_sum_of_plane_pairs(self):
        expected = {_plane(i) + _plane(j): 1 for i, j in combinations(range(1, 6), 2)}
        self.assertEqual(complex_expand("A"), SpecialForm(10, 4, expected))

    def test_phi_b_normalization(self):
        self.assertEqual(complex_expand("B").coefficient((1, 2, 3, 6)), 1)

    def test_phi_b_cyclic_components(self):
        expected = set()
        for shift in range(5):
            a, b, c, d, e = (1 + (m + shift) % 5 for m in range(5))
            # the plane left out of each mixed pair survives whole in the dual
            for k, l, whole in ((c, d, e), (d, e, c), (e, c, d)):
                expected.add(tuple(sorted(_plane(whole) + (2 * k - 1, 2 * l - 1))))
                expected.add(tuple(sorted(_plane(whole) + (2 * k, 2 * l))))
        cyclic = complex_expand("B-cyclic")
        self.assertTrue(cyclic.is_special)
        self.assertEqual(cyclic.weight, 30)
        self.assertEqual(set(cyclic.components), expected)
        self.assertEqual(complex_expand("B").weight, 60)

    def test_eight_dimensional_form(self):
        expected = {_plane(i) + _plane(j): 1 for i, j in combinations(range(1, 5), 2)}
        self.assertEqual(su4u1_8d(), SpecialForm(8, 4, expected))

    def test_omega_a_from_8d(self):
        lifted = extend(su4u1_8d(), omega10_spec())
        self.assertEqual(lifted, omega_variant("A"))
        self.assertEqual(contract_plane(lifted, 1, 2), su4u1_8d())

    def test_unknown_patterns(self):
        with self.assertRaises(CatalogError):
            complex_expand("E")
        with self.assertRaises(CatalogError):
            omega_variant("E")
        with self.assertRaises(CatalogError):
            build_psi12("C")

    @unittest.skipUnless(RUN_SLOW, "set RUN_SLOW_TESTS=1")
    def test_psi12_restricts_to_omega(self):
        for v in "AB":
            psi = build_psi12(v)
            self.assertEqual(contract_plane(psi, 11, 12), omega_variant(v))


class TestCatalog(unittest.TestCase):
    """Test catalog lookup."""

    def test_parameterized_names(self):
        self.assertEqual(catalog("epsilon:4"), volume_form(4))
        self.assertEqual(catalog("kahler:3"), kahler(3))
        self.assertEqual(catalog("kahler_power:3,2"), kahler_power(3, 2))
        self.assertEqual(catalog("kahler_power:3,2").weight, 3)

    def test_errors(self):
        for name in ("nope", "epsilon", "epsilon:x", "g2:3", "kahler_power:3"):
            with self.assertRaises(CatalogError, msg=name):
                catalog(name)

    def test_names_listed(self):
        names = catalog_names()
        self.assertIn("g2", names)
        self.assertIn("epsilon:N", names)
        self.assertIn("kahler_power:N,K", names)


if __name__ == '__main__':
    unittest.main()
