"""
Unit tests for canonical representatives and O(d, Z) equivalence.
"""

import random
import sys
import unittest
from pathlib import Path

# Add project root to path for imports
project_root = Path(__file__).parent.parent.parent
sys.path.insert(0, str(project_root / 'src'))

from special_forms.canonical import (
    are_equivalent,
    canonical_key,
    canonical_labeling,
    canonical_representative,
    find_equivalence,
)
from special_forms.config_loader import SearchConfig
from special_forms.construct import catalog, g2, kahler, spin7
from special_forms.errors import SearchBoundError
from special_forms.exterior import SpecialForm, contract_plane
from special_forms.symmetry import SignedPermutation, act


def _random_element(rng: random.Random, d: int) -> SignedPermutation:
    sigma = list(range(1, d + 1))
    rng.shuffle(sigma)
    return SignedPermutation(tuple(sigma), tuple(rng.choice((1, -1)) for _ in range(d)))


class TestCanonicalRepresentative(unittest.TestCase):
    """Test that the representative depends only on the orbit."""

    def test_labeling_element_maps_to_representative(self):
        labeling = canonical_labeling(spin7())
        self.assertEqual(act(labeling.element, spin7()), labeling.form)
        self.assertGreater(labeling.nodes_expanded, 0)

    def test_orbit_invariance(self):
        rng = random.Random(23)
        for f in (g2(), spin7(), kahler(3)):
            reference = canonical_representative(f)
            for _ in range(5):
                image = act(_random_element(rng, f.dim), f)
                self.assertEqual(canonical_representative(image), reference)

    def test_empty_form(self):
        f = SpecialForm(5, 2, {})
        self.assertEqual(canonical_representative(f), f)

    def test_dimension_bound(self):
        with self.assertRaises(SearchBoundError):
            canonical_labeling(spin7(), SearchConfig(max_dimension=7))

    def test_canonical_key_is_colexicographic(self):
        f = SpecialForm(4, 2, {(1, 4): 1, (2, 3): -1, (1, 2): 1})
        self.assertEqual([s for s, _ in canonical_key(f)], [(1, 2), (2, 3), (1, 4)])


class TestEquivalence(unittest.TestCase):
    """Test equivalence checks and witnesses."""

    def test_find_equivalence_witness(self):
        rng = random.Random(29)
        for f in (g2(), spin7()):
            h = act(_random_element(rng, f.dim), f)
            g = find_equivalence(f, h)
            self.assertIsNotNone(g)
            self.assertEqual(act(g, f), h)

    def test_inequivalent_forms(self):
        f = SpecialForm(4, 2, {(1, 2): 1, (3, 4): 1})
        h = SpecialForm(4, 2, {(1, 2): 1, (1, 3): 1})
        self.assertFalse(are_equivalent(f, h))
        self.assertIsNone(find_equivalence(f, h))

    def test_different_weights(self):
        self.assertFalse(are_equivalent(kahler(2), SpecialForm(4, 2, {(1, 2): 1})))

    def test_exceptional_planes_of_omega10(self):
        omega = catalog("omega10")
        for k in range(1, 6):
            self.assertTrue(are_equivalent(contract_plane(omega, 2 * k - 1, 2 * k), spin7()))

    def test_t17_is_not_spin7(self):
        self.assertFalse(are_equivalent(catalog("t17"), spin7()))


if __name__ == '__main__':
    unittest.main()
