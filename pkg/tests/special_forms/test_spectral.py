"""
Unit tests for induced matrices, exact characteristic polynomials and the su(2) checks.
"""

import os
import sys
import unittest
from math import comb
from pathlib import Path

# Add project root to path for imports
project_root = Path(__file__).parent.parent.parent
sys.path.insert(0, str(project_root / 'src'))

from special_forms.config_loader import SpectralConfig
from special_forms.construct import catalog, g2, kahler, spin7
from special_forms.errors import DegreeError, FactorError, RankError, SearchBoundError
from special_forms.exterior import volume_form
from special_forms.spectral import (
    REFERENCE_T17_FACTORS,
    IntPolynomial,
    char_poly,
    eigenspace_dimension,
    endomorphism_matrix,
    factorization_multiplicity_check,
    known_factors,
    parse_factors,
    rank_tuple,
    stabilizer_algebra_dimension,
    su2_annihilates,
    unrank,
    verify_factorization,
    verify_su2_reduction,
)

RUN_SLOW = os.getenv("RUN_SLOW_TESTS", "").lower() in ("1", "true", "yes")


class TestRankMap(unittest.TestCase):
    """Test the colexicographic rank of index tuples."""

    def test_first_ranks(self):
        self.assertEqual(rank_tuple((1, 2), 4, 2), 1)
        self.assertEqual(rank_tuple((1, 3), 4, 2), 2)
        self.assertEqual(rank_tuple((2, 3), 4, 2), 3)
        self.assertEqual(rank_tuple((1, 4), 4, 2), 4)
        self.assertEqual(rank_tuple((3, 4), 4, 2), 6)

    def test_unrank_inverts_rank(self):
        for A in range(1, comb(8, 3) + 1):
            self.assertEqual(rank_tuple(unrank(A, 8, 3), 8, 3), A)

    def test_rank_errors(self):
        with self.assertRaises(RankError):
            rank_tuple((2, 1), 4, 2)
        with self.assertRaises(RankError):
            rank_tuple((1, 5), 4, 2)
        with self.assertRaises(RankError):
            rank_tuple((1, 2, 3), 4, 2)
        with self.assertRaises(RankError):
            unrank(0, 4, 2)
        with self.assertRaises(RankError):
            unrank(7, 4, 2)


class TestPolynomials(unittest.TestCase):
    """Test integer polynomials and factorization checks."""

    def test_parse(self):
        self.assertEqual(IntPolynomial.parse("(x-1)**2").coefficients, (1, -2, 1))
        self.assertEqual(IntPolynomial.parse("lambda^2 + 3").coefficients, (3, 0, 1))
        self.assertEqual(IntPolynomial((0, 0)).coefficients, ())

    def test_verify_factorization(self):
        p = IntPolynomial.parse("(x-1)**3*(x+1)**3")
        self.assertTrue(verify_factorization(p, known_factors("epsilon:4")[1]))
        self.assertFalse(verify_factorization(p, known_factors("phiC")[1]))


class TestEndomorphismMatrix(unittest.TestCase):
    """Test matrices of 2k-forms acting on k-forms."""

    def test_epsilon4(self):
        M = endomorphism_matrix(volume_form(4), 2)
        self.assertEqual(M.size, 6)
        self.assertTrue(M.is_symmetric)
        self.assertEqual(M.trace, 0)
        self.assertEqual(char_poly(M), IntPolynomial.parse("(x-1)**3*(x+1)**3"))

    def test_kahler_on_vectors_is_antisymmetric(self):
        M = endomorphism_matrix(kahler(2), 1)
        self.assertTrue(M.is_antisymmetric)
        self.assertEqual(char_poly(M), IntPolynomial.parse("(x**2+1)**2"))

    def test_degree_mismatch(self):
        with self.assertRaises(DegreeError):
            endomorphism_matrix(g2(), 1)

    def test_size_bound(self):
        with self.assertRaises(SearchBoundError) as ctx:
            endomorphism_matrix(spin7(), 2, SpectralConfig(max_matrix_size=20))
        self.assertEqual(ctx.exception.bound_name, "max_matrix_size")

    def test_spin7_on_two_forms(self):
        # 7 + 21 split of Lambda^2 in eight dimensions
        M = endomorphism_matrix(spin7(), 2)
        self.assertEqual(char_poly(M), IntPolynomial.parse("(x-3)**7*(x+1)**21"))
        k, factors = known_factors("spin7")
        self.assertEqual(k, 2)
        self.assertTrue(verify_factorization(char_poly(M), factors))


class TestKnownPolynomials(unittest.TestCase):
    """Test the quoted factorizations of the catalog forms."""

    def test_phi_a(self):
        k, factors = known_factors("phiA")
        M = endomorphism_matrix(catalog("phiA"), k)
        poly = char_poly(M)
        self.assertTrue(verify_factorization(poly, factors))
        matches, dims = factorization_multiplicity_check(M, factors, poly)
        self.assertTrue(matches)

    def test_t17(self):
        k, factors = known_factors("t17")
        M = endomorphism_matrix(catalog("t17"), k)
        poly = char_poly(M)
        self.assertTrue(verify_factorization(poly, factors))
        self.assertEqual(eigenspace_dimension(M, IntPolynomial.parse("x"), poly), 3)

    def test_t17_differs_from_reference_polynomial(self):
        M = endomorphism_matrix(catalog("t17"), 2)
        poly = char_poly(M)
        self.assertFalse(verify_factorization(poly, parse_factors(REFERENCE_T17_FACTORS)))
        # same degree and same trace of T^2
        reference = IntPolynomial.parse("*".join(f"({p})**{m}" for p, m in REFERENCE_T17_FACTORS))
        self.assertEqual(reference.degree, poly.degree)
        self.assertEqual(reference.coefficients[-3], poly.coefficients[-3])

    def test_factor_must_divide(self):
        M = endomorphism_matrix(volume_form(4), 2)
        with self.assertRaises(FactorError):
            eigenspace_dimension(M, IntPolynomial.parse("x-7"))

    def test_unknown_name(self):
        self.assertIsNone(known_factors("g2"))

    @unittest.skipUnless(RUN_SLOW, "set RUN_SLOW_TESTS=1")
    def test_omega_a(self):
        k, factors = known_factors("omegaA")
        M = endomorphism_matrix(catalog("omegaA"), k)
        self.assertTrue(M.is_antisymmetric)
        self.assertTrue(verify_factorization(char_poly(M), factors))


class TestStabilizerAlgebra(unittest.TestCase):
    """Test dimensions of infinitesimal stabilizers."""

    def test_dimensions(self):
        self.assertEqual(stabilizer_algebra_dimension(volume_form(4)), 6)
        self.assertEqual(stabilizer_algebra_dimension(g2()), 14)
        self.assertEqual(stabilizer_algebra_dimension(spin7()), 21)
        self.assertEqual(stabilizer_algebra_dimension(kahler(3)), 9)

    def test_omega10(self):
        self.assertEqual(stabilizer_algebra_dimension(catalog("omega10")), 16)


class TestSU2(unittest.TestCase):
    """Test the su(2) acting on eight dimensions."""

    def test_reduction_checks(self):
        failed = [check.name for check in verify_su2_reduction() if not check.passed]
        self.assertEqual(failed, [])

    def test_t17_is_invariant(self):
        self.assertTrue(su2_annihilates(catalog("t17")))

    def test_needs_eight_dimensions(self):
        with self.assertRaises(DegreeError):
            su2_annihilates(g2())


if __name__ == '__main__':
    unittest.main()
