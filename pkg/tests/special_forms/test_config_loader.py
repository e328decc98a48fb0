"""
Tests for configuration profiles, validators and environment overrides.
"""

import unittest
import os
import sys
from pathlib import Path
from unittest.mock import patch

# Add project root to path for imports
project_root = Path(__file__).parent.parent.parent
sys.path.insert(0, str(project_root / 'src'))

from special_forms.config_loader import (
    FormsConfig,
    SearchConfig,
    SpectralConfig,
    VerificationConfig,
    _apply_env_overrides,
    _merge_configs,
    available_profiles,
    load_config,
)


class TestSearchConfig(unittest.TestCase):
    """Search bounds and their validators."""

    def test_search_config_defaults(self):
        """Defaults cover every form in the catalog."""
        config = SearchConfig()

        self.assertEqual(config.max_dimension, 12)
        self.assertEqual(config.max_group_order, 1_000_000)
        self.assertEqual(config.materialize_limit, 131_072)

    def test_search_config_validation(self):
        """Test bounds must be positive."""
        with self.assertRaises(Exception):  # Pydantic ValidationError
            SearchConfig(max_dimension=0)

        with self.assertRaises(Exception):
            SearchConfig(max_group_order=-5)

        # Zero disables materialization
        self.assertEqual(SearchConfig(materialize_limit=0).materialize_limit, 0)

    def test_spectral_config(self):
        self.assertEqual(SpectralConfig().max_matrix_size, 495)
        with self.assertRaises(Exception):
            SpectralConfig(max_matrix_size=0)


class TestVerificationConfig(unittest.TestCase):
    """Test VerificationConfig section validation."""

    def test_defaults(self):
        config = VerificationConfig()
        self.assertFalse(config.include_slow)
        self.assertEqual(config.sections, ["all"])

    def test_known_sections(self):
        config = VerificationConfig(sections=["g2", "spin7"])
        self.assertEqual(config.sections, ["g2", "spin7"])

    def test_numbered_sections(self):
        config = VerificationConfig(sections=["5", "A", "g2"])
        self.assertEqual(config.sections, ["5", "A", "g2"])
        with self.assertRaises(ValueError):
            VerificationConfig(sections=["3"])

    def test_unknown_section_rejected(self):
        with self.assertRaises(Exception) as ctx:
            VerificationConfig(sections=["g2", "octonions"])
        self.assertIn("octonions", str(ctx.exception))


class TestConfigMerging(unittest.TestCase):
    """Profile files merged onto the base file."""

    def test_merge_configs_nested(self):
        """Nested sections merge key by key."""
        base = {
            "search": {"max_group_order": 1000000, "max_dimension": 12},
            "verification": {"include_slow": False},
        }
        override = {"search": {"max_group_order": 200000}}

        result = _merge_configs(base, override)

        self.assertEqual(result["search"]["max_group_order"], 200000)
        # Preserved from base
        self.assertEqual(result["search"]["max_dimension"], 12)
        self.assertFalse(result["verification"]["include_slow"])


class TestEnvironmentOverrides(unittest.TestCase):
    """FORMS_* variables and ENABLE_TELEMETRY."""

    def test_apply_env_overrides_search(self):
        """Test search and spectral overrides."""
        config_dict = {"search": {"max_dimension": 12, "max_group_order": 1000000}}

        with patch.dict(os.environ, {
            "FORMS_MAX_GROUP_ORDER": "5000",
            "FORMS_MAX_MATRIX_SIZE": "120",
        }, clear=True):
            result = _apply_env_overrides(config_dict)

        self.assertEqual(result["search"]["max_group_order"], 5000)
        self.assertEqual(result["search"]["max_dimension"], 12)  # Not overridden
        self.assertEqual(result["spectral"]["max_matrix_size"], 120)

    def test_apply_env_overrides_flags(self):
        """Test boolean overrides."""
        with patch.dict(os.environ, {
            "FORMS_INCLUDE_SLOW": "yes",
            "ENABLE_TELEMETRY": "false",
        }, clear=True):
            result = _apply_env_overrides({})

        self.assertTrue(result["verification"]["include_slow"])
        self.assertFalse(result["telemetry"]["enabled"])


class TestProfileLoading(unittest.TestCase):
    """Profiles shipped in config/."""

    @patch.dict(os.environ, {}, clear=True)
    def test_load_base_profile(self):
        """The base profile keeps slow claims off."""
        config = load_config(profile="base")

        self.assertIsInstance(config, FormsConfig)
        self.assertEqual(config.profile, "base")
        self.assertEqual(config.search.max_group_order, 1_000_000)
        self.assertEqual(config.spectral.max_matrix_size, 495)
        self.assertFalse(config.verification.include_slow)
        self.assertFalse(config.enable_telemetry)

    @patch.dict(os.environ, {}, clear=True)
    def test_load_quick_profile(self):
        """Test loading quick profile."""
        config = load_config(profile="quick")

        self.assertEqual(config.search.max_group_order, 200_000)
        self.assertEqual(config.search.canonical_node_limit, 500_000)
        # untouched by the profile
        self.assertEqual(config.search.max_dimension, 12)

    @patch.dict(os.environ, {}, clear=True)
    def test_load_full_profile(self):
        config = load_config(profile="full")

        self.assertTrue(config.verification.include_slow)
        self.assertTrue(config.enable_telemetry)

    @patch.dict(os.environ, {"CONFIG_PROFILE": "quick"}, clear=True)
    def test_load_profile_from_env_var(self):
        """CONFIG_PROFILE selects the profile when none is passed."""
        config = load_config()

        self.assertEqual(config.profile, "quick")
        self.assertEqual(config.search.max_group_order, 200_000)

    @patch.dict(os.environ, {}, clear=True)
    def test_unvalidated_sections_keep_attributes(self):
        config = load_config(profile="quick", validate=False)
        self.assertEqual(config.search.max_group_order, 200_000)
        self.assertFalse(config.telemetry.enabled)

    def test_load_invalid_profile(self):
        """An unknown profile name is a ValueError."""
        with self.assertRaises(ValueError) as ctx:
            load_config(profile="non-existent-profile")

        self.assertIn("Unknown configuration profile", str(ctx.exception))

    def test_available_profiles(self):
        profiles = available_profiles()
        self.assertEqual(profiles[0], "base")
        self.assertIn("quick", profiles)
        self.assertIn("full", profiles)


class TestOverridePrecedence(unittest.TestCase):
    """Environment variables win over profile files."""

    @patch.dict(os.environ, {"FORMS_MAX_GROUP_ORDER": "777"}, clear=True)
    def test_env_overrides_profile(self):
        config = load_config(profile="quick")
        self.assertEqual(config.search.max_group_order, 777)

    @patch.dict(os.environ, {"FORMS_INCLUDE_SLOW": "0"}, clear=True)
    def test_env_disables_slow_claims_of_full_profile(self):
        config = load_config(profile="full")
        self.assertFalse(config.verification.include_slow)


if __name__ == '__main__':
    unittest.main()
