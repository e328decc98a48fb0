"""
Configuration module for the special forms toolkit.

This module provides type-safe configuration loading with hierarchical profile
support and environment variable overrides using Pydantic for validation.

Configuration Sources (in order of precedence):
1. Command-line flags (applied by the CLI on top of the loaded config)
2. Environment variables
3. Profile-specific configuration files (quick.json, full.json)
4. Base configuration file (base-config.json)

Configuration Profiles:
- base: Default bounds, slow verification claims skipped
- quick: Tighter search bounds for fast feedback
- full: Every verification claim, including the 120x120 polynomial and the
  12-dimensional constructions

Optional Environment Variables (override config file values):
- CONFIG_PROFILE: Configuration profile to load (base, quick, full)
- FORMS_MAX_DIMENSION: Largest dimension accepted by the symmetry searches
- FORMS_MAX_GROUP_ORDER: Bound on group closures and automorphism counts
- FORMS_MATERIALIZE_LIMIT: Largest orthogonal group stored element by element
- FORMS_CANONICAL_NODE_LIMIT: Node budget of the canonical labeling search
- FORMS_MAX_MATRIX_SIZE: Largest endomorphism matrix the spectral code builds
- FORMS_INCLUDE_SLOW: Run slow verification claims
- ENABLE_TELEMETRY: Enable OpenTelemetry tracing

Usage:
    from special_forms.config_loader import load_config

    # Load default (base) configuration
    config = load_config()

    # Load the full verification profile
    config = load_config(profile="full")
    census = enumerate_orthogonal_census(form, config.search)
"""

import json
import logging
import os
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator

logger = logging.getLogger(__name__)


# ============================================================================
# Pydantic Models for Type-Safe Configuration
# ============================================================================

VERIFICATION_SECTIONS = ("kahler", "g2", "spin7", "omega10", "su4u1", "lift12", "two_forms")

# numbered sections of the reference text; each claim belongs to exactly one
PAPER_SECTIONS = ("2", "4", "5", "6", "7", "A")


class SearchConfig(BaseModel):
    """
    Bounds for the combinatorial searches.

    Controls the symmetry census, group closures and canonical labeling.
    """
    model_config = ConfigDict(extra='allow')

    max_dimension: int = Field(
        default=12,
        gt=0,
        description="Largest ambient dimension accepted by symmetry searches"
    )
    max_group_order: int = Field(
        default=1_000_000,
        gt=0,
        description="Bound on group closures and the number of support automorphisms"
    )
    materialize_limit: int = Field(
        default=131_072,
        ge=0,
        description="Orthogonal groups up to this order are stored element by element"
    )
    canonical_node_limit: int = Field(
        default=2_000_000,
        gt=0,
        description="Number of partial labelings the canonical search may expand"
    )


class SpectralConfig(BaseModel):
    """
    Spectral analysis configuration.
    """
    model_config = ConfigDict(extra='allow')

    max_matrix_size: int = Field(
        default=495,
        gt=0,
        description="Largest endomorphism matrix (binom(D,k)) that will be assembled"
    )


class VerificationConfig(BaseModel):
    """
    Verification harness configuration.

    Selects which claims run and whether slow claims are included.
    """
    model_config = ConfigDict(extra='allow')

    include_slow: bool = Field(
        default=False,
        description="Run slow claims (Lambda^3 polynomial of the 6-form, 12-dimensional lifts)"
    )
    sections: List[str] = Field(
        default_factory=lambda: ["all"],
        description="Sections to verify: all, 2, 4, 5, 6, 7, A or kahler, g2, spin7, omega10, su4u1, lift12, two_forms"
    )

    @field_validator('sections')
    @classmethod
    def validate_sections(cls, v: List[str]) -> List[str]:
        """
        Validate that every requested section is known.

        Raises:
            ValueError: If a section name is not recognised
        """
        known = {"all", *PAPER_SECTIONS, *VERIFICATION_SECTIONS}
        unknown = [s for s in v if s not in known]
        if unknown:
            raise ValueError(
                f"Unknown verification sections: {unknown}. "
                f"Choose from {sorted(known)}"
            )
        return v


class TelemetryConfig(BaseModel):
    """
    Observability configuration.
    """
    model_config = ConfigDict(extra='allow')

    enabled: bool = Field(
        default=False,
        description="Enable OpenTelemetry tracing and metrics"
    )
    console_export: bool = Field(
        default=False,
        description="Export finished spans to the console (stderr)"
    )


class FormsConfig(BaseModel):
    """
    Complete toolkit configuration.

    Attributes:
        profile: Name of the loaded profile
        search: Search bounds for symmetry and canonical labeling
        spectral: Matrix size bounds
        verification: Verification harness settings
        telemetry: Tracing settings
    """
    model_config = ConfigDict(extra='allow')

    profile: str = Field(
        default="base",
        description="Name of the configuration profile that was loaded"
    )
    search: SearchConfig = Field(default_factory=SearchConfig)
    spectral: SpectralConfig = Field(default_factory=SpectralConfig)
    verification: VerificationConfig = Field(default_factory=VerificationConfig)
    telemetry: TelemetryConfig = Field(default_factory=TelemetryConfig)

    @property
    def enable_telemetry(self) -> bool:
        return self.telemetry.enabled


# ============================================================================
# Profile files and environment
# ============================================================================

CONFIG_DIR = Path(__file__).resolve().parents[2] / "config"
BASE_FILE = "base-config.json"

# environment variable -> (section, field, parser)
ENV_OVERRIDES: Dict[str, Tuple[str, str, Callable[[str], Any]]] = {
    "FORMS_MAX_DIMENSION": ("search", "max_dimension", int),
    "FORMS_MAX_GROUP_ORDER": ("search", "max_group_order", int),
    "FORMS_MATERIALIZE_LIMIT": ("search", "materialize_limit", int),
    "FORMS_CANONICAL_NODE_LIMIT": ("search", "canonical_node_limit", int),
    "FORMS_MAX_MATRIX_SIZE": ("spectral", "max_matrix_size", int),
    "FORMS_INCLUDE_SLOW": ("verification", "include_slow", lambda v: v.strip().lower() in ("true", "1", "yes")),
    "ENABLE_TELEMETRY": ("telemetry", "enabled", lambda v: v.strip().lower() in ("true", "1", "yes")),
}

SECTIONS = ("search", "spectral", "verification", "telemetry")


def _profile_path(profile: str) -> Path:
    return CONFIG_DIR / (BASE_FILE if profile == "base" else f"{profile}.json")


def _read_profile(profile: str) -> Dict[str, Any]:
    """
    Read one profile file from the config directory.

    Raises:
        FileNotFoundError: If the file is missing
        ValueError: If the file is not valid JSON
    """
    path = _profile_path(profile)
    if not path.is_file():
        raise FileNotFoundError(f"No configuration file for profile '{profile}' at {path}")
    try:
        return json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as e:
        raise ValueError(f"{path.name} is not valid JSON: {e}") from e


def _merge_configs(base: Dict[str, Any], override: Dict[str, Any]) -> Dict[str, Any]:
    """Recursive merge; sections present in both are merged key by key."""
    merged = dict(base)
    for key, value in override.items():
        current = merged.get(key)
        merged[key] = (
            _merge_configs(current, value)
            if isinstance(current, dict) and isinstance(value, dict)
            else value
        )
    return merged


def _apply_env_overrides(config_dict: Dict[str, Any]) -> Dict[str, Any]:
    """Overlay the variables of ENV_OVERRIDES that are set and non-empty."""
    for section in SECTIONS:
        config_dict.setdefault(section, {})
    for variable, (section, field_name, parse) in ENV_OVERRIDES.items():
        raw = os.getenv(variable)
        if raw:
            config_dict[section][field_name] = parse(raw)
            logger.debug(f"{variable} sets {section}.{field_name}")
    return config_dict


def _strip_descriptions(section: Dict[str, Any]) -> Dict[str, Any]:
    return {k: v for k, v in section.items() if k not in ("description", "notes")}


def available_profiles() -> List[str]:
    """Profile names present in the config directory, base first."""
    others = sorted(p.stem for p in CONFIG_DIR.glob("*.json") if p.name != BASE_FILE)
    return ["base"] + others


def load_config(
    profile: Optional[str] = None,
    validate: bool = True
) -> FormsConfig:
    """
    Build the configuration for a profile.

    The base file is read first, then the profile file on top of it, then
    the environment variables in ENV_OVERRIDES. CLI flags are applied by the
    caller afterwards.

    Args:
        profile: Profile name such as 'quick'; defaults to $CONFIG_PROFILE or 'base'
        validate: Run the pydantic validators. Partial configurations used in
                  tests pass False.

    Raises:
        FileNotFoundError: If the base config file is missing
        ValueError: If the profile is unknown or a value is out of range

    Example:
        >>> load_config(profile="quick").search.max_group_order
        200000
    """
    profile = profile or os.getenv("CONFIG_PROFILE", "base")

    merged = _read_profile("base")
    if profile != "base":
        if not _profile_path(profile).is_file():
            raise ValueError(
                f"Unknown configuration profile: {profile} "
                f"(available: {', '.join(available_profiles())})"
            )
        merged = _merge_configs(merged, _read_profile(profile))

    merged = _apply_env_overrides(merged)
    sections = {name: _strip_descriptions(merged[name]) for name in SECTIONS}
    logger.debug(f"Loaded configuration profile {profile}")

    if not validate:
        return FormsConfig.model_construct(
            profile=profile,
            search=SearchConfig.model_construct(**sections["search"]),
            spectral=SpectralConfig.model_construct(**sections["spectral"]),
            verification=VerificationConfig.model_construct(**sections["verification"]),
            telemetry=TelemetryConfig.model_construct(**sections["telemetry"]),
        )
    return FormsConfig(
        profile=profile,
        search=SearchConfig(**sections["search"]),
        spectral=SpectralConfig(**sections["spectral"]),
        verification=VerificationConfig(**sections["verification"]),
        telemetry=TelemetryConfig(**sections["telemetry"]),
    )


# ============================================================================
# Example Usage
# ============================================================================

if __name__ == "__main__":
    """
    Display the active configuration:
        python -m special_forms.config_loader
    """
    try:
        from dotenv import load_dotenv
        load_dotenv()
    except ImportError:
        print("ℹ python-dotenv not installed, using environment variables only")

    config = load_config()
    print("=" * 70)
    print(f"Special forms configuration (profile: {config.profile})")
    print("=" * 70)
    print(json.dumps(config.model_dump(), indent=2))
