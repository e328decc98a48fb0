"""
Special democratic differential forms with exact integer arithmetic.

A special p-form in d dimensions has every nonzero component equal to +1 or -1.
This package builds such forms, finds their discrete (signed-permutation)
symmetry groups, embeds them into larger forms and computes the exact spectra
of the self-duality maps they define.

## Structure

- `exterior.py` - SpecialForm, wedge, Hodge dual, contraction, restriction
- `formio.py` - Text format for forms (index 10 optionally written as 0)
- `symmetry.py` - Signed permutations, symmetry censuses, democracy, presentations
- `canonical.py` - Canonical representatives and O(d,Z) equivalence
- `construct.py` - Embeddings, cyclic lifts, complex-coordinate forms, the catalog
- `spectral.py` - Induced maps on k-forms, characteristic polynomials, su(2) checks
- `invariants.py` - Invariants of 2-forms in four dimensions, vertex graphs
- `verify.py` - Recomputation of the reference values
- `config_loader.py` - Search and spectral bounds from JSON profiles and env vars
- `telemetry.py` - OpenTelemetry integration for long computations
- `cli.py` - Command-line interface

## Quick Start

```python
from special_forms import catalog, symmetry_census

census = symmetry_census(catalog("g2"))
print(census.permutation.symmetry_order)          # 21
print(census.orthogonal.symmetries_projective)    # 672
```
"""

from .errors import (
    SpecialFormsError,
    ZeroComponent,
    DimensionError,
    DegreeError,
    DegeneratePlaneError,
    SearchBoundError,
    IncompatiblePresentationError,
    IncompatibleEmbeddingError,
    CatalogError,
    NormalizationError,
    RankError,
    FactorError,
    FormParseError,
)
from .exterior import (
    SpecialForm,
    normalize_component,
    permutation_sign,
    volume_form,
    wedge,
    hodge_star,
    contract_plane,
    restrict,
)
from .formio import parse_form, format_form, load_form, save_form
from .symmetry import (
    SignedPermutation,
    act,
    close_group,
    commutator_subgroup,
    symmetry_census,
    enumerate_permutation_census,
    enumerate_orthogonal_census,
    democracy,
    permutation_democratic,
    orthogonally_democratic,
    stability_group,
    expand_presentation,
)
from .canonical import canonical_representative, are_equivalent, find_equivalence
from .construct import (
    EmbeddingSpec,
    extend,
    coset_generation,
    complex_expand,
    named_generators,
    catalog,
    catalog_names,
)
from .spectral import (
    endomorphism_matrix,
    char_poly,
    eigenspace_dimension,
    verify_factorization,
    stabilizer_algebra_dimension,
)
from .invariants import invariant_I1, invariant_I2, classify_2form_4d, valence_profile
from .config_loader import load_config, FormsConfig
from .telemetry import init_telemetry, trace_operation

__all__ = [
    # Errors
    "SpecialFormsError",
    "ZeroComponent",
    "DimensionError",
    "DegreeError",
    "DegeneratePlaneError",
    "SearchBoundError",
    "IncompatiblePresentationError",
    "IncompatibleEmbeddingError",
    "CatalogError",
    "NormalizationError",
    "RankError",
    "FactorError",
    "FormParseError",
    # Forms
    "SpecialForm",
    "normalize_component",
    "permutation_sign",
    "volume_form",
    "wedge",
    "hodge_star",
    "contract_plane",
    "restrict",
    "parse_form",
    "format_form",
    "load_form",
    "save_form",
    # Symmetry
    "SignedPermutation",
    "act",
    "close_group",
    "commutator_subgroup",
    "symmetry_census",
    "enumerate_permutation_census",
    "enumerate_orthogonal_census",
    "democracy",
    "permutation_democratic",
    "orthogonally_democratic",
    "stability_group",
    "expand_presentation",
    "canonical_representative",
    "are_equivalent",
    "find_equivalence",
    # Constructions
    "EmbeddingSpec",
    "extend",
    "coset_generation",
    "complex_expand",
    "named_generators",
    "catalog",
    "catalog_names",
    # Spectra and invariants
    "endomorphism_matrix",
    "char_poly",
    "eigenspace_dimension",
    "verify_factorization",
    "stabilizer_algebra_dimension",
    "invariant_I1",
    "invariant_I2",
    "classify_2form_4d",
    "valence_profile",
    # Configuration
    "load_config",
    "FormsConfig",
    "init_telemetry",
    "trace_operation",
]
