"""
Exception hierarchy for the special forms toolkit.

Every error raised by the library derives from SpecialFormsError so callers
(and the CLI exit-code mapping) can catch the whole family at once.
"""

from typing import Optional


class SpecialFormsError(Exception):
    """Base class for all library errors."""


class ZeroComponent(SpecialFormsError):
    """
    Signal raised when an index tuple contains a repeated index.

    The corresponding component of an alternating tensor is identically zero,
    so callers usually catch this and treat the coefficient as 0.
    """


class DimensionError(SpecialFormsError, ValueError):
    """Forms or group elements with incompatible dimensions, or indices out of range."""


class DegreeError(SpecialFormsError, ValueError):
    """Degree mismatch or overflow (e.g. wedge exceeding the ambient dimension)."""


class DegeneratePlaneError(SpecialFormsError, ValueError):
    """Contraction with a plane spanned by a single basis vector."""


class SearchBoundError(SpecialFormsError):
    """A search or closure exceeded its configured bound."""

    def __init__(self, message: str, bound_name: str = "", bound: Optional[int] = None):
        super().__init__(message)
        self.bound_name = bound_name
        self.bound = bound


class IncompatiblePresentationError(SpecialFormsError):
    """Two group elements produce different signed values on the same support."""

    def __init__(self, message: str, support=None, provenances=None):
        super().__init__(message)
        self.support = support
        self.provenances = provenances or []


class IncompatibleEmbeddingError(IncompatiblePresentationError):
    """Sign conflict (or failed restriction) while extending a form."""


class CatalogError(SpecialFormsError, KeyError):
    """Unknown catalog name."""

    def __str__(self) -> str:
        return str(self.args[0]) if self.args else ""


class NormalizationError(SpecialFormsError):
    """Complex expansion produced coefficients of non-uniform magnitude."""


class RankError(SpecialFormsError, ValueError):
    """Index tuple or rank outside the valid range of the rank map."""


class FactorError(SpecialFormsError, ValueError):
    """A claimed factor does not divide the characteristic polynomial."""


class FormParseError(SpecialFormsError, ValueError):
    """Malformed form text; carries the offending line number when known."""

    def __init__(self, message: str, line_number: Optional[int] = None):
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)
