"""
Form text format.

    # comment lines and blank lines are ignored
    dim 7
    deg 3
    +1 1 2 7
    -1 1 3 6

Each component line carries a signed coefficient followed by the strictly
increasing indices. With zero_ten=True the index 10 is written (and read) as 0.
"""

import logging
from pathlib import Path
from typing import List, Optional, Union

from .errors import FormParseError
from .exterior import SpecialForm

logger = logging.getLogger(__name__)


def _parse_header(tokens: List[str], keyword: str, line_number: int) -> int:
    if len(tokens) != 2 or tokens[0] != keyword:
        raise FormParseError(f"expected '{keyword} <int>'", line_number)
    try:
        value = int(tokens[1])
    except ValueError:
        raise FormParseError(f"'{tokens[1]}' is not an integer", line_number)
    if value < 0:
        raise FormParseError(f"{keyword} must be non-negative", line_number)
    return value


def _parse_index(token: str, zero_ten: bool, line_number: int) -> int:
    try:
        index = int(token)
    except ValueError:
        raise FormParseError(f"index '{token}' is not an integer", line_number)
    if index == 0 and zero_ten:
        return 10
    return index


def parse_form(text: str, zero_ten: bool = False) -> SpecialForm:
    """
    Parse a form from its text representation.

    Args:
        text: Contents in the form text format
        zero_ten: Read the index 0 as 10

    Returns:
        Parsed SpecialForm

    Raises:
        FormParseError: On malformed headers, coefficients, indices, duplicate
            supports or components outside the declared space
    """
    dim: Optional[int] = None
    degree: Optional[int] = None
    components = {}

    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()

        if dim is None:
            dim = _parse_header(tokens, "dim", line_number)
            continue
        if degree is None:
            degree = _parse_header(tokens, "deg", line_number)
            if degree > dim:
                raise FormParseError(f"degree {degree} exceeds dimension {dim}", line_number)
            continue

        coeff_token = tokens[0]
        if coeff_token[0] not in "+-":
            raise FormParseError(f"coefficient '{coeff_token}' must carry a sign", line_number)
        try:
            coeff = int(coeff_token)
        except ValueError:
            raise FormParseError(f"coefficient '{coeff_token}' is not an integer", line_number)
        if coeff == 0:
            raise FormParseError("zero coefficients are not stored", line_number)

        indices = tuple(_parse_index(t, zero_ten, line_number) for t in tokens[1:])
        if len(indices) != degree:
            raise FormParseError(
                f"expected {degree} indices, found {len(indices)}", line_number
            )
        if any(a >= b for a, b in zip(indices, indices[1:])):
            raise FormParseError(f"indices {indices} are not strictly increasing", line_number)
        if indices and (indices[0] < 1 or indices[-1] > dim):
            raise FormParseError(f"indices {indices} outside 1..{dim}", line_number)
        if indices in components:
            raise FormParseError(f"duplicate component {indices}", line_number)
        components[indices] = coeff

    if dim is None or degree is None:
        raise FormParseError("missing 'dim' or 'deg' header")

    return SpecialForm(dim, degree, components)


def format_form(f: SpecialForm, zero_ten: bool = False, comment: Optional[str] = None) -> str:
    """Serialize a form; components are written in lexicographic order."""
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(f"dim {f.dim}")
    lines.append(f"deg {f.degree}")
    for key, value in f.items():
        shown = ["0" if (zero_ten and i == 10) else str(i) for i in key]
        lines.append(" ".join([f"{value:+d}"] + shown))
    return "\n".join(lines) + "\n"


def load_form(path: Union[str, Path], zero_ten: bool = False) -> SpecialForm:
    path = Path(path)
    logger.debug(f"Loading form from {path}")
    return parse_form(path.read_text(encoding="utf-8"), zero_ten=zero_ten)


def save_form(
    f: SpecialForm,
    path: Union[str, Path],
    zero_ten: bool = False,
    comment: Optional[str] = None,
) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(format_form(f, zero_ten=zero_ten, comment=comment), encoding="utf-8")
    logger.info(f"Wrote {f.weight}-component form to {path}")
    return path
