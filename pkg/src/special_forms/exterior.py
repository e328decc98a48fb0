"""
Exact exterior algebra over integer coefficients.

A form is stored as a map from strictly increasing index tuples to nonzero
integers; the antisymmetry sign of any other ordering is absorbed into the
coefficient by normalize_component. All operations are pure and return new
SpecialForm instances.

Usage:
    from special_forms.exterior import SpecialForm, wedge, hodge_star

    omega = SpecialForm.from_entries(4, 2, [((1, 2), 1), ((3, 4), 1)])
    vol = wedge(omega, omega)          # 2 e_1234
    star = hodge_star(omega)           # omega is self-dual in 4 dimensions
"""

import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, Iterable, Iterator, List, Mapping, Sequence, Tuple

from .errors import (
    DegeneratePlaneError,
    DegreeError,
    DimensionError,
    ZeroComponent,
)

logger = logging.getLogger(__name__)

IndexTuple = Tuple[int, ...]


# ============================================================================
# Component normalization
# ============================================================================

def permutation_sign(indices: Sequence[int]) -> int:
    """
    Sign of the permutation sorting a sequence of distinct integers.

    Args:
        indices: Sequence of distinct integers

    Returns:
        +1 for an even number of inversions, -1 otherwise
    """
    sign = 1
    seq = list(indices)
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                sign = -sign
    return sign


def normalize_component(indices: Sequence[int], coeff: int = 1) -> Tuple[IndexTuple, int]:
    """
    Bring a component to canonical storage order.

    Args:
        indices: Distinct indices in any order
        coeff: Coefficient attached to that ordering

    Returns:
        (sorted index tuple, coeff times the sign of the sorting permutation)

    Raises:
        ZeroComponent: If an index is repeated (the component vanishes)

    Example:
        >>> normalize_component((2, 1, 7), 1)
        ((1, 2, 7), -1)
    """
    idx = tuple(indices)
    if len(set(idx)) != len(idx):
        raise ZeroComponent(f"Repeated index in component {idx}")
    return tuple(sorted(idx)), coeff * permutation_sign(idx)


# ============================================================================
# Form type
# ============================================================================

@dataclass(frozen=True)
class SpecialForm:
    """
    Degree-p alternating tensor on R^d with integer components.

    Attributes:
        dim: Ambient dimension d >= 1
        degree: Form degree p, 0 <= p <= d
        components: Strictly increasing index tuple -> nonzero integer
    """
    dim: int
    degree: int
    components: Mapping[IndexTuple, int] = field(default_factory=dict)

    def __post_init__(self):
        if self.dim < 0:
            raise DimensionError(f"Dimension must be non-negative, got {self.dim}")
        if not 0 <= self.degree <= self.dim:
            raise DegreeError(f"Degree {self.degree} outside 0..{self.dim}")

        checked: Dict[IndexTuple, int] = {}
        for key in sorted(self.components):
            value = int(self.components[key])
            key = tuple(int(i) for i in key)
            if len(key) != self.degree:
                raise DegreeError(f"Component {key} does not have degree {self.degree}")
            if any(a >= b for a, b in zip(key, key[1:])):
                raise DimensionError(f"Component {key} is not strictly increasing")
            if key and (key[0] < 1 or key[-1] > self.dim):
                raise DimensionError(f"Component {key} has an index outside 1..{self.dim}")
            if value == 0:
                raise ValueError(f"Stored coefficient for {key} is zero")
            checked[key] = value
        object.__setattr__(self, "components", checked)

    @classmethod
    def from_entries(
        cls,
        dim: int,
        degree: int,
        entries: Iterable[Tuple[Sequence[int], int]],
    ) -> "SpecialForm":
        """
        Build a form from (indices, coefficient) pairs in any index order.

        Entries with repeated indices are dropped, entries on the same support
        are summed, and zero sums are pruned.
        """
        acc: Dict[IndexTuple, int] = {}
        for indices, coeff in entries:
            try:
                key, value = normalize_component(indices, coeff)
            except ZeroComponent:
                continue
            acc[key] = acc.get(key, 0) + value
        return cls(dim, degree, {k: v for k, v in acc.items() if v != 0})

    def __hash__(self) -> int:
        return hash((self.dim, self.degree, tuple(self.components.items())))

    def __repr__(self) -> str:
        return f"SpecialForm(dim={self.dim}, degree={self.degree}, weight={self.weight})"

    # ------------------------------------------------------------------
    # Views
    # ------------------------------------------------------------------

    @property
    def weight(self) -> int:
        return len(self.components)

    @property
    def is_special(self) -> bool:
        return all(v in (1, -1) for v in self.components.values())

    @property
    def support(self) -> List[IndexTuple]:
        return list(self.components)

    def items(self) -> Iterator[Tuple[IndexTuple, int]]:
        return iter(self.components.items())

    def coefficient(self, indices: Sequence[int]) -> int:
        """Coefficient of an arbitrarily ordered index tuple (0 if absent or degenerate)."""
        try:
            key, sign = normalize_component(indices, 1)
        except ZeroComponent:
            return 0
        return sign * self.components.get(key, 0)

    # ------------------------------------------------------------------
    # Linear structure
    # ------------------------------------------------------------------

    def __neg__(self) -> "SpecialForm":
        return negate(self)

    def __add__(self, other: "SpecialForm") -> "SpecialForm":
        return add(self, other)

    def __sub__(self, other: "SpecialForm") -> "SpecialForm":
        return add(self, negate(other))

    def __mul__(self, c: int) -> "SpecialForm":
        return scale(self, c)

    __rmul__ = __mul__


# ============================================================================
# Constructors and views
# ============================================================================

def zero_form(dim: int, degree: int) -> SpecialForm:
    return SpecialForm(dim, degree, {})


def volume_form(dim: int, orientation: int = 1) -> SpecialForm:
    """The volume form e_1 ^ ... ^ e_d with the given orientation sign."""
    return SpecialForm(dim, dim, {tuple(range(1, dim + 1)): orientation})


def positive_support(f: SpecialForm) -> List[IndexTuple]:
    return [k for k, v in f.items() if v > 0]


def negative_support(f: SpecialForm) -> List[IndexTuple]:
    return [k for k, v in f.items() if v < 0]


def is_special(f: SpecialForm) -> bool:
    return f.is_special


def weight(f: SpecialForm) -> int:
    return f.weight


# ============================================================================
# Linear operations
# ============================================================================

def _check_same_space(f: SpecialForm, g: SpecialForm) -> None:
    if f.dim != g.dim or f.degree != g.degree:
        raise DimensionError(
            f"Cannot combine a {f.degree}-form in {f.dim} dimensions "
            f"with a {g.degree}-form in {g.dim} dimensions"
        )


def add(f: SpecialForm, g: SpecialForm) -> SpecialForm:
    _check_same_space(f, g)
    acc = dict(f.components)
    for key, value in g.items():
        acc[key] = acc.get(key, 0) + value
    return SpecialForm(f.dim, f.degree, {k: v for k, v in acc.items() if v != 0})


def scale(f: SpecialForm, c: int) -> SpecialForm:
    if c == 0:
        return zero_form(f.dim, f.degree)
    return SpecialForm(f.dim, f.degree, {k: c * v for k, v in f.items()})


def negate(f: SpecialForm) -> SpecialForm:
    return scale(f, -1)


# ============================================================================
# Products and duality
# ============================================================================

def wedge(f: SpecialForm, g: SpecialForm) -> SpecialForm:
    """
    Exterior product with integer coefficients.

    Raises:
        DimensionError: If the forms live in different dimensions
        DegreeError: If the combined degree exceeds the dimension
    """
    if f.dim != g.dim:
        raise DimensionError(f"Wedge of forms in dimensions {f.dim} and {g.dim}")
    if f.degree + g.degree > f.dim:
        raise DegreeError(
            f"Wedge degree {f.degree}+{g.degree} exceeds dimension {f.dim}"
        )

    entries = []
    for s, a in f.items():
        s_set = set(s)
        for t, b in g.items():
            if s_set.isdisjoint(t):
                entries.append((s + t, a * b))
    return SpecialForm.from_entries(f.dim, f.degree + g.degree, entries)


def hodge_star(f: SpecialForm, orientation: int = 1) -> SpecialForm:
    """
    Hodge dual in the orthonormal basis.

    *e_mu = orientation * sign(mu, nu) e_nu with nu the sorted complement of mu.
    orientation=+1 is the convention eps_{1...d} = +1; -1 reverses the volume form.
    """
    if orientation not in (1, -1):
        raise ValueError(f"orientation must be +1 or -1, got {orientation}")

    full = range(1, f.dim + 1)
    out = {}
    for mu, c in f.items():
        mu_set = set(mu)
        nu = tuple(i for i in full if i not in mu_set)
        out[nu] = orientation * permutation_sign(mu + nu) * c
    return SpecialForm(f.dim, f.dim - f.degree, out)


def _compress(indices: Iterable[int], kept: Sequence[int]) -> IndexTuple:
    position = {old: new for new, old in enumerate(kept, start=1)}
    return tuple(position[i] for i in indices)


def contract_plane(f: SpecialForm, i: int, j: int) -> SpecialForm:
    """
    Interior product f(e_i, e_j, ., ..., .) restricted to the complement of the plane.

    The surviving d-2 indices are relabelled order-preservingly to 1..d-2.

    Raises:
        DegeneratePlaneError: If i == j
        DimensionError: If i or j is outside 1..dim
        DegreeError: If the form has degree below 2
    """
    if i == j:
        raise DegeneratePlaneError(f"Plane ({i},{j}) is degenerate")
    for k in (i, j):
        if not 1 <= k <= f.dim:
            raise DimensionError(f"Index {k} outside 1..{f.dim}")
    if f.degree < 2:
        raise DegreeError(f"Cannot contract a {f.degree}-form with a plane")

    kept = [k for k in range(1, f.dim + 1) if k not in (i, j)]
    out = {}
    for s, c in f.items():
        if i in s and j in s:
            rest = tuple(k for k in s if k not in (i, j))
            # s is stored sorted, so this is the sign of reordering it to (i, j, rest)
            sign = permutation_sign((i, j) + rest)
            out[_compress(rest, kept)] = sign * c
    return SpecialForm(f.dim - 2, f.degree - 2, out)


def restrict(f: SpecialForm, subset: Sequence[int]) -> SpecialForm:
    """
    Keep the components supported inside `subset`, relabelled to 1..len(subset).

    Raises:
        DimensionError: If subset is not strictly increasing within 1..dim
        DegreeError: If the subset is smaller than the form degree
    """
    kept = list(subset)
    if any(a >= b for a, b in zip(kept, kept[1:])):
        raise DimensionError(f"Restriction subset {kept} is not strictly increasing")
    if kept and (kept[0] < 1 or kept[-1] > f.dim):
        raise DimensionError(f"Restriction subset {kept} outside 1..{f.dim}")
    if f.degree > len(kept):
        raise DegreeError(f"Cannot restrict a {f.degree}-form to {len(kept)} indices")

    kept_set = set(kept)
    out = {
        _compress(s, kept): c
        for s, c in f.items()
        if kept_set.issuperset(s)
    }
    return SpecialForm(len(kept), f.degree, out)


def all_index_tuples(dim: int, degree: int) -> Iterator[IndexTuple]:
    """All strictly increasing degree-tuples in 1..dim, in lexicographic order."""
    return combinations(range(1, dim + 1), degree)
