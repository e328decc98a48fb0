"""
Signed permutations acting on forms, and the discrete symmetry machinery.

An element g = (sigma, eta) of the hyperoctahedral group S_d x| Z_2^d acts on a
p-form by

    act(g, f)[s] = eta_{s_1} ... eta_{s_p} f[sigma(s_1), ..., sigma(s_p)]

and composition is defined so that act(g * h) = act(g) o act(h). A pure
permutation has every eta_i = +1. Cycle notation (1 2 5) means 1 -> 2 -> 5 -> 1.

The censuses search for every g with act(g, f) = +f (symmetries) or -f
(antisymmetries). Permutations are found by backtracking over index images,
pruned by the incidence structure of the support; signs are then solved as a
linear system over GF(2), one system per admissible permutation.
"""

import logging
import math
import re
from collections import Counter, deque
from dataclasses import dataclass, field
from enum import Enum
from itertools import permutations, product
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Set, Tuple

from .config_loader import SearchConfig
from .errors import DimensionError, IncompatiblePresentationError, SearchBoundError
from .exterior import IndexTuple, SpecialForm, normalize_component, permutation_sign
from .telemetry import record_metric, trace_operation

logger = logging.getLogger(__name__)


# ============================================================================
# Signed permutations
# ============================================================================

@dataclass(frozen=True, order=True)
class SignedPermutation:
    """
    Element (sigma, eta) of S_d x| Z_2^d.

    Attributes:
        sigma: Images sigma(1), ..., sigma(d)
        eta: Signs eta_1, ..., eta_d, each +1 or -1
    """
    sigma: Tuple[int, ...]
    eta: Tuple[int, ...]

    def __post_init__(self):
        d = len(self.sigma)
        if sorted(self.sigma) != list(range(1, d + 1)):
            raise ValueError(f"sigma {self.sigma} is not a permutation of 1..{d}")
        if len(self.eta) != d or any(e not in (1, -1) for e in self.eta):
            raise ValueError(f"eta {self.eta} must hold {d} entries of +1/-1")

    # ------------------------------------------------------------------
    # Constructors
    # ------------------------------------------------------------------

    @classmethod
    def identity(cls, d: int) -> "SignedPermutation":
        return cls(tuple(range(1, d + 1)), (1,) * d)

    @classmethod
    def from_images(cls, images: Sequence[int], eta: Optional[Sequence[int]] = None) -> "SignedPermutation":
        images = tuple(images)
        return cls(images, tuple(eta) if eta is not None else (1,) * len(images))

    @classmethod
    def from_cycles(
        cls,
        d: int,
        cycles: Iterable[Sequence[int]],
        eta: Optional[Sequence[int]] = None,
    ) -> "SignedPermutation":
        """
        Build from disjoint cycles; (a b c) sends a -> b -> c -> a.

        Raises:
            DimensionError: If a cycle entry is outside 1..d or repeated
        """
        images = list(range(1, d + 1))
        seen: Set[int] = set()
        for cycle in cycles:
            cycle = list(cycle)
            for a in cycle:
                if not 1 <= a <= d or a in seen:
                    raise DimensionError(f"Invalid cycle entry {a} for d={d}")
                seen.add(a)
            for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                images[a - 1] = b
        return cls(tuple(images), tuple(eta) if eta is not None else (1,) * d)

    @classmethod
    def parse(cls, text: str, d: int, eta: Optional[Sequence[int]] = None) -> "SignedPermutation":
        """
        Parse cycle notation such as "(1 2 5 4 6 7 3)" or "(3)(1264758)".

        A cycle written without spaces is read digit by digit, with 0 standing
        for 10.
        """
        cycles = []
        for body in re.findall(r"\(([^()]*)\)", text):
            body = body.strip()
            if not body:
                continue
            if " " in body or "," in body:
                entries = [int(t) for t in re.split(r"[ ,]+", body) if t]
            else:
                entries = [10 if ch == "0" else int(ch) for ch in body]
            cycles.append(entries)
        return cls.from_cycles(d, cycles, eta)

    # ------------------------------------------------------------------
    # Group structure
    # ------------------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.sigma)

    def __mul__(self, other: "SignedPermutation") -> "SignedPermutation":
        """g * h with act(g * h, f) = act(g, act(h, f))."""
        if self.degree != other.degree:
            raise DimensionError(f"Cannot compose elements of degree {self.degree} and {other.degree}")
        sigma = tuple(other.sigma[s - 1] for s in self.sigma)
        eta = tuple(e * other.eta[s - 1] for e, s in zip(self.eta, self.sigma))
        return SignedPermutation(sigma, eta)

    def inverse(self) -> "SignedPermutation":
        d = self.degree
        sigma = [0] * d
        eta = [1] * d
        for i, s in enumerate(self.sigma, start=1):
            sigma[s - 1] = i
            eta[s - 1] = self.eta[i - 1]
        return SignedPermutation(tuple(sigma), tuple(eta))

    def __pow__(self, n: int) -> "SignedPermutation":
        base = self if n >= 0 else self.inverse()
        result = SignedPermutation.identity(self.degree)
        for _ in range(abs(n)):
            result = result * base
        return result

    @property
    def is_identity(self) -> bool:
        return self == SignedPermutation.identity(self.degree)

    @property
    def is_pure(self) -> bool:
        return all(e == 1 for e in self.eta)

    def pure_part(self) -> "SignedPermutation":
        return SignedPermutation(self.sigma, (1,) * self.degree)

    def negated(self) -> "SignedPermutation":
        """The element -g, acting as (-1)^p act(g) on p-forms."""
        return SignedPermutation(self.sigma, tuple(-e for e in self.eta))

    def cycles(self, include_fixed: bool = False) -> List[Tuple[int, ...]]:
        seen = set()
        result = []
        for start in range(1, self.degree + 1):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            nxt = self.sigma[start - 1]
            while nxt != start:
                cycle.append(nxt)
                seen.add(nxt)
                nxt = self.sigma[nxt - 1]
            if len(cycle) > 1 or include_fixed:
                result.append(tuple(cycle))
        return result

    def cycle_type(self) -> Tuple[int, ...]:
        return tuple(sorted(len(c) for c in self.cycles(include_fixed=True)))

    def cycle_type_label(self) -> str:
        """Cycle type in exponent notation, e.g. '1^1 7^1'."""
        counts = Counter(self.cycle_type())
        return " ".join(f"{length}^{counts[length]}" for length in sorted(counts))

    @property
    def parity(self) -> int:
        return -1 if (self.degree - len(self.cycles(include_fixed=True))) % 2 else 1

    @property
    def determinant(self) -> int:
        return self.parity * math.prod(self.eta)

    def in_special_orthogonal(self) -> bool:
        return self.determinant == 1

    def order(self) -> int:
        m = 1
        for c in self.cycles():
            m = math.lcm(m, len(c))
        return m if (self ** m).is_identity else 2 * m

    def cycle_notation(self) -> str:
        body = "".join("(" + " ".join(str(i) for i in c) + ")" for c in self.cycles())
        body = body or "()"
        if self.is_pure:
            return body
        signs = "".join("+" if e == 1 else "-" for e in self.eta)
        return f"{body}[{signs}]"

    def to_dict(self) -> Dict[str, object]:
        return {"cycles": self.cycle_notation(), "sigma": list(self.sigma), "eta": list(self.eta)}

    def __repr__(self) -> str:
        return f"SignedPermutation({self.cycle_notation()})"


# ============================================================================
# Action on forms
# ============================================================================

class ElementClass(str, Enum):
    SYMMETRY = "symmetry"
    ANTISYMMETRY = "antisymmetry"
    NEITHER = "neither"


def act(g: SignedPermutation, f: SpecialForm) -> SpecialForm:
    """
    Apply a signed permutation to a form.

    Raises:
        DimensionError: If g and f have different dimensions
    """
    if g.degree != f.dim:
        raise DimensionError(f"Element of degree {g.degree} cannot act on a form in {f.dim} dimensions")
    inv = [0] * (f.dim + 1)
    for i, s in enumerate(g.sigma, start=1):
        inv[s] = i
    out = {}
    for t, c in f.items():
        u = tuple(inv[i] for i in t)
        eta_u = math.prod(g.eta[i - 1] for i in u)
        key, value = normalize_component(u, eta_u * c)
        out[key] = value
    return SpecialForm(f.dim, f.degree, out)


def classify_element(g: SignedPermutation, f: SpecialForm) -> ElementClass:
    image = act(g, f)
    if image == f:
        return ElementClass.SYMMETRY
    if image == -f:
        return ElementClass.ANTISYMMETRY
    return ElementClass.NEITHER


# ============================================================================
# Groups given by generators
# ============================================================================

def close_group(
    generators: Sequence[SignedPermutation],
    max_order: Optional[int] = None,
    degree: Optional[int] = None,
) -> Set[SignedPermutation]:
    """
    Breadth-first closure of a generating set under multiplication.

    Raises:
        SearchBoundError: If the group exceeds max_order elements
    """
    if max_order is None:
        max_order = SearchConfig().max_group_order
    gens = list(generators)
    if not gens:
        if degree is None:
            raise ValueError("degree is required for an empty generating set")
        return {SignedPermutation.identity(degree)}

    identity = SignedPermutation.identity(gens[0].degree)
    elements = {identity}
    boundary = [identity]
    while boundary:
        next_boundary = []
        for a in gens:
            for b in boundary:
                c = a * b
                if c not in elements:
                    elements.add(c)
                    next_boundary.append(c)
                    if len(elements) > max_order:
                        raise SearchBoundError(
                            f"Group closure exceeded {max_order} elements",
                            bound_name="max_group_order",
                            bound=max_order,
                        )
        boundary = next_boundary
    return elements


def commutator(a: SignedPermutation, b: SignedPermutation) -> SignedPermutation:
    """b^-1 a^-1 b a."""
    return b.inverse() * a.inverse() * b * a


def commutator_subgroup(
    generators: Sequence[SignedPermutation],
    max_order: Optional[int] = None,
) -> Set[SignedPermutation]:
    """
    Derived subgroup of the group generated by `generators`.

    Starts from the commutators of the generators and takes the normal
    closure under conjugation by the generators.
    """
    gens = list(generators)
    if not gens:
        raise ValueError("commutator_subgroup needs at least one generator")
    d = gens[0].degree
    h_gens = []
    for a in gens:
        for b in gens:
            c = commutator(a, b)
            if not c.is_identity and c not in h_gens:
                h_gens.append(c)
    elements = close_group(h_gens, max_order, degree=d)

    changed = True
    while changed:
        changed = False
        for h in list(h_gens):
            for g in gens:
                conj = g.inverse() * h * g
                if conj not in elements:
                    h_gens.append(conj)
                    elements = close_group(h_gens, max_order, degree=d)
                    changed = True
    return elements


def small_generating_set(elements: Iterable[SignedPermutation]) -> List[SignedPermutation]:
    """
    Greedy generating set: repeatedly add the highest-order element not yet generated.
    """
    group = set(elements)
    if not group:
        return []
    candidates = sorted(group, key=lambda g: (-g.order(), g))
    gens: List[SignedPermutation] = []
    generated = {SignedPermutation.identity(next(iter(group)).degree)}
    for g in candidates:
        if len(generated) == len(group):
            break
        if g not in generated:
            gens.append(g)
            generated = close_group(gens, max_order=len(group))
    return gens


def orbits(elements: Iterable[SignedPermutation], d: int) -> List[FrozenSet[int]]:
    """Orbits of the index set 1..d under the sigma parts of the elements."""
    parent = list(range(d + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in elements:
        for i, s in enumerate(g.sigma, start=1):
            ri, rs = find(i), find(s)
            if ri != rs:
                parent[max(ri, rs)] = min(ri, rs)

    groups: Dict[int, Set[int]] = {}
    for i in range(1, d + 1):
        groups.setdefault(find(i), set()).add(i)
    return [frozenset(groups[k]) for k in sorted(groups)]


def is_transitive(elements: Iterable[SignedPermutation], d: int) -> bool:
    return len(orbits(elements, d)) <= 1


def cycle_type_histogram(elements: Iterable[SignedPermutation]) -> Dict[str, int]:
    counts = Counter(g.cycle_type_label() for g in elements)
    return dict(sorted(counts.items()))


def component_stabilizer(
    elements: Iterable[SignedPermutation],
    indices: Sequence[int],
) -> List[SignedPermutation]:
    """Elements mapping the index set to itself (set-wise)."""
    target = frozenset(indices)
    return sorted(g for g in elements if frozenset(g.sigma[i - 1] for i in target) == target)


# ============================================================================
# Support automorphisms (permutation backtracking)
# ============================================================================

class _SupportStructure:
    """Incidence data of a form's support used to prune the permutation search."""

    def __init__(self, f: SpecialForm):
        self.form = f
        self.d = f.dim
        self.by_set: Dict[FrozenSet[int], Tuple[IndexTuple, int]] = {
            frozenset(s): (s, c) for s, c in f.items()
        }
        self.degree = [0] * (self.d + 1)
        self.signature: List[Tuple[int, ...]] = [()] * (self.d + 1)
        self.co = [[0] * (self.d + 1) for _ in range(self.d + 1)]
        magnitudes: Dict[int, List[int]] = {i: [] for i in range(1, self.d + 1)}
        for s, c in f.items():
            for i in s:
                self.degree[i] += 1
                magnitudes[i].append(abs(c))
            for a in s:
                for b in s:
                    if a != b:
                        self.co[a][b] += 1
        for i in range(1, self.d + 1):
            self.signature[i] = (self.degree[i],) + tuple(sorted(magnitudes[i]))
        self.order = self._assignment_order()
        position = {v: k for k, v in enumerate(self.order)}
        # supports become fully assigned at the step of their last index
        self.completed_at: List[List[Tuple[IndexTuple, int]]] = [[] for _ in self.order]
        for s, c in f.items():
            if s:
                step = max(position[i] for i in s)
                self.completed_at[step].append((s, c))

    def _assignment_order(self) -> List[int]:
        remaining = set(range(1, self.d + 1))
        order: List[int] = []
        while remaining:
            best = max(
                remaining,
                key=lambda i: (sum(self.co[i][j] for j in order), self.degree[i], -i),
            )
            order.append(best)
            remaining.remove(best)
        return order

    def automorphisms(self, max_count: int) -> Iterator[Tuple[int, ...]]:
        """All sigma mapping the support onto itself with matching magnitudes."""
        d = self.d
        image = [0] * (d + 1)
        used = [False] * (d + 1)
        found = 0

        def consistent(step: int, i: int, j: int) -> bool:
            if self.signature[i] != self.signature[j]:
                return False
            for prev in self.order[:step]:
                if self.co[i][prev] != self.co[j][image[prev]]:
                    return False
            image[i] = j
            for s, c in self.completed_at[step]:
                target = self.by_set.get(frozenset(image[k] for k in s))
                if target is None or abs(target[1]) != abs(c):
                    return False
            return True

        def search(step: int) -> Iterator[Tuple[int, ...]]:
            nonlocal found
            if step == d:
                found += 1
                if found > max_count:
                    raise SearchBoundError(
                        f"More than {max_count} support automorphisms",
                        bound_name="max_group_order",
                        bound=max_count,
                    )
                yield tuple(image[1:])
                return
            i = self.order[step]
            for j in range(1, d + 1):
                if used[j]:
                    continue
                if consistent(step, i, j):
                    used[j] = True
                    yield from search(step + 1)
                    used[j] = False
                image[i] = 0

        yield from search(0)

    def kappa(self, sigma: Tuple[int, ...]) -> Optional[int]:
        """kappa with act(sigma, f) = kappa f for a pure permutation, or None."""
        kappa = None
        for s, c in self.form.items():
            key, sign = normalize_component(tuple(sigma[i - 1] for i in s), 1)
            ratio = sign * self.by_set[frozenset(key)][1]
            if ratio == c:
                k = 1
            elif ratio == -c:
                k = -1
            else:
                return None
            if kappa is None:
                kappa = k
            elif kappa != k:
                return None
        return kappa if kappa is not None else 1


def _check_dimension(f: SpecialForm, config: SearchConfig) -> None:
    if f.dim > config.max_dimension:
        raise SearchBoundError(
            f"Dimension {f.dim} exceeds the search bound {config.max_dimension}",
            bound_name="max_dimension",
            bound=config.max_dimension,
        )


def support_automorphisms(f: SpecialForm, config: Optional[SearchConfig] = None) -> List[Tuple[int, ...]]:
    """All sigma permuting the support of f onto itself, preserving coefficient magnitudes."""
    config = config or SearchConfig()
    _check_dimension(f, config)
    structure = _SupportStructure(f)
    return sorted(structure.automorphisms(config.max_group_order))


# ============================================================================
# Permutation census
# ============================================================================

@dataclass
class PermutationCensus:
    """
    Pure permutation symmetries and antisymmetries of a form.

    Attributes:
        dim: Ambient dimension
        symmetries: The group G_r, sorted
        antisymmetries: The antisymmetry coset (possibly empty), sorted
    """
    dim: int
    symmetries: List[SignedPermutation]
    antisymmetries: List[SignedPermutation]

    @property
    def bisymmetries(self) -> List[SignedPermutation]:
        return sorted(self.symmetries + self.antisymmetries)

    @property
    def symmetry_order(self) -> int:
        return len(self.symmetries)

    @property
    def antisymmetry_count(self) -> int:
        return len(self.antisymmetries)

    def cycle_type_histogram(self) -> Dict[str, int]:
        return cycle_type_histogram(self.symmetries)

    def generators(self) -> List[SignedPermutation]:
        return small_generating_set(self.symmetries)

    def bisymmetry_generators(self) -> List[SignedPermutation]:
        return small_generating_set(self.bisymmetries)

    def least_antisymmetry(self) -> Optional[SignedPermutation]:
        return self.antisymmetries[0] if self.antisymmetries else None

    def is_transitive(self) -> bool:
        return is_transitive(self.bisymmetries, self.dim)

    def to_dict(self) -> Dict[str, object]:
        return {
            "symmetry_order": self.symmetry_order,
            "antisymmetry_count": self.antisymmetry_count,
            "generators": [g.cycle_notation() for g in self.generators()],
            "least_antisymmetry": (
                self.antisymmetries[0].cycle_notation() if self.antisymmetries else None
            ),
            "cycle_types": self.cycle_type_histogram(),
        }


def enumerate_permutation_census(f: SpecialForm, config: Optional[SearchConfig] = None) -> PermutationCensus:
    """
    Every sigma in S_d with act(sigma, f) = +f or -f.

    Raises:
        SearchBoundError: If f.dim exceeds the dimension bound or the search
            finds more support automorphisms than the group bound allows
    """
    config = config or SearchConfig()
    _check_dimension(f, config)
    with trace_operation("census.permutation", {"dim": f.dim, "weight": f.weight}):
        structure = _SupportStructure(f)
        symmetries, antisymmetries = [], []
        for sigma in structure.automorphisms(config.max_group_order):
            kappa = structure.kappa(sigma)
            g = SignedPermutation.from_images(sigma)
            if kappa == 1:
                symmetries.append(g)
            elif kappa == -1:
                antisymmetries.append(g)
        logger.debug(
            f"Permutation census in d={f.dim}: {len(symmetries)} symmetries, "
            f"{len(antisymmetries)} antisymmetries"
        )
        return PermutationCensus(f.dim, sorted(symmetries), sorted(antisymmetries))


# ============================================================================
# Orthogonal census (signs as a GF(2) system)
# ============================================================================

def _parity(x: int) -> int:
    return bin(x).count("1") & 1


class _SignSystem:
    """
    The linear system sum_{i in s} x_i = b_s over GF(2), one row per support s.

    Variable x_i is bit i-1 and eta_i = (-1)^{x_i}. The coefficient matrix only
    depends on the support, so elimination is done once and each right-hand
    side (a bitmask over supports) is solved by replaying the row combinations.
    """

    def __init__(self, supports: Sequence[IndexTuple], d: int):
        self.d = d
        self.pivots: Dict[int, Tuple[int, int]] = {}
        self.dependencies: List[int] = []
        for k, s in enumerate(supports):
            mask = 0
            for i in s:
                mask |= 1 << (i - 1)
            combo = 1 << k
            while mask:
                low = mask & -mask
                if low not in self.pivots:
                    break
                pmask, pcombo = self.pivots[low]
                mask ^= pmask
                combo ^= pcombo
            if mask:
                self.pivots[mask & -mask] = (mask, combo)
            else:
                self.dependencies.append(combo)
        self.rank = len(self.pivots)
        self.kernel = self._kernel_basis()

    def _back_substitute(self, x: int, rhs_of) -> int:
        for low in sorted(self.pivots, reverse=True):
            mask, combo = self.pivots[low]
            if _parity(mask & x & ~low) ^ rhs_of(combo):
                x |= low
        return x

    def _kernel_basis(self) -> List[int]:
        basis = []
        for i in range(self.d):
            bit = 1 << i
            if bit in self.pivots:
                continue
            basis.append(self._back_substitute(bit, lambda combo: 0))
        return basis

    def solve(self, rhs: int) -> Optional[int]:
        """Particular solution with free variables 0, or None if inconsistent."""
        for dep in self.dependencies:
            if _parity(dep & rhs):
                return None
        return self._back_substitute(0, lambda combo: _parity(combo & rhs))

    @property
    def kernel_flips_first(self) -> bool:
        return any(v & 1 for v in self.kernel)

    def solutions(self, particular: int) -> Iterator[int]:
        for choice in range(1 << len(self.kernel)):
            x = particular
            for k, v in enumerate(self.kernel):
                if choice >> k & 1:
                    x ^= v
            yield x


def _eta_from_bits(x: int, d: int) -> Tuple[int, ...]:
    return tuple(-1 if x >> i & 1 else 1 for i in range(d))


@dataclass
class OrthogonalCensus:
    """
    Signed-permutation symmetries of a form.

    The full counts are over S_d x| Z_2^d. The projective counts keep only
    elements with eta_1 = +1, i.e. one representative of each pair {g, -g}.

    Attributes:
        dim: Ambient dimension
        symmetries_full / antisymmetries_full: Counts over the full group
        symmetries_projective / antisymmetries_projective: Counts with eta_1 = +1
        sign_kernel_dimension: Dimension of the pure-sign stabilizer over GF(2)
        sigma_projection: Every sigma admitting some eta with act = +f or -f
        symmetries / antisymmetries: The elements, when materialized
    """
    dim: int
    symmetries_full: int
    antisymmetries_full: int
    symmetries_projective: int
    antisymmetries_projective: int
    sign_kernel_dimension: int
    sigma_projection: List[SignedPermutation]
    symmetries: Optional[List[SignedPermutation]] = None
    antisymmetries: Optional[List[SignedPermutation]] = None

    @property
    def materialized(self) -> bool:
        return self.symmetries is not None

    def projection_is_transitive(self) -> bool:
        return is_transitive(self.sigma_projection, self.dim)

    def projection_commutator(self, max_order: Optional[int] = None) -> Set[SignedPermutation]:
        """Derived subgroup of the group of sigma-parts."""
        gens = small_generating_set(self.sigma_projection)
        if not gens:
            return {SignedPermutation.identity(self.dim)}
        return commutator_subgroup(gens, max_order)

    def to_dict(self) -> Dict[str, object]:
        data: Dict[str, object] = {
            "symmetries_full": self.symmetries_full,
            "antisymmetries_full": self.antisymmetries_full,
            "symmetries_projective": self.symmetries_projective,
            "antisymmetries_projective": self.antisymmetries_projective,
            "sign_kernel_dimension": self.sign_kernel_dimension,
            "sigma_projection_order": len(self.sigma_projection),
            "materialized": self.materialized,
        }
        if self.symmetries:
            data["generators"] = [g.cycle_notation() for g in small_generating_set(self.symmetries)]
        return data


def enumerate_orthogonal_census(f: SpecialForm, config: Optional[SearchConfig] = None) -> OrthogonalCensus:
    """
    Count (and, below the materialization limit, list) every signed permutation
    with act(g, f) = +f or -f.

    Raises:
        SearchBoundError: If the dimension or the automorphism count exceeds its bound
    """
    config = config or SearchConfig()
    _check_dimension(f, config)
    d = f.dim

    with trace_operation("census.orthogonal", {"dim": d, "weight": f.weight}):
        structure = _SupportStructure(f)
        supports = list(f.components)
        system = _SignSystem(supports, d)
        free = d - system.rank
        flips_first = system.kernel_flips_first

        found: Dict[int, List[Tuple[Tuple[int, ...], int]]] = {1: [], -1: []}
        full = {1: 0, -1: 0}
        projective = {1: 0, -1: 0}
        projection: List[SignedPermutation] = []
        automorphism_count = 0

        for sigma in structure.automorphisms(config.max_group_order):
            automorphism_count += 1
            ratios = []
            for s in supports:
                c = f.components[s]
                key, sign = normalize_component(tuple(sigma[i - 1] for i in s), 1)
                ratios.append(c * sign * f.components[key])
            admitted = False
            for kappa in (1, -1):
                rhs = 0
                for k, r in enumerate(ratios):
                    if kappa * r < 0:
                        rhs |= 1 << k
                particular = system.solve(rhs)
                if particular is None:
                    continue
                admitted = True
                found[kappa].append((sigma, particular))
                full[kappa] += 1 << free
                if flips_first:
                    projective[kappa] += 1 << (free - 1)
                elif not particular & 1:
                    projective[kappa] += 1 << free
            if admitted:
                projection.append(SignedPermutation.from_images(sigma))

        census = OrthogonalCensus(
            dim=d,
            symmetries_full=full[1],
            antisymmetries_full=full[-1],
            symmetries_projective=projective[1],
            antisymmetries_projective=projective[-1],
            sign_kernel_dimension=free,
            sigma_projection=sorted(projection),
        )

        if full[1] + full[-1] <= config.materialize_limit:
            lists = {}
            for kappa in (1, -1):
                lists[kappa] = sorted(
                    SignedPermutation(sigma, _eta_from_bits(x, d))
                    for sigma, particular in found[kappa]
                    for x in system.solutions(particular)
                )
            census.symmetries = lists[1]
            census.antisymmetries = lists[-1]

        record_metric("census.automorphisms", automorphism_count, {"dim": str(d)})
        logger.info(
            f"Orthogonal census in d={d}: {full[1]} symmetries, {full[-1]} antisymmetries "
            f"({automorphism_count} support automorphisms, sign kernel 2^{free})"
        )
        return census


@dataclass
class SymmetryCensus:
    """Permutation and orthogonal censuses of one form."""
    permutation: PermutationCensus
    orthogonal: Optional[OrthogonalCensus] = None

    def to_dict(self) -> Dict[str, object]:
        data = {"permutation": self.permutation.to_dict()}
        if self.orthogonal is not None:
            data["orthogonal"] = self.orthogonal.to_dict()
        return data


def symmetry_census(
    f: SpecialForm,
    orthogonal: bool = True,
    config: Optional[SearchConfig] = None,
) -> SymmetryCensus:
    perm = enumerate_permutation_census(f, config)
    orth = enumerate_orthogonal_census(f, config) if orthogonal else None
    return SymmetryCensus(perm, orth)


def exhaustive_census(f: SpecialForm, max_dim: int = 6) -> Dict[str, int]:
    """
    Brute-force classification of every element of S_d x| Z_2^d.

    Only for small d; used as an oracle for the pruned searches.
    """
    if f.dim > max_dim:
        raise SearchBoundError(
            f"Exhaustive census refused for d={f.dim} > {max_dim}",
            bound_name="exhaustive_dimension",
            bound=max_dim,
        )
    counts = Counter()
    for sigma in permutations(range(1, f.dim + 1)):
        for eta in product((1, -1), repeat=f.dim):
            g = SignedPermutation(sigma, eta)
            kind = classify_element(g, f)
            if kind is ElementClass.NEITHER:
                continue
            counts[("orth", kind)] += 1
            if g.is_pure:
                counts[("perm", kind)] += 1
    return {
        "perm_symmetries": counts[("perm", ElementClass.SYMMETRY)],
        "perm_antisymmetries": counts[("perm", ElementClass.ANTISYMMETRY)],
        "orth_symmetries": counts[("orth", ElementClass.SYMMETRY)],
        "orth_antisymmetries": counts[("orth", ElementClass.ANTISYMMETRY)],
    }


# ============================================================================
# Stability group and democracy
# ============================================================================

@dataclass
class StabilityGroup:
    """Symmetries fixing every support set up to an even permutation."""
    elements: List[SignedPermutation] = field(default_factory=list)

    @property
    def order(self) -> int:
        return len(self.elements)


def stability_group(f: SpecialForm, census: Optional[PermutationCensus] = None) -> StabilityGroup:
    census = census or enumerate_permutation_census(f)
    kept = []
    for g in census.symmetries:
        ok = True
        for s in f.components:
            image = tuple(g.sigma[i - 1] for i in s)
            if frozenset(image) != frozenset(s) or permutation_sign(image) != 1:
                ok = False
                break
        if ok:
            kept.append(g)
    return StabilityGroup(kept)


def permutation_democratic(
    f: SpecialForm,
    census: Optional[SymmetryCensus] = None,
    config: Optional[SearchConfig] = None,
) -> bool:
    """The permutation bisymmetry group acts transitively on 1..d."""
    perm = census.permutation if census else enumerate_permutation_census(f, config)
    return perm.is_transitive()


def orthogonally_democratic(
    f: SpecialForm,
    census: Optional[SymmetryCensus] = None,
    config: Optional[SearchConfig] = None,
) -> bool:
    """
    The sigma-parts of the orthogonal bisymmetries act transitively on 1..d.

    Weaker than permutation democracy: D3, D4, D5 and F1 to F4 among the
    2-forms in four dimensions only satisfy this one.
    """
    orth = census.orthogonal if census and census.orthogonal else None
    if orth is None:
        orth = enumerate_orthogonal_census(f, config)
    return orth.projection_is_transitive()


def democracy(
    f: SpecialForm,
    census: Optional[SymmetryCensus] = None,
    config: Optional[SearchConfig] = None,
) -> Optional[str]:
    """
    Which notion holds: "permutation", "orthogonal" or None.

    Permutation democracy is tried first; the orthogonal census is only
    computed when it fails.
    """
    if permutation_democratic(f, census, config):
        return "permutation"
    if orthogonally_democratic(f, census, config):
        return "orthogonal"
    return None


def is_democratic(f: SpecialForm, census: Optional[SymmetryCensus] = None) -> bool:
    return democracy(f, census) is not None


# ============================================================================
# Presentations
# ============================================================================

def expand_presentation(
    seeds: Sequence[Tuple[Sequence[int], int]],
    generators: Sequence[SignedPermutation],
    dim: Optional[int] = None,
    max_order: Optional[int] = None,
) -> SpecialForm:
    """
    Regenerate a form from seed components and the generators of a group H.

    Every g in H contributes Phi[sigma(s)] = eta_s * v for each seed (s, v).
    Two contributions to the same support must agree.

    Raises:
        IncompatiblePresentationError: On a sign or value conflict
        SearchBoundError: If H exceeds max_order
    """
    if not seeds:
        raise ValueError("A presentation needs at least one seed component")
    if dim is None:
        if not generators:
            raise ValueError("dim is required when no generators are given")
        dim = generators[0].degree
    degree = len(seeds[0][0])

    group = sorted(close_group(generators, max_order, degree=dim))
    components: Dict[IndexTuple, int] = {}
    provenance: Dict[IndexTuple, str] = {}

    for indices, value in seeds:
        indices = tuple(indices)
        if len(indices) != degree:
            raise ValueError(f"Seed {indices} does not have degree {degree}")
        for g in group:
            image = tuple(g.sigma[i - 1] for i in indices)
            eta_s = math.prod(g.eta[i - 1] for i in indices)
            key, v = normalize_component(image, eta_s * value)
            origin = f"seed {indices} via {g.cycle_notation()}"
            if key in components and components[key] != v:
                raise IncompatiblePresentationError(
                    f"Conflicting values {components[key]} and {v} on {key}: "
                    f"{provenance[key]} vs {origin}",
                    support=key,
                    provenances=[provenance[key], origin],
                )
            if key not in components:
                components[key] = v
                provenance[key] = origin

    return SpecialForm(dim, degree, components)
