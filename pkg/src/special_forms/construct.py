"""
Building special forms from smaller ones, and the catalog of named forms.

A form phi of degree p in d dimensions is embedded into a form of degree
P = p + b in D dimensions by choosing b appended index slots and a group H of
(signed) permutations of 1..D:

    Phi[Sigma(i_1), ..., Sigma(i_p), Sigma(s_1), ..., Sigma(s_b)] = phi[i_1, ..., i_p]

for every Sigma in H. Every collision on an unordered support must carry the
same signed value, and the components of Phi through the slots must give phi
back. b = 0 with D > d embeds phi without new slots; d = D, b = 0 is a plain
presentation.

The catalog holds every named form: volume forms, Kahler forms, the octonionic
3-form and the Spin(7) 4-form, the 10-dimensional 6-form built by the Z_5
lift, the SU(4) x U(1) family obtained from complex coordinates, and the
Z_6 lift to 12 dimensions.
"""

import logging
import math
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, product
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from sympy.polys.domains.gaussiandomains import GaussianInteger

from .config_loader import SearchConfig
from .errors import (
    CatalogError,
    DimensionError,
    IncompatibleEmbeddingError,
    IncompatiblePresentationError,
    NormalizationError,
)
from .exterior import (
    IndexTuple,
    SpecialForm,
    hodge_star,
    normalize_component,
    permutation_sign,
    volume_form,
)
from .symmetry import (
    SignedPermutation,
    close_group,
    component_stabilizer,
    expand_presentation,
)
from .telemetry import trace_operation

logger = logging.getLogger(__name__)


# ============================================================================
# Named generator sets
# ============================================================================

NAMED_GENERATORS: Dict[str, Tuple[int, Tuple[str, ...]]] = {
    # symmetries of the octonionic 3-form
    "G21": (7, ("(1 2 5 4 6 7 3)", "(1 3 5)(2 4 6)(7)")),
    "H7": (7, ("(1254673)",)),
    "H7_fix1": (7, ("(1)(2 6 5)(3 4 7)",)),
    "H7_fix2": (7, ("(2)(1 3 6)(4 7 5)",)),
    # symmetries of the Spin(7) 4-form
    "G168": (8, ("(1 2)(3 6 7 4 5 8)", "(8)(1 2 5 4 6 7 3)")),
    "H6": (8, ("(1 2)(3 6 7 4 5 8)",)),
    "H8": (8, ("(1 2)(3 4)(5 6)(7 8)", "(1 3)(2 4)(5 7)(6 8)", "(1 5)(2 6)(3 7)(4 8)")),
    "H12": (8, ("(1 2)(3 4)(5 6)(7 8)", "(1)(6)(2 3 4)(5 8 7)")),
    "H21": (8, ("(3)(1264758)", "(1)(6)(234)(587)")),
    "s28": (8, ("(1 2)(3 4)(5 6)(7 8)",)),
    "s38": (8, ("(3 5 7)(4 6 8)",)),
    "rho1": (8, ("(1 8)(2 7)(3 6)(4 5)",)),
    "rho2": (8, ("(1 4)(2 3)(5 8)(6 7)",)),
    "shift8": (8, ("(1 3 5 7)(2 4 6 8)",)),
    # the cyclic lifts
    "Z5": (10, ("(1 3 5 7 9)(2 4 6 8 10)",)),
    "tau10": (10, ("(1 2)(10 3)(9 4)(8 5)(7 6)",)),
    "Z6": (12, ("(1 3 5 7 9 11)(2 4 6 8 10 12)",)),
}


def named_generators(name: str) -> List[SignedPermutation]:
    """
    Generators of a named group, as pure signed permutations.

    Raises:
        CatalogError: If the name is unknown
    """
    if name not in NAMED_GENERATORS:
        raise CatalogError(
            f"Unknown generator set '{name}'. Known: {', '.join(sorted(NAMED_GENERATORS))}"
        )
    d, cycles = NAMED_GENERATORS[name]
    return [SignedPermutation.parse(text, d) for text in cycles]


def pair_shift(d: int) -> SignedPermutation:
    """(1 3 5 ... d-1)(2 4 6 ... d): rotates the coordinate planes {1,2}, {3,4}, ..."""
    if d % 2 or d < 2:
        raise DimensionError(f"The pair shift needs an even dimension, got {d}")
    return SignedPermutation.from_cycles(d, [range(1, d, 2), range(2, d + 1, 2)])


# ============================================================================
# Embeddings
# ============================================================================

@dataclass
class EmbeddingSpec:
    """
    Data of one embedding phi (degree p, dimension d) -> Phi (degree P, dimension D).

    Attributes:
        source_dim: d
        target_dim: D
        source_degree: p
        target_degree: P
        appended: The P - p slot indices, each in d+1..D
        generators: Generators of H acting on 1..D
    """
    source_dim: int
    target_dim: int
    source_degree: int
    target_degree: int
    appended: Tuple[int, ...] = ()
    generators: List[SignedPermutation] = field(default_factory=list)

    def __post_init__(self):
        self.appended = tuple(self.appended)
        b = self.target_degree - self.source_degree
        a = self.target_dim - self.source_dim
        if not 0 <= b <= a:
            raise DimensionError(
                f"Embedding needs 0 <= P-p <= D-d, got P-p={b}, D-d={a}"
            )
        if len(self.appended) != b:
            raise DimensionError(f"Expected {b} appended slots, got {self.appended}")
        if len(set(self.appended)) != b or any(
            not self.source_dim < s <= self.target_dim for s in self.appended
        ):
            raise DimensionError(
                f"Appended slots {self.appended} must be distinct and lie in "
                f"{self.source_dim + 1}..{self.target_dim}"
            )
        for g in self.generators:
            if g.degree != self.target_dim:
                raise DimensionError(
                    f"Generator {g.cycle_notation()} acts on {g.degree} indices, expected {self.target_dim}"
                )

    @classmethod
    def for_form(
        cls,
        phi: SpecialForm,
        target_dim: int,
        appended: Sequence[int] = (),
        generators: Sequence[SignedPermutation] = (),
    ) -> "EmbeddingSpec":
        return cls(
            source_dim=phi.dim,
            target_dim=target_dim,
            source_degree=phi.degree,
            target_degree=phi.degree + len(appended),
            appended=tuple(appended),
            generators=list(generators),
        )


def _check_source(phi: SpecialForm, spec: EmbeddingSpec) -> None:
    if (phi.dim, phi.degree) != (spec.source_dim, spec.source_degree):
        raise DimensionError(
            f"Embedding expects a {spec.source_degree}-form in {spec.source_dim} dimensions, "
            f"got a {phi.degree}-form in {phi.dim}"
        )


def recovered_source(Phi: SpecialForm, spec: EmbeddingSpec) -> SpecialForm:
    """
    Components of Phi through the appended slots whose other indices lie in 1..d.

    Phi[i_1..i_p, slots] is read as a p-form in d dimensions.
    """
    slots = spec.appended
    rest_size = spec.source_degree
    out = {}
    for s, _ in Phi.items():
        if not set(slots).issubset(s):
            continue
        rest = tuple(i for i in s if i not in slots)
        if len(rest) == rest_size and all(i <= spec.source_dim for i in rest):
            out[rest] = Phi.coefficient(rest + slots)
    return SpecialForm(spec.source_dim, spec.source_degree, out)


def extend(
    phi: SpecialForm,
    spec: EmbeddingSpec,
    config: Optional[SearchConfig] = None,
) -> SpecialForm:
    """
    Embed phi into a form of degree P in D dimensions.

    Raises:
        IncompatibleEmbeddingError: If two group elements disagree on a support,
            or the slot components of the result do not reproduce phi
        SearchBoundError: If the generated group is too large
    """
    config = config or SearchConfig()
    _check_source(phi, spec)
    seeds = [(s + spec.appended, c) for s, c in phi.items()]
    if not seeds:
        return SpecialForm(spec.target_dim, spec.target_degree, {})

    with trace_operation("construct.extend", {"source": f"{phi.degree}/{phi.dim}",
                                              "target": f"{spec.target_degree}/{spec.target_dim}"}):
        try:
            Phi = expand_presentation(
                seeds,
                spec.generators,
                dim=spec.target_dim,
                max_order=config.max_group_order,
            )
        except IncompatiblePresentationError as e:
            raise IncompatibleEmbeddingError(
                str(e), support=e.support, provenances=e.provenances
            ) from e

        back = recovered_source(Phi, spec)
        if back != phi:
            extra = sorted(set(back.components) ^ set(phi.components))
            raise IncompatibleEmbeddingError(
                f"Extended form does not restrict back to the source "
                f"({back.weight} slot components against {phi.weight}; first differing support "
                f"{extra[0] if extra else 'value mismatch'})",
                support=extra[0] if extra else None,
            )

        logger.debug(f"Extended a {phi.weight}-component form to {Phi.weight} components")
        return Phi


def lift_piece(phi: SpecialForm, spec: EmbeddingSpec, power: int) -> SpecialForm:
    """
    The single piece Sigma^power of a cyclic lift, Sigma = spec.generators[0].
    """
    _check_source(phi, spec)
    if len(spec.generators) != 1:
        raise ValueError("lift_piece needs exactly one (cyclic) generator")
    g = spec.generators[0] ** power
    out: Dict[IndexTuple, int] = {}
    for s, c in phi.items():
        seed = s + spec.appended
        image = tuple(g.sigma[i - 1] for i in seed)
        eta = math.prod(g.eta[i - 1] for i in seed)
        key, value = normalize_component(image, eta * c)
        out[key] = value
    return SpecialForm(spec.target_dim, spec.target_degree, out)


def pieces_compatible(a: SpecialForm, b: SpecialForm) -> bool:
    """True iff a and b carry the same value on every support they share."""
    if (a.dim, a.degree) != (b.dim, b.degree):
        return False
    shared = set(a.components) & set(b.components)
    return all(a.components[s] == b.components[s] for s in shared)


@dataclass
class CosetGeneration:
    """Result of regenerating a form from one component and a group."""
    form: SpecialForm
    group_order: int
    stabilizer_order: int

    @property
    def coset_count(self) -> int:
        return self.group_order // self.stabilizer_order


def coset_generation(
    seed: Sequence[int],
    generators: Sequence[SignedPermutation],
    value: int = 1,
    config: Optional[SearchConfig] = None,
) -> CosetGeneration:
    """
    Regenerate a form from a single component under the group G = <generators>.

    The number of components equals the number of cosets of the set-wise
    stabilizer of the seed support.
    """
    config = config or SearchConfig()
    if not generators:
        raise ValueError("coset_generation needs at least one generator")
    d = generators[0].degree
    group = close_group(generators, config.max_group_order)
    stabilizer = component_stabilizer(group, seed)
    form = expand_presentation([(tuple(seed), value)], generators, dim=d,
                               max_order=config.max_group_order)
    return CosetGeneration(form, len(group), len(stabilizer))


# ============================================================================
# Complex coordinates
# ============================================================================

_ComplexVector = Dict[int, GaussianInteger]
_ComplexForm = Dict[IndexTuple, GaussianInteger]

_ZERO = GaussianInteger(0, 0)


def _is_zero(c: GaussianInteger) -> bool:
    return int(c.x) == 0 and int(c.y) == 0


def _conj(c: GaussianInteger) -> GaussianInteger:
    return GaussianInteger(c.x, -c.y)


def z(j: int) -> _ComplexVector:
    """z_j = e_{2j-1} + i e_{2j}."""
    return {2 * j - 1: GaussianInteger(1, 0), 2 * j: GaussianInteger(0, 1)}


def zbar(j: int) -> _ComplexVector:
    return {2 * j - 1: GaussianInteger(1, 0), 2 * j: GaussianInteger(0, -1)}


def vector_sum(*vectors: _ComplexVector) -> _ComplexVector:
    out: _ComplexVector = {}
    for v in vectors:
        for i, c in v.items():
            out[i] = out.get(i, _ZERO) + c
    return {i: c for i, c in out.items() if not _is_zero(c)}


def wedge_vectors(vectors: Sequence[_ComplexVector]) -> _ComplexForm:
    """Expand v_1 ^ ... ^ v_k in the real basis."""
    out: _ComplexForm = {}
    for choice in product(*(sorted(v.items()) for v in vectors)):
        indices = [i for i, _ in choice]
        if len(set(indices)) != len(indices):
            continue
        key, sign = normalize_component(indices, 1)
        coeff = GaussianInteger(sign, 0)
        for _, c in choice:
            coeff = coeff * c
        out[key] = out.get(key, _ZERO) + coeff
    return {k: c for k, c in out.items() if not _is_zero(c)}


def _combine(terms: Sequence[Tuple[int, _ComplexForm]]) -> _ComplexForm:
    out: _ComplexForm = {}
    for sign, form in terms:
        for k, c in form.items():
            out[k] = out.get(k, _ZERO) + GaussianInteger(sign, 0) * c
    return {k: c for k, c in out.items() if not _is_zero(c)}


def _epsilon_dual(form: _ComplexForm, dim: int) -> _ComplexForm:
    """eps_{nu mu} W^mu: the complement indices nu come first."""
    full = range(1, dim + 1)
    out: _ComplexForm = {}
    for mu, c in form.items():
        nu = tuple(i for i in full if i not in mu)
        out[nu] = GaussianInteger(permutation_sign(nu + mu), 0) * c
    return out


@dataclass
class ComplexExpansion:
    """
    A complex form split into real forms after a phase normalization.

    The complex coefficients are multiplied by conj(c0) / |c0|^2, where c0 is
    the coefficient of the lexicographically first support.

    Attributes:
        real: Real part after normalization
        imaginary: Imaginary part after normalization
        scale: c0 as (re, im)
    """
    real: SpecialForm
    imaginary: SpecialForm
    scale: Tuple[int, int]


def normalize_complex(form: _ComplexForm, dim: int, degree: int) -> ComplexExpansion:
    """
    Raises:
        NormalizationError: If the form is zero or not divisible by its leading coefficient
    """
    if not form:
        raise NormalizationError("Cannot normalize a zero complex form")
    first = min(form)
    c0 = form[first]
    norm = int(c0.x) ** 2 + int(c0.y) ** 2
    c0_bar = _conj(c0)
    real, imaginary = {}, {}
    for key, c in form.items():
        q = c * c0_bar
        qx, qy = int(q.x), int(q.y)
        if qx % norm or qy % norm:
            raise NormalizationError(
                f"Coefficient {c} on {key} is not a multiple of the leading coefficient {c0}"
            )
        if qx:
            real[key] = qx // norm
        if qy:
            imaginary[key] = qy // norm
    return ComplexExpansion(
        SpecialForm(dim, degree, real),
        SpecialForm(dim, degree, imaginary),
        (int(c0.x), int(c0.y)),
    )


def complex_expansion(
    terms: Sequence[Tuple[int, Sequence[_ComplexVector]]],
    dim: int,
) -> ComplexExpansion:
    """
    Expand eps_{m n ... v_1 ... v_k} summed over signed terms, then normalize.

    Args:
        terms: (sign, [v_1, ..., v_k]) pairs of complex frame vectors
        dim: Real dimension
    """
    k = len(terms[0][1])
    total = _combine([(sign, wedge_vectors(vectors)) for sign, vectors in terms])
    return normalize_complex(_epsilon_dual(total, dim), dim, dim - k)


def _require_special(f: SpecialForm, label: str) -> SpecialForm:
    if not f.components or not f.is_special:
        raise NormalizationError(
            f"Complex pattern {label} did not reduce to a special form "
            f"(coefficients {sorted(set(f.components.values()))})"
        )
    return f


def _pattern_a(planes: int, size: int) -> List[Tuple[int, List[_ComplexVector]]]:
    terms = []
    for chosen in combinations(range(1, planes + 1), size):
        vectors = []
        for j in chosen:
            vectors += [z(j), zbar(j)]
        terms.append((1, vectors))
    return terms


def _conjugate_vectors(vectors: Sequence[_ComplexVector]) -> List[_ComplexVector]:
    return [{i: _conj(c) for i, c in v.items()} for v in vectors]


def _pattern_b_cyclic() -> List[Tuple[int, List[_ComplexVector]]]:
    # z1 zb1 z2 zb2 (z3 zb4 + z4 zb5 + z5 zb3) under the five shifts of the
    # planes, plus the complex conjugate of every term
    terms = []
    for shift in range(5):
        a, b, c, d, e = (1 + (m + shift) % 5 for m in range(5))
        head = [z(a), zbar(a), z(b), zbar(b)]
        for k, l in ((c, d), (d, e), (e, c)):
            vectors = head + [z(k), zbar(l)]
            terms.append((1, vectors))
            terms.append((1, _conjugate_vectors(vectors)))
    return terms


def _pattern_b() -> List[Tuple[int, List[_ComplexVector]]]:
    # every pair of planes {i, j}; mixed terms z_k zb_l - zb_k z_l of the other three
    terms = []
    for i, j in combinations(range(1, 6), 2):
        others = [m for m in range(1, 6) if m not in (i, j)]
        for k, l in combinations(others, 2):
            head = [z(i), zbar(i), z(j), zbar(j)]
            terms.append((1, head + [z(k), zbar(l)]))
            terms.append((-1, head + [zbar(k), z(l)]))
    return terms


def _pattern_cd() -> List[Tuple[int, List[_ComplexVector]]]:
    return [(1, [zbar(j) for j in range(1, 6)] + [vector_sum(*(z(j) for j in range(1, 6)))])]


def complex_expand(pattern: str) -> SpecialForm:
    """
    One of the SU(4) x U(1)-invariant 4-forms in ten dimensions.

    A: sum over triples of planes of eps_{mnpq z_i zb_i z_j zb_j z_k zb_k}
    B: for every pair of planes {i, j}, the mixed terms z_k zb_l of the other
       three planes minus their conjugates (60 components)
    B-cyclic: the head z_1 zb_1 z_2 zb_2 with the mixed cycle
       z_3 zb_4 + z_4 zb_5 + z_5 zb_3, summed over the Z5 shifts of the planes,
       plus the complex conjugate. Only the five adjacent plane pairs occur as
       heads, so the result has 30 components.
    C, D: real and imaginary parts of eps_{mnpq zb_1 ... zb_5 (z_1 + ... + z_5)}

    Raises:
        CatalogError: If the pattern is unknown
        NormalizationError: If the expansion is not special after normalization
    """
    pattern = pattern.upper()
    with trace_operation("construct.complex_expand", {"pattern": pattern}):
        if pattern == "A":
            return _require_special(complex_expansion(_pattern_a(5, 3), 10).real, "A")
        if pattern == "B":
            return _require_special(complex_expansion(_pattern_b(), 10).real, "B")
        if pattern == "B-CYCLIC":
            return _require_special(complex_expansion(_pattern_b_cyclic(), 10).real, pattern)
        if pattern in ("C", "D"):
            expansion = complex_expansion(_pattern_cd(), 10)
            part = expansion.real if pattern == "C" else expansion.imaginary
            return _require_special(part, pattern)
    raise CatalogError(f"Unknown complex pattern '{pattern}'. Known: A, B, B-cyclic, C, D")


# ============================================================================
# Catalog
# ============================================================================

_G2_COMPONENTS = [
    ((1, 2, 7), 1), ((1, 3, 6), -1), ((1, 4, 5), -1), ((2, 3, 5), -1),
    ((2, 4, 6), 1), ((3, 4, 7), 1), ((5, 6, 7), 1),
]

_SPIN7_COMPONENTS = [
    ((1, 2, 3, 4), 1), ((1, 2, 5, 6), 1), ((1, 2, 7, 8), 1), ((1, 3, 5, 7), 1),
    ((2, 4, 6, 8), 1), ((3, 4, 5, 6), 1), ((3, 4, 7, 8), 1), ((5, 6, 7, 8), 1),
    ((1, 3, 6, 8), -1), ((1, 4, 5, 8), -1), ((1, 4, 6, 7), -1), ((2, 3, 5, 8), -1),
    ((2, 3, 6, 7), -1), ((2, 4, 5, 7), -1),
]

_T17_COMPONENTS = [
    ((1, 2, 5, 6), 1), ((2, 4, 5, 7), 1), ((1, 2, 4, 7), 1), ((3, 5, 6, 8), 1),
    ((2, 5, 7, 8), 1), ((3, 4, 5, 6), 1), ((3, 4, 7, 8), 1), ((1, 3, 4, 6), 1),
    ((1, 6, 7, 8), -1), ((2, 3, 5, 6), -1), ((1, 3, 5, 7), -1), ((3, 4, 6, 7), -1),
    ((1, 4, 5, 8), -1), ((2, 3, 4, 7), -1), ((2, 5, 6, 7), -1), ((1, 2, 3, 8), -1),
    ((2, 4, 6, 8), -1),
]


def epsilon(d: int) -> SpecialForm:
    """The volume form e_1...d."""
    return volume_form(d)


def kahler(n: int) -> SpecialForm:
    """omega = e_12 + e_34 + ... + e_{2n-1,2n}."""
    if n < 1:
        raise DimensionError(f"Kahler form needs n >= 1, got {n}")
    return SpecialForm(2 * n, 2, {(2 * j - 1, 2 * j): 1 for j in range(1, n + 1)})


def kahler_power(n: int, k: int) -> SpecialForm:
    """omega^k / k!: one +1 component per k-subset of planes."""
    if not 0 <= k <= n:
        raise DimensionError(f"Power {k} outside 0..{n}")
    out = {}
    for planes in combinations(range(1, n + 1), k):
        out[tuple(i for j in planes for i in (2 * j - 1, 2 * j))] = 1
    return SpecialForm(2 * n, 2 * k, out)


def g2() -> SpecialForm:
    """Structure constants of the imaginary octonions."""
    return SpecialForm.from_entries(7, 3, _G2_COMPONENTS)


def star_g2() -> SpecialForm:
    return hodge_star(g2())


def spin7() -> SpecialForm:
    """The Spin(7)-invariant self-dual 4-form in eight dimensions (14 components)."""
    return SpecialForm.from_entries(8, 4, _SPIN7_COMPONENTS)


def t17() -> SpecialForm:
    """The 17-component 4-form in eight dimensions obtained by contracting omega10 with e_10 ^ e_1."""
    return SpecialForm.from_entries(8, 4, _T17_COMPONENTS)


@lru_cache(maxsize=None)
def su4u1_8d() -> SpecialForm:
    """sum_{i<j<=4} eps_{mnpq z_i zb_i z_j zb_j}: six +1 components."""
    return _require_special(complex_expansion(_pattern_a(4, 2), 8).real, "8d")


def omega10_spec() -> EmbeddingSpec:
    return EmbeddingSpec(8, 10, 4, 6, (9, 10), named_generators("Z5"))


@lru_cache(maxsize=None)
def build_omega10() -> SpecialForm:
    """
    The 6-form in ten dimensions with Omega[sigma^N(m..q), sigma^N(9), sigma^N(10)] = phi[m..q].

    Raises:
        IncompatibleEmbeddingError: If the Z_5 pieces disagree
    """
    omega = extend(spin7(), omega10_spec())
    logger.debug(f"Built the 10-dimensional 6-form with {omega.weight} components")
    return omega


@lru_cache(maxsize=None)
def phi_a() -> SpecialForm:
    return complex_expand("A")


@lru_cache(maxsize=None)
def phi_b() -> SpecialForm:
    return complex_expand("B")


@lru_cache(maxsize=None)
def phi_c() -> SpecialForm:
    return complex_expand("C")


@lru_cache(maxsize=None)
def phi_d() -> SpecialForm:
    return complex_expand("D")


_PHI_BUILDERS: Dict[str, Callable[[], SpecialForm]] = {
    "A": phi_a, "B": phi_b, "C": phi_c, "D": phi_d,
}


def omega_variant(variant: str) -> SpecialForm:
    """Dual 6-form of Phi^A..Phi^D."""
    variant = variant.upper()
    if variant not in _PHI_BUILDERS:
        raise CatalogError(f"Unknown variant '{variant}'. Known: A, B, C, D")
    return hodge_star(_PHI_BUILDERS[variant]())


def psi12_spec() -> EmbeddingSpec:
    return EmbeddingSpec(10, 12, 6, 8, (11, 12), named_generators("Z6"))


@lru_cache(maxsize=None)
def build_psi12(variant: str = "A") -> SpecialForm:
    """
    Z_6-invariant 8-form in twelve dimensions lifted from Omega^A or Omega^B.

    Raises:
        CatalogError: For a variant other than A or B
        IncompatibleEmbeddingError: If the Z_6 pieces disagree
    """
    variant = variant.upper()
    if variant not in ("A", "B"):
        raise CatalogError(f"The 12-dimensional lift exists for A and B only, got '{variant}'")
    return extend(omega_variant(variant), psi12_spec())


def psi12_dual(variant: str = "A") -> SpecialForm:
    return hodge_star(build_psi12(variant))


# name -> (builder, takes an integer argument)
_CATALOG: Dict[str, Tuple[Callable[..., SpecialForm], bool]] = {
    "epsilon": (epsilon, True),
    "kahler": (kahler, True),
    "g2": (g2, False),
    "star_g2": (star_g2, False),
    "spin7": (spin7, False),
    "su4u1_8d": (su4u1_8d, False),
    "omega10": (build_omega10, False),
    "t17": (t17, False),
    "phiA": (phi_a, False),
    "phiB": (phi_b, False),
    "phiC": (phi_c, False),
    "phiD": (phi_d, False),
    "omegaA": (lambda: omega_variant("A"), False),
    "omegaB": (lambda: omega_variant("B"), False),
    "omegaC": (lambda: omega_variant("C"), False),
    "omegaD": (lambda: omega_variant("D"), False),
    "psi12A": (lambda: build_psi12("A"), False),
    "psi12B": (lambda: build_psi12("B"), False),
    "psi12A_dual": (lambda: psi12_dual("A"), False),
    "psi12B_dual": (lambda: psi12_dual("B"), False),
}

# forms written to fixtures/ by default
FIXTURE_NAMES = [
    "epsilon:4", "kahler:3", "g2", "star_g2", "spin7", "su4u1_8d", "omega10",
    "t17", "phiA",
]


def catalog_names() -> List[str]:
    return [f"{name}:N" if takes_arg else name for name, (_, takes_arg) in _CATALOG.items()] + [
        "kahler_power:N,K"
    ]


def catalog(name: str) -> SpecialForm:
    """
    Look up a named form, e.g. "g2", "epsilon:4", "kahler:3", "kahler_power:3,2".

    Raises:
        CatalogError: On an unknown name or a malformed argument
    """
    base, _, arg = name.partition(":")
    if base == "kahler_power":
        try:
            n, k = (int(t) for t in arg.split(","))
        except ValueError:
            raise CatalogError(f"'{name}' needs two integer arguments, e.g. kahler_power:3,2")
        return kahler_power(n, k)

    if base not in _CATALOG:
        raise CatalogError(f"Unknown form '{name}'. Known: {', '.join(catalog_names())}")
    builder, takes_arg = _CATALOG[base]
    if takes_arg:
        try:
            value = int(arg)
        except ValueError:
            raise CatalogError(f"'{base}' needs an integer argument, e.g. {base}:4")
        return builder(value)
    if arg:
        raise CatalogError(f"'{base}' takes no argument")
    return builder()
