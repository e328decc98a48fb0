"""
Exact spectral analysis of 2k-forms acting on k-forms.

A 2k-form f in D dimensions defines an endomorphism of the k-forms,

    M[A][B] = f[unrank(A) ++ unrank(B)]

with k-tuples ranked colexicographically, A = 1 + sum_i binom(m_i - 1, i).
Everything is exact: characteristic polynomials come from sympy's DomainMatrix
over ZZ, ranks and kernels are taken over QQ, and factor claims are checked
with integer polynomial arithmetic. Irrational eigenvalues are never computed;
an eigenvalue is named by an integer factor polynomial p and its eigenspace is
the kernel of p(M).
"""

import logging
from dataclasses import dataclass
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple

import sympy
from sympy import Poly, Symbol
from sympy.polys.domains import QQ, ZZ
from sympy.polys.matrices import DomainMatrix

from .config_loader import SpectralConfig
from .errors import DegreeError, FactorError, RankError, SearchBoundError
from .exterior import IndexTuple, SpecialForm, all_index_tuples, normalize_component
from .telemetry import trace_function, trace_operation

logger = logging.getLogger(__name__)

LAMBDA = Symbol("x")


# ============================================================================
# Rank map
# ============================================================================

def rank_tuple(t: Sequence[int], D: int, k: int) -> int:
    """
    Colexicographic rank of a strictly increasing k-tuple in 1..D, starting at 1.

    Raises:
        RankError: If t is not a strictly increasing k-tuple inside 1..D
    """
    t = tuple(t)
    if len(t) != k or any(a >= b for a, b in zip(t, t[1:])) or (t and (t[0] < 1 or t[-1] > D)):
        raise RankError(f"{t} is not a strictly increasing {k}-tuple in 1..{D}")
    return 1 + sum(comb(m - 1, i) for i, m in enumerate(t, start=1))


def unrank(A: int, D: int, k: int) -> IndexTuple:
    """
    Inverse of rank_tuple.

    Raises:
        RankError: If A is outside 1..binom(D, k)
    """
    total = comb(D, k)
    if not 1 <= A <= total:
        raise RankError(f"Rank {A} outside 1..{total}")
    rest = A - 1
    out = []
    for i in range(k, 0, -1):
        m = i
        while comb(m, i) <= rest:
            m += 1
        # largest m with binom(m-1, i) <= rest
        out.append(m)
        rest -= comb(m - 1, i)
    return tuple(reversed(out))


# ============================================================================
# Matrices and polynomials
# ============================================================================

@dataclass
class EndomorphismMatrix:
    """
    Matrix of a 2k-form acting on k-forms.

    Attributes:
        dim: Ambient dimension D
        k: Degree of the k-forms acted on
        rows: binom(D, k) rows of integers
        label: Name of the source form, when known
    """
    dim: int
    k: int
    rows: List[List[int]]
    label: str = ""

    @property
    def size(self) -> int:
        return len(self.rows)

    def domain_matrix(self) -> DomainMatrix:
        return DomainMatrix.from_list(self.rows, ZZ)

    @property
    def is_symmetric(self) -> bool:
        n = self.size
        return all(self.rows[i][j] == self.rows[j][i] for i in range(n) for j in range(i, n))

    @property
    def is_antisymmetric(self) -> bool:
        n = self.size
        return all(self.rows[i][j] == -self.rows[j][i] for i in range(n) for j in range(i, n))

    @property
    def trace(self) -> int:
        return sum(self.rows[i][i] for i in range(self.size))


def endomorphism_matrix(
    f: SpecialForm,
    k: int,
    config: Optional[SpectralConfig] = None,
    label: str = "",
) -> EndomorphismMatrix:
    """
    Raises:
        DegreeError: If f.degree != 2k
        SearchBoundError: If binom(D, k) exceeds the configured matrix size
    """
    config = config or SpectralConfig()
    if f.degree != 2 * k:
        raise DegreeError(f"A {f.degree}-form does not act on {k}-forms")
    D = f.dim
    size = comb(D, k)
    if size > config.max_matrix_size:
        raise SearchBoundError(
            f"Matrix of size {size} exceeds max_matrix_size={config.max_matrix_size}",
            bound_name="max_matrix_size",
            bound=config.max_matrix_size,
        )
    basis = [unrank(A, D, k) for A in range(1, size + 1)]
    rows = [[f.coefficient(a + b) for b in basis] for a in basis]
    return EndomorphismMatrix(D, k, rows, label)


@dataclass(frozen=True)
class IntPolynomial:
    """
    Integer polynomial, coefficients in ascending degree.

    The zero polynomial has no coefficients.
    """
    coefficients: Tuple[int, ...]

    def __post_init__(self):
        coeffs = list(int(c) for c in self.coefficients)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(coeffs))

    @classmethod
    def from_poly(cls, p: Poly) -> "IntPolynomial":
        return cls(tuple(int(c) for c in reversed(p.all_coeffs())))

    @classmethod
    def parse(cls, text: str) -> "IntPolynomial":
        """Parse an expression in x (or lambda), e.g. "(x-1)**2*(x+4)"."""
        expr = sympy.sympify(text.replace("lambda", "x").replace("^", "**"), locals={"x": LAMBDA})
        return cls.from_poly(Poly(expr, LAMBDA, domain=ZZ))

    def to_poly(self) -> Poly:
        return Poly(list(reversed(self.coefficients)) or [0], LAMBDA, domain=ZZ)

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __str__(self) -> str:
        return str(self.to_poly().as_expr())


@dataclass(frozen=True)
class Factor:
    """A factor polynomial raised to a multiplicity."""
    polynomial: IntPolynomial
    multiplicity: int

    def __str__(self) -> str:
        base = f"({self.polynomial})"
        return base if self.multiplicity == 1 else f"{base}^{self.multiplicity}"


def char_poly(M: EndomorphismMatrix) -> IntPolynomial:
    """det(x I - M), exact over the integers."""
    with trace_operation("spectral.char_poly", {"size": M.size}):
        if M.size == 0:
            return IntPolynomial((1,))
        coeffs = M.domain_matrix().charpoly()
        poly = IntPolynomial(tuple(int(c) for c in reversed(coeffs)))
        logger.debug(f"Characteristic polynomial of a {M.size}x{M.size} matrix computed")
        return poly


def parse_factors(spec: Sequence[Tuple[str, int]]) -> List[Factor]:
    return [Factor(IntPolynomial.parse(text), m) for text, m in spec]


def verify_factorization(p: IntPolynomial, factors: Sequence[Factor]) -> bool:
    """True iff the product of the factor powers equals p exactly."""
    product = Poly(1, LAMBDA, domain=ZZ)
    for factor in factors:
        product = product * factor.polynomial.to_poly() ** factor.multiplicity
    return IntPolynomial.from_poly(product) == p


def format_factored(factors: Sequence[Factor]) -> str:
    return " ".join(str(f) for f in factors)


def evaluate_polynomial(M: EndomorphismMatrix, p: IntPolynomial) -> DomainMatrix:
    """p(M) by Horner's rule."""
    n = M.size
    A = M.domain_matrix()
    identity = DomainMatrix.eye(n, ZZ)
    result = DomainMatrix.zeros((n, n), ZZ)
    for c in reversed(p.coefficients):
        result = result * A + identity * ZZ(c)
    return result


def _nullity(A: DomainMatrix) -> int:
    n = A.shape[1]
    return n - A.convert_to(QQ).rank()


def eigenspace_dimension(
    M: EndomorphismMatrix,
    factor: IntPolynomial,
    poly: Optional[IntPolynomial] = None,
) -> int:
    """
    Dimension of the kernel of factor(M).

    Raises:
        FactorError: If factor does not divide the characteristic polynomial
    """
    poly = poly or char_poly(M)
    if not poly.to_poly().rem(factor.to_poly()).is_zero:
        raise FactorError(f"({factor}) does not divide the characteristic polynomial")
    return _nullity(evaluate_polynomial(M, factor))


def factorization_multiplicity_check(
    M: EndomorphismMatrix,
    factors: Sequence[Factor],
    poly: Optional[IntPolynomial] = None,
) -> Tuple[bool, Dict[str, int]]:
    """
    Sum of (eigenspace dimension x factor degree) over the factors, compared with the size.

    Returns:
        (matches, {factor: eigenspace dimension})
    """
    poly = poly or char_poly(M)
    dims = {}
    total = 0
    for factor in factors:
        dim = eigenspace_dimension(M, factor.polynomial, poly)
        dims[str(factor.polynomial)] = dim
        total += dim * factor.polynomial.degree
    return total == M.size, dims


# ============================================================================
# Infinitesimal stabilizer
# ============================================================================

def _rotate(s: IndexTuple, c: int, a: int, b: int) -> List[Tuple[IndexTuple, int]]:
    """Image of c e_s under the rotation generator with E e_b = e_a, E e_a = -e_b."""
    out = []
    for pos, i in enumerate(s):
        if i == b:
            new, value = a, c
        elif i == a:
            new, value = b, -c
        else:
            continue
        replaced = s[:pos] + (new,) + s[pos + 1:]
        if len(set(replaced)) == len(replaced):
            out.append(normalize_component(replaced, value))
    return out


@trace_function("spectral.stabilizer_algebra")
def stabilizer_algebra_dimension(f: SpecialForm) -> int:
    """Dimension of {X in so(d) : X . f = 0}."""
    d = f.dim
    generators = list(all_index_tuples(d, 2))
    rows: Dict[IndexTuple, List[int]] = {}
    for col, (a, b) in enumerate(generators):
        for s, c in f.items():
            for key, value in _rotate(s, c, a, b):
                row = rows.setdefault(key, [0] * len(generators))
                row[col] += value
    if not rows:
        return len(generators)
    matrix = DomainMatrix.from_list(list(rows.values()), ZZ)
    return _nullity(matrix)


# ============================================================================
# su(2) acting on the 8-dimensional complement of a non-exceptional plane
# ============================================================================

# integer multiples of the generators: A1 = 2 sqrt(3) T1, A2 = 2 sqrt(3) T2, A3 = 6 T3
SU2_A1 = [
    [0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 1, 0, -1, 0, 0],
    [0, 0, 0, 0, 1, 0, -1, 0],
    [0, -1, 0, 0, 0, 1, 0, 0],
    [0, 0, -1, 0, 0, 0, 1, 0],
    [0, 1, 0, -1, 0, 0, 0, 0],
    [0, 0, 1, 0, -1, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0],
]
SU2_A2 = [
    [0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, 0, -1, 0],
    [0, 0, 0, -1, 0, 1, 0, 0],
    [0, 0, 1, 0, -1, 0, 0, 0],
    [0, -1, 0, 1, 0, 0, 0, 0],
    [0, 0, -1, 0, 0, 0, 1, 0],
    [0, 1, 0, 0, 0, -1, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0],
]
SU2_A3 = [
    [0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 2, 0, -1, 0, -1, 0],
    [0, -2, 0, 1, 0, 1, 0, 0],
    [0, 0, -1, 0, -1, 0, 2, 0],
    [0, 1, 0, 1, 0, -2, 0, 0],
    [0, 0, -1, 0, 2, 0, -1, 0],
    [0, 1, 0, -2, 0, 1, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0],
]

SU2_INVARIANT_VECTORS = [
    (1, 0, 0, 0, 0, 0, 0, 0),
    (0, 0, 0, 0, 0, 0, 0, 1),
    (0, 1, 0, 1, 0, 1, 0, 0),
    (0, 0, 1, 0, 1, 0, 1, 0),
]


def su2_generators() -> List[sympy.Matrix]:
    """T1, T2, T3 with their exact prefactors."""
    s3 = sympy.sqrt(3)
    return [
        sympy.Matrix(SU2_A1) / (2 * s3),
        sympy.Matrix(SU2_A2) / (2 * s3),
        sympy.Matrix(SU2_A3) / 6,
    ]


def su2_spinor_vectors() -> Dict[str, Tuple[sympy.Matrix, sympy.Expr]]:
    """b1, b2, c1, c2 with their T1 eigenvalues."""
    s3, i = sympy.sqrt(3), sympy.I
    return {
        "b1": (sympy.Matrix([0, 1 + s3 * i, 0, 1 - s3 * i, 0, -2, 0, 0]), -i / 2),
        "b2": (sympy.Matrix([0, 0, s3 + i, 0, -s3 + i, 0, -2 * i, 0]), i / 2),
        "c1": (sympy.Matrix([0, 0, 1 + s3 * i, 0, 1 - s3 * i, 0, -2, 0]), -i / 2),
        "c2": (sympy.Matrix([0, s3 - i, 0, 2 * i, 0, -s3 - i, 0, 0]), i / 2),
    }


def _is_zero_matrix(M: sympy.Matrix) -> bool:
    return all(sympy.expand(e) == 0 for e in M)


def _induced_on_two_forms(A: Sequence[Sequence[int]]) -> List[List[int]]:
    """Matrix of the derivation A ^ 1 + 1 ^ A on Lambda^2 of R^n."""
    n = len(A)
    basis = list(all_index_tuples(n, 2))
    position = {t: idx for idx, t in enumerate(basis)}
    out = [[0] * len(basis) for _ in basis]
    for col, (a, b) in enumerate(basis):
        for c in range(1, n + 1):
            # (A e_a) ^ e_b + e_a ^ (A e_b)
            for pair, value in (((c, b), A[c - 1][a - 1]), ((a, c), A[c - 1][b - 1])):
                if value == 0 or pair[0] == pair[1]:
                    continue
                key, signed = normalize_component(pair, value)
                out[position[key]][col] += signed
    return out


def _casimir_times_36(mats: Sequence[Sequence[Sequence[int]]]) -> DomainMatrix:
    A1, A2, A3 = (DomainMatrix.from_list([list(r) for r in m], ZZ) for m in mats)
    return A1 * A1 * ZZ(3) + A2 * A2 * ZZ(3) + A3 * A3


def su2_casimir_multiplicities() -> Dict[str, Dict[str, int]]:
    """
    Multiplicities of spin 0, 1/2 and 1 on the vector module and on 2-forms.

    36 C = 3 A1^2 + 3 A2^2 + A3^2 has eigenvalue -36 s(s+1), so the spin-s
    part is the kernel of 36C + 36 s(s+1), and its multiplicity is that kernel
    dimension divided by 2s + 1.
    """
    results = {}
    for label, mats in (
        ("vector", (SU2_A1, SU2_A2, SU2_A3)),
        ("two_forms", tuple(_induced_on_two_forms(m) for m in (SU2_A1, SU2_A2, SU2_A3))),
    ):
        C = _casimir_times_36(mats)
        n = C.shape[0]
        identity = DomainMatrix.eye(n, ZZ)
        counts = {}
        for spin, shift, width in (("0", 0, 1), ("1/2", 27, 2), ("1", 72, 3)):
            counts[spin] = _nullity(C + identity * ZZ(shift)) // width
        results[label] = counts
    return results


@dataclass
class SU2Check:
    name: str
    passed: bool


@trace_function("spectral.su2_reduction")
def verify_su2_reduction() -> List[SU2Check]:
    """
    Commutation relations, invariant vectors, T1 eigenvectors and the
    decompositions 8 = 4[0] + 2[1/2], 28 = 9[0] + 8[1/2] + [1].
    """
    T1, T2, T3 = su2_generators()
    checks = [
        SU2Check("[T1,T2] = T3", _is_zero_matrix(T1 * T2 - T2 * T1 - T3)),
        SU2Check("[T2,T3] = T1", _is_zero_matrix(T2 * T3 - T3 * T2 - T1)),
        SU2Check("[T3,T1] = T2", _is_zero_matrix(T3 * T1 - T1 * T3 - T2)),
    ]
    for v in SU2_INVARIANT_VECTORS:
        column = sympy.Matrix(v)
        checks.append(SU2Check(
            f"T_i {v} = 0",
            all(_is_zero_matrix(T * column) for T in (T1, T2, T3)),
        ))
    for name, (vector, eigenvalue) in su2_spinor_vectors().items():
        checks.append(SU2Check(
            f"T1 {name} = ({eigenvalue}) {name}",
            _is_zero_matrix(T1 * vector - eigenvalue * vector),
        ))
    multiplicities = su2_casimir_multiplicities()
    checks.append(SU2Check(
        "8 = 4[0] + 2[1/2]",
        multiplicities["vector"] == {"0": 4, "1/2": 2, "1": 0},
    ))
    checks.append(SU2Check(
        "28 = 9[0] + 8[1/2] + [1]",
        multiplicities["two_forms"] == {"0": 9, "1/2": 8, "1": 1},
    ))
    return checks


def su2_annihilates(f: SpecialForm) -> bool:
    """True iff every su(2) generator kills the 8-dimensional form f."""
    if f.dim != 8:
        raise DegreeError(f"The su(2) generators act on 8 dimensions, not {f.dim}")
    for A in (SU2_A1, SU2_A2, SU2_A3):
        image: Dict[IndexTuple, int] = {}
        for s, c in f.items():
            for pos, i in enumerate(s):
                for new in range(1, 9):
                    value = A[new - 1][i - 1]
                    if value == 0:
                        continue
                    replaced = s[:pos] + (new,) + s[pos + 1:]
                    if len(set(replaced)) != len(replaced):
                        continue
                    key, signed = normalize_component(replaced, value * c)
                    image[key] = image.get(key, 0) + signed
        if any(image.values()):
            return False
    return True


# ============================================================================
# Polynomials quoted for the catalog forms
# ============================================================================

# catalog name -> (k, factors of the polynomial on k-forms)
KNOWN_POLYNOMIALS: Dict[str, Tuple[int, List[Tuple[str, int]]]] = {
    "epsilon:4": (2, [("x-1", 3), ("x+1", 3)]),
    "spin7": (2, [("x-3", 7), ("x+1", 21)]),
    "t17": (2, [("x", 3), ("x+3", 4), ("x-1", 6), ("x**2+x-4", 1), ("x**2-2*x-1", 4),
                ("x**5+x**4-13*x**3-9*x**2+24*x+12", 1)]),
    "phiA": (2, [("x-1", 20), ("x+1", 24), ("x-4", 1)]),
    "phiB": (2, [("x+2", 12), ("x-3", 8), ("x-2", 15), ("x+3", 8), ("x**2+6*x-36", 1)]),
    "phiC": (2, [("x", 33), ("x**2-20", 6)]),
    "phiD": (2, [("x", 33), ("x**2-20", 6)]),
    "omegaA": (3, [("x**2+1", 55), ("x**2+9", 5)]),
    "omegaB": (3, [("x**2+36", 1), ("x**4+60*x**2+144", 4), ("x**2+4", 27), ("x**2+9", 24)]),
    "omegaC": (3, [("x", 80), ("x**2+20", 20)]),
    "omegaD": (3, [("x", 80), ("x**2+20", 20)]),
    "omega10": (3, [("x**6+51*x**4+699*x**2+1369", 4), ("x**4+42*x**2+361", 6),
                    ("x**2+1", 35), ("x**2+9", 1)]),
    "psi12A_dual": (2, [("x+1", 35), ("x-5", 1), ("x-1", 30)]),
    "psi12B_dual": (2, [("x-2", 24), ("x+2", 20), ("x-4", 10), ("x+4", 10), ("x**2+8*x-80", 1)]),
}

# the published polynomial of T; its degree is 28 and the sum of its squared
# roots is tr(T^2) = 102, but it is not the polynomial of the 17 components
REFERENCE_T17_FACTORS = [("x", 4), ("x**2-5", 1), ("x**4-8*x**2+3", 4), ("x**6-14*x**4+33*x**2-12", 1)]

# the dual 4-form of omega10, with the volume form reversed
STAR_OMEGA10_FACTORS = [("x+4", 1), ("x+1", 8), ("x-1", 24), ("x**2+2*x-19", 6)]


def known_factors(name: str) -> Optional[Tuple[int, List[Factor]]]:
    if name not in KNOWN_POLYNOMIALS:
        return None
    k, spec = KNOWN_POLYNOMIALS[name]
    return k, parse_factors(spec)
