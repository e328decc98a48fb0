"""
Scalar invariants of 2-forms in four dimensions, and vertex-space graphs.

The representative special 2-forms in four dimensions are told apart by

    I1 = sum_{a,b} phi_ab phi_ba           = -2 sum phi_ab^2
    I2 = sum_{a,b,c,d} eps_abcd phi_ab phi_cd = 8 (phi_12 phi_34 - phi_13 phi_24 + phi_14 phi_23)

both summed over ordered indices. I1 is O(4)-invariant; I2 is SO(4)-invariant
and changes sign under orientation reversal.

The vertex space of a p-form has one vertex per support set, with distance
p - |s & t| between two vertices.
"""

import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .errors import DimensionError
from .exterior import IndexTuple, SpecialForm

logger = logging.getLogger(__name__)


# ============================================================================
# Invariants
# ============================================================================

def invariant_I1(f: SpecialForm) -> int:
    """
    Raises:
        DimensionError: If f is not a 2-form
    """
    if f.degree != 2:
        raise DimensionError(f"I1 is defined for 2-forms, got degree {f.degree}")
    return -2 * sum(c * c for _, c in f.items())


def invariant_I2(f: SpecialForm) -> int:
    """
    Raises:
        DimensionError: If f is not a 2-form in four dimensions
    """
    if f.degree != 2 or f.dim != 4:
        raise DimensionError(f"I2 is defined for 2-forms in d=4, got degree {f.degree} in d={f.dim}")
    c = f.coefficient
    return 8 * (c((1, 2)) * c((3, 4)) - c((1, 3)) * c((2, 4)) + c((1, 4)) * c((2, 3)))


# ============================================================================
# Representative 2-forms in four dimensions
# ============================================================================

PAIR_ORDER: List[IndexTuple] = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]


@dataclass
class ClassificationEntry:
    """
    One representative special 2-form in four dimensions.

    Attributes:
        label: Row label, e.g. "B2"
        coefficients: Values on 12, 13, 14, 23, 24, 34
        I1, I2: Tabulated invariants
        democratic: Tabulated democracy flag
    """
    label: str
    coefficients: Tuple[int, ...]
    I1: int
    I2: int
    democratic: bool

    @property
    def representative(self) -> SpecialForm:
        return SpecialForm(4, 2, {
            pair: c for pair, c in zip(PAIR_ORDER, self.coefficients) if c != 0
        })


REPRESENTATIVES: List[ClassificationEntry] = [
    ClassificationEntry("A", (1, 0, 0, 0, 0, 0), -2, 0, False),
    ClassificationEntry("B1", (1, 1, 0, 0, 0, 0), -4, 0, False),
    ClassificationEntry("B2", (1, 0, 0, 0, 0, 1), -4, 8, True),
    ClassificationEntry("B3", (1, 0, 0, 0, 0, -1), -4, -8, True),
    ClassificationEntry("C1", (1, 1, 1, 0, 0, 0), -6, 0, False),
    ClassificationEntry("C2", (1, 1, 0, 0, -1, 0), -6, 8, False),
    ClassificationEntry("C3", (1, 1, 0, 0, 1, 0), -6, -8, False),
    ClassificationEntry("D1", (1, 1, 1, 1, 0, 0), -8, 8, False),
    ClassificationEntry("D2", (1, 1, 1, -1, 0, 0), -8, -8, False),
    ClassificationEntry("D3", (1, 1, 0, 0, -1, 1), -8, 16, True),
    ClassificationEntry("D4", (1, 1, 0, 0, 1, 1), -8, 0, True),
    ClassificationEntry("D5", (1, 1, 0, 0, 1, -1), -8, -16, True),
    ClassificationEntry("E1", (1, 1, 1, 1, -1, 0), -10, 16, False),
    ClassificationEntry("E2", (1, 1, 1, 1, 1, 0), -10, 0, False),
    ClassificationEntry("E3", (1, 1, 1, -1, 1, 0), -10, -16, False),
    ClassificationEntry("F1", (1, 1, 1, 1, -1, 1), -12, 24, True),
    ClassificationEntry("F2", (1, 1, 1, 1, 1, 1), -12, 8, True),
    ClassificationEntry("F3", (1, 1, 1, -1, -1, -1), -12, -8, True),
    ClassificationEntry("F4", (1, 1, 1, -1, 1, -1), -12, -24, True),
]

_BY_INVARIANTS: Dict[Tuple[int, int], ClassificationEntry] = {(e.I1, e.I2): e for e in REPRESENTATIVES}


def table_entry(label: str) -> ClassificationEntry:
    for entry in REPRESENTATIVES:
        if entry.label == label:
            return entry
    raise KeyError(f"No representative labelled '{label}'")


def classify_2form_4d(f: SpecialForm) -> Optional[ClassificationEntry]:
    """
    The representative with the same (I1, I2), or None if no row matches.

    Only special forms are classified: a coefficient outside {0, +1, -1}
    gives None even when its invariants coincide with a row.
    """
    I1, I2 = invariant_I1(f), invariant_I2(f)
    if not f.is_special or I1 != -2 * f.weight:
        return None
    return _BY_INVARIANTS.get((I1, I2))


def render_table(rows: Optional[List[Dict[str, object]]] = None) -> str:
    """
    Plain-text table in the row order A, B1, ..., F4.

    Args:
        rows: Recomputed rows with keys label, I1, I2, democratic; defaults to REPRESENTATIVES
    """
    if rows is None:
        rows = [
            {"label": e.label, "coefficients": e.coefficients, "I1": e.I1, "I2": e.I2,
             "democratic": e.democratic}
            for e in REPRESENTATIVES
        ]
    header = f"{'':4}" + "".join(f"{'e' + ''.join(map(str, p)):>5}" for p in PAIR_ORDER) + f"{'I1':>6}{'I2':>6}  D"
    lines = [header]
    for row in rows:
        coeffs = "".join(f"{c:>5}" for c in row["coefficients"])
        flag = "D" if row["democratic"] else ""
        lines.append(f"{row['label']:4}{coeffs}{row['I1']:>6}{row['I2']:>6}  {flag}".rstrip())
    return "\n".join(lines)


# ============================================================================
# Vertex graphs
# ============================================================================

def distance(s: IndexTuple, t: IndexTuple) -> int:
    return len(s) - len(set(s) & set(t))


@dataclass
class VertexGraph:
    """
    Support sets with their pairwise distances.

    Edges are kept for distances below the degree; the profiles count every
    distance 1..p.
    """
    degree: int
    vertices: List[IndexTuple]
    edges: Dict[Tuple[int, int], int] = field(default_factory=dict)
    profiles: List[Dict[int, int]] = field(default_factory=list)


def vertex_graph(f: SpecialForm) -> VertexGraph:
    vertices = list(f.components)
    p = f.degree
    profiles = [Counter() for _ in vertices]
    edges = {}
    for a in range(len(vertices)):
        for b in range(a + 1, len(vertices)):
            dist = distance(vertices[a], vertices[b])
            profiles[a][dist] += 1
            profiles[b][dist] += 1
            if dist < p:
                edges[(a, b)] = dist
    return VertexGraph(p, vertices, edges, [dict(sorted(c.items())) for c in profiles])


def valence_profile(f: SpecialForm) -> List[Tuple[Dict[int, int], int]]:
    """
    Distinct vertex profiles with the number of vertices carrying each.

    Returns:
        [(distance -> count, number of vertices)], largest class first
    """
    graph = vertex_graph(f)
    classes = Counter(tuple(sorted(p.items())) for p in graph.profiles)
    ordered = sorted(classes.items(), key=lambda item: (-item[1], item[0]))
    return [(dict(profile), count) for profile, count in ordered]


def render_profile(profile: List[Tuple[Dict[int, int], int]]) -> str:
    lines = []
    for distances, count in profile:
        parts = ", ".join(f"{n} at distance {d}" for d, n in distances.items())
        lines.append(f"{count} vertices: {parts}")
    return "\n".join(lines)
