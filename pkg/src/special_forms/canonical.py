"""
Canonical representatives of O(d, Z) orbits.

Two forms are related by a signed permutation exactly when their canonical
representatives coincide. The representative is found by a breadth-first
labeling search: new labels 1, 2, ... are handed to old indices one at a time,
and only partial labelings whose already-determined components are minimal are
kept. Signs are fixed greedily, component by component, as the solution of a
growing GF(2) system.

Component order is colexicographic (compare the largest index first), so the
components lying inside the labels 1..t are final once label t is placed.
"""

import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Tuple

from .config_loader import SearchConfig
from .errors import SearchBoundError
from .exterior import IndexTuple, SpecialForm, normalize_component
from .symmetry import SignedPermutation, act
from .telemetry import trace_operation

logger = logging.getLogger(__name__)

# (reversed new index tuple, |coefficient|, coefficient < 0)
_Entry = Tuple[Tuple[int, ...], int, bool]


@dataclass
class CanonicalLabeling:
    """
    Result of the canonical search.

    Attributes:
        element: g with act(g, f) == form
        form: The canonical representative
        nodes_expanded: Partial labelings examined
    """
    element: SignedPermutation
    form: SpecialForm
    nodes_expanded: int


@dataclass
class _Node:
    assigned: Tuple[int, ...]
    labels: Dict[int, int]
    pivots: Dict[int, Tuple[int, int]]
    cover: FrozenSet[int]


def _reduce(pivots: Dict[int, Tuple[int, int]], mask: int) -> Tuple[int, int]:
    acc = 0
    while mask:
        low = mask & -mask
        if low not in pivots:
            break
        pmask, pb = pivots[low]
        mask ^= pmask
        acc ^= pb
    return mask, acc


def _parity(x: int) -> int:
    return bin(x).count("1") & 1


def _solve(pivots: Dict[int, Tuple[int, int]]) -> int:
    x = 0
    for low in sorted(pivots, reverse=True):
        mask, b = pivots[low]
        if _parity(mask & x & ~low) ^ b:
            x |= low
    return x


class _Search:

    def __init__(self, f: SpecialForm, config: SearchConfig):
        self.f = f
        self.config = config
        d = f.dim
        self.supports = list(f.items())
        self.containing: Dict[int, List[int]] = {i: [] for i in range(1, d + 1)}
        magnitudes: Dict[int, List[int]] = {i: [] for i in range(1, d + 1)}
        for k, (s, c) in enumerate(self.supports):
            for i in s:
                self.containing[i].append(k)
                magnitudes[i].append(abs(c))
        self.signature = {
            i: (len(self.containing[i]), tuple(sorted(magnitudes[i])))
            for i in range(1, d + 1)
        }
        # labels are handed out in order of decreasing signature
        self.slot_signature = sorted(self.signature.values(), reverse=True)
        self.expanded = 0

    def _extend(self, node: _Node, j: int, t: int) -> Tuple[List[_Entry], _Node]:
        labels = dict(node.labels)
        labels[j] = t
        pivots = dict(node.pivots)

        raw = []
        for k in self.containing[j]:
            s, c = self.supports[k]
            if all(i in labels for i in s):
                u, value = normalize_component(tuple(labels[i] for i in s), c)
                raw.append((u, value))
        raw.sort(key=lambda item: item[0][::-1])

        entries: List[_Entry] = []
        for u, value in raw:
            mask = 0
            for i in u:
                mask |= 1 << (i - 1)
            reduced, acc = _reduce(pivots, mask)
            want = 1 if value < 0 else 0
            if reduced:
                pivots[reduced & -reduced] = (reduced, want ^ acc)
                final = abs(value)
            else:
                final = -value if acc else value
            entries.append((u[::-1], abs(final), final < 0))

        cover = node.cover.intersection(self.containing[j])
        child = _Node(node.assigned + (j,), labels, pivots, cover)
        return entries, child

    def run(self) -> SignedPermutation:
        f = self.f
        d = f.dim
        p = f.degree
        nodes = [_Node((), {}, {}, frozenset(range(len(self.supports))))]

        for t in range(1, d + 1):
            remaining = [i for i in range(1, d + 1) if i not in nodes[0].labels]
            if all(not self.containing[i] for i in remaining):
                # nothing left to place affects the key
                node = nodes[0]
                for i in sorted(remaining):
                    node = self._extend(node, i, len(node.assigned) + 1)[1]
                nodes = [node]
                break

            target = self.slot_signature[t - 1]
            best: Optional[List[_Entry]] = None
            survivors: List[_Node] = []
            sentinel = ((t + 1,), 0, False)

            children = []
            for node in nodes:
                for j in range(1, d + 1):
                    if j in node.labels or self.signature[j] != target:
                        continue
                    self.expanded += 1
                    if self.expanded > self.config.canonical_node_limit:
                        raise SearchBoundError(
                            f"Canonical search exceeded {self.config.canonical_node_limit} nodes",
                            bound_name="canonical_node_limit",
                            bound=self.config.canonical_node_limit,
                        )
                    children.append(self._extend(node, j, t))

            if t <= p:
                covered = [(e, n) for e, n in children if n.cover]
                if covered:
                    children = covered

            for entries, child in children:
                key = entries + [sentinel]
                if best is None or key < best:
                    best = key
                    survivors = [child]
                elif key == best:
                    survivors.append(child)
            nodes = survivors

        node = nodes[0]
        x = _solve(node.pivots)
        eta = tuple(-1 if x >> (t - 1) & 1 else 1 for t in range(1, d + 1))
        return SignedPermutation(node.assigned, eta)


def canonical_labeling(f: SpecialForm, config: Optional[SearchConfig] = None) -> CanonicalLabeling:
    """
    Find g with act(g, f) equal to the canonical representative of f's orbit.

    Raises:
        SearchBoundError: If the dimension or the node budget is exceeded
    """
    config = config or SearchConfig()
    if f.dim > config.max_dimension:
        raise SearchBoundError(
            f"Dimension {f.dim} exceeds the search bound {config.max_dimension}",
            bound_name="max_dimension",
            bound=config.max_dimension,
        )
    if f.degree == 0 or f.weight == 0:
        return CanonicalLabeling(SignedPermutation.identity(f.dim), f, 0)

    with trace_operation("canonical.labeling", {"dim": f.dim, "weight": f.weight}):
        search = _Search(f, config)
        g = search.run()
        canonical = act(g, f)
        logger.debug(f"Canonical labeling of a {f.weight}-component form: {search.expanded} nodes")
        return CanonicalLabeling(g, canonical, search.expanded)


def canonical_representative(f: SpecialForm, config: Optional[SearchConfig] = None) -> SpecialForm:
    return canonical_labeling(f, config).form


def are_equivalent(f: SpecialForm, h: SpecialForm, config: Optional[SearchConfig] = None) -> bool:
    """True iff h = act(g, f) for some signed permutation g."""
    if (f.dim, f.degree, f.weight) != (h.dim, h.degree, h.weight):
        return False
    return canonical_representative(f, config) == canonical_representative(h, config)


def find_equivalence(
    f: SpecialForm,
    h: SpecialForm,
    config: Optional[SearchConfig] = None,
) -> Optional[SignedPermutation]:
    """
    A signed permutation g with act(g, f) == h, or None if the orbits differ.
    """
    if (f.dim, f.degree, f.weight) != (h.dim, h.degree, h.weight):
        return None
    lf = canonical_labeling(f, config)
    lh = canonical_labeling(h, config)
    if lf.form != lh.form:
        return None
    return lh.element.inverse() * lf.element


def canonical_key(f: SpecialForm) -> List[Tuple[IndexTuple, int]]:
    """Components of f in the colexicographic order used by the search."""
    return sorted(f.items(), key=lambda item: item[0][::-1])
