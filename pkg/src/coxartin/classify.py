"""Finite type recognition for parabolic subsystems.

A subset of generators spans a finite Coxeter group exactly when every
diagram component matches one of the finite types. Matching is purely
combinatorial (labelled tree shapes), and each recognized type carries its
degree multiset, whose product is the exact group order. Nothing here ever
materializes a group, so classification stays cheap at any rank.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .coxeter import INFINITE, CoxeterSystem, irreducible_components


@dataclass(frozen=True)
class FiniteTypeLabel:
    """One irreducible finite type: family letter, rank, dihedral order."""

    family: str
    rank: int
    dihedral_m: int | None = None

    def __str__(self) -> str:
        if self.family == "I2":
            return f"I2({self.dihedral_m})"
        return f"{self.family}{self.rank}"


@dataclass(frozen=True)
class ClassificationResult:
    """Outcome of classifying one generator subset.

    components pairs each diagram component (sorted index tuple) with its
    finite type label, or None when that component is of infinite type.
    order and degrees are None exactly when finite is False.
    """

    subset: tuple[int, ...]
    finite: bool
    components: tuple[tuple[tuple[int, ...], FiniteTypeLabel | None], ...]
    order: int | None
    degrees: tuple[int, ...] | None


def degrees_of_label(label: FiniteTypeLabel) -> tuple[int, ...]:
    """Reflection degrees of an irreducible finite type."""
    fam, n = label.family, label.rank
    if fam == "A":
        return tuple(range(2, n + 2))
    if fam == "B":
        return tuple(range(2, 2 * n + 1, 2))
    if fam == "D":
        return tuple(range(2, 2 * n - 1, 2)) + (n,)
    if fam == "E":
        return {
            6: (2, 5, 6, 8, 9, 12),
            7: (2, 6, 8, 10, 12, 14, 18),
            8: (2, 8, 12, 14, 18, 20, 24, 30),
        }[n]
    if fam == "F":
        return (2, 6, 8, 12)
    if fam == "H":
        return (2, 6, 10) if n == 3 else (2, 12, 20, 30)
    if fam == "I2":
        return (2, label.dihedral_m)
    raise ValueError(f"unknown family {fam!r}")


def label_order(label: FiniteTypeLabel) -> int:
    return math.prod(degrees_of_label(label))


def _match_component(sys: CoxeterSystem, comp: tuple[int, ...]) -> FiniteTypeLabel | None:
    """Finite type of one connected diagram component, or None."""
    k = len(comp)
    if k == 1:
        return FiniteTypeLabel("A", 1)
    edges = []
    for a in range(k):
        for b in range(a + 1, k):
            m = sys.m(comp[a], comp[b])
            if m == INFINITE:
                return None
            if m >= 3:
                edges.append((comp[a], comp[b], int(m)))
    if len(edges) != k - 1:
        return None  # connected with an extra edge means a cycle
    adj: dict[int, list[tuple[int, int]]] = {v: [] for v in comp}
    for a, b, m in edges:
        adj[a].append((b, m))
        adj[b].append((a, m))
    branch = [v for v in comp if len(adj[v]) >= 3]
    if not branch:
        # A path: walk it from one endpoint and read off the edge labels.
        start = next(v for v in comp if len(adj[v]) == 1)
        labels = []
        prev, cur = None, start
        while True:
            nxt = [(w, m) for w, m in adj[cur] if w != prev]
            if not nxt:
                break
            (w, m) = nxt[0]
            labels.append(m)
            prev, cur = cur, w
        if labels[::-1] < labels:
            labels = labels[::-1]  # orientation-free comparison
        if k == 2:
            m = labels[0]
            if m == 3:
                return FiniteTypeLabel("A", 2)
            if m == 4:
                return FiniteTypeLabel("B", 2)
            return FiniteTypeLabel("I2", 2, m)
        if all(m == 3 for m in labels):
            return FiniteTypeLabel("A", k)
        if labels == [3] * (k - 2) + [4]:
            return FiniteTypeLabel("B", k)
        if k == 4 and labels == [3, 4, 3]:
            return FiniteTypeLabel("F", 4)
        if k == 3 and labels == [3, 5]:
            return FiniteTypeLabel("H", 3)
        if k == 4 and labels == [3, 3, 5]:
            return FiniteTypeLabel("H", 4)
        return None
    if len(branch) != 1 or len(adj[branch[0]]) != 3:
        return None
    if any(m != 3 for _, _, m in edges):
        return None
    arms = []
    for w, _ in adj[branch[0]]:
        length = 1
        prev, cur = branch[0], w
        while True:
            nxt = [x for x, _ in adj[cur] if x != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        arms.append(length)
    arms.sort()
    a, b, c = arms
    if a == 1 and b == 1:
        return FiniteTypeLabel("D", k)
    if a == 1 and b == 2 and c in (2, 3, 4):
        return FiniteTypeLabel("E", k)
    return None


def classify(
    sys: CoxeterSystem, subset: tuple[int, ...] | None = None
) -> ClassificationResult:
    """Classify the parabolic subsystem spanned by a generator subset."""
    J = tuple(sorted(set(subset if subset is not None else sys.full_subset())))
    comps = irreducible_components(sys, J)
    labelled = tuple((comp, _match_component(sys, comp)) for comp in comps)
    if all(lab is not None for _, lab in labelled):
        degs: list[int] = []
        for _, lab in labelled:
            degs.extend(degrees_of_label(lab))
        degs.sort()
        return ClassificationResult(J, True, labelled, math.prod(degs), tuple(degs))
    return ClassificationResult(J, False, labelled, None, None)


def all_proper_finite(sys: CoxeterSystem) -> bool:
    """True when W itself is infinite but every proper parabolic is finite.

    Downward closure of finiteness makes the corank-1 subsets decisive.
    """
    if classify(sys).finite:
        return False
    n = sys.rank
    full = sys.full_subset()
    return all(
        classify(sys, tuple(j for j in full if j != i)).finite for i in range(n)
    )
