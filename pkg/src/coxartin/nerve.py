"""The nerve of a Coxeter system and its integer chain complex.

Simplices are the generator subsets spanning finite parabolics, graded by
cardinality with the empty set in degree 0. Finiteness is closed under
subsets, so the nerve is built level by level: a k-subset is tested only
if all of its (k-1)-subsets survived, then classified.

The degree k boundary sends a subset J to the signed sum of its facets,
the facet J minus tau carrying (-1) to the number of members of J below
tau in the fixed generator order. Degree 1 lands on the empty simplex
with coefficient +1, which makes the complex the reduced simplicial chain
complex of the nerve boundary shifted up by one degree.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .classify import classify
from .coxeter import CoxeterSystem

IntMatrix = list[list[int]]


@dataclass(frozen=True)
class NerveComplex:
    """Finite type subsets graded by cardinality, plus the maximal ones."""

    system: CoxeterSystem
    simplices: tuple[tuple[tuple[int, ...], ...], ...]
    maximal: tuple[tuple[int, ...], ...]

    @property
    def vd(self) -> int:
        return len(self.simplices) - 1

    def degree_index(self, k: int) -> dict[tuple[int, ...], int]:
        return {J: i for i, J in enumerate(self.simplices[k])}

    def names(self, J: tuple[int, ...]) -> tuple[str, ...]:
        return tuple(self.system.generators[i] for i in J)


def build_nerve(sys: CoxeterSystem) -> NerveComplex:
    levels: list[tuple[tuple[int, ...], ...]] = [((),)]
    prev = {()}
    k = 1
    while True:
        found = []
        for J in combinations(range(sys.rank), k):
            if any(J[:i] + J[i + 1 :] not in prev for i in range(k)):
                continue
            if classify(sys, J).finite:
                found.append(J)
        if not found:
            break
        levels.append(tuple(found))
        prev = set(found)
        k += 1
    members = {J for level in levels for J in level}
    maximal = tuple(
        J
        for level in levels
        for J in level
        if not any(
            tuple(sorted(set(J) | {extra})) in members
            for extra in range(sys.rank)
            if extra not in J
        )
    )
    return NerveComplex(sys, tuple(levels), maximal)


def incidence_sign(facet: tuple[int, ...], J: tuple[int, ...]) -> int:
    """Sign [facet : J] for facet = J minus one member tau."""
    (tau,) = set(J) - set(facet)
    below = sum(1 for j in J if j < tau)
    return -1 if below % 2 else 1


def boundary_matrix_d0(K: NerveComplex, k: int) -> IntMatrix:
    """Degree k boundary of the integer nerve complex, facets in the rows."""
    if not 1 <= k <= K.vd:
        raise ValueError(f"degree {k} outside 1..{K.vd}")
    rows = K.degree_index(k - 1)
    cols = K.simplices[k]
    mat = [[0] * len(cols) for _ in rows]
    for j, J in enumerate(cols):
        for i in range(k):
            facet = J[:i] + J[i + 1 :]
            mat[rows[facet]][j] = incidence_sign(facet, J)
    return mat


def vd(sys: CoxeterSystem) -> int:
    """Largest cardinality of a finite type subset."""
    return build_nerve(sys).vd
