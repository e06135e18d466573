"""Finitely generated Coxeter systems.

A system is an ordered tuple of generator names together with a symmetric
matrix of pairwise orders m(s, s'). The presentation it encodes has one
involution per generator and one relation (s s')^{m(s, s')} = 1 for every
pair with finite order. The generator order given at construction time is
the linear order used by every downstream sign convention, so it is never
re-sorted.

Input files use 0 for an infinite pairwise order; internally the matrix
stores math.inf so that comparisons like m >= 3 read naturally.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

INFINITE = math.inf


@dataclass(frozen=True)
class CoxeterSystem:
    """An ordered generating set with its Coxeter matrix.

    generators: distinct non-empty names, order significant.
    matrix: tuple of tuple rows, entries 1 on the diagonal, and either an
        integer >= 2 or math.inf off it.
    """

    generators: tuple[str, ...]
    matrix: tuple[tuple[int | float, ...], ...]

    def __post_init__(self) -> None:
        gens = self.generators
        if not gens:
            raise ValueError("a Coxeter system needs at least one generator")
        if len(set(gens)) != len(gens):
            raise ValueError("generator names must be distinct")
        for name in gens:
            if not isinstance(name, str) or not name:
                raise ValueError("generator names must be non-empty strings")
        n = len(gens)
        m = self.matrix
        if len(m) != n or any(len(row) != n for row in m):
            raise ValueError("Coxeter matrix shape must match the generator count")
        for i in range(n):
            if m[i][i] != 1:
                raise ValueError("Coxeter matrix diagonal entries must be 1")
            for j in range(n):
                v = m[i][j]
                if v != m[j][i]:
                    raise ValueError("Coxeter matrix must be symmetric")
                if i != j and not (v == INFINITE or (isinstance(v, int) and v >= 2)):
                    raise ValueError(
                        "off-diagonal orders must be integers >= 2 or infinite"
                    )

    @property
    def rank(self) -> int:
        return len(self.generators)

    def m(self, i: int, j: int) -> int | float:
        """Pairwise order of generators i and j (math.inf when free)."""
        return self.matrix[i][j]

    def index(self, name: str) -> int:
        try:
            return self.generators.index(name)
        except ValueError:
            raise ValueError(f"unknown generator name: {name!r}") from None

    def full_subset(self) -> tuple[int, ...]:
        return tuple(range(self.rank))

    def restrict(self, subset: tuple[int, ...]) -> "CoxeterSystem":
        """The subsystem on a subset of generator indices, order preserved."""
        idx = sorted(set(subset))
        if idx and not (0 <= idx[0] and idx[-1] < self.rank):
            raise ValueError("subset indices out of range")
        gens = tuple(self.generators[i] for i in idx)
        mat = tuple(tuple(self.matrix[i][j] for j in idx) for i in idx)
        return CoxeterSystem(gens, mat)

    def to_input_dict(self) -> dict:
        """File format dict, with 0 standing for an infinite order."""
        mat = [
            [0 if v == INFINITE else int(v) for v in row] for row in self.matrix
        ]
        return {"generators": list(self.generators), "matrix": mat}


def parse_system(source: dict | str) -> CoxeterSystem:
    """Build a validated system from an input dict or a builtin name.

    Dicts use the file format: {"generators": [...], "matrix": [[...]]} with
    0 encoding an infinite pairwise order. A string argument is looked up in
    the builtin catalog ("A3", "B~4", "I2(7)", ...).
    """
    if isinstance(source, str):
        from . import catalog

        return parse_system(catalog.builtin_diagram(source))
    if not isinstance(source, dict):
        raise ValueError("system input must be a dict or a builtin name")
    try:
        gens = source["generators"]
        mat = source["matrix"]
    except (KeyError, TypeError):
        raise ValueError('system input needs "generators" and "matrix" fields')
    if not isinstance(gens, (list, tuple)):
        raise ValueError('"generators" must be a list of names')
    norm_rows = []
    if not isinstance(mat, (list, tuple)):
        raise ValueError('"matrix" must be a list of rows')
    for row in mat:
        if not isinstance(row, (list, tuple)):
            raise ValueError('"matrix" must be a list of rows')
        norm = []
        for v in row:
            if isinstance(v, bool) or not isinstance(v, int):
                raise ValueError("matrix entries must be integers (0 for infinity)")
            if v < 0:
                raise ValueError("matrix entries must be non-negative")
            norm.append(INFINITE if v == 0 else v)
        norm_rows.append(tuple(norm))
    return CoxeterSystem(tuple(str(g) for g in gens), tuple(norm_rows))


def irreducible_components(
    sys: CoxeterSystem, subset: tuple[int, ...] | None = None
) -> tuple[tuple[int, ...], ...]:
    """Connected components of the diagram restricted to a subset.

    Vertices are generator indices; i and j are adjacent when m(i, j) >= 3
    (infinite orders count as edges). Components are returned sorted by
    their smallest member, each as a sorted tuple.
    """
    nodes = sorted(set(subset if subset is not None else sys.full_subset()))
    seen: set[int] = set()
    comps = []
    node_set = set(nodes)
    for start in nodes:
        if start in seen:
            continue
        comp = []
        stack = [start]
        seen.add(start)
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in node_set:
                if w not in seen and sys.m(v, w) >= 3:
                    seen.add(w)
                    stack.append(w)
        comps.append(tuple(sorted(comp)))
    return tuple(comps)
