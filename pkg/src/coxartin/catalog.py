"""Builtin diagram catalog.

Names follow the usual classification: finite A<n>, B<n>, D<n>, E6, E7, E8,
F4, H3, H4, I2(<m>) and affine A~<n>, B~<n>, C~<n>, D~<n>, E~6, E~7, E~8,
F~4, G~2. Diagrams are emitted in the plain input format (generators plus
matrix, 0 for an infinite order) so a builtin is interchangeable with a
hand-written file.

Generator names are single letters starting at "s" and wrapping past "z",
matching the rank cap of the command line tool.
"""

from __future__ import annotations

import re

_LETTERS = "stuvwxyzabcdefghijklmnopqr"

_FINITE_RE = re.compile(r"^(A|B|D)(\d+)$")
_AFFINE_RE = re.compile(r"^(A|B|C|D)~(\d+)$")
_I2_RE = re.compile(r"^I2\((\d+)\)$")


def generator_names(rank: int) -> list[str]:
    if rank > len(_LETTERS):
        raise ValueError(f"builtin rank limit is {len(_LETTERS)}")
    return list(_LETTERS[:rank])


def _diagram(rank: int, edges: dict[tuple[int, int], int]) -> dict:
    mat = [[2] * rank for _ in range(rank)]
    for i in range(rank):
        mat[i][i] = 1
    for (i, j), m in edges.items():
        mat[i][j] = m
        mat[j][i] = m
    return {"generators": generator_names(rank), "matrix": mat}


def _path_edges(labels: list[int]) -> dict[tuple[int, int], int]:
    return {(i, i + 1): m for i, m in enumerate(labels)}


def builtin_diagram(name: str) -> dict:
    """Input dict for a builtin name; raises ValueError for unknown names."""
    mo = _FINITE_RE.match(name)
    if mo:
        family, n = mo.group(1), int(mo.group(2))
        if family == "A" and n >= 1:
            return _diagram(n, _path_edges([3] * (n - 1)))
        if family == "B" and n >= 2:
            return _diagram(n, _path_edges([3] * (n - 2) + [4]))
        if family == "D" and n >= 4:
            # Path on nodes 0..n-2 with node n-1 forking off node n-3.
            edges = _path_edges([3] * (n - 2))
            edges[(n - 3, n - 1)] = 3
            return _diagram(n, edges)
        raise ValueError(f"unknown builtin name: {name!r}")
    mo = _I2_RE.match(name)
    if mo:
        m = int(mo.group(1))
        if m >= 3:
            return _diagram(2, {(0, 1): m})
        raise ValueError(f"unknown builtin name: {name!r}")
    if name in ("E6", "E7", "E8"):
        n = int(name[1])
        # Path 0-1-...-(n-2) with the last node hanging off node 2.
        edges = _path_edges([3] * (n - 2))
        edges[(2, n - 1)] = 3
        return _diagram(n, edges)
    if name == "F4":
        return _diagram(4, _path_edges([3, 4, 3]))
    if name == "H3":
        return _diagram(3, _path_edges([5, 3]))
    if name == "H4":
        return _diagram(4, _path_edges([5, 3, 3]))
    mo = _AFFINE_RE.match(name)
    if mo:
        family, n = mo.group(1), int(mo.group(2))
        rank = n + 1
        if family == "A" and n == 1:
            return _diagram(2, {(0, 1): 0})
        if family == "A" and n >= 2:
            edges = _path_edges([3] * (rank - 1))
            edges[(0, rank - 1)] = 3
            return _diagram(rank, edges)
        if family == "B" and n >= 3:
            # Fork at one end, a 4-labelled edge at the other.
            edges = {(0, 2): 3, (1, 2): 3}
            for i in range(2, rank - 2):
                edges[(i, i + 1)] = 3
            edges[(rank - 2, rank - 1)] = 4
            return _diagram(rank, edges)
        if family == "C" and n >= 2:
            return _diagram(rank, _path_edges([4] + [3] * (rank - 3) + [4]))
        if family == "D" and n >= 4:
            edges = {(0, 2): 3, (1, 2): 3}
            for i in range(2, rank - 3):
                edges[(i, i + 1)] = 3
            edges[(rank - 3, rank - 2)] = 3
            edges[(rank - 3, rank - 1)] = 3
            return _diagram(rank, edges)
        raise ValueError(f"unknown builtin name: {name!r}")
    if name == "E~6":
        # Three arms of length 2 around a central node.
        return _diagram(
            7, {(0, 1): 3, (1, 2): 3, (0, 3): 3, (3, 4): 3, (0, 5): 3, (5, 6): 3}
        )
    if name == "E~7":
        # Arms of lengths 3, 3 and 1.
        return _diagram(
            8,
            {
                (0, 1): 3,
                (1, 2): 3,
                (2, 3): 3,
                (0, 4): 3,
                (4, 5): 3,
                (5, 6): 3,
                (0, 7): 3,
            },
        )
    if name == "E~8":
        # Arms of lengths 5, 2 and 1.
        return _diagram(
            9,
            {
                (0, 1): 3,
                (1, 2): 3,
                (0, 3): 3,
                (0, 4): 3,
                (4, 5): 3,
                (5, 6): 3,
                (6, 7): 3,
                (7, 8): 3,
            },
        )
    if name == "F~4":
        return _diagram(5, _path_edges([3, 3, 4, 3]))
    if name == "G~2":
        return _diagram(3, _path_edges([3, 6]))
    raise ValueError(f"unknown builtin name: {name!r}")
