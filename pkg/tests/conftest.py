"""Shared catalog lists and the random system generator used across tests."""

from __future__ import annotations

import random

from coxartin import parse_system
from coxartin.coxeter import CoxeterSystem

FINITE_CATALOG = [
    "A1", "A2", "A3", "A4", "B2", "B3", "B4", "D4", "D5",
    "E6", "E7", "E8", "F4", "H3", "H4", "I2(5)", "I2(6)", "I2(7)",
]

AFFINE_CATALOG = [
    "A~1", "A~2", "A~3", "A~4", "B~3", "B~4", "C~2", "C~3",
    "D~4", "D~5", "E~6", "E~7", "E~8", "F~4", "G~2",
]

CATALOG = FINITE_CATALOG + AFFINE_CATALOG

# The affine systems whose genus the reports must pin down exactly.
AFFINE_TIER = ["A~1", "A~2", "A~3", "A~4", "C~2", "G~2", "B~3", "D~4", "F~4"]


def catalog_system(name: str) -> CoxeterSystem:
    return parse_system(name)


def random_system(rng: random.Random, max_rank: int = 5) -> CoxeterSystem:
    """Random symmetric matrix, entries in {2, 3, 4, 5, infinity}."""
    n = rng.randint(2, max_rank)
    mat = [[1] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            m = rng.choice([2, 3, 4, 5, 0])
            mat[i][j] = mat[j][i] = m
    names = [chr(ord("s") + k) for k in range(n)]
    return parse_system({"generators": names, "matrix": mat})
