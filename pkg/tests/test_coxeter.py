"""Parsing, validation and subsystem plumbing."""

import math
import random

import pytest

from coxartin import INFINITE, CoxeterSystem, irreducible_components, parse_system
from coxartin.catalog import builtin_diagram

from conftest import CATALOG, random_system


def test_parse_dict_roundtrip():
    raw = {"generators": ["s", "t", "u"], "matrix": [[1, 3, 2], [3, 1, 0], [2, 0, 1]]}
    sys_ = parse_system(raw)
    assert sys_.rank == 3
    assert sys_.m(1, 2) == INFINITE
    assert sys_.m(0, 1) == 3
    assert sys_.to_input_dict() == raw


def test_parse_builtin_names_is_same_as_diagram():
    for name in CATALOG:
        assert parse_system(name) == parse_system(builtin_diagram(name))


def test_infinite_is_math_inf():
    sys_ = parse_system("A~1")
    assert sys_.m(0, 1) == math.inf


def test_restrict_keeps_names_and_labels():
    sys_ = parse_system("B4")
    sub = sys_.restrict((1, 3))
    assert sub.generators == ("t", "v")
    assert sub.m(0, 1) == sys_.m(1, 3)


@pytest.mark.parametrize(
    "raw",
    [
        {"generators": [], "matrix": []},
        {"generators": ["s"], "matrix": [[2]]},
        {"generators": ["s", "s"], "matrix": [[1, 3], [3, 1]]},
        {"generators": ["s", "t"], "matrix": [[1, 3]]},
        {"generators": ["s", "t"], "matrix": [[1, 3], [4, 1]]},
        {"generators": ["s", "t"], "matrix": [[1, 1], [1, 1]]},
        {"generators": ["s", "t"], "matrix": [[1, -3], [-3, 1]]},
        {"generators": ["s", "t"], "matrix": [[1, True], [True, 1]]},
    ],
)
def test_invalid_inputs_rejected(raw):
    with pytest.raises(ValueError):
        parse_system(raw)


def test_unknown_builtin_rejected():
    for name in ("Z3", "B1", "D3", "I2(2)", "A~0", "C~1", "E9", ""):
        with pytest.raises(ValueError):
            parse_system(name)


def test_components_split_on_commuting_pairs():
    # Two commuting A1 x A2 blocks.
    raw = {
        "generators": ["s", "t", "u"],
        "matrix": [[1, 2, 2], [2, 1, 3], [2, 3, 1]],
    }
    sys_ = parse_system(raw)
    assert irreducible_components(sys_, (0, 1, 2)) == ((0,), (1, 2))
    assert irreducible_components(sys_, (0, 1)) == ((0,), (1,))


def test_components_of_builtin_paths_are_connected():
    for name in ("A4", "B4", "F4", "H4", "E8", "A~3"):
        sys_ = parse_system(name)
        comps = irreducible_components(sys_, sys_.full_subset())
        assert comps == (sys_.full_subset(),)


def test_random_systems_roundtrip_through_dict():
    rng = random.Random(20316)
    for _ in range(50):
        sys_ = random_system(rng)
        again = parse_system(sys_.to_input_dict())
        assert again == sys_
        for i in range(sys_.rank):
            assert sys_.m(i, i) == 1
            for j in range(sys_.rank):
                assert sys_.m(i, j) == sys_.m(j, i)
