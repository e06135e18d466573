"""Exact polynomial arithmetic and length generating functions."""

import random

import pytest

from coxartin import (
    IntPoly,
    classify,
    exact_div,
    materialize_group,
    parse_system,
    poincare_polynomial,
)
from coxartin.poly import divmod_poly, geometric, mod_poly

from oracles import (
    closure_census,
    dihedral_model,
    even_signed_model,
    signed_model,
    symmetric_model,
)


def rand_poly(rng, max_deg=6, max_coeff=9):
    return IntPoly(
        tuple(rng.randint(-max_coeff, max_coeff) for _ in range(rng.randint(0, max_deg)))
    )


def test_ring_identities_random():
    rng = random.Random(7321)
    for _ in range(300):
        a, b, c = (rand_poly(rng) for _ in range(3))
        assert (a + b) * c == a * c + b * c
        assert a * b == b * a
        assert a - a == IntPoly.zero()
        x = rng.randint(-4, 4)
        assert (a * b).eval_at(x) == a.eval_at(x) * b.eval_at(x)
        assert (a + b).eval_at(x) == a.eval_at(x) + b.eval_at(x)


def test_divmod_reconstructs():
    rng = random.Random(99)
    for _ in range(200):
        d = rand_poly(rng, max_deg=4)
        if not d:
            continue
        q = rand_poly(rng, max_deg=4)
        r = rand_poly(rng, max_deg=max(d.degree - 1, 0))
        num = q * d + r
        quo, rem = divmod_poly(num, d)
        assert quo * d + rem == num


def test_exact_div_geometric_products():
    # (1 + q + ... + q^(ab-1)) is divisible by the a-term block.
    assert exact_div(geometric(6), geometric(3)) == IntPoly((1, 0, 0, 1))
    assert exact_div(geometric(6), geometric(2)) == IntPoly((1, 0, 1, 0, 1))
    with pytest.raises(ValueError):
        exact_div(geometric(3), geometric(2))


def test_mod_poly_monic():
    p = IntPoly((5, 3, 1))
    m = geometric(2)
    q, r = divmod_poly(p, m)
    assert mod_poly(p, m) == r
    assert q * m + r == p
    assert r.degree < m.degree


def test_trailing_zeros_trimmed_and_zero_is_falsy():
    assert IntPoly((0, 0)).coeffs == ()
    assert not IntPoly.zero()
    assert IntPoly((0, 1)).degree == 1
    assert IntPoly.zero().degree == -1


def test_str_rendering():
    assert str(IntPoly((1, 2, 2, 1))) == "1 + 2*q + 2*q^2 + q^3"
    assert str(IntPoly((-1, -1))) == "-1 - q"
    assert str(IntPoly(())) == "0"
    assert str(IntPoly((0, 0, 3))) == "3*q^2"


KNOWN = [
    ("A2", (1, 2, 2, 1)),
    ("B2", (1, 2, 2, 2, 1)),
    ("I2(5)", (1, 2, 2, 2, 2, 1)),
]


@pytest.mark.parametrize("name,coeffs", KNOWN, ids=[k[0] for k in KNOWN])
def test_small_poincare_values(name, coeffs):
    sys_ = parse_system(name)
    assert poincare_polynomial(sys_, sys_.full_subset()).coeffs == coeffs


MODEL_CENSUS = [
    ("A3", symmetric_model(3), False),
    ("A4", symmetric_model(4), False),
    ("B3", signed_model(3), True),
    ("B4", signed_model(4), True),
    ("D4", even_signed_model(4), True),
    ("D5", even_signed_model(5), True),
    ("I2(6)", dihedral_model(6), False),
]


@pytest.mark.parametrize("name,gens,signed", MODEL_CENSUS, ids=[m[0] for m in MODEL_CENSUS])
def test_poincare_matches_permutation_census(name, gens, signed):
    # The degrees formula must reproduce the model's length census.
    sys_ = parse_system(name)
    poly = poincare_polynomial(sys_, sys_.full_subset())
    _, census = closure_census(gens, signed=signed)
    assert poly.coeffs == tuple(census)


def test_poincare_matches_enumerated_lengths_for_exotic_types():
    for name in ("H3", "F4"):
        sys_ = parse_system(name)
        table = materialize_group(sys_, sys_.full_subset())
        census = [0] * (max(table.lengths) + 1)
        for l in table.lengths:
            census[l] += 1
        assert poincare_polynomial(sys_, sys_.full_subset()).coeffs == tuple(census)


def test_poincare_multiplies_over_components():
    sys_ = parse_system("A~3")
    # Opposite corners of the 4-cycle: A1 x A1.
    assert poincare_polynomial(sys_, (0, 2)) == geometric(2) * geometric(2)


def test_poincare_at_one_is_the_order():
    for name in ("A4", "B4", "D4", "F4", "H4", "E6"):
        sys_ = parse_system(name)
        poly = poincare_polynomial(sys_, sys_.full_subset())
        assert poly.eval_at(1) == classify(sys_).order
