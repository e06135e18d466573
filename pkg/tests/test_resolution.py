"""Flag cells, the signed boundary and the rank one specializations."""

import random
from math import comb

import pytest

from coxartin import (
    Flag,
    artin_complex,
    boundary_flag,
    enumerate_flags,
    parse_system,
    specialize,
    specialize_resolution,
    verify_sign_extension,
)
from coxartin.resolution import flag_count_bound

from conftest import random_system


def test_flag_normalization_and_multiplicity():
    f = Flag(((0, 1, 2), (1, 2), (2,), ()))
    assert f.subsets == ((0, 1, 2), (1, 2), (2,))
    assert f.degree == 6
    assert f.multiplicity(4) == (1, 2, 3, 0)
    assert Flag.from_multiplicity((1, 2, 3, 0)) == f
    with pytest.raises(ValueError):
        Flag(((0,), (1,)))


def test_enumeration_counts_against_multiset_bound():
    # Finite type attains the bound; an infinite full subset cuts it.
    a2 = parse_system("A2")
    for k in range(6):
        assert len(enumerate_flags(a2, k)) == flag_count_bound(2, k) == comb(k + 1, k)
    at2 = parse_system("A~2")
    assert len(enumerate_flags(at2, 3)) == flag_count_bound(3, 3) - 1
    assert len(enumerate_flags(at2, 4)) == flag_count_bound(3, 4) - 3


def test_boundary_of_single_generator():
    # d e({s}) = (s - 1) e(empty): the two coset representatives of the
    # rank one parabolic, with the identity carrying the minus sign.
    terms = boundary_flag(parse_system("A1"), Flag(((0,),)))
    by_word = {t.beta_word: t.sign for t in terms}
    assert by_word == {(): -1, (0,): 1}
    assert all(t.target == Flag(()) for t in terms)


def test_boundary_of_repeated_generator_tower():
    # d e({s} >= {s}) = (1 + s) e({s}): both representatives enter with
    # the plus sign, so the trivial specialization is multiplication by 2
    # and the sign specialization is zero.
    terms = boundary_flag(parse_system("A~1"), Flag(((0,), (0,))))
    assert {t.beta_word for t in terms} == {(), (0,)}
    assert all(t.sign == 1 for t in terms)
    assert all(t.target == Flag(((0,),)) for t in terms)


def test_boundary_targets_conjugated_strata():
    # In A2 the long coset representative conjugates s to t, so flags
    # with a deeper stratum reappear relabeled.
    sys_ = parse_system("A2")
    terms = boundary_flag(sys_, Flag(((0, 1), (0,))))
    targets = {t.target for t in terms}
    assert Flag(((0,), (0,))) in targets
    assert Flag(((1,), (1,))) in targets
    # Every target is a well formed flag of degree 2.
    assert all(t.target.degree == 2 for t in terms)


@pytest.mark.parametrize("rep", ["sign", "trivial"])
@pytest.mark.parametrize("name,kmax", [("A~1", 6), ("A~2", 4), ("B2", 5), ("C~2", 4), ("H3", 4)])
def test_resolution_squares_to_zero(name, kmax, rep):
    R = specialize_resolution(parse_system(name), kmax, rep)
    R.verify_chain()
    assert R.complex.dims == [
        len(enumerate_flags(parse_system(name), k)) for k in range(kmax + 1)
    ]


def test_single_stratum_block_is_minus_artin_at_one():
    # Cochains on one-stratum flags match the nerve complex specialized
    # at q = 1 up to a global sign, basis by basis.
    for name in ("A~2", "A3", "I2(5)", "C~2"):
        sys_ = parse_system(name)
        C = artin_complex(sys_)
        S = specialize(C, 1)
        R = specialize_resolution(sys_, C.top, "sign")
        for k in range(1, C.top + 1):
            rows = {
                f.subsets[0] if f.length == 1 else (): i
                for i, f in enumerate(R.flags[k - 1])
                if f.length <= 1
            }
            cols = {
                f.subsets[0]: j for j, f in enumerate(R.flags[k]) if f.length == 1
            }
            art = S.complex.boundaries[k]
            res = R.complex.boundaries[k]
            for b, J in enumerate(C.nerve.simplices[k]):
                for a, I in enumerate(C.nerve.simplices[k - 1]):
                    assert res[rows[I]][cols[J]] == -art[a][b]


def test_sign_extension_passes_and_trivial_fails():
    for name in ("A~1", "A~2"):
        sys_ = parse_system(name)
        assert verify_sign_extension(sys_, 3, "sign").passed
        report = verify_sign_extension(sys_, 3, "trivial")
        assert not report.passed
        # Failures occur exactly in the degrees that have columns whose
        # second stratum is a single extra generator.
        for check in report.checks:
            assert check.passed == (check.single_columns == 0)


def test_sign_extension_failure_values_are_doubled_units():
    # A failing trivial column contributes 1 + rho(s) = 2 against the
    # single stratum row it covers.
    report = verify_sign_extension(parse_system("A~1"), 1, "trivial")
    (check,) = report.checks
    assert not check.passed
    assert all(value in (2, -2) for _, _, value in check.failures)


def test_random_systems_resolution_chain():
    rng = random.Random(5150)
    count = 0
    while count < 12:
        sys_ = random_system(rng, max_rank=4)
        R = specialize_resolution(sys_, 3, "sign")
        R.verify_chain()
        R = specialize_resolution(sys_, 3, "trivial")
        R.verify_chain()
        count += 1


def test_rep_validation():
    with pytest.raises(ValueError):
        specialize_resolution(parse_system("A2"), 2, "fancy")
