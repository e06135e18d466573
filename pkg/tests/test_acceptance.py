"""End to end acceptance battery.

One test per numbered criterion; each prints a single ACCEPTANCE n PASS
line when it completes (pytest -v shows one PASSED/FAILED line per
criterion either way). Everything is exact integer or polynomial
arithmetic, so every check is a strict equality with zero tolerance.
"""

import itertools
import random
import time
from math import lcm

from coxartin import (
    artin_complex,
    build_nerve,
    d0_complex,
    delta_map,
    exact_div,
    genus_report,
    kernel_basis,
    materialize_group,
    minimal_coset_representatives,
    parse_system,
    poincare_polynomial,
    quotient_L,
    specialize,
    specialize_resolution,
    verify_polynomial_chain,
    verify_sign_extension,
)
from coxartin.classify import classify

from conftest import AFFINE_TIER, CATALOG, random_system


def test_criterion_01_affine_genus_exact():
    # Rank n+1 affine systems report genus exactly n+1, within 10 seconds.
    t0 = time.perf_counter()
    for name in AFFINE_TIER:
        sys_ = parse_system(name)
        rep = genus_report(sys_, name)
        assert rep.affine_like, name
        assert rep.genus_exact == sys_.rank, (name, rep.genus_exact)
    elapsed = time.perf_counter() - t0
    assert elapsed < 10.0, f"took {elapsed:.1f}s"
    print(f"ACCEPTANCE 1 PASS ({len(AFFINE_TIER)} systems in {elapsed:.3f}s)")


def test_criterion_02_sphere_homology():
    # The nerve of a rank n+1 affine system is an (n-1)-sphere: the
    # augmented complex has one Z in degree n and nothing anywhere else.
    for name in AFFINE_TIER:
        sys_ = parse_system(name)
        n = sys_.rank - 1
        groups = d0_complex(build_nerve(sys_)).homology_all()
        assert len(groups) == n + 1, name
        for k, h in enumerate(groups):
            if k == n:
                assert h.free_rank == 1 and not h.torsion, (name, k, str(h))
            else:
                assert h.is_trivial, (name, k, str(h))
    print(f"ACCEPTANCE 2 PASS ({len(AFFINE_TIER)} sphere tables)")


def test_criterion_03_free_part_witness():
    # H_n of the q = 1 specialization has free rank >= 1, witnessed by an
    # explicit cycle: scale a top cycle z of the integer nerve complex
    # coordinatewise by lcm(W_J(1)) / W_J(1). The polynomial boundary
    # entry times the scale factor telescopes back to the integer
    # boundary, so the image vanishes coordinate by coordinate.
    for name in AFFINE_TIER:
        sys_ = parse_system(name)
        n = sys_.rank - 1
        C = artin_complex(sys_)
        S = specialize(C, 1)
        assert S.homology(n).free_rank >= 1, name

        K = C.nerve
        cycles = kernel_basis(d0_complex(K).boundaries[n])
        assert cycles, name
        z = cycles[0]
        orders = [poincare_polynomial(sys_, J).eval_at(1) for J in K.simplices[n]]
        L = lcm(*orders)
        witness = [zj * (L // o) for zj, o in zip(z, orders)]
        assert any(witness), name
        mat = S.complex.boundaries[n]
        image = [
            sum(row[j] * witness[j] for j in range(len(witness))) for row in mat
        ]
        assert all(v == 0 for v in image), (name, image)
    print(f"ACCEPTANCE 3 PASS ({len(AFFINE_TIER)} explicit cycles)")


def test_criterion_04_chain_conditions():
    # dd = 0 for the integer nerve complex, the polynomial complex, every
    # specialization in {-1, 0, 1, 2} and both rank one resolutions up to
    # kmax = 4, over the catalog and 200 random systems with entries in
    # {2, 3, 4, 5, infinity}. Each verifier raises on the first failure.
    def battery(sys_):
        C = artin_complex(sys_)
        verify_polynomial_chain(C)
        d0_complex(C.nerve).verify_chain()
        for q in (-1, 0, 1, 2):
            specialize(C, q).complex.verify_chain()
        for rep in ("sign", "trivial"):
            specialize_resolution(sys_, 4, rep).verify_chain()

    for name in CATALOG:
        battery(parse_system(name))
    rng = random.Random(20260815)
    for _ in range(200):
        battery(random_system(rng, max_rank=5))
    print(f"ACCEPTANCE 4 PASS ({len(CATALOG)} catalog + 200 random systems)")


def test_criterion_05_short_exact_sequence():
    # Degreewise certificates over the whole catalog: the diagonal map is
    # injective and a chain map, the projection kills its image, and the
    # kernel and image generators agree coordinate by coordinate.
    for name in CATALOG:
        C = artin_complex(parse_system(name))
        delta_map(C)
        L = quotient_L(C)
        L.verify_chain()
    print(f"ACCEPTANCE 5 PASS ({len(CATALOG)} certified sequences)")


def test_criterion_06_divisibility_on_nerve_edges():
    # W_I(q) divides W_J(q) exactly for every facet pair I of J.
    edges = 0
    failures = []
    for name in CATALOG:
        sys_ = parse_system(name)
        K = build_nerve(sys_)
        polys = [
            [poincare_polynomial(sys_, J) for J in level] for level in K.simplices
        ]
        for k in range(1, K.vd + 1):
            rows = K.degree_index(k - 1)
            for j, J in enumerate(K.simplices[k]):
                for drop in range(k):
                    facet = J[:drop] + J[drop + 1 :]
                    try:
                        exact_div(polys[k][j], polys[k - 1][rows[facet]])
                    except ValueError:
                        failures.append((name, J, facet))
                    edges += 1
    assert edges > 0
    assert not failures, failures[:5]
    print(f"ACCEPTANCE 6 PASS ({edges} nerve edges, 0 remainders)")


def test_criterion_07_poincare_against_census():
    # Degrees-formula polynomial equals the BFS length census for every
    # finite parabolic type of order <= 20000 appearing in the catalog
    # nerves. Types are deduplicated by their restricted Coxeter matrix.
    seen = set()
    checked = 0
    for name in CATALOG:
        sys_ = parse_system(name)
        for level in build_nerve(sys_).simplices:
            for J in level:
                if not J:
                    continue
                order = classify(sys_, J).order
                if order is None or order > 20000:
                    continue
                key = tuple(tuple(sys_.matrix[a][b] for b in J) for a in J)
                if key in seen:
                    continue
                seen.add(key)
                table = materialize_group(sys_, J)
                census: dict[int, int] = {}
                for length in table.lengths:
                    census[length] = census.get(length, 0) + 1
                coeffs = list(poincare_polynomial(sys_, J).coeffs)
                assert coeffs == [
                    census.get(i, 0) for i in range(len(coeffs))
                ], (name, J)
                checked += 1
    assert checked > 0
    print(f"ACCEPTANCE 7 PASS ({checked} parabolic types against BFS census)")


def test_criterion_08_coset_representatives():
    # Descent-condition representatives equal the brute-force per-coset
    # length minima, each minimum unique, for every nested pair I of J
    # with |W_J| <= 1152 over the catalog nerves (deduplicated by the
    # restricted matrix of J and the positions I occupies inside it).
    seen = set()
    pairs = 0
    for name in CATALOG:
        sys_ = parse_system(name)
        for level in build_nerve(sys_).simplices:
            for J in level:
                if not J:
                    continue
                order = classify(sys_, J).order
                if order is None or order > 1152:
                    continue
                sub = tuple(tuple(sys_.matrix[a][b] for b in J) for a in J)
                table = None
                for r in range(len(J)):
                    for I in itertools.combinations(J, r):
                        key = (sub, tuple(J.index(i) for i in I))
                        if key in seen:
                            continue
                        seen.add(key)
                        if table is None:
                            table = materialize_group(sys_, J)
                        reps = set(minimal_coset_representatives(table, I))
                        cols = [table.local_column(g) for g in I]
                        members = [0]
                        found = {0}
                        queue = [0]
                        while queue:
                            a = queue.pop()
                            for c in cols:
                                b = table.gen_action[a][c]
                                if b not in found:
                                    found.add(b)
                                    members.append(b)
                                    queue.append(b)
                        visited: set[int] = set()
                        minima = set()
                        for w in range(table.order):
                            if w in visited:
                                continue
                            coset = {table.mult(w, u) for u in members}
                            visited |= coset
                            best = min(coset, key=lambda x: table.lengths[x])
                            low = table.lengths[best]
                            ties = sum(
                                1 for x in coset if table.lengths[x] == low
                            )
                            assert ties == 1, (name, J, I, "minimum not unique")
                            minima.add(best)
                        assert minima == reps, (name, J, I)
                        pairs += 1
    assert pairs > 0
    print(f"ACCEPTANCE 8 PASS ({pairs} subset pairs, all minima unique)")


def test_criterion_09_sign_extension_dichotomy():
    for name in ("A~1", "A~2"):
        sys_ = parse_system(name)
        assert verify_sign_extension(sys_, 3, "sign").passed, name
        assert not verify_sign_extension(sys_, 3, "trivial").passed, name
    print("ACCEPTANCE 9 PASS (sign passes, trivial fails, k <= 3)")


def test_criterion_10_genus_bounds():
    rng = random.Random(8151967)
    affine_like_seen = 0
    for _ in range(200):
        rep = genus_report(random_system(rng, max_rank=5))
        assert rep.genus_lower <= rep.genus_upper
        if rep.affine_like:
            affine_like_seen += 1
            assert rep.genus_lower == rep.genus_upper
    assert affine_like_seen > 0
    print(f"ACCEPTANCE 10 PASS (200 systems, {affine_like_seen} affine-like)")
