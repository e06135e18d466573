"""The rank one chain complex of an Artin system over Z[q, q^-1].

Generators in degree k are the finite type k-subsets; the boundary entry
for a facet I of J is the incidence sign times the exact polynomial
quotient W_J(q) / W_I(q). Specializing q to an integer gives ordinary
integer complexes: q = 1 carries the sign local system, q = -1 the
trivial one.

The diagonal map e_J -> W_J(q) e0_J embeds this complex into the nerve
complex with polynomial coefficients; the cokernel is the quotient
complex whose coordinates live in R / (W_J(q)). Both come with explicit
verification: the chain map identity is checked edge by edge and the
kernel-image comparison reduces to equality of the principal ideal
generators in each coordinate.
"""

from __future__ import annotations

from dataclasses import dataclass

from .homology import GradedIntComplex, HomologyGroup, d0_complex
from .nerve import NerveComplex, build_nerve, incidence_sign
from .coxeter import CoxeterSystem
from .poly import IntPoly, exact_div, mod_poly, poincare_polynomial

SparsePolyMatrix = dict[tuple[int, int], IntPoly]


@dataclass
class ArtinComplex:
    """Boundary data of the polynomial complex, kept sparse per degree."""

    nerve: NerveComplex
    poincare: list[list[IntPoly]]
    entries: dict[int, SparsePolyMatrix]

    @property
    def top(self) -> int:
        return self.nerve.vd

    def dims(self) -> list[int]:
        return [len(level) for level in self.nerve.simplices]

    def dense_boundary(self, k: int) -> list[list[IntPoly]]:
        rows = len(self.nerve.simplices[k - 1])
        cols = len(self.nerve.simplices[k])
        zero = IntPoly.zero()
        mat = [[zero] * cols for _ in range(rows)]
        for (i, j), p in self.entries[k].items():
            mat[i][j] = p
        return mat


def build_artin_complex(K: NerveComplex) -> ArtinComplex:
    poincare = [
        [poincare_polynomial(K.system, J) for J in level] for level in K.simplices
    ]
    entries: dict[int, SparsePolyMatrix] = {}
    for k in range(1, K.vd + 1):
        rows = K.degree_index(k - 1)
        sparse: SparsePolyMatrix = {}
        for j, J in enumerate(K.simplices[k]):
            wj = poincare[k][j]
            for drop in range(k):
                facet = J[:drop] + J[drop + 1 :]
                i = rows[facet]
                quot = exact_div(wj, poincare[k - 1][i])
                sign = incidence_sign(facet, J)
                sparse[(i, j)] = quot if sign == 1 else -quot
        entries[k] = sparse
    return ArtinComplex(K, poincare, entries)


def artin_complex(sys: CoxeterSystem) -> ArtinComplex:
    return build_artin_complex(build_nerve(sys))


def verify_polynomial_chain(C: ArtinComplex) -> None:
    """Composite boundary vanishes identically in Z[q]; raises otherwise."""
    zero = IntPoly.zero()
    for k in range(2, C.top + 1):
        outer, inner = C.entries[k - 1], C.entries[k]
        cols: dict[int, list[tuple[int, IntPoly]]] = {}
        for (i, j), p in inner.items():
            cols.setdefault(j, []).append((i, p))
        for j, col in cols.items():
            acc: dict[int, IntPoly] = {}
            for mid, p in col:
                for (i, jj), qpoly in outer.items():
                    if jj == mid:
                        acc[i] = acc.get(i, zero) + qpoly * p
            for i, total in acc.items():
                if total:
                    raise ValueError(
                        f"polynomial chain condition fails at degree {k}, "
                        f"entry ({i}, {j})"
                    )


@dataclass
class SpecializedComplex:
    """Integer complex obtained by evaluating q at a fixed integer."""

    value: int
    complex: GradedIntComplex

    def homology(self, k: int) -> HomologyGroup:
        return self.complex.homology(k)

    def homology_all(self) -> list[HomologyGroup]:
        return self.complex.homology_all()


def specialize(C: ArtinComplex, c: int) -> SpecializedComplex:
    dims = C.dims()
    boundaries = {}
    for k in range(1, C.top + 1):
        mat = [[0] * dims[k] for _ in range(dims[k - 1])]
        for (i, j), p in C.entries[k].items():
            mat[i][j] = p.eval_at(c)
        boundaries[k] = mat
    return SpecializedComplex(c, GradedIntComplex(dims, boundaries))


@dataclass
class DeltaMap:
    """Degreewise multiplication by W_J(q), a chain map into the nerve complex."""

    artin: ArtinComplex
    diagonals: list[list[IntPoly]]

    def verify(self) -> None:
        """Chain map identity: nerve boundary of W_J e0_J matches the image
        of the polynomial boundary, edge by edge."""
        C = self.artin
        K = C.nerve
        for k in range(1, C.top + 1):
            rows = K.degree_index(k - 1)
            for j, J in enumerate(K.simplices[k]):
                for drop in range(k):
                    facet = J[:drop] + J[drop + 1 :]
                    i = rows[facet]
                    sign = incidence_sign(facet, J)
                    entry = C.entries[k][(i, j)]
                    lhs = self.diagonals[k][j].scale(sign)
                    if lhs != self.diagonals[k - 1][i] * entry:
                        raise ValueError(
                            f"diagonal map fails at degree {k} edge ({i}, {j})"
                        )


def delta_map(C: ArtinComplex) -> DeltaMap:
    dm = DeltaMap(C, C.poincare)
    dm.verify()
    return dm


@dataclass
class QuotientComplexL:
    """Cokernel of the diagonal map, coordinatewise R / (W_J(q)).

    The boundary is induced by the nerve boundary with each entry reduced
    modulo the annihilator of its target coordinate.
    """

    artin: ArtinComplex
    annihilators: list[list[IntPoly]]
    entries: dict[int, SparsePolyMatrix]

    def verify_exactness(self) -> None:
        """Degreewise exactness certificates for the inclusion-projection pair.

        Injectivity of the diagonal: every W_J is a nonzero polynomial.
        Composite vanishes: W_J reduces to zero modulo the annihilator.
        Kernel equals image on each generator: both are the principal
        ideal of W_J, so the two generators must agree exactly.
        """
        for level_ann, level_diag in zip(self.annihilators, self.artin.poincare):
            for ann, diag in zip(level_ann, level_diag):
                if not diag:
                    raise ValueError("diagonal map entry vanishes")
                if mod_poly(diag, ann):
                    raise ValueError("projection does not kill the diagonal image")
                if ann != diag:
                    raise ValueError("kernel and image generators disagree")

    def verify_chain(self) -> None:
        """Composite boundary vanishes modulo the target annihilators."""
        zero = IntPoly.zero()
        for k in range(2, self.artin.top + 1):
            outer, inner = self.entries[k - 1], self.entries[k]
            acc: dict[tuple[int, int], IntPoly] = {}
            for (mid, j), p in inner.items():
                for (i, jj), qpoly in outer.items():
                    if jj == mid:
                        key = (i, j)
                        acc[key] = acc.get(key, zero) + qpoly * p
            for (i, j), total in acc.items():
                if mod_poly(total, self.annihilators[k - 2][i]):
                    raise ValueError(
                        f"quotient chain condition fails at degree {k} ({i}, {j})"
                    )


def quotient_L(
    C: ArtinComplex, d0: GradedIntComplex | None = None
) -> QuotientComplexL:
    """Quotient of the polynomial nerve complex by the diagonal image.

    d0 supplies the integer nerve boundaries that induce the quotient
    boundary; entries are reduced modulo the annihilator of the target.
    """
    if d0 is None:
        d0 = d0_complex(C.nerve)
    entries: dict[int, SparsePolyMatrix] = {}
    for k in range(1, C.top + 1):
        mat = d0.boundaries[k]
        sparse: SparsePolyMatrix = {}
        for i, row in enumerate(mat):
            ann = C.poincare[k - 1][i]
            for j, v in enumerate(row):
                if v:
                    reduced = mod_poly(IntPoly.constant(v), ann)
                    if reduced:
                        sparse[(i, j)] = reduced
        entries[k] = sparse
    L = QuotientComplexL(C, C.poincare, entries)
    L.verify_exactness()
    return L
