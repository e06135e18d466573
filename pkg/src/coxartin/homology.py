"""Integer chain complexes and their exact homology.

Ranks and torsion come from Smith normal form over exact integers. Two
interchangeable backends exist: a compiled int64 kernel with overflow
detection and a pure Python big-int fallback. The compiled path is tried
first and any overflow silently reroutes to the exact fallback, so
results never depend on which backend ran.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _snfpure
from .nerve import IntMatrix, NerveComplex, boundary_matrix_d0, build_nerve
from .coxeter import CoxeterSystem

try:
    from . import _snfcore
except ImportError:
    _snfcore = None

HAVE_COMPILED = _snfcore is not None


def smith_normal_form(mat: IntMatrix) -> tuple[list[int], int]:
    """Divisor chain d1 | d2 | ... (each positive) and the rank of mat."""
    if not mat or not mat[0]:
        return [], 0
    if _snfcore is not None:
        import numpy as np

        try:
            arr = np.array(mat, dtype=np.int64)
        except OverflowError:
            pass
        else:
            try:
                divisors, rank = _snfcore.snf_int64(arr)
                return list(divisors), rank
            except OverflowError:
                pass
    return _snfpure.smith_normal_form(mat)


def kernel_basis(mat: IntMatrix) -> list[list[int]]:
    """Primitive integer basis of the kernel (always the exact backend)."""
    return _snfpure.kernel_basis(mat)


def matrix_rank(mat: IntMatrix) -> int:
    return smith_normal_form(mat)[1]


@dataclass(frozen=True)
class HomologyGroup:
    """One homology group: free rank plus its torsion divisor chain."""

    free_rank: int
    torsion: tuple[int, ...]

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def __str__(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " + ".join(parts) if parts else "0"


class GradedIntComplex:
    """A chain complex of finitely generated free abelian groups.

    dims[k] is the rank of the degree k module; boundaries[k] maps degree
    k to degree k-1 for 1 <= k <= top, stored as dense row lists.
    """

    def __init__(self, dims: list[int], boundaries: dict[int, IntMatrix]):
        self.dims = list(dims)
        self.top = len(self.dims) - 1
        self.boundaries = {}
        for k in range(1, self.top + 1):
            mat = boundaries.get(k)
            if mat is None:
                raise ValueError(f"missing boundary in degree {k}")
            if len(mat) != self.dims[k - 1] or any(
                len(row) != self.dims[k] for row in mat
            ):
                raise ValueError(f"boundary shape mismatch in degree {k}")
            self.boundaries[k] = mat
        self._chain_checked = False

    def boundary(self, k: int) -> IntMatrix:
        """Boundary out of degree k; zero map outside 1..top."""
        if 1 <= k <= self.top:
            return self.boundaries[k]
        if k == 0:
            return []
        return [[] for _ in range(self.dims[self.top])] if k == self.top + 1 else []

    def verify_chain(self) -> None:
        """Check every composite boundary vanishes; raises on failure."""
        if self._chain_checked:
            return
        for k in range(2, self.top + 1):
            outer = self.boundaries[k - 1]
            inner = self.boundaries[k]
            for j in range(self.dims[k]):
                col = [inner[i][j] for i in range(self.dims[k - 1])]
                for i in range(self.dims[k - 2]):
                    acc = 0
                    row = outer[i]
                    for x, v in enumerate(col):
                        if v:
                            acc += row[x] * v
                    if acc:
                        raise ValueError(
                            f"chain condition violated at degree {k}, "
                            f"entry ({i}, {j})"
                        )
        self._chain_checked = True

    def _boundary_rank(self, k: int) -> int:
        if not 1 <= k <= self.top:
            return 0
        return matrix_rank(self.boundaries[k])

    def homology(self, k: int) -> HomologyGroup:
        """Exact homology in degree k (free rank and torsion)."""
        self.verify_chain()
        if not 0 <= k <= self.top:
            return HomologyGroup(0, ())
        cycles = self.dims[k] - self._boundary_rank(k)
        if k + 1 <= self.top:
            divisors, rank_in = smith_normal_form(self.boundaries[k + 1])
        else:
            divisors, rank_in = [], 0
        free = cycles - rank_in
        if free < 0:
            raise ValueError("boundary ranks are inconsistent")
        return HomologyGroup(free, tuple(d for d in divisors if d > 1))

    def homology_all(self) -> list[HomologyGroup]:
        return [self.homology(k) for k in range(self.top + 1)]


def homology_of_complex(cx: GradedIntComplex, k: int) -> HomologyGroup:
    return cx.homology(k)


def d0_complex(K: NerveComplex) -> GradedIntComplex:
    """The integer nerve complex with the empty simplex in degree zero."""
    dims = [len(level) for level in K.simplices]
    boundaries = {k: boundary_matrix_d0(K, k) for k in range(1, K.vd + 1)}
    return GradedIntComplex(dims, boundaries)


def _d0_homology(sys: CoxeterSystem) -> list[HomologyGroup]:
    return d0_complex(build_nerve(sys)).homology_all()


def hvd(sys: CoxeterSystem) -> int | None:
    """Top degree with nonvanishing nerve homology, torsion included."""
    groups = _d0_homology(sys)
    out = None
    for k, g in enumerate(groups):
        if not g.is_trivial:
            out = k
    return out


def rhvd(sys: CoxeterSystem) -> int | None:
    """Top degree with nonvanishing rational nerve homology."""
    groups = _d0_homology(sys)
    out = None
    for k, g in enumerate(groups):
        if g.free_rank > 0:
            out = k
    return out
