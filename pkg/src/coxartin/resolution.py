"""Truncated free resolution built from flags of finite type subsets.

A degree k cell is a weakly decreasing chain Gamma_1 >= Gamma_2 >= ... of
generator subsets with W_{Gamma_1} finite and total cardinality k. Such a
chain is the same data as a multiplicity vector a with sum k, through
Gamma_i = {s : a_s >= i}; the count of cells is therefore bounded by the
multiset number C(n + k - 1, k), with equality exactly when every subset
spans a finite parabolic.

The boundary removes one generator tau from one stratum Gamma_i whose
cardinality strictly drops at the next stratum, and sums over the minimal
coset representatives beta of W_{Gamma_i} modulo the shrunken stratum,
keeping only those beta whose conjugation action maps every deeper
stratum into the shrunken one generator by generator. The sign exponent
adds four pieces: the stratum index times ell(beta), the total size of
the strata above, the position of tau inside its stratum, and the
inversion count of the conjugation permutation on each deeper stratum.

Coefficients live in the group ring; specializing through a rank one
representation ("trivial": every generator to +1, "sign": to -1) yields
integer complexes that are checked to square to zero within the
truncation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from .classify import classify
from .coxeter import CoxeterSystem
from .groups import (
    DEFAULT_CAP,
    FiniteGroupTable,
    materialize_group,
    minimal_coset_representatives,
)
from .homology import GradedIntComplex, IntMatrix


@dataclass(frozen=True)
class Flag:
    """A nested chain of generator subsets, trailing empties dropped."""

    subsets: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        subs = tuple(tuple(sorted(s)) for s in self.subsets)
        while subs and not subs[-1]:
            subs = subs[:-1]
        object.__setattr__(self, "subsets", subs)
        for a, b in zip(self.subsets, self.subsets[1:]):
            if not set(a) >= set(b):
                raise ValueError("flag strata must be nested")
        if any(not s for s in self.subsets):
            raise ValueError("only trailing strata may be empty")

    @property
    def degree(self) -> int:
        return sum(len(s) for s in self.subsets)

    @property
    def length(self) -> int:
        return len(self.subsets)

    def multiplicity(self, rank: int) -> tuple[int, ...]:
        counts = [0] * rank
        for s in self.subsets:
            for x in s:
                counts[x] += 1
        return tuple(counts)

    @staticmethod
    def from_multiplicity(vec: tuple[int, ...]) -> "Flag":
        depth = max(vec, default=0)
        return Flag(
            tuple(
                tuple(s for s, a in enumerate(vec) if a >= i)
                for i in range(1, depth + 1)
            )
        )


@dataclass(frozen=True)
class FlagBoundaryTerm:
    """One summand of a flag boundary: signed group element times a cell."""

    target: Flag
    sign: int
    beta_word: tuple[int, ...]
    beta_length: int


def flag_count_bound(rank: int, k: int) -> int:
    """Multiset bound C(rank + k - 1, k); attained only for finite type."""
    return comb(rank + k - 1, k)


def enumerate_flags(sys: CoxeterSystem, k: int) -> list[Flag]:
    """All degree k flags, ordered by multiplicity vector."""
    if k < 0:
        raise ValueError("flag degree must be non-negative")
    n = sys.rank
    finite_cache: dict[tuple[int, ...], bool] = {}

    def support_ok(support: tuple[int, ...]) -> bool:
        got = finite_cache.get(support)
        if got is None:
            got = classify(sys, support).finite
            finite_cache[support] = got
        return got

    out: list[Flag] = []

    def extend(pos: int, remaining: int, vec: list[int]) -> None:
        if pos == n:
            if remaining == 0:
                support = tuple(i for i, a in enumerate(vec) if a)
                if support_ok(support):
                    out.append(Flag.from_multiplicity(tuple(vec)))
            return
        for a in range(remaining + 1):
            vec[pos] = a
            extend(pos + 1, remaining - a, vec)
        vec[pos] = 0

    extend(0, k, [0] * n)
    return out


_BOUNDARY_CACHE: dict[tuple, tuple[FlagBoundaryTerm, ...]] = {}


def _conjugate_letter(table: FiniteGroupTable, inv_beta: int, beta: int, s: int):
    """beta^-1 s beta when it is again a standard generator, else None."""
    c = table.mult(table.mult(inv_beta, table.element_of_word((s,))), beta)
    if table.lengths[c] != 1:
        return None
    return table.word(c)[0]


def boundary_flag(
    sys: CoxeterSystem, flag: Flag, cap: int = DEFAULT_CAP
) -> list[FlagBoundaryTerm]:
    """All boundary terms of one flag cell.

    Materializes W_{Gamma_i} for each stratum with a strict drop, so the
    order cap applies; the error identifies the offending stratum through
    the generator names it carries.
    """
    key = (sys.matrix, flag.subsets, cap)
    cached = _BOUNDARY_CACHE.get(key)
    if cached is not None:
        return list(cached)
    subs = flag.subsets
    d = len(subs)
    terms: list[FlagBoundaryTerm] = []
    for i in range(1, d + 1):
        gamma = subs[i - 1]
        deeper = subs[i:]
        next_size = len(deeper[0]) if deeper else 0
        if len(gamma) == next_size:
            continue
        table = materialize_group(sys, gamma, cap)
        above = sum(len(subs[x]) for x in range(i - 1))
        for tau in gamma:
            shrunk = tuple(x for x in gamma if x != tau)
            mu = sum(1 for x in gamma if x <= tau)
            reps = minimal_coset_representatives(table, shrunk)
            for beta in reps:
                inv_beta = table.inverse(beta)
                conj: dict[int, int] = {}
                ok = True
                for s in (deeper[0] if deeper else ()):
                    letter = _conjugate_letter(table, inv_beta, beta, s)
                    if letter is None or letter == tau:
                        ok = False
                        break
                    conj[s] = letter
                if not ok:
                    continue
                alpha = i * table.lengths[beta] + above + mu
                tail = []
                for gj in deeper:
                    images = [conj[x] for x in gj]
                    alpha += sum(
                        1
                        for p in range(len(images))
                        for q in range(p + 1, len(images))
                        if images[p] > images[q]
                    )
                    tail.append(tuple(sorted(images)))
                target = Flag(subs[: i - 1] + (shrunk,) + tuple(tail))
                terms.append(
                    FlagBoundaryTerm(
                        target=target,
                        sign=-1 if alpha % 2 else 1,
                        beta_word=table.word(beta),
                        beta_length=table.lengths[beta],
                    )
                )
    _BOUNDARY_CACHE[key] = tuple(terms)
    return terms


def _rep_value(rep: str, beta_length: int) -> int:
    if rep == "trivial":
        return 1
    if rep == "sign":
        return -1 if beta_length % 2 else 1
    raise ValueError('representation must be "sign" or "trivial"')


@dataclass
class SpecializedResolution:
    """Integer matrices of the truncated resolution under a rank one rep."""

    system: CoxeterSystem
    rep: str
    kmax: int
    flags: list[list[Flag]]
    complex: GradedIntComplex = field(repr=False)

    def verify_chain(self) -> None:
        self.complex.verify_chain()


def specialize_resolution(
    sys: CoxeterSystem, kmax: int, rep: str = "sign", cap: int = DEFAULT_CAP
) -> SpecializedResolution:
    """Boundary matrices for degrees 1..kmax under the chosen representation."""
    _rep_value(rep, 0)
    if kmax < 0:
        raise ValueError("kmax must be non-negative")
    flags = [enumerate_flags(sys, k) for k in range(kmax + 1)]
    boundaries: dict[int, IntMatrix] = {}
    for k in range(1, kmax + 1):
        index = {f: i for i, f in enumerate(flags[k - 1])}
        mat = [[0] * len(flags[k]) for _ in flags[k - 1]]
        for j, f in enumerate(flags[k]):
            for term in boundary_flag(sys, f, cap):
                i = index[term.target]
                mat[i][j] += term.sign * _rep_value(rep, term.beta_length)
        boundaries[k] = mat
    cx = GradedIntComplex([len(fs) for fs in flags], boundaries)
    return SpecializedResolution(sys, rep, kmax, flags, cx)


@dataclass
class SignExtensionCheck:
    """Outcome of the extension check in one degree."""

    degree: int
    passed: bool
    deep_columns: int
    single_columns: int
    failures: list[tuple[Flag, Flag, int]]


@dataclass
class SignExtensionReport:
    rep: str
    kmax: int
    checks: list[SignExtensionCheck]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


def verify_sign_extension(
    sys: CoxeterSystem, kmax: int, rep: str = "sign", cap: int = DEFAULT_CAP
) -> SignExtensionReport:
    """Do cochains supported on single-stratum flags stay cocycles?

    For each degree k <= kmax, take the coboundary of every basis cochain
    supported on one-stratum flags and restrict it to the flags of length
    at least two in degree k + 1. Columns whose second stratum exceeds one
    generator, or with a nonempty third stratum, must vanish structurally
    under any rank one representation; columns with exactly one extra
    generator vanish exactly when 1 + rep(s) = 0, so the sign
    representation passes and the trivial one is expected to fail.
    """
    _rep_value(rep, 0)
    checks: list[SignExtensionCheck] = []
    for k in range(1, kmax + 1):
        columns = [f for f in enumerate_flags(sys, k + 1) if f.length >= 2]
        deep = single = 0
        failures: list[tuple[Flag, Flag, int]] = []
        for f in columns:
            second = len(f.subsets[1])
            third = len(f.subsets[2]) if f.length >= 3 else 0
            if second > 1 or third > 0:
                deep += 1
            else:
                single += 1
            acc: dict[Flag, int] = {}
            for term in boundary_flag(sys, f, cap):
                if term.target.length <= 1:
                    value = term.sign * _rep_value(rep, term.beta_length)
                    acc[term.target] = acc.get(term.target, 0) + value
            for target, value in acc.items():
                if value:
                    failures.append((f, target, value))
        checks.append(
            SignExtensionCheck(k, not failures, deep, single, failures)
        )
    return SignExtensionReport(rep, kmax, checks)
