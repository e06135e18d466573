"""Materialized finite standard parabolics.

Finite subgroups are realized through coset enumeration of the trivial
subgroup over the defining presentation, which yields the regular action
of the generators. Because every generator is an involution the coset
table is kept symmetric (defining a.s = b also defines b.s = a), so the
square relators hold by construction and only braid relators are scanned.

A breadth first search over the completed table, taking generators in the
fixed order, assigns every element its ShortLex least reduced word; word
length under that scheme equals Coxeter length. The classification order
is asserted after enumeration, so a wrong table cannot survive silently.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .classify import classify
from .coxeter import INFINITE, CoxeterSystem

DEFAULT_CAP = 20000


class InfiniteTypeError(ValueError):
    """Raised when an operation needs a finite parabolic but got an infinite one."""


class OrderCapError(ValueError):
    """Raised when a group is finite but larger than the materialization cap."""

    def __init__(self, order: int, cap: int, subset_names: tuple[str, ...]):
        self.order = order
        self.cap = cap
        self.subset_names = subset_names
        super().__init__(
            f"order over cap: |W_J| = {order} exceeds cap {cap} for J = {subset_names}"
        )


def _coset_enumeration(k: int, relators: list[tuple[int, ...]], max_cosets: int):
    """Coset table of the trivial subgroup for k involutive generators.

    Returns the complete regular action as a list of rows, identity first.
    HLT strategy: scan every relator from every live coset, filling gaps,
    then define any still-missing images. Coincidences are merged through
    a union-find keeping the smallest index, so coset 0 survives.
    """
    table: list[list[int]] = [[-1] * k]
    parent = [0]

    def rep(a: int) -> int:
        r = a
        while parent[r] != r:
            r = parent[r]
        while parent[a] != r:
            parent[a], a = r, parent[a]
        return r

    def coincidence(a: int, b: int) -> None:
        queue: deque[int] = deque()

        def merge(x: int, y: int) -> None:
            x, y = rep(x), rep(y)
            if x != y:
                keep, dead = (x, y) if x < y else (y, x)
                parent[dead] = keep
                queue.append(dead)

        merge(a, b)
        while queue:
            dead = queue.popleft()
            row = table[dead]
            for x in range(k):
                d = row[x]
                if d == -1:
                    continue
                table[d][x] = -1  # drop the mirrored edge before rewiring
                mu, nu = rep(dead), rep(d)
                if table[mu][x] != -1:
                    merge(nu, table[mu][x])
                elif table[nu][x] != -1:
                    merge(mu, table[nu][x])
                else:
                    table[mu][x] = nu
                    table[nu][x] = mu

    def define(a: int, x: int) -> int:
        n = len(table)
        if n >= max_cosets:
            raise RuntimeError("coset table exceeded its safety bound")
        table.append([-1] * k)
        parent.append(n)
        table[a][x] = n
        table[n][x] = a
        return n

    def scan_and_fill(alpha: int, w: tuple[int, ...]) -> None:
        f, b = alpha, alpha
        i, r = 0, len(w) - 1
        while True:
            while i <= r and table[f][w[i]] != -1:
                f = table[f][w[i]]
                i += 1
            if i > r:
                if f != b:
                    coincidence(f, b)
                return
            while r >= i and table[b][w[r]] != -1:
                b = table[b][w[r]]
                r -= 1
            if r < i:
                coincidence(f, b)
                return
            if r == i:
                table[f][w[i]] = b
                table[b][w[i]] = f
                return
            define(f, w[i])

    alpha = 0
    while alpha < len(table):
        if parent[alpha] == alpha:
            for w in relators:
                scan_and_fill(alpha, w)
                if parent[alpha] != alpha:
                    break
            if parent[alpha] == alpha:
                for x in range(k):
                    if table[alpha][x] == -1:
                        define(alpha, x)
        alpha += 1

    live = [i for i in range(len(table)) if parent[i] == i]
    renum = {old: new for new, old in enumerate(live)}
    return [[renum[rep(table[old][x])] for x in range(k)] for old in live]


def _shortlex_normal_forms(action: list[list[int]]):
    """ShortLex least reduced words via BFS in generator order."""
    n = len(action)
    k = len(action[0]) if action else 0
    words: list[tuple[int, ...] | None] = [None] * n
    lengths = [0] * n
    words[0] = ()
    dq = deque([0])
    while dq:
        a = dq.popleft()
        wa = words[a]
        for x in range(k):
            b = action[a][x]
            if words[b] is None:
                words[b] = wa + (x,)
                lengths[b] = lengths[a] + 1
                dq.append(b)
    if any(w is None for w in words):
        raise RuntimeError("regular action is not transitive")
    return words, lengths


@dataclass
class FiniteGroupTable:
    """Regular action of a finite parabolic, with ShortLex normal forms.

    Elements are integers 0..order-1, identity 0. gen_action[a][c] is a
    multiplied on the right by the c-th generator of the subset. Words are
    stored over local columns; helpers translate to global indices.
    """

    subset: tuple[int, ...]
    generator_names: tuple[str, ...]
    order: int
    gen_action: list[list[int]]
    local_words: list[tuple[int, ...]]
    lengths: list[int]
    _inverses: list[int] | None = field(default=None, repr=False)

    def local_column(self, gen: int) -> int:
        try:
            return self.subset.index(gen)
        except ValueError:
            raise ValueError(f"generator {gen} is not in subset {self.subset}") from None

    def right_mult_gen(self, a: int, gen: int) -> int:
        return self.gen_action[a][self.local_column(gen)]

    def trace(self, start: int, local_word: tuple[int, ...]) -> int:
        for x in local_word:
            start = self.gen_action[start][x]
        return start

    def element_of_word(self, word: tuple[int, ...]) -> int:
        """Element of a word given over global generator indices."""
        return self.trace(0, tuple(self.local_column(g) for g in word))

    def mult(self, a: int, b: int) -> int:
        return self.trace(a, self.local_words[b])

    def inverse(self, a: int) -> int:
        if self._inverses is None:
            inv = [self.trace(0, w[::-1]) for w in self.local_words]
            self._inverses = inv
        return self._inverses[a]

    def word(self, a: int) -> tuple[int, ...]:
        """ShortLex least reduced word over global generator indices."""
        return tuple(self.subset[x] for x in self.local_words[a])

    @property
    def elements(self) -> list[tuple[int, ...]]:
        return [self.word(a) for a in range(self.order)]


_CORE_CACHE: dict[tuple, tuple] = {}


def _materialize_core(matrix_key: tuple, k: int):
    cached = _CORE_CACHE.get(matrix_key)
    if cached is not None:
        return cached
    relators = []
    for i in range(k):
        for j in range(i + 1, k):
            m = matrix_key[i][j]
            if m != INFINITE:
                relators.append((i, j) * int(m))
    relators.sort(key=len)
    if k == 0:
        action = [[]]
    else:
        action = _coset_enumeration(k, relators, max_cosets=2_000_000)
    words, lengths = _shortlex_normal_forms(action)
    core = (action, words, lengths)
    _CORE_CACHE[matrix_key] = core
    return core


def materialize_group(
    sys: CoxeterSystem,
    subset: tuple[int, ...] | None = None,
    cap: int = DEFAULT_CAP,
) -> FiniteGroupTable:
    """Regular action table of a finite parabolic, subject to an order cap.

    The subset is classified first: infinite type raises InfiniteTypeError
    and a finite order above the cap raises OrderCapError carrying the
    exact order, so enumeration never starts on a hopeless input.
    """
    J = tuple(sorted(set(subset if subset is not None else sys.full_subset())))
    names = tuple(sys.generators[i] for i in J)
    result = classify(sys, J)
    if not result.finite:
        raise InfiniteTypeError(f"subset {names} spans an infinite Coxeter group")
    if result.order > cap:
        raise OrderCapError(result.order, cap, names)
    matrix_key = tuple(tuple(sys.m(i, j) for j in J) for i in J)
    action, words, lengths = _materialize_core(matrix_key, len(J))
    if len(action) != result.order:
        raise RuntimeError(
            f"enumeration produced {len(action)} elements, classification says "
            f"{result.order}"
        )
    return FiniteGroupTable(
        subset=J,
        generator_names=names,
        order=len(action),
        gen_action=action,
        local_words=words,
        lengths=lengths,
    )


def minimal_coset_representatives(
    table: FiniteGroupTable, subset_I: tuple[int, ...]
) -> list[int]:
    """Minimal length representatives of the cosets beta W_I inside W_J.

    Characterized by the descent condition: beta is the unique minimum of
    its coset exactly when ell(beta s) > ell(beta) for every s in I. The
    count is checked against Lagrange's theorem before returning.
    """
    I = tuple(sorted(set(subset_I)))
    cols = [table.local_column(g) for g in I]
    lengths = table.lengths
    action = table.gen_action
    reps = [
        a
        for a in range(table.order)
        if all(lengths[action[a][c]] > lengths[a] for c in cols)
    ]
    # Orbit of the identity under right multiplication by I is W_I itself.
    sub_order = 1
    if cols:
        seen = {0}
        dq = deque([0])
        while dq:
            a = dq.popleft()
            for c in cols:
                b = action[a][c]
                if b not in seen:
                    seen.add(b)
                    dq.append(b)
        sub_order = len(seen)
    if len(reps) * sub_order != table.order:
        raise RuntimeError("descent computation violated Lagrange's theorem")
    return reps


def psi_section(table: FiniteGroupTable, w: int) -> tuple[int, ...]:
    """Set-level section into the Artin generators.

    Reads off the ShortLex reduced word of w; the resulting positive word
    has length exactly ell(w).
    """
    return table.word(w)
