"""Contravariant inner products of lowering-operator states.

A state ``E_{j_n}^- ... E_{j_1}^- |Lambda>`` is identified with the word
``(j_1, ..., j_n)``.  The bra of a word uses the same storage, so
``<bra|ket> = <Lambda| E_{i_1}^+ ... E_{i_n}^+ E_{j_n}^- ... E_{j_1}^- |Lambda>``
for ``bra = (i_1, ..., i_n)``.  The form is normalized by ``<Lambda|Lambda> = 1``
and makes ``E_i^+`` adjoint to ``E_i^-``.

Words are treated formally: nothing requires their prefixes to stay inside
the weight system.  The values agree with the irreducible representation
because the form vanishes on every vector that is zero there.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .algebra import AlgebraSpec
from .errors import DomainError
from .weightsys import WeightSystem, Word, enumerate_paths, word_prefix_weights


class StateCombination(dict):
    """Integer linear combination of words; zero coefficients are never stored."""

    def add(self, word, coeff: int) -> None:
        if not coeff:
            return
        value = self.get(word, 0) + coeff
        if value:
            self[word] = value
        else:
            del self[word]

    def canonical(self) -> list[tuple[Word, int]]:
        return sorted(self.items())

    def __repr__(self) -> str:
        return f"StateCombination({dict(self.canonical())!r})"


def apply_raising(a: int, word, spec: AlgebraSpec, highest) -> StateCombination:
    """Expand ``E_a^+`` acting on the state of ``word``.

    Each occurrence of ``a`` at position ``k`` contributes the word with that
    letter deleted, weighted by the ``a``-th label of the weight reached after
    the first ``k - 1`` letters.
    """
    if not 1 <= a <= spec.rank:
        raise DomainError(f"root index {a} out of range 1..{spec.rank}")
    word = tuple(word)
    out = StateCombination()
    if a not in word:
        return out
    prefix = word_prefix_weights(spec, highest, word)
    for k, j in enumerate(word):
        if j == a:
            out.add(word[:k] + word[k + 1:], prefix[k][a - 1])
    return out


class InnerProductEngine:
    """Memoized recursion for ``<bra|ket>`` at a fixed highest weight.

    ``max_entries`` caps each cache (entries beyond the cap are simply not
    stored).  With ``ws`` and ``prune=True`` the expansions drop words that
    leave the weight system; such states are zero in the irreducible
    representation.  ``on_expand(a, word, combination)`` is called once per
    freshly computed expansion.
    """

    def __init__(self, spec: AlgebraSpec, highest, *, memo: bool = True,
                 max_entries: int | None = None, ws: WeightSystem | None = None,
                 prune: bool = False, on_expand=None):
        if prune and ws is None:
            raise ValueError("prune=True needs a weight system")
        self.spec = spec
        self.highest = tuple(highest)
        self.memo = memo
        self.max_entries = max_entries
        self.ws = ws
        self.prune = prune
        self.on_expand = on_expand
        self._expansions: dict = {}
        self._pairs: dict = {}
        self.nonpath_terms = 0

    def _store(self, cache: dict, key, value) -> None:
        if self.memo and (self.max_entries is None or len(cache) < self.max_entries):
            cache[key] = value

    def expand(self, a: int, word: Word) -> StateCombination:
        key = (a, word)
        if key in self._expansions:
            return self._expansions[key]
        combo = apply_raising(a, word, self.spec, self.highest)
        if self.ws is not None and self.ws.is_path(word):
            bad = [w for w in combo if not self.ws.is_path(w)]
            self.nonpath_terms += len(bad)
            if self.prune:
                for w in bad:
                    del combo[w]
        if self.on_expand is not None:
            self.on_expand(a, word, combo)
        self._store(self._expansions, key, combo)
        return combo

    def __call__(self, bra, ket) -> int:
        bra = tuple(bra)
        ket = tuple(ket)
        for letter in bra + ket:
            if not 1 <= letter <= self.spec.rank:
                raise DomainError(f"root index {letter} out of range 1..{self.spec.rank}")
        return self._pair(bra, ket)

    def _pair(self, bra: Word, ket: Word) -> int:
        # different level, then different weight: orthogonal
        if len(bra) != len(ket):
            return 0
        if not bra:
            return 1
        key = (bra, ket)
        if key in self._pairs:
            return self._pairs[key]
        if sorted(bra) != sorted(ket):
            return 0
        head = bra[:-1]
        value = 0
        for word, c in self.expand(bra[-1], ket).items():
            value += c * self._pair(head, word)
        self._store(self._pairs, key, value)
        return value

    def norm(self, word) -> int:
        return self(word, word)

    def clear(self) -> None:
        self._expansions.clear()
        self._pairs.clear()


@lru_cache(maxsize=64)
def _shared_engine(spec: AlgebraSpec, highest: tuple) -> InnerProductEngine:
    return InnerProductEngine(spec, highest)


def inner_product(bra, ket, spec: AlgebraSpec, highest) -> int:
    """``<bra|ket>`` via the memoized recursion (caches shared per highest weight)."""
    return _shared_engine(spec, tuple(highest))(bra, ket)


def inner_product_oracle(bra, ket, spec: AlgebraSpec, highest) -> int:
    """``<bra|ket>`` by commuting operators directly.

    Works on the full operator string ``E^+_{i_1} ... E^+_{i_n} E^-_{j_n} ... E^-_{j_1}``
    between ``<Lambda|`` and ``|Lambda>``.  The rightmost raising operator is
    moved right one slot at a time using ``[E_i^+, E_j^-] = delta_ij H_i``;
    a Cartan element meeting only lowering operators on its right is
    replaced by its eigenvalue.  No caching and no orthogonality shortcuts.
    """
    highest = tuple(highest)
    r = spec.rank
    a = spec.cartan
    for letter in tuple(bra) + tuple(ket):
        if not 1 <= letter <= r:
            raise DomainError(f"root index {letter} out of range 1..{r}")
    ops = [("+", i) for i in bra] + [("-", j) for j in reversed(tuple(ket))]

    def eigen(i, lowering):
        # H_i on E^-_{l_m} ... E^-_{l_1}|Lambda>
        return highest[i - 1] - sum(a[j - 1][i - 1] for _, j in lowering)

    def reduce(ops) -> int:
        plus = [k for k, (kind, _) in enumerate(ops) if kind == "+"]
        if not plus:
            # <Lambda| E^- ... = 0 unless nothing is left
            return 0 if ops else 1
        k = plus[-1]
        if k == len(ops) - 1:
            return 0  # E^+ |Lambda> = 0
        i = ops[k][1]
        j = ops[k + 1][1]
        swapped = ops[:k] + [ops[k + 1], ops[k]] + ops[k + 2:]
        total = reduce(swapped)
        if i == j:
            rest = ops[k + 2:]
            h = eigen(i, rest)
            if h:
                total += h * reduce(ops[:k] + rest)
        return total

    return reduce(ops)


@dataclass(frozen=True)
class GramMatrix:
    weight: tuple
    paths: tuple
    entries: tuple

    def __len__(self) -> int:
        return len(self.paths)

    def is_symmetric(self) -> bool:
        n = len(self.paths)
        return all(self.entries[s][t] == self.entries[t][s] for s in range(n) for t in range(n))

    def to_json(self) -> dict:
        return {
            "weight": list(self.weight),
            "paths": [list(p) for p in self.paths],
            "gram": [[str(x) for x in row] for row in self.entries],
        }


def gram_matrix(ws: WeightSystem, weight, *, engine: InnerProductEngine | None = None,
                debug: bool = False) -> GramMatrix:
    """Gram matrix of the path states ending at ``weight``.

    Rows and columns follow :func:`enumerate_paths`.  The lower triangle is
    mirrored from the upper one unless ``debug`` is set, in which case both
    are computed and compared.
    """
    paths = enumerate_paths(ws, weight)
    if engine is None:
        engine = _shared_engine(ws.spec, ws.highest)
    n = len(paths)
    g = [[0] * n for _ in range(n)]
    for s in range(n):
        for t in range(s, n):
            g[s][t] = g[t][s] = engine(paths[s], paths[t])
            if debug and t != s:
                other = engine(paths[t], paths[s])
                if other != g[s][t]:
                    raise AssertionError(f"asymmetric Gram entry at ({s},{t}): {g[s][t]} vs {other}")
    return GramMatrix(weight=tuple(weight), paths=tuple(paths),
                      entries=tuple(tuple(row) for row in g))
