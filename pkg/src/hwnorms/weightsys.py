"""Weight systems of irreducible highest-weight representations.

Weights are stored as tuples of Dynkin labels.  A *word* is a tuple of
simple-root indices (1-based) listed in application order: ``(2, 1)`` means
``E_1^- E_2^- |Lambda>``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import AlgebraSpec
from .errors import DomainError, ResourceError

DEFAULT_LEVEL_CAP = 64

Weight = tuple[int, ...]
Word = tuple[int, ...]


def lower(spec: AlgebraSpec, weight: Weight, j: int) -> Weight:
    row = spec.cartan[j - 1]
    return tuple(x - a for x, a in zip(weight, row))


def raise_(spec: AlgebraSpec, weight: Weight, j: int) -> Weight:
    row = spec.cartan[j - 1]
    return tuple(x + a for x, a in zip(weight, row))


def weight_of_word(spec: AlgebraSpec, highest, word) -> Weight:
    """Weight reached from ``highest`` by applying ``word``; defined for any word."""
    w = tuple(highest)
    for j in word:
        if not 1 <= j <= spec.rank:
            raise DomainError(f"root index {j} out of range 1..{spec.rank}")
        w = lower(spec, w, j)
    return w


def word_prefix_weights(spec: AlgebraSpec, highest, word) -> list[Weight]:
    """Weights before each letter, plus the final one (``len(word) + 1`` entries)."""
    out = [tuple(highest)]
    for j in word:
        out.append(lower(spec, out[-1], j))
    return out


@dataclass(frozen=True)
class WeightSystem:
    spec: AlgebraSpec
    highest: Weight
    levels: tuple[tuple[Weight, ...], ...]
    strings: dict  # weight -> tuple of (p_i, q_i)

    def __contains__(self, weight) -> bool:
        return tuple(weight) in self.strings

    def __len__(self) -> int:
        return len(self.strings)

    @property
    def weights(self) -> list[Weight]:
        return [w for level in self.levels for w in level]

    @property
    def lowest(self) -> Weight:
        return self.levels[-1][0]

    @property
    def depth(self) -> int:
        """Index of the last level."""
        return len(self.levels) - 1

    def level_of(self, weight) -> int:
        weight = self._check(weight)
        for n, level in enumerate(self.levels):
            if weight in level:
                return n
        raise AssertionError("unreachable")

    def has_edge(self, weight, i: int) -> bool:
        return self.strings[tuple(weight)][i - 1][1] > 0

    def edges(self):
        """Yield ``(source, target, i)`` for every edge, level by level."""
        for level in self.levels:
            for w in level:
                for i in range(1, self.spec.rank + 1):
                    if self.has_edge(w, i):
                        yield w, lower(self.spec, w, i), i

    def is_path(self, word) -> bool:
        w = self.highest
        for j in word:
            if not self.has_edge(w, j):
                return False
            w = lower(self.spec, w, j)
        return True

    def _check(self, weight) -> Weight:
        weight = tuple(weight)
        if len(weight) != self.spec.rank:
            raise DomainError(f"weight {list(weight)} has wrong length for {self.spec.name}")
        if weight not in self.strings:
            raise DomainError(f"weight {list(weight)} is not in the weight system of "
                              f"{self.spec.name} {list(self.highest)}")
        return weight

    def to_json(self) -> dict:
        return {
            "algebra": self.spec.to_json(),
            "highest": list(self.highest),
            "levels": [[list(w) for w in level] for level in self.levels],
            "edges": [{"from": list(a), "to": list(b), "root": i} for a, b, i in self.edges()],
            "strings": [{"weight": list(w), "p": [p for p, _ in self.strings[w]],
                         "q": [q for _, q in self.strings[w]]} for w in self.weights],
        }

    def to_dot(self) -> str:
        ids = {w: f"w{n}" for n, w in enumerate(self.weights)}
        lines = [f'digraph "{self.spec.name} {_fmt(self.highest)}" {{', "  rankdir=TB;"]
        for n, level in enumerate(self.levels):
            for w in level:
                lines.append(f'  {ids[w]} [label="{_fmt(w)}\\nlevel {n}"];')
        for a, b, i in self.edges():
            lines.append(f'  {ids[a]} -> {ids[b]} [label="{i}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def _fmt(weight) -> str:
    return "(" + ",".join(str(x) for x in weight) + ")"


def build_weight_system(spec: AlgebraSpec, highest, level_cap: int = DEFAULT_LEVEL_CAP) -> WeightSystem:
    """Construct the distinct weights of the irrep with the given highest weight.

    Weights are produced level by level.  When a weight is reached all the
    weights above it already exist, so ``p_i`` is found by stepping up along
    ``alpha_i``; then ``q_i = lambda_i + p_i`` and ``lambda - alpha_i`` is a
    weight iff ``q_i > 0``.
    """
    highest = tuple(int(x) for x in highest)
    if len(highest) != spec.rank:
        raise DomainError(f"highest weight has {len(highest)} labels, {spec.name} needs {spec.rank}")
    if any(x < 0 for x in highest):
        raise DomainError(f"highest weight {list(highest)} is not dominant (negative label)")

    strings: dict = {}
    levels: list[tuple[Weight, ...]] = []
    current = {highest}
    while current:
        if len(levels) > level_cap:
            raise ResourceError(f"weight system exceeds the level cap of {level_cap}; "
                                "raise level_cap to continue")
        ordered = tuple(sorted(current))
        levels.append(ordered)
        nxt = set()
        for w in ordered:
            data = []
            for i in range(1, spec.rank + 1):
                p = 0
                up = raise_(spec, w, i)
                while up in strings:
                    p += 1
                    up = raise_(spec, up, i)
                q = w[i - 1] + p
                data.append((p, q))
                if q > 0:
                    nxt.add(lower(spec, w, i))
            strings[w] = tuple(data)
        current = nxt
    return WeightSystem(spec=spec, highest=highest, levels=tuple(levels), strings=strings)


def weight_string(ws: WeightSystem, weight, i: int) -> tuple[int, int]:
    weight = ws._check(weight)
    if not 1 <= i <= ws.spec.rank:
        raise DomainError(f"root index {i} out of range 1..{ws.spec.rank}")
    return ws.strings[weight][i - 1]


def enumerate_paths(ws: WeightSystem, target) -> list[Word]:
    """All paths from the highest weight to ``target``, depth first, smaller index first."""
    target = ws._check(target)
    depth = ws.level_of(target)
    spec = ws.spec
    # prune with the set of weights that can still reach the target
    reach = {target}
    for level in reversed(ws.levels[:depth]):
        for w in level:
            if any(ws.has_edge(w, i) and lower(spec, w, i) in reach
                   for i in range(1, spec.rank + 1)):
                reach.add(w)

    out: list[Word] = []

    def walk(w, word):
        if len(word) == depth:
            if w == target:
                out.append(tuple(word))
            return
        for i in range(1, spec.rank + 1):
            if ws.has_edge(w, i):
                nxt = lower(spec, w, i)
                if nxt in reach:
                    word.append(i)
                    walk(nxt, word)
                    word.pop()

    if ws.highest in reach:
        walk(ws.highest, [])
    return out

