"""Closed-form norms and exhaustive checks built on the inner-product engine.

A staircase path is a word made of bursts.  Burst ``k`` lowers ``n_k`` times
along ``alpha_{i_k}`` starting at a weight ``Lambda^k`` with
``p_{i_k}(Lambda^k) = 0`` and ``n_k = Lambda^k_{i_k}``, i.e. it runs the whole
``alpha_{i_k}`` string.  Such a path has norm ``prod_k (Lambda^k_{i_k}!)^2``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import groupby
from math import factorial, prod

from .algebra import minuscule_indices, positive_roots
from .errors import DomainError
from .shapovalov import InnerProductEngine, gram_matrix, inner_product
from .weightsys import WeightSystem, enumerate_paths, lower


class AuditError(AssertionError):
    """A closed form disagreed with the recursion."""


@dataclass(frozen=True)
class Burst:
    index: int
    length: int
    separators: tuple[int, ...] = ()  # applied before the burst, each a full one-step string


@dataclass(frozen=True)
class StaircaseSpec:
    ws: WeightSystem
    bursts: tuple[Burst, ...]
    trailing: tuple[int, ...] = ()

    @property
    def word(self) -> tuple[int, ...]:
        out: list[int] = []
        for b in self.bursts:
            out.extend(b.separators)
            out.extend([b.index] * b.length)
        out.extend(self.trailing)
        return tuple(out)

    def end_weight(self):
        w = self.ws.highest
        for j in self.word:
            w = lower(self.ws.spec, w, j)
        return w

    @classmethod
    def from_word(cls, ws: WeightSystem, word) -> "StaircaseSpec":
        """Split ``word`` into maximal runs, one burst per run."""
        bursts = tuple(Burst(i, len(list(g))) for i, g in groupby(word))
        return cls(ws, bursts)


def _saturated_step(ws: WeightSystem, weight, i: int, n: int, what: str):
    """Check one full-string run and return ``(label, weight after it)``."""
    spec = ws.spec
    if weight not in ws:
        raise DomainError(f"{what}: weight {list(weight)} left the weight system")
    p, _ = ws.strings[weight][i - 1]
    label = weight[i - 1]
    if p != 0:
        raise DomainError(f"{what}: p_{i} = {p} at {list(weight)}; the run does not start "
                          "at the top of its string")
    if n != label:
        raise DomainError(f"{what}: length {n} differs from label {label} at {list(weight)}")
    for _ in range(n):
        weight = lower(spec, weight, i)
    return label, weight


def _closed_form(path: StaircaseSpec) -> tuple[int, object]:
    ws = path.ws
    w = ws.highest
    value = 1
    prev = None
    for k, b in enumerate(path.bursts, 1):
        for j in b.separators:
            if j in (prev, b.index):
                raise DomainError(f"separator {j} repeats an adjacent burst index")
            _, w = _saturated_step(ws, w, j, 1, f"separator {j} before burst {k}")
        label, w = _saturated_step(ws, w, b.index, b.length, f"burst {k}")
        value *= factorial(label) ** 2
        prev = b.index
    for j in path.trailing:
        if j == prev:
            raise DomainError(f"trailing separator {j} repeats the last burst index")
        _, w = _saturated_step(ws, w, j, 1, f"trailing separator {j}")
    return value, w


def _audit(value: int, path_word, ws: WeightSystem) -> None:
    actual = inner_product(path_word, path_word, ws.spec, ws.highest)
    if actual != value:
        raise AuditError(f"closed form {value} != recursion {actual} for word {list(path_word)}")


def staircase_norm(path: StaircaseSpec, audit: bool = True) -> int:
    """``prod_k (Lambda^k_{i_k}!)^2``, checked against the recursion."""
    value, _ = _closed_form(path)
    if audit:
        _audit(value, path.word, path.ws)
    return value


def prefixed_staircase_norm(n0: int, i0: int, inner: StaircaseSpec, audit: bool = True) -> int:
    """Norm of ``(E_{i0}^-)^{n0}`` applied after a staircase path.

    ``Lambda^0`` is the end weight of ``inner``; it must sit at the top of its
    ``alpha_{i0}`` string.  The norm is
    ``prod_{k=1}^{n0} k (Lambda^0_{i0} - k + 1)`` times the inner norm.
    """
    ws = inner.ws
    base, w0 = _closed_form(inner)
    if not 1 <= i0 <= ws.spec.rank:
        raise DomainError(f"root index {i0} out of range 1..{ws.spec.rank}")
    top = w0[i0 - 1]
    if n0 < 0:
        raise DomainError("n0 must be non-negative")
    if n0 > top:
        raise DomainError(f"n0 = {n0} exceeds Lambda^0_{i0} = {top}; the state vanishes")
    p, _ = ws.strings[w0][i0 - 1]
    if n0 and p != 0:
        raise DomainError(f"E_{i0}^+ does not annihilate {list(w0)} (p = {p})")
    value = base * prod(k * (top - k + 1) for k in range(1, n0 + 1))
    if audit:
        _audit(value, inner.word + (i0,) * n0, ws)
    return value


def classify_path(ws: WeightSystem, word):
    """Return ``("staircase", spec)``, ``("prefixed", (n0, i0, inner))`` or ``None``."""
    word = tuple(word)
    try:
        sc = StaircaseSpec.from_word(ws, word)
        _closed_form(sc)
        return "staircase", sc
    except DomainError:
        pass
    if not word:
        return None
    runs = StaircaseSpec.from_word(ws, word).bursts
    inner = StaircaseSpec(ws, runs[:-1])
    last = runs[-1]
    try:
        _, w0 = _closed_form(inner)
    except DomainError:
        return None
    if ws.strings[w0][last.index - 1][0] == 0 and last.length <= w0[last.index - 1]:
        return "prefixed", (last.length, last.index, inner)
    return None


@dataclass
class MinusculeReport:
    algebra: str
    highest: tuple
    rows: list = field(default_factory=list)  # (weight, path count, passed)
    strings_ok: bool = True

    @property
    def passed(self) -> bool:
        return self.strings_ok and all(ok for _, _, ok in self.rows)

    def to_json(self) -> dict:
        return {
            "algebra": self.algebra,
            "highest": list(self.highest),
            "passed": self.passed,
            "strings_two_terms": self.strings_ok,
            "weights": [{"weight": list(w), "paths": n, "passed": ok} for w, n, ok in self.rows],
        }


def _fundamental_index(ws: WeightSystem) -> int | None:
    nonzero = [i for i, x in enumerate(ws.highest, 1) if x]
    if len(nonzero) == 1 and ws.highest[nonzero[0] - 1] == 1:
        return nonzero[0]
    return None


def verify_minuscule_gram(ws: WeightSystem) -> MinusculeReport:
    """Check that every Gram entry is 1 and every root string has at most two weights."""
    spec = ws.spec
    s = _fundamental_index(ws)
    allowed = minuscule_indices(spec.family, spec.rank)
    if s is None or s not in allowed:
        listed = ", ".join(str(i) for i in sorted(allowed)) or "none"
        raise DomainError(f"highest weight {list(ws.highest)} of {spec.name} is not a minuscule "
                          f"fundamental weight (minuscule nodes: {listed})")
    report = MinusculeReport(spec.name, ws.highest)
    roots = positive_roots(spec)
    engine = InnerProductEngine(spec, ws.highest)
    for w in ws.weights:
        for beta in roots:
            if abs(sum(k * x for k, x in zip(beta.coroot_coords, w))) > 1:
                report.strings_ok = False
        g = gram_matrix(ws, w, engine=engine)
        ok = all(x == 1 for row in g.entries for x in row)
        report.rows.append((w, len(g), ok))
    return report


@dataclass
class PositivityReport:
    algebra: str
    highest: tuple
    level_cap: int
    paths_scanned: int = 0
    coefficients_seen: int = 0
    min_coefficient: int | None = None
    negatives: int = 0
    offending: list = field(default_factory=list)  # (path, raising index, word, coefficient)
    pruned_terms: int = 0
    values: set = field(default_factory=set)

    def to_json(self) -> dict:
        return {
            "algebra": self.algebra,
            "highest": list(self.highest),
            "level_cap": self.level_cap,
            "paths_scanned": self.paths_scanned,
            "coefficients_seen": self.coefficients_seen,
            "min_coefficient": None if self.min_coefficient is None else str(self.min_coefficient),
            "negatives": self.negatives,
            "pruned_terms": self.pruned_terms,
            "distinct_coefficients": [str(v) for v in sorted(self.values)],
            "offending": [{"path": list(p), "raising": a, "word": list(w), "coefficient": str(c)}
                          for p, a, w, c in self.offending],
            "passed": self.negatives == 0,
        }


def scan_coefficient_positivity(ws: WeightSystem, level_cap: int | None = None,
                                max_offending: int = 50) -> PositivityReport:
    """Record the coefficients produced while computing every path norm.

    The norm recursion runs inside the irreducible representation: words
    that leave the weight system are dropped (they are zero vectors), and the
    coefficient recorded for a surviving word is its merged coefficient in
    the expansion of ``E_a^+``.  This is evidence only, not a proof.
    """
    cap = ws.depth if level_cap is None else min(level_cap, ws.depth)
    report = PositivityReport(ws.spec.name, ws.highest, cap)
    current = {"path": ()}

    def hook(a, word, combo):
        for w, c in combo.items():
            report.coefficients_seen += 1
            report.values.add(c)
            if report.min_coefficient is None or c < report.min_coefficient:
                report.min_coefficient = c
            if c < 0:
                report.negatives += 1
                if len(report.offending) < max_offending:
                    report.offending.append((current["path"], a, w, c))

    engine = InnerProductEngine(ws.spec, ws.highest, ws=ws, prune=True, on_expand=hook)
    for level in ws.levels[: cap + 1]:
        for w in level:
            for path in enumerate_paths(ws, w):
                current["path"] = path
                report.paths_scanned += 1
                engine.norm(path)
    report.pruned_terms = engine.nonpath_terms
    return report
