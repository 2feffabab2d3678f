"""Cartan data for the simple Lie algebras.

Conventions
-----------
``cartan[j][i] = <alpha_j, alpha_i^vee>``, so row ``j`` holds the Dynkin
labels of the simple root ``alpha_j``.  Applying the lowering operator
``E_j^-`` to a weight subtracts row ``j`` from its label vector.

Simple roots are numbered as in Bourbaki for B, C, D, F and G (G2 has
``alpha_1`` short).  The E series is numbered along the long chain
``1 - 2 - ... - (n-1)`` with node ``n`` attached to node 3; with this
numbering the minuscule nodes are {1, 5} for E6 and {6} for E7.

All matrices are exact: integers for the Cartan matrix, ``Fraction`` for
its inverse.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm

from .errors import DomainError

FAMILIES = "ABCDEFG"

_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3}
_FIXED_RANKS = {"E": (6, 7, 8), "F": (4,), "G": (2,)}

# dim g for the stored reference table; |positive roots| = (dim - rank) / 2
REFERENCE_DIMENSIONS = {
    ("G", 2): 14,
    ("F", 4): 52,
    ("E", 6): 78,
    ("E", 7): 133,
    ("E", 8): 248,
}


def reference_dimension(family: str, rank: int) -> int:
    if family == "A":
        return rank * (rank + 2)
    if family in "BC":
        return rank * (2 * rank + 1)
    if family == "D":
        return rank * (2 * rank - 1)
    return REFERENCE_DIMENSIONS[(family, rank)]


def _check_rank(family: str, rank: int) -> None:
    if family not in FAMILIES or len(family) != 1:
        raise DomainError(f"unknown Lie algebra family {family!r}; expected one of A-G")
    if not isinstance(rank, int) or rank < 1:
        raise DomainError(f"rank must be a positive integer, got {rank!r}")
    if family in _FIXED_RANKS:
        allowed = _FIXED_RANKS[family]
        if rank not in allowed:
            choices = ", ".join(str(r) for r in allowed)
            raise DomainError(f"family {family} requires rank in {{{choices}}}, got {rank}")
    elif rank < _MIN_RANK[family]:
        raise DomainError(f"family {family} requires rank >= {_MIN_RANK[family]}, got {rank}")


def _chain(n: int) -> list[tuple[int, int]]:
    return [(i, i + 1) for i in range(n - 1)]


def _simple_root_form(family: str, rank: int) -> list[list[int]]:
    """Symmetric Gram matrix ``(alpha_i, alpha_j)`` of the simple roots (0-based)."""
    n = rank
    lengths = [2] * n
    bonds = _chain(n)
    if family == "B":
        lengths = [4] * (n - 1) + [2]
    elif family == "C":
        lengths = [2] * (n - 1) + [4]
    elif family == "D":
        bonds = _chain(n - 1) + [(n - 3, n - 1)]
    elif family == "E":
        bonds = _chain(n - 1) + [(2, n - 1)]
    elif family == "F":
        lengths = [4, 4, 2, 2]
    elif family == "G":
        lengths = [2, 6]

    form = [[0] * n for _ in range(n)]
    for i in range(n):
        form[i][i] = lengths[i]
    for i, j in bonds:
        value = -max(lengths[i], lengths[j]) // 2
        form[i][j] = form[j][i] = value
    return form


def cartan_matrix(family: str, rank: int) -> list[list[int]]:
    """Return the Cartan matrix with ``A[j][i] = 2(alpha_j, alpha_i)/(alpha_i, alpha_i)``.

    >>> cartan_matrix("G", 2)
    [[2, -1], [-3, 2]]
    """
    _check_rank(family, rank)
    form = _simple_root_form(family, rank)
    return [[2 * form[j][i] // form[i][i] for i in range(rank)] for j in range(rank)]


def invert_exact(matrix: list[list[int]]) -> list[list[Fraction]]:
    """Gauss-Jordan inverse over the rationals."""
    n = len(matrix)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise DomainError("matrix is singular")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


@dataclass(frozen=True)
class PositiveRoot:
    coords: tuple[int, ...]
    coroot_coords: tuple[int, ...]

    @property
    def height(self) -> int:
        return sum(self.coords)


@dataclass(frozen=True)
class AlgebraSpec:
    family: str
    rank: int
    cartan: tuple[tuple[int, ...], ...] = field(repr=False)
    symmetrizers: tuple[int, ...] = field(repr=False)
    inverse_cartan: tuple[tuple[Fraction, ...], ...] = field(repr=False)
    root_lengths: tuple[int, ...] = field(repr=False)

    @property
    def name(self) -> str:
        return f"{self.family}{self.rank}"

    def form(self, x, y) -> Fraction:
        """Invariant form on vectors given in the simple-root basis."""
        r = self.rank
        total = Fraction(0)
        for i in range(r):
            if x[i] == 0:
                continue
            for j in range(r):
                if y[j]:
                    # (alpha_i, alpha_j) = A[i][j] * |alpha_j|^2 / 2
                    total += x[i] * y[j] * Fraction(self.cartan[i][j] * self.root_lengths[j], 2)
        return total

    def to_json(self) -> dict:
        return {"family": self.family, "rank": self.rank,
                "cartan": [list(row) for row in self.cartan]}


@lru_cache(maxsize=None)
def algebra(family: str, rank: int) -> AlgebraSpec:
    """Build (and cache) the immutable spec for ``family`` and ``rank``."""
    family = family.upper()
    a = cartan_matrix(family, rank)
    lengths = [row[i] for i, row in enumerate(_simple_root_form(family, rank))]
    big = lcm(*lengths)
    d = [big // length for length in lengths]
    g = gcd(*d)
    d = [x // g for x in d]
    inv = invert_exact(a)
    return AlgebraSpec(
        family=family,
        rank=rank,
        cartan=tuple(tuple(row) for row in a),
        symmetrizers=tuple(d),
        inverse_cartan=tuple(tuple(row) for row in inv),
        root_lengths=tuple(lengths),
    )


_NAME = re.compile(r"^\s*([A-Ga-g])\s*(\d+)\s*$")


def parse_algebra(name: str) -> AlgebraSpec:
    """Parse strings like ``"G2"`` or ``"d4"``."""
    m = _NAME.match(name)
    if not m:
        raise DomainError(f"cannot parse algebra {name!r}; expected e.g. A3, G2, D4")
    return algebra(m.group(1).upper(), int(m.group(2)))


@lru_cache(maxsize=None)
def positive_roots(spec: AlgebraSpec) -> tuple[PositiveRoot, ...]:
    """All positive roots by additive closure from the simple roots.

    Uses the root-string rule: for a positive root ``beta`` with
    ``beta - p*alpha_i`` the bottom of its ``alpha_i`` string,
    ``beta + alpha_i`` is a root iff ``p - <beta, alpha_i^vee> > 0``.
    Ordered by height, then lexicographically by coordinates.
    """
    r = spec.rank
    a = spec.cartan
    simple = [tuple(int(i == j) for j in range(r)) for i in range(r)]
    found = set(simple)
    layer = list(simple)
    while layer:
        nxt = set()
        for beta in layer:
            for i in range(r):
                pairing = sum(beta[j] * a[j][i] for j in range(r))
                p = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in found:
                        p += 1
                    else:
                        break
                if p - pairing > 0:
                    up = list(beta)
                    up[i] += 1
                    nxt.add(tuple(up))
        nxt -= found
        found |= nxt
        layer = sorted(nxt)
    roots = []
    for k in sorted(found, key=lambda c: (sum(c), c)):
        norm = spec.form(k, k)
        cor = [Fraction(k[i] * spec.root_lengths[i]) / norm for i in range(r)]
        if any(c.denominator != 1 for c in cor):
            raise AssertionError(f"non-integral coroot for {k}")
        roots.append(PositiveRoot(coords=k, coroot_coords=tuple(int(c) for c in cor)))
    return tuple(roots)


# Table of minuscule fundamental weights, in this module's numbering.
def minuscule_indices(family: str, rank: int) -> frozenset[int]:
    _check_rank(family, rank)
    if family == "A":
        return frozenset(range(1, rank + 1))
    if family == "B":
        return frozenset({rank})
    if family == "C":
        return frozenset({1})
    if family == "D":
        return frozenset({1, rank - 1, rank})
    if (family, rank) == ("E", 6):
        return frozenset({1, 5})
    if (family, rank) == ("E", 7):
        return frozenset({6})
    return frozenset()


def fundamental_weight_in_roots(spec: AlgebraSpec, s: int) -> tuple[Fraction, ...]:
    """Coordinates of ``omega_s`` in the simple-root basis (row ``s`` of the inverse Cartan)."""
    if not 1 <= s <= spec.rank:
        raise DomainError(f"fundamental weight index {s} out of range 1..{spec.rank}")
    return spec.inverse_cartan[s - 1]


def weight_in_roots(spec: AlgebraSpec, labels) -> tuple[Fraction, ...]:
    """Simple-root coordinates of a weight given by its Dynkin labels."""
    r = spec.rank
    if len(labels) != r:
        raise DomainError(f"weight has {len(labels)} labels, algebra {spec.name} needs {r}")
    inv = spec.inverse_cartan
    return tuple(sum((labels[s] * inv[s][j] for s in range(r)), Fraction(0)) for j in range(r))


def twice_level_sum(spec: AlgebraSpec, s: int) -> Fraction:
    """``B_s = 2 * sum_j (A^-1)_{s j}``."""
    return 2 * sum(fundamental_weight_in_roots(spec, s))
