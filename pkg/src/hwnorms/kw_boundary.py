"""Exact expansion of the boundary profile ``exp(-chi_s(sigma))``.

For a fundamental representation ``rho_s`` and a cocharacter with
``m_i = alpha_i(w_hat) > 0``::

    exp(-chi_s) = 2^(-B_s) * sum_w  W_w (-1)^n(w) prod_beta beta(w_hat)^(-<w, beta^vee>)
                                     * exp(2 sigma w(w_hat))

The sum runs over the distinct weights of ``rho_s``.  ``W_w = c^T G c`` where
``G`` is the Gram matrix of the path states at ``w`` and ``c_s`` is the
product over the weights strictly above ``w`` on path ``s`` of
``1 / (w(w_hat) - w_a(w_hat))``.  Every term is kept as an exact
``(coefficient, rate)`` pair, so the value at ``sigma = 0`` is an exact
rational.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction

from .algebra import AlgebraSpec, fundamental_weight_in_roots, positive_roots, twice_level_sum, weight_in_roots
from .errors import DomainError
from .shapovalov import InnerProductEngine, gram_matrix
from .weightsys import WeightSystem, build_weight_system, enumerate_paths, word_prefix_weights


@dataclass(frozen=True)
class Cocharacter:
    m: tuple[Fraction, ...]

    def __post_init__(self):
        m = tuple(Fraction(x) for x in self.m)
        if any(x <= 0 for x in m):
            raise DomainError(f"all m_i must be positive, got {[str(x) for x in m]}")
        object.__setattr__(self, "m", m)

    @property
    def integral(self) -> bool:
        return all(x.denominator == 1 for x in self.m)

    @classmethod
    def from_dominant(cls, omega) -> "Cocharacter":
        """``m_i = omega_i + 1`` for a dominant cocharacter ``omega``."""
        return cls(tuple(Fraction(x) + 1 for x in omega))


def _as_m(m) -> tuple[Fraction, ...]:
    return m.m if isinstance(m, Cocharacter) else Cocharacter(tuple(m)).m


def pair_with_cocharacter(vector, m) -> Fraction:
    """``sum_i c_i m_i`` for a vector in the simple-root basis."""
    m = _as_m(m)
    if len(vector) != len(m):
        raise DomainError(f"dimension mismatch: vector has {len(vector)} entries, m has {len(m)}")
    return sum((Fraction(c) * x for c, x in zip(vector, m)), Fraction(0))


def _rate(spec: AlgebraSpec, weight, m) -> Fraction:
    return pair_with_cocharacter(weight_in_roots(spec, weight), m)


def state_coefficients(ws: WeightSystem, w, m) -> list[Fraction]:
    """Path coefficients of ``|v_w>``, one per path in enumeration order."""
    m = _as_m(m)
    spec = ws.spec
    if len(m) != spec.rank:
        raise DomainError(f"m has {len(m)} entries, {spec.name} needs {spec.rank}")
    target = _rate(spec, w, m)
    out = []
    for path in enumerate_paths(ws, w):
        c = Fraction(1)
        for above in word_prefix_weights(spec, ws.highest, path)[:-1]:
            gap = target - _rate(spec, above, m)
            if gap >= 0:
                raise AssertionError(f"non-negative gap {gap} on path {path}")
            c /= gap
        out.append(c)
    return out


def weight_norm(ws: WeightSystem, w, m, *, engine: InnerProductEngine | None = None) -> Fraction:
    """``W_w = c^T G c``."""
    c = state_coefficients(ws, w, m)
    g = gram_matrix(ws, w, engine=engine).entries
    n = len(c)
    return sum((c[s] * g[s][t] * c[t] for s in range(n) for t in range(n)), Fraction(0))


@dataclass(frozen=True)
class ChiTerm:
    weight: tuple[int, ...]
    level: int
    norm: Fraction
    root_factor: Fraction
    coefficient: Fraction
    rate: Fraction


@dataclass(frozen=True)
class ChiExpansion:
    algebra: str
    s: int
    m: tuple[Fraction, ...]
    prefactor_log2: Fraction
    terms: tuple[ChiTerm, ...]

    def to_json(self) -> dict:
        return {
            "algebra": self.algebra,
            "s": self.s,
            "m": [str(x) for x in self.m],
            "prefactor_log2": str(self.prefactor_log2),
            "terms": [{"weight": list(t.weight), "level": t.level, "norm": str(t.norm),
                       "root_factor": str(t.root_factor), "coefficient": str(t.coefficient),
                       "rate": str(t.rate)} for t in self.terms],
            "residual": str(sum((t.coefficient for t in self.terms), Fraction(0))),
        }


def chi_expansion(spec: AlgebraSpec, s: int, m) -> ChiExpansion:
    """Build every ``(coefficient, rate)`` term of ``exp(-chi_s)``.

    Terms are sorted by rate, largest first; equal rates (possible for
    special ``m``) are ordered by the weight labels, descending.
    """
    omega = fundamental_weight_in_roots(spec, s)
    m = _as_m(m)
    if len(m) != spec.rank:
        raise DomainError(f"m has {len(m)} entries, {spec.name} needs {spec.rank}")
    highest = tuple(int(i == s) for i in range(1, spec.rank + 1))
    ws = build_weight_system(spec, highest)
    engine = InnerProductEngine(spec, highest)
    roots = positive_roots(spec)
    root_values = [pair_with_cocharacter(b.coords, m) for b in roots]
    terms = []
    for level, weights in enumerate(ws.levels):
        for w in weights:
            norm = weight_norm(ws, w, m, engine=engine)
            factor = Fraction(1)
            for beta, value in zip(roots, root_values):
                e = sum(k * x for k, x in zip(beta.coroot_coords, w))
                if not isinstance(e, int):
                    raise AssertionError(f"non-integral exponent for weight {w}")
                factor *= value ** (-e)
            coeff = norm * factor * (-1) ** level
            terms.append(ChiTerm(w, level, norm, factor, coeff, _rate(spec, w, m)))
    terms.sort(key=lambda t: (t.rate, t.weight), reverse=True)
    if terms[0].rate != pair_with_cocharacter(omega, m):
        raise AssertionError("top rate is not Lambda_s(w_hat)")
    return ChiExpansion(spec.name, s, m, -twice_level_sum(spec, s), tuple(terms))


def boundary_residual(spec: AlgebraSpec, s: int, m) -> Fraction:
    """Sum of all term coefficients: ``exp(-chi_s(0)) * 2^B_s``; predicted to vanish."""
    return sum((t.coefficient for t in chi_expansion(spec, s, m).terms), Fraction(0))


def evaluate_chi(expansion: ChiExpansion, sigma: float) -> float:
    """Double-precision value of ``exp(-chi_s(sigma))``."""
    if not math.isfinite(sigma):
        raise DomainError("sigma must be finite")
    total = 0.0
    try:
        for t in expansion.terms:
            total += float(t.coefficient) * math.exp(2.0 * sigma * float(t.rate))
    except OverflowError:
        raise OverflowError(f"exp overflow at sigma={sigma}; |sigma * rate| is too large") from None
    return 2.0 ** float(expansion.prefactor_log2) * total


def evaluate_chi_decimal(expansion: ChiExpansion, sigma, digits: int = 50) -> Decimal:
    """High-precision value at a rational ``sigma``, for cross-checking :func:`evaluate_chi`."""
    sigma = Fraction(sigma)
    with localcontext() as ctx:
        ctx.prec = digits

        def dec(q: Fraction) -> Decimal:
            return Decimal(q.numerator) / Decimal(q.denominator)

        total = Decimal(0)
        for t in expansion.terms:
            total += dec(t.coefficient) * dec(2 * sigma * t.rate).exp()
        return total * Decimal(2) ** dec(expansion.prefactor_log2)


def sample_chi(expansion: ChiExpansion, sigma_min: float, sigma_max: float, num: int):
    """Evenly spaced ``(sigma, value)`` samples, endpoints included."""
    if num < 2:
        return [(sigma_min, evaluate_chi(expansion, sigma_min))]
    step = (sigma_max - sigma_min) / (num - 1)
    return [(sigma_min + k * step, evaluate_chi(expansion, sigma_min + k * step)) for k in range(num)]
