import math
import random
from fractions import Fraction

import pytest

from hwnorms.algebra import algebra, fundamental_weight_in_roots, positive_roots
from hwnorms.errors import DomainError
from hwnorms.kw_boundary import (Cocharacter, boundary_residual, chi_expansion, evaluate_chi,
                                 evaluate_chi_decimal, pair_with_cocharacter, sample_chi,
                                 state_coefficients, weight_norm)
from hwnorms.weightsys import build_weight_system, enumerate_paths

A1 = algebra("A", 1)
A3 = algebra("A", 3)
G2 = algebra("G", 2)


def _partial_sum_oracle(path, m):
    # w(w_hat) - w_a(w_hat) = -(sum of m over letters a..n)
    c = Fraction(1)
    for a in range(len(path)):
        c /= -sum(m[j - 1] for j in path[a:])
    return c


def test_pairing():
    assert pair_with_cocharacter((0, 1, 0), (2, 5, 7)) == 5
    assert pair_with_cocharacter(fundamental_weight_in_roots(A1, 1), (Fraction(3),)) == Fraction(3, 2)
    top = positive_roots(G2)[-1]
    assert pair_with_cocharacter(top.coords, (1, 1)) == 5
    with pytest.raises(DomainError):
        pair_with_cocharacter((1, 2), (1,))


def test_cocharacter():
    assert Cocharacter.from_dominant((0, 2)).m == (1, 3)
    assert Cocharacter((1, 2)).integral
    assert not Cocharacter((Fraction(1, 2), 2)).integral
    with pytest.raises(DomainError):
        Cocharacter((1, 0))


def test_state_coefficients():
    ws = build_weight_system(A1, (1,))
    assert state_coefficients(ws, (1,), (5,)) == [1]
    assert state_coefficients(ws, (-1,), (Fraction(5, 2),)) == [Fraction(-2, 5)]
    g = build_weight_system(G2, (0, 1))
    for m in [(1, 1), (2, 3), (Fraction(1, 3), 7)]:
        for w in g.weights:
            expected = [_partial_sum_oracle(p, m) for p in enumerate_paths(g, w)]
            assert state_coefficients(g, w, m) == expected
    assert state_coefficients(g, (0, 0), (1, 1)) == [Fraction(-1, 120)] * 2


def test_weight_norm():
    ws = build_weight_system(A1, (1,))
    assert weight_norm(ws, (1,), (3,)) == 1
    assert weight_norm(ws, (-1,), (3,)) == Fraction(1, 9)
    a3 = build_weight_system(A3, (0, 1, 0))
    c1, c2 = state_coefficients(a3, (-1, 1, -1), (1, 1, 1))
    assert weight_norm(a3, (-1, 1, -1), (1, 1, 1)) == (c1 + c2) ** 2
    g = build_weight_system(G2, (0, 1))
    c = state_coefficients(g, (0, 0), (2, 3))
    gram = ((72, 36), (36, 24))
    assert weight_norm(g, (0, 0), (2, 3)) == sum(c[s] * gram[s][t] * c[t] for s in range(2) for t in range(2))


def test_a1_expansion():
    m1 = Fraction(7, 3)
    exp = chi_expansion(A1, 1, (m1,))
    assert exp.prefactor_log2 == -1
    assert [(t.coefficient, t.rate) for t in exp.terms] == [(1 / m1, m1 / 2), (-1 / m1, -m1 / 2)]


def test_exponents_are_integral_and_term_counts():
    for spec, s in [(A3, 2), (G2, 2), (G2, 1)]:
        exp = chi_expansion(spec, s, tuple(range(1, spec.rank + 1)))
        ws = build_weight_system(spec, tuple(int(i == s) for i in range(1, spec.rank + 1)))
        assert len(exp.terms) == len(ws)
        rates = [t.rate for t in exp.terms]
        assert rates == sorted(rates, reverse=True)
        assert rates[0] == pair_with_cocharacter(fundamental_weight_in_roots(spec, s), tuple(range(1, spec.rank + 1)))
        for beta in positive_roots(spec):
            for w in ws.weights:
                assert isinstance(sum(k * x for k, x in zip(beta.coroot_coords, w)), int)
    assert len(chi_expansion(G2, 1, (1, 1)).terms) == 7


def test_distinct_m_gives_strictly_decreasing_rates():
    exp = chi_expansion(G2, 2, (Fraction(2), Fraction(7, 3)))
    rates = [t.rate for t in exp.terms]
    assert all(a > b for a, b in zip(rates, rates[1:]))


def test_a1_residual_vanishes_for_random_m():
    rng = random.Random(20261017)
    for _ in range(20):
        m1 = Fraction(rng.randint(1, 500), rng.randint(1, 97))
        assert boundary_residual(A1, 1, (m1,)) == 0


def test_evaluate_matches_sinh():
    rng = random.Random(7)
    for m1 in (Fraction(1), Fraction(5, 2)):
        exp = chi_expansion(A1, 1, (m1,))
        assert abs(evaluate_chi(exp, 0.0)) <= 1e-15
        for _ in range(10):
            sigma = rng.uniform(-3, 3)
            expected = math.sinh(sigma * float(m1)) / float(m1)
            assert evaluate_chi(exp, sigma) == pytest.approx(expected, rel=1e-10, abs=1e-15)
    assert evaluate_chi(chi_expansion(A1, 1, (1,)), 1.0) == pytest.approx(1.1752011936, abs=1e-10)


def test_float_and_decimal_evaluators_agree():
    exp = chi_expansion(G2, 1, (2, 3))
    for sigma in (Fraction(1, 4), Fraction(1, 2), Fraction(3, 2), Fraction(-1, 3)):
        hi = float(evaluate_chi_decimal(exp, sigma))
        assert evaluate_chi(exp, float(sigma)) == pytest.approx(hi, rel=1e-12)


def test_overflow_is_reported():
    exp = chi_expansion(A1, 1, (1,))
    with pytest.raises(OverflowError, match="overflow"):
        evaluate_chi(exp, 1e6)
    with pytest.raises(DomainError):
        evaluate_chi(exp, float("nan"))


@pytest.mark.parametrize("name,s,m", [
    ("A2", 1, (1, 1)), ("A2", 2, (1, 1)), ("A2", 1, (Fraction(3, 2), 5)), ("G2", 1, (1, 1)),
    ("G2", 2, (2, 3)), ("B2", 1, (1, 2)), ("B2", 2, (3, 1)), ("C3", 2, (1, 2, 1)), ("A3", 2, (1, 2, 3)),
])
def test_boundary_residual_observed_zero(name, s, m):
    # observed, not guaranteed: the vanishing is the conjecture being checked
    spec = algebra(name[0], int(name[1:]))
    assert boundary_residual(spec, s, m) == 0


def test_sample_chi_grid():
    exp = chi_expansion(A1, 1, (1,))
    pts = sample_chi(exp, 0.0, 1.0, 5)
    assert [s for s, _ in pts] == [0.0, 0.25, 0.5, 0.75, 1.0]


def test_json_serializes_rationals_as_strings():
    data = chi_expansion(A1, 1, (Fraction(3, 2),)).to_json()
    assert data["terms"][0]["coefficient"] == "2/3"
    assert data["residual"] == "0"
