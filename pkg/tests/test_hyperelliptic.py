import itertools
from fractions import Fraction

import pytest
import sympy

from lefkappa.errors import NonIntegerSignature, WrongBase
from lefkappa.hyperelliptic import (
    FibrationData,
    endo_signature,
    endo_signature_exact,
    hyperelliptic_k_squared,
    k_squared_separating_coefficient,
    prop_he_verdict,
    signature_lower_bound,
    xiao_slope_holds,
)
from lefkappa.invariants import KodairaDim


def sympy_signature(g, a, s):
    """Independent evaluation of the signature sum with sympy rationals."""
    total = sympy.Rational(-(g + 1), 2 * g + 1) * a
    for j, count in enumerate(s, start=1):
        total += (sympy.Rational(4 * j * (g - j), 2 * g + 1) - 1) * count
    return total


def fib(g, a, s=None, **flags):
    if s is None:
        s = (0,) * (g // 2)
    return FibrationData(g, 1, a, tuple(s), hyperelliptic=True, **flags)


@pytest.mark.parametrize(
    "g, a, s, sigma",
    [(2, 5, (0,), -3), (2, 20, (0,), -12), (3, 7, (0,), -4)],
)
def test_endo_signature(g, a, s, sigma):
    assert sympy_signature(g, a, s) == sigma
    assert endo_signature(fib(g, a, s)) == sigma


def test_non_integer_signature():
    assert sympy_signature(2, 1, (1,)) == sympy.Rational(-4, 5)
    with pytest.raises(NonIntegerSignature) as info:
        endo_signature(fib(2, 1, (1,)))
    assert info.value.value == Fraction(-4, 5)


def test_wrong_base():
    with pytest.raises(WrongBase):
        endo_signature(FibrationData(2, 2, 5, (0,), hyperelliptic=True))


def test_extension_point_is_explicit():
    d = FibrationData(2, 2, 5, (0,), hyperelliptic=True)
    assert endo_signature(d, bases={1, 2}) == -3


@pytest.mark.parametrize(
    "g, a, s, k2",
    [(2, 5, (0,), 1), (2, 0, (5,), 7), (2, 20, (0,), 4)],
)
def test_k_squared_expansion(g, a, s, k2):
    d = fib(g, a, s)
    assert hyperelliptic_k_squared(d) == k2
    assert 3 * endo_signature(d) + 2 * d.n == k2


def test_prop_he_verdict():
    v = prop_he_verdict(fib(2, 5))
    assert v.dim is KodairaDim.TWO
    assert str(v.provenance) == "obstruction:hyperelliptic-Endo"
    assert "K^2=1" in v.notes
    v = prop_he_verdict(fib(3, 7))
    assert "K^2=2" in v.notes
    with pytest.raises(NonIntegerSignature):
        prop_he_verdict(fib(2, 1, (1,)))


def test_s_length_enforced():
    with pytest.raises(ValueError):
        FibrationData(4, 1, 0, (1,))
    assert FibrationData(1, 1, 3).s == ()


@pytest.mark.parametrize("g", range(2, 30))
def test_separating_coefficient_forms_agree(g):
    for j in range(1, g // 2 + 1):
        printed = 6 * j * (g - 2 * j) + 2 * g * (j - 1) + (4 * g * j - 1)
        assert printed == 12 * j * g - 12 * j * j - 2 * g - 1
        assert k_squared_separating_coefficient(g, j) == Fraction(printed, 2 * g + 1)


def _small_vectors(g, n_max):
    parts = g // 2 + 1
    for row in itertools.product(range(n_max + 1), repeat=parts):
        if sum(row) <= n_max:
            yield row[0], row[1:]


@pytest.mark.parametrize("g", [2, 3, 4, 5])
def test_signature_additive(g):
    vectors = list(_small_vectors(g, 4))
    integral = [(a, s) for a, s in vectors if sympy_signature(g, a, s).q == 1]
    for (a1, s1), (a2, s2) in itertools.product(integral, repeat=2):
        s12 = tuple(x + y for x, y in zip(s1, s2))
        total = endo_signature_exact(fib(g, a1 + a2, s12))
        assert total == endo_signature(fib(g, a1, s1)) + endo_signature(fib(g, a2, s2))


def test_xiao_and_signature_bound_equality_case():
    # g=2, a=20: chi=20, sigma=-12, K^2=4, chi_h=2
    assert xiao_slope_holds(4, Fraction(2), 2, 1)
    assert (4 - Fraction(4, 2)) * 2 == 4
    assert signature_lower_bound(2, 20) == -12
    assert not xiao_slope_holds(3, Fraction(2), 2, 1)
