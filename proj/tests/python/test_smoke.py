from fractions import Fraction
from math import factorial as int_factorial

import pytest

import rpqcalc


def test_number_and_factorial():
    assert rpqcalc.number(3, p="1", q="1/2") == Fraction(7, 4)
    assert rpqcalc.factorial(3, p="1", q="1/2") == Fraction(21, 8)
    assert rpqcalc.binomial(3, 1, p="1", q="1/2") == Fraction(7, 4)
    assert rpqcalc.number(2, preset="bm", p="1", q="1/2") == Fraction(5, 2)


def test_js_number_closed_form():
    p, q = Fraction(4, 5), Fraction(1, 2)
    for n in range(20):
        assert rpqcalc.number(n, p=p, q=q) == (p**n - q**n) / (p - q)


def test_classical_limit():
    assert rpqcalc.zigzag(8, classical=True) == [1, 1, 1, 2, 5, 16, 61, 272]
    b = rpqcalc.family("bernoulli", order=4, classical=True)
    assert b == [1, Fraction(-1, 2), Fraction(1, 6), 0, Fraction(-1, 30)]
    assert rpqcalc.factorial(6, classical=True) == int_factorial(6)


def test_gamma_integer_link():
    g = rpqcalc.gamma("4", p="1", q="1/2")
    assert g["exact"] == Fraction(21, 8)
    half = rpqcalc.gamma("1/2")
    assert half["exact"] is None
    assert float(half["relative_tail_bound"]) < 1e-20


def test_padic_and_zeta():
    assert rpqcalc.padic_gamma(4, 5) == Fraction(6)
    assert rpqcalc.zeta_spin_half(2, 3) == Fraction(1088, 651)
    assert rpqcalc.ghost_boundary("GSp", 2) == 1


def test_errors_and_cli():
    with pytest.raises(ValueError):
        rpqcalc.zeta_spin_half(5, 1)
    with pytest.raises(ValueError):
        rpqcalc.number(2, p="1/2", q="1/2")
    code, out, _ = rpqcalc.run_cli(["eval", "number", "--preset", "js", "-p", "1", "-q", "1/2", "-n", "3"])
    assert code == 0 and out.strip() == "7/4"
    assert "padicfun" in rpqcalc.suite_names()
