from fractions import Fraction

import pytest
import sympy as sp

qd = pytest.importorskip("quasidisc")

x = sp.symbols("x")


def to_sympy(coeffs):
    return sum(sp.Rational(str(c)) * x**i for i, c in enumerate(coeffs))


def test_resultant_examples():
    assert qd.resultant([-1, 0, 1], [0, 1]) == -1
    assert qd.resultant([6, 4, 6], [2, 2]) == 32
    assert qd.resultant([1, 2, 0, 7], [5]) == 125
    assert qd.discriminant([6, 4, 6]) == -128
    assert qd.determinant([[1, 0, 1], [1, -1, 0], [0, 1, -1]]) == 2
    with pytest.raises(qd.BothZeroError):
        qd.resultant([], [0])


def test_resultant_matches_sympy():
    f = [3, "-1/2", 0, 2, 1]
    g = ["7/3", 1, -4]
    assert qd.resultant(f, g) == Fraction(str(sp.resultant(to_sympy(f), to_sympy(g), x)))
    assert qd.discriminant(f) == Fraction(str(sp.discriminant(to_sympy(f), x)))


def test_hypergeometric():
    assert qd.pochhammer("1/2", 2) == Fraction(3, 4)
    assert qd.hyp2f1_poly(-1, 2, 3) == [1, Fraction(-2, 3)]
    assert qd.hyp2f1_poly(-2, "1/2", "3/2") == [1, Fraction(-2, 3), Fraction(1, 5)]
    assert qd.v_r_polynomial(0, 1) == [Fraction(-14, 9), 1]


def test_families():
    cb = qd.Family("central-binomial")
    assert cb.generate(2) == [6, 4, 6]
    assert cb.resultant_formula(2) == cb.resultant_oracle(2) == 32
    assert cb.disc_formula(2, 0) == -128
    assert cb.disc_formula(4, "1/2") == cb.disc_oracle(4, Fraction(1, 2))
    with pytest.raises(qd.HypothesisViolatedError):
        cb.disc_formula(2, -4)

    spec = {
        "family": "turaj", "d": 1, "m": 2, "k": 1, "l": 0,
        "initial": [["1"], ["0", "1"]], "g": ["0", "1"], "v": "1",
    }
    t = qd.Family(spec)
    assert t.generate(3) == [0, 1, 1, 0, 2, 0, 0, 1]
    assert t.resultant_formula(3) == t.resultant_oracle(3)
    with pytest.raises(qd.SpecError):
        qd.Family({"family": "schur", "a": "1"})


@pytest.mark.parametrize("r", [0, 4, 6, 10])
def test_mahlburg_ono(r):
    assert qd.mahlburg_ono_disc(r, 1) == 1
    for n in range(2, 6):
        assert qd.mahlburg_ono_disc(r, n) == qd.discriminant(qd.v_r_polynomial(r, n))


def test_verify_report():
    report = qd.verify("hypergeom", 3)
    assert report["totals"]["failed"] == 0
    assert report["totals"]["cases"] == len(report["cases"])
    assert all(case["equal"] for case in report["cases"])
