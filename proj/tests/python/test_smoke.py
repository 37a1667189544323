import pytest

import mbonacci


def test_sequences():
    assert mbonacci.window("tribonacci", 3, 0, 3) == [0, 1, 1, 2]
    assert mbonacci.window("conjectureV", 4, 0, 4) == [0, 1, 1, 1, 3]
    assert mbonacci.term("tribonacci", 3, 10) == 149
    big = mbonacci.term_fast("tribonacci", 3, 500)
    assert big == mbonacci.term("tribonacci", 3, 500)
    assert big.bit_length() > 64


def test_symmetric_quantities():
    assert mbonacci.vieta(3) == [1, -1, 1]
    assert mbonacci.h_sequence(3, 3) == [1, 1, 2, 4]
    assert mbonacci.power_sums(3, 3) == [3, 1, 3, 7]
    assert mbonacci.nested_sum_exact(2, 4) == 2
    assert mbonacci.reduce_nested_sum(2, 4) == "e1^2 - e2"


def test_roots_and_numeric():
    r = mbonacci.find_roots(3)
    assert r["converged"]
    assert abs(r["roots"][0] - 1.8392867552141612) < 1e-9
    value, err = mbonacci.numeric_nested_sum(6, 25)
    exact = mbonacci.h_sequence(6, 25)[25]
    assert abs(value - exact) / exact < 1e-6
    assert err > 0


def test_expressions():
    assert mbonacci.evaluate("p(2)+e(2)", 3) == 2
    assert mbonacci.evaluate("h(2) - V(3)", 4) == 1
    assert mbonacci.pretty("((e(1)))^2 - (2*e(2))") == "e(1)^2 - 2*e(2)"
    with pytest.raises(mbonacci.ExprError):
        mbonacci.evaluate("2^3^2", 3)


def test_reports():
    rep = mbonacci.verify_conjecture(4, 10)
    assert rep["verdict"] == "fail"
    ce = rep["first_counterexample"]
    assert (ce["m"], ce["n"], ce["lhs"], ce["rhs"]) == (4, 2, "2", "1")
    assert mbonacci.verify_conjecture(8, 40, "corrected")["verdict"] == "pass"
    assert mbonacci.verify_identity(3, 50)["verdict"] == "pass"
    assert mbonacci.verify_proof_steps(2, 10)["verdict"] == "pass"
    assert mbonacci.verify_layer_identity(5, 4)


def test_errors():
    with pytest.raises(mbonacci.CapExceeded):
        mbonacci.nested_sum_exact(40, 8, cap=100)
    with pytest.raises(mbonacci.Error):
        mbonacci.window("lucas", 2, 0, 3)
    with pytest.raises(ValueError):
        mbonacci.h_sequence(1, 3)
