import math

import pytest

vqoa = pytest.importorskip("vqoa")


def test_term_counts():
    assert vqoa.interaction_count(10, 2) == 55
    assert vqoa.interaction_count(10, 3) == 175
    assert vqoa.gen_qubo(10, 1).term_count == 55
    assert vqoa.gen_higher_order(10, 3, 2, 1).term_count == 175


def test_solve_matches_brute_force():
    poly = vqoa.gen_qubo(8, 3)
    optimum, assignment, enumerated = vqoa.brute_force(poly)
    assert enumerated == 256
    assert poly.evaluate(assignment) == pytest.approx(optimum)
    result = vqoa.solve(poly, replicas=10, seed=3, reference=optimum)
    assert result["best_cost"] == pytest.approx(optimum, abs=1e-9)
    assert result["approx_ratio"] == pytest.approx(1.0)
    assert poly.evaluate(result["best_assignment"]) == pytest.approx(result["best_cost"])


def test_worker_count_does_not_change_result():
    poly = vqoa.gen_qubo(8, 5)
    a = vqoa.solve(poly, replicas=6, seed=2, workers=1)
    b = vqoa.solve(poly, replicas=6, seed=2, workers=3)
    a.pop("wall_time_s")
    b.pop("wall_time_s")
    assert a == b


def test_json_round_trip():
    poly = vqoa.gen_higher_order(6, 3, 3, 2)
    back = vqoa.Polynomial.from_json(poly.to_json("nary"))
    assert back.arity == 3
    x = [0, 1, 2, 2, 1, 0]
    assert back.evaluate(x) == pytest.approx(poly.evaluate(x))


def test_pauli_and_tmm():
    assert vqoa.pauli_min_eigenvalue("1.0 Z") == pytest.approx(-1.0)
    assert vqoa.tmm_transmission([], 550.0) == pytest.approx(0.96)
    t = vqoa.tmm_transmission([(2.0, 0.0, 550.0 / 8)], 550.0)
    y = 4.0 / 1.5
    assert t == pytest.approx(1 - ((1 - y) / (1 + y)) ** 2, abs=1e-9)


def test_bad_assignment_length():
    with pytest.raises(ValueError):
        vqoa.gen_qubo(4, 1).evaluate([0, 1])
    assert not math.isnan(vqoa.gen_qubo(4, 1).evaluate([0, 1, 1, 0]))
