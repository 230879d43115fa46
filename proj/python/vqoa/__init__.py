"""Python bindings for the vqoa C++ core."""

import json

from ._core import (
    Polynomial,
    brute_force,
    gen_higher_order,
    gen_maxcut,
    gen_qubo,
    interaction_count,
    pauli_min_eigenvalue,
    tmm_transmission,
)
from ._core import _solve_json

__all__ = [
    "Polynomial",
    "brute_force",
    "gen_higher_order",
    "gen_maxcut",
    "gen_qubo",
    "interaction_count",
    "pauli_min_eigenvalue",
    "solve",
    "tmm_transmission",
]


def solve(poly, *, family="qubo", replicas=50, seed=1, workers=1, mode="expectation", shots=0,
          m=None, t=None, optimizer=None, label_power=None, reference=None):
    """Best-of-R solve; returns the result document as a dict."""
    return json.loads(_solve_json(poly, family, replicas, seed, workers, mode, shots, m, t,
                                  optimizer, label_power, reference))
