"""Covering and packing triangles, cliques and odd cycles in graphs.

Exact values come back as ``fractions.Fraction``.
"""

import json
from fractions import Fraction

from . import _core
from ._core import (
    Graph,
    TuzaError,
    bipartite_gnp,
    bipartize,
    blowup,
    complete_graph,
    count_targets,
    cycle_graph,
    density,
    exact_cover,
    exact_packing,
    fractional_cover,
    gnp,
    greedy_packing,
    kpartition_cover,
    load_csv,
    max_cut,
    multipartite,
    petersen_graph,
    targets,
)

__all__ = [
    "Graph",
    "TuzaError",
    "bipartite_gnp",
    "bipartize",
    "blowup",
    "complete_graph",
    "count_targets",
    "cover_process",
    "cycle_graph",
    "density",
    "exact_cover",
    "exact_packing",
    "fractional_cover",
    "gnp",
    "greedy_packing",
    "hardness",
    "kpartition_cover",
    "load_csv",
    "max_cut",
    "multipartite",
    "petersen_graph",
    "rho",
    "sweep",
    "targets",
    "verify_main",
    "witness",
]


def _fractions(obj):
    """Replace {"exact": "p/q", "approx": x} pairs with Fractions, recursively."""
    if isinstance(obj, dict):
        if set(obj) == {"exact", "approx"}:
            return Fraction(obj["exact"])
        return {k: _fractions(v) for k, v in obj.items()}
    if isinstance(obj, list):
        return [_fractions(v) for v in obj]
    return obj


def cover_process(graph, k=3, seed=1):
    return _fractions(_core.cover_process(graph, k, seed))


def hardness(graph, family="K3", seed=1, solve_lp=True, run_exact=True, **budget):
    return _fractions(_core.hardness(graph, family, seed, solve_lp, run_exact, **budget))


def witness(h, beta, seed=1, retries=32):
    return _fractions(_core.witness(h, str(Fraction(beta)), seed, retries))


def verify_main(graph, seed=1, solve_lp=True, run_exact_packing=True):
    return _fractions(_core.verify_main(graph, seed, solve_lp, run_exact_packing))


def rho(graph, seed=1):
    return _fractions(_core.rho(graph, seed))


def sweep(config):
    """Run a sweep from a config dict (or JSON text); returns the CSV report."""
    text = config if isinstance(config, str) else json.dumps(config)
    return _core.sweep_csv(text)
