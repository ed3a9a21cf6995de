"""Betti tables via the subset-homology sweep, checked against naive recomputation."""

import itertools
import random

import pytest

from edgebetti.betti import (
    MAX_SWEEP_VERTICES,
    BettiTable,
    betti_single,
    betti_table,
    hilbert_numerator,
    k_polynomial,
)
from edgebetti.families import g_pr1, star_triangle
from edgebetti.graphs import new_graph
from edgebetti.homology import FieldSpec

from oracles import naive_betti_table


def cycle(n):
    return new_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n):
    return new_graph(n, [(i, i + 1) for i in range(n - 1)])


def complete(n):
    return new_graph(n, itertools.combinations(range(n), 2))


def random_graph(n, rng, p=0.5):
    return new_graph(
        n, [e for e in itertools.combinations(range(n), 2) if rng.random() < p]
    )


# --- the BettiTable container ------------------------------------------------


def test_table_requires_unit_entry():
    BettiTable(2, {(0, 0): 1, (1, 1): 1})
    with pytest.raises(ValueError):
        BettiTable(2, {(1, 1): 1})
    with pytest.raises(ValueError):
        BettiTable(2, {(0, 0): 2})


def test_table_rejects_bad_entries():
    with pytest.raises(ValueError):
        BettiTable(2, {(0, 0): 1, (1, 1): 0})  # zero stored
    with pytest.raises(ValueError):
        BettiTable(2, {(0, 0): 1, (-1, 1): 1})
    with pytest.raises(ValueError):
        BettiTable(2, {(0, 0): 1, (2, 1): 1})  # degree 3 > n = 2
    with pytest.raises(ValueError):
        BettiTable(-1, {(0, 0): 1})


def test_table_get_and_support():
    t = BettiTable(3, {(0, 0): 1, (1, 1): 3, (2, 1): 2})
    assert t.get(1, 1) == 3
    assert t.get(5, 5) == 0
    assert t.support() == {(0, 0), (1, 1), (2, 1)}


def test_table_json_round_trip():
    t = BettiTable(3, {(0, 0): 1, (1, 1): 3, (2, 1): 2})
    d = t.to_json_dict()
    assert d == {"n": 3, "entries": [[0, 0, 1], [1, 1, 3], [2, 1, 2]]}
    assert BettiTable.from_json_dict(d) == t
    with pytest.raises(ValueError):
        BettiTable.from_json_dict({"n": 3, "entries": [[0, 0, 1], [0, 0, 1]]})


# --- the sweep on known graphs -----------------------------------------------


def test_edgeless_graphs():
    # No edges: the ideal is zero and the resolution is just the ring.
    for n in (0, 1, 4):
        t = betti_table(new_graph(n, []))
        assert t.entries == {(0, 0): 1}


def test_single_edge():
    # One edge xy: 0 <- S <- S(-2) <- 0.
    t = betti_table(new_graph(2, [(0, 1)]))
    assert t.entries == {(0, 0): 1, (1, 1): 1}


def test_triangle_table():
    t = betti_table(complete(3))
    assert t.entries == {(0, 0): 1, (1, 1): 3, (2, 1): 2}


def test_path5_table():
    # 5-vertex path: linear strand plus two higher entries.
    t = betti_table(path(5))
    assert t.entries == {
        (0, 0): 1,
        (1, 1): 4,
        (2, 1): 3,
        (2, 2): 1,
        (3, 2): 1,
    }


def test_c5_table_has_top_corner():
    # The pentagon's independence complex is a circle, so the full subset
    # contributes beta_{3,5} = 1.
    t = betti_table(cycle(5))
    assert t.get(3, 2) == 1


def test_gpr1_42_table():
    t = betti_table(g_pr1(4, 2))
    assert t.entries == {
        (0, 0): 1,
        (1, 1): 5,
        (2, 1): 5,
        (2, 2): 2,
        (3, 1): 1,
        (3, 2): 3,
        (4, 2): 1,
    }


def test_beta_1_1_counts_edges():
    rng = random.Random(13)
    for _ in range(20):
        g = random_graph(rng.randint(1, 7), rng)
        t = betti_table(g)
        assert t.get(1, 1) == g.num_edges()


def test_matches_naive_oracle():
    rng = random.Random(17)
    for _ in range(25):
        g = random_graph(rng.randint(1, 6), rng, p=0.45)
        t = betti_table(g)
        assert t.entries == naive_betti_table(g)


def test_field_changes_nothing_on_small_graphs():
    rng = random.Random(19)
    for _ in range(10):
        g = random_graph(rng.randint(1, 6), rng)
        t_qq = betti_table(g)
        assert betti_table(g, field=FieldSpec.gf(2)).entries == t_qq.entries
        assert betti_table(g, field=FieldSpec.gf(3)).entries == t_qq.entries


def test_parallel_sweep_agrees_with_serial():
    g = star_triangle(3)
    serial = betti_table(g, jobs=1)
    parallel = betti_table(g, jobs=2)
    assert parallel == serial


def test_jobs_env_var(monkeypatch):
    monkeypatch.setenv("EDGEBETTI_JOBS", "2")
    g = complete(5)
    assert betti_table(g).entries == betti_table(g, jobs=1).entries
    monkeypatch.setenv("EDGEBETTI_JOBS", "0")
    with pytest.raises(ValueError):
        betti_table(g)


def test_sweep_size_cap():
    big = new_graph(MAX_SWEEP_VERTICES + 1, [])
    with pytest.raises(ValueError, match="vertices"):
        betti_table(big)


# --- single-position evaluation ----------------------------------------------


def test_betti_single_matches_table():
    g = path(5)
    t = betti_table(g)
    for i in range(6):
        for j in range(4):
            if (i, j) == (0, 0) or (i > 0 and j > 0 and i + j <= g.n):
                assert betti_single(g, i, j) == t.get(i, j), (i, j)


def test_betti_single_edge_cases():
    g = path(3)
    assert betti_single(g, 0, 0) == 1
    assert betti_single(g, 0, 1) == 0
    assert betti_single(g, 1, 0) == 0
    with pytest.warns(UserWarning, match="identically 0"):
        assert betti_single(g, 3, 2) == 0


# --- Hilbert series cross-check ----------------------------------------------


def test_hilbert_numerator_known():
    assert hilbert_numerator(new_graph(2, [(0, 1)])) == (1, 0, -1)
    assert hilbert_numerator(complete(3)) == (1, 0, -3, 2)
    # Edgeless: the ideal is zero, numerator is 1.
    assert hilbert_numerator(new_graph(3, [])) == (1,)


def test_k_polynomial_known():
    t = betti_table(complete(3))
    assert k_polynomial(t) == (1, 0, -3, 2)


def test_hilbert_equals_k_polynomial_randomized():
    rng = random.Random(23)
    for _ in range(30):
        g = random_graph(rng.randint(0, 7), rng)
        assert k_polynomial(betti_table(g)) == hilbert_numerator(g)
