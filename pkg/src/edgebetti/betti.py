"""Graded Betti tables of edge ideals, by summing homology over vertex subsets.

For a graph G on n vertices and the quotient S/I(G) of the polynomial ring by
its edge ideal, Hochster's formula gives

    beta_{i,i+j} = sum over |W| = i+j of dim ~H_{j-1}(Ind(G_W))

where Ind(G_W) is the independence complex of the induced subgraph on W.  The
sweep over subsets skips any W whose induced subgraph has an isolated vertex:
the complex is then a cone and contributes nothing.  The remaining subsets get
an exact rank computation per boundary map.

Tables are sparse maps (i, j) -> beta_{i,i+j} with the unit entry (0,0) -> 1
always present.  The alternating sum of a table is the numerator of the
Hilbert series of S/I(G), which `hilbert_numerator` recomputes independently
from independent-set counts; the two must agree for every graph.
"""

from __future__ import annotations

import math
import multiprocessing
import os
import warnings
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .graphs import Graph
from .homology import FieldSpec, homology_dims_from_levels, independent_sets_by_card

MAX_SWEEP_VERTICES = 16
MAX_COUNT_VERTICES = 20

JOBS_ENV_VAR = "EDGEBETTI_JOBS"

Position = tuple[int, int]


@dataclass(frozen=True)
class BettiTable:
    """Sparse grid of graded Betti numbers of S/I for an edge ideal.

    ``entries`` maps (homological degree i, strand j) to beta_{i,i+j} > 0;
    the unit entry (0,0) -> 1 is stored explicitly.  ``n`` is the number of
    polynomial variables (= vertices of the graph).  Treat instances as
    immutable: the entry dict is never to be modified after construction.
    """

    n: int
    entries: dict[Position, int]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("negative variable count")
        if self.entries.get((0, 0)) != 1:
            raise ValueError("table must contain the unit entry (0,0) -> 1")
        for (i, j), v in self.entries.items():
            if i < 0 or j < 0:
                raise ValueError(f"negative position ({i},{j})")
            if not isinstance(v, int) or v <= 0:
                raise ValueError(f"entry at ({i},{j}) must be a positive int, got {v!r}")
            if i + j > self.n:
                raise ValueError(f"entry at ({i},{j}) lies beyond degree n={self.n}")

    def get(self, i: int, j: int) -> int:
        return self.entries.get((i, j), 0)

    def support(self) -> set[Position]:
        return set(self.entries)

    def to_json_dict(self) -> dict:
        ents = sorted([i, j, v] for (i, j), v in self.entries.items())
        return {"n": self.n, "entries": ents}

    @classmethod
    def from_json_dict(cls, d: dict) -> "BettiTable":
        entries = {}
        for item in d["entries"]:
            i, j, v = item
            if (i, j) in entries:
                raise ValueError(f"duplicate entry at ({i},{j})")
            entries[(int(i), int(j))] = int(v)
        return cls(int(d["n"]), entries)


def _has_isolated_vertex(adj: Sequence[int], w: int) -> bool:
    m = w
    while m:
        low = m & -m
        m ^= low
        if adj[low.bit_length() - 1] & w == 0:
            return True
    return False


def _accumulate_subset(adj: Sequence[int], w: int, p: int | None, cells: dict) -> None:
    if _has_isolated_vertex(adj, w):
        return  # cone: no reduced homology
    levels = independent_sets_by_card(adj, w)
    size = w.bit_count()
    for k, d in homology_dims_from_levels(levels, p).items():
        if d:
            key = (size - k - 1, k + 1)
            cells[key] = cells.get(key, 0) + d


def _sweep_range(adj: tuple[int, ...], lo: int, hi: int, p: int | None) -> dict:
    """Hochster contributions of all subsets lo <= W < hi (as masks)."""
    cells: dict[Position, int] = {}
    for w in range(max(lo, 1), hi):
        _accumulate_subset(adj, w, p, cells)
    return cells


def _resolve_jobs(jobs: int | None) -> int:
    if jobs is None:
        raw = os.environ.get(JOBS_ENV_VAR, "")
        jobs = int(raw) if raw.strip() else 1
    if jobs < 1:
        raise ValueError("jobs must be >= 1")
    return jobs


def betti_table(
    g: Graph, field: FieldSpec = FieldSpec(), jobs: int | None = None
) -> BettiTable:
    """Full graded Betti table of S/I(g) over *field*.

    Runs the subset sweep serially (increasing |W|, lexicographic within a
    size) or, with jobs > 1, in parallel over chunks of the subset space.
    Aggregation is plain addition per cell, so the result is identical for
    every schedule.  jobs defaults to the EDGEBETTI_JOBS environment
    variable, else 1.
    """
    if g.n > MAX_SWEEP_VERTICES:
        raise ValueError(f"graph has {g.n} > {MAX_SWEEP_VERTICES} vertices")
    jobs = _resolve_jobs(jobs)
    cells: dict[Position, int] = {(0, 0): 1}
    adj = tuple(g.adj)
    if jobs == 1 or g.n < 4:
        for size in range(1, g.n + 1):
            for combo in combinations(range(g.n), size):
                w = 0
                for v in combo:
                    w |= 1 << v
                _accumulate_subset(adj, w, field.p, cells)
        return BettiTable(g.n, cells)
    total = 1 << g.n
    nchunks = min(total, jobs * 8)
    step = total // nchunks
    bounds = [step * c for c in range(nchunks)] + [total]
    args = [(adj, bounds[c], bounds[c + 1], field.p) for c in range(nchunks)]
    with multiprocessing.Pool(jobs) as pool:
        for part in pool.starmap(_sweep_range, args):
            for key, v in part.items():
                cells[key] = cells.get(key, 0) + v
    return BettiTable(g.n, cells)


def betti_single(
    g: Graph, i: int, j: int, field: FieldSpec = FieldSpec()
) -> int:
    """Single Betti number beta_{i,i+j}(S/I(g)), summing only |W| = i+j.

    Degrees beyond the variable count vanish; asking for one emits a
    warning and returns 0.
    """
    if i == 0 and j == 0:
        return 1
    if i <= 0 or j <= 0:
        return 0
    if i + j > g.n:
        warnings.warn(
            f"beta_({i},{i + j}) of a ring in {g.n} variables is identically 0",
            stacklevel=2,
        )
        return 0
    adj = tuple(g.adj)
    k = j - 1
    total = 0
    for combo in combinations(range(g.n), i + j):
        w = 0
        for v in combo:
            w |= 1 << v
        if _has_isolated_vertex(adj, w):
            continue
        levels = independent_sets_by_card(adj, w)
        total += homology_dims_from_levels(levels, field.p).get(k, 0)
    return total


def _trim(coeffs: list[int]) -> tuple[int, ...]:
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def _independent_set_counts(adj: Sequence[int], vmask: int) -> list[int]:
    counts = [0] * (vmask.bit_count() + 1)
    counts[0] = 1

    def rec(size: int, avail: int) -> None:
        while avail:
            low = avail & -avail
            avail ^= low
            counts[size + 1] += 1
            rest = avail & ~adj[low.bit_length() - 1]
            if rest:
                rec(size + 1, rest)

    rec(0, vmask)
    return counts


def hilbert_numerator(g: Graph) -> tuple[int, ...]:
    """Numerator of the Hilbert series of S/I(g), as coefficients in t.

    Computed straight from the independent-set counts of g:
    sum over independent A of t^|A| (1-t)^(n-|A|).  Serves as a cross-check
    oracle for the Betti sweep via `k_polynomial`.
    """
    if g.n > MAX_COUNT_VERTICES:
        raise ValueError(f"graph has {g.n} > {MAX_COUNT_VERTICES} vertices")
    n = g.n
    counts = _independent_set_counts(tuple(g.adj), g.vertices_mask())
    poly = [0] * (n + 1)
    for s, c in enumerate(counts):
        if not c:
            continue
        for k in range(n - s + 1):
            poly[s + k] += c * (-1) ** k * math.comb(n - s, k)
    return _trim(poly)


def k_polynomial(t: BettiTable) -> tuple[int, ...]:
    """Alternating sum of the table: sum of (-1)^i beta_{i,i+j} t^(i+j).

    Equals `hilbert_numerator` of the underlying graph for every correct
    table, whatever the coefficient field.
    """
    poly = [0] * (t.n + 1)
    for (i, j), v in t.entries.items():
        poly[i + j] += (-1) ** i * v
    return _trim(poly)
