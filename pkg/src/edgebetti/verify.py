"""Replayable checks of the headline facts about the graph families.

Each ``verify_*`` function recomputes a claim from scratch — Betti table,
invariants, certificate search — and returns a VerificationReport whose
``passed`` flag is simply ``expected == computed``.  Reports serialize to
JSON-friendly dicts so the CLI can stream them as JSON lines.

Also here: seeded random chordal graph generation and small-order graph
enumeration up to isomorphism (trees; chordal graphs), used by the
property sweeps.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from itertools import permutations, product
from typing import Iterator

from .analysis import extremal_positions, projective_dimension, regularity
from .betti import betti_table
from .bouquets import certified_positions, find_certificate
from .families import g_pr1, g_rb, path_star
from .graphs import Graph, induced_matching_number, is_chordal, is_connected, new_graph

MAX_ORACLE_VERTICES = 13
MAX_EQUIVALENCE_VERTICES = 10


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of replaying one claim: pass iff expected == computed."""

    claim: str
    params: dict
    expected: object
    computed: object
    passed: bool
    skipped: bool = False
    runtime: float = 0.0

    def __post_init__(self) -> None:
        if self.passed != (self.expected == self.computed):
            raise ValueError("passed flag must mirror expected == computed")

    def to_json_dict(self) -> dict:
        return {
            "claim": self.claim,
            "params": self.params,
            "expected": self.expected,
            "computed": self.computed,
            "passed": self.passed,
            "skipped": self.skipped,
            "runtime": round(self.runtime, 6),
        }


def _report(claim: str, params: dict, expected, computed, t0: float) -> VerificationReport:
    return VerificationReport(
        claim=claim,
        params=params,
        expected=expected,
        computed=computed,
        passed=expected == computed,
        runtime=time.perf_counter() - t0,
    )


def _skipped(claim: str, params: dict, reason: str, t0: float) -> VerificationReport:
    return VerificationReport(
        claim=claim,
        params=dict(params, reason=reason),
        expected=None,
        computed=None,
        passed=True,
        skipped=True,
        runtime=time.perf_counter() - t0,
    )


def _is_tree(g: Graph) -> bool:
    return is_connected(g) and g.num_edges() == g.n - 1


def verify_path_star(r: int) -> VerificationReport:
    """Path-star tree on 2r+1 vertices: regularity r, a single extremal
    entry at (r+1, r), and a bouquet certificate of the forced shape
    (one 3-vertex star holding the hub, r-1 plain edges)."""
    if not 1 <= r <= 6:
        raise ValueError("need 1 <= r <= 6 (13-vertex sweep cap)")
    t0 = time.perf_counter()
    g = path_star(r)
    table = betti_table(g)
    report = extremal_positions(table)
    cert = find_certificate(g, r + 1, r)
    shape_ok = False
    if cert is not None:
        sizes = sorted(1 + len(b.leaves) for b in cert.bouquet_set.bouquets)
        hub = 2 * r  # the common vertex of the r paths
        big = max(cert.bouquet_set.bouquets, key=lambda b: len(b.leaves))
        shape_ok = (
            sizes == [2] * (r - 1) + [3]
            and cert.witness == (1 << g.n) - 1
            and hub in big.leaves
            and r <= big.root < 2 * r
        )
    computed = {
        "chordal": is_chordal(g),
        "tree": _is_tree(g),
        "regularity": regularity(table),
        "projective_dimension": projective_dimension(table),
        "extremal_count": report.count,
        "extremal_positions": [[i, j] for i, j, _ in report.positions],
        "corner_value_positive": table.get(r + 1, r) > 0,
        "certificate_of_forced_shape": shape_ok,
    }
    expected = {
        "chordal": True,
        "tree": True,
        "regularity": r,
        "projective_dimension": r + 1,
        "extremal_count": 1,
        "extremal_positions": [[r + 1, r]],
        "corner_value_positive": True,
        "certificate_of_forced_shape": True,
    }
    return _report("path-star", {"r": r}, expected, computed, t0)


def verify_grb(r: int, b: int) -> VerificationReport:
    """Hub-cascade family on 2r+b vertices: regularity r, projective
    dimension 2r+b-1, exactly b extremal entries at the predicted
    positions, and the predicted vanishing rectangle actually zero."""
    if not 2 <= b <= r:
        raise ValueError("need 2 <= b <= r")
    if 2 * r + b > MAX_ORACLE_VERTICES:
        raise ValueError(f"2r+b = {2 * r + b} exceeds the {MAX_ORACLE_VERTICES}-vertex cap")
    t0 = time.perf_counter()
    g = g_rb(r, b)
    table = betti_table(g)
    report = extremal_positions(table)
    positions = [[r + b + i - 1, r - i + 1] for i in range(1, b)] + [[2 * r + b - 1, 1]]
    rect_zero = all(
        table.get(r + 2 * b - 2 + i, j) == 0
        for i in range(1, r - b + 1)
        for j in range(2, r - b - i + 3)
    )
    computed = {
        "chordal": is_chordal(g),
        "induced_matching_number": induced_matching_number(g),
        "regularity": regularity(table),
        "projective_dimension": projective_dimension(table),
        "extremal_count": report.count,
        "extremal_positions": sorted([i, j] for i, j, _ in report.positions),
        "vanishing_rectangle": rect_zero,
    }
    expected = {
        "chordal": True,
        "induced_matching_number": r,
        "regularity": r,
        "projective_dimension": 2 * r + b - 1,
        "extremal_count": b,
        "extremal_positions": sorted(positions),
        "vanishing_rectangle": True,
    }
    return _report("grb", {"r": r, "b": b}, expected, computed, t0)


def verify_cert_support(g: Graph, name: str = "graph") -> VerificationReport:
    """Chordal equivalence: bouquet-certified positions == table support."""
    if g.n > MAX_EQUIVALENCE_VERTICES:
        raise ValueError(f"graph has {g.n} > {MAX_EQUIVALENCE_VERTICES} vertices")
    t0 = time.perf_counter()
    params = {"graph": name, "n": g.n, "edges": g.num_edges()}
    if not is_chordal(g):
        return _skipped("cert-support", params, "not chordal", t0)
    certified = sorted(certified_positions(g))
    support = sorted(betti_table(g).support())
    return _report(
        "cert-support",
        params,
        [list(p) for p in certified],
        [list(p) for p in support],
        t0,
    )


def verify_gpr1(p: int, r: int) -> VerificationReport:
    """Caterpillar family on p+r vertices: unique extremal entry at (p, r)."""
    if not 1 <= r < p:
        raise ValueError("need 1 <= r < p")
    if p + r > MAX_ORACLE_VERTICES:
        raise ValueError(f"p+r = {p + r} exceeds the {MAX_ORACLE_VERTICES}-vertex cap")
    t0 = time.perf_counter()
    g = g_pr1(p, r)
    table = betti_table(g)
    report = extremal_positions(table)
    computed = {
        "tree": _is_tree(g),
        "chordal": is_chordal(g),
        "regularity": regularity(table),
        "projective_dimension": projective_dimension(table),
        "extremal_count": report.count,
        "extremal_positions": [[i, j] for i, j, _ in report.positions],
    }
    expected = {
        "tree": True,
        "chordal": True,
        "regularity": r,
        "projective_dimension": p,
        "extremal_count": 1,
        "extremal_positions": [[p, r]],
    }
    return _report("gpr1", {"p": p, "r": r}, expected, computed, t0)


def verify_reg_eq_indmatch(g: Graph, name: str = "graph") -> VerificationReport:
    """On chordal graphs, regularity equals the induced matching number."""
    if g.n > MAX_ORACLE_VERTICES:
        raise ValueError(f"graph has {g.n} > {MAX_ORACLE_VERTICES} vertices")
    t0 = time.perf_counter()
    params = {"graph": name, "n": g.n, "edges": g.num_edges()}
    if not is_chordal(g):
        return _skipped("reg-indmatch", params, "not chordal", t0)
    return _report(
        "reg-indmatch",
        params,
        {"regularity": induced_matching_number(g)},
        {"regularity": regularity(betti_table(g))},
        t0,
    )


def random_chordal(n: int, rng: random.Random) -> Graph:
    """Random chordal graph on n vertices: each new vertex is attached to a
    clique grown greedily from a shuffled prefix of the earlier vertices.

    Reverse insertion order is a perfect elimination ordering, so the
    result is always chordal.  Deterministic for a given rng state; not
    necessarily connected.
    """
    adj = [0] * n
    edges = []
    for v in range(1, n):
        want = rng.randint(0, v)
        clique: list[int] = []
        for w in rng.sample(range(v), v):
            if len(clique) == want:
                break
            if all(adj[w] >> c & 1 for c in clique):
                clique.append(w)
        for w in clique:
            adj[v] |= 1 << w
            adj[w] |= 1 << v
            edges.append((w, v))
    return new_graph(n, edges)


# ---------------------------------------------------------------------------
# small-order enumeration up to isomorphism


def _rooted_code(adj: list[int], root: int, parent: int) -> tuple:
    kids = []
    m = adj[root] & ~(1 << parent if parent >= 0 else 0)
    while m:
        low = m & -m
        m ^= low
        kids.append(_rooted_code(adj, low.bit_length() - 1, root))
    return tuple(sorted(kids))


def _tree_key(g: Graph) -> tuple:
    """Canonical code of a tree: rooted code at its center(s)."""
    if g.n == 1:
        return ()
    degree = [g.adj[v].bit_count() for v in range(g.n)]
    alive = set(range(g.n))
    layer = [v for v in alive if degree[v] <= 1]
    while len(alive) > 2:
        nxt = []
        for v in layer:
            alive.discard(v)
            m = g.adj[v]
            while m:
                low = m & -m
                m ^= low
                u = low.bit_length() - 1
                if u in alive:
                    degree[u] -= 1
                    if degree[u] == 1:
                        nxt.append(u)
        layer = nxt
    return min(_rooted_code(list(g.adj), c, -1) for c in alive)


def _decode_tree(n: int, seq: tuple[int, ...]) -> list[tuple[int, int]]:
    """Edge list of the labeled tree with vertex-sequence code *seq*."""
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    ptr = 0
    leaf = -1
    for x in seq:
        if leaf < 0:
            while degree[ptr] != 1:
                ptr += 1
            leaf = ptr
            ptr += 1
        edges.append((min(leaf, x), max(leaf, x)))
        degree[x] -= 1
        if degree[x] == 1 and x < ptr:
            leaf = x  # fresh leaf below the scan point: consume it next
        else:
            leaf = -1
    if leaf < 0:
        while degree[ptr] != 1:
            ptr += 1
        leaf = ptr
    edges.append((leaf, n - 1))
    return edges


def all_trees(n: int) -> list[Graph]:
    """All trees on n vertices, one per isomorphism class.

    Decodes every labeled tree from its length-(n-2) vertex-sequence code
    and keeps one representative per canonical code; deterministic order.
    """
    if n < 1:
        return []
    if n == 1:
        return [new_graph(1, [])]
    if n == 2:
        return [new_graph(2, [(0, 1)])]
    found: dict[tuple, Graph] = {}
    for seq in product(range(n), repeat=n - 2):
        g = new_graph(n, _decode_tree(n, seq))
        key = _tree_key(g)
        if key not in found:
            found[key] = g
    return [found[k] for k in sorted(found)]


def _vertex_invariants(adj: list[int], n: int) -> list:
    inv = [adj[v].bit_count() for v in range(n)]
    for _ in range(2):
        inv = [
            (inv[v], tuple(sorted(inv[u] for u in _bits(adj[v]))))
            for v in range(n)
        ]
    return inv


def _bits(m: int) -> Iterator[int]:
    while m:
        low = m & -m
        m ^= low
        yield low.bit_length() - 1


def canonical_key(g: Graph) -> tuple:
    """Hashable isomorphism invariant, complete at small order.

    Vertices are first partitioned by an iterated degree invariant; the key
    is that partition plus the minimum relabeled edge list over all
    partition-respecting orderings.  Isomorphisms preserve the invariant,
    so exploring only these orderings is exhaustive.
    """
    n = g.n
    inv = _vertex_invariants(list(g.adj), n)
    cells: dict = {}
    for v in range(n):
        cells.setdefault(inv[v], []).append(v)
    ordered_cells = [cells[k] for k in sorted(cells)]
    sizes = tuple(len(c) for c in ordered_cells)
    best = None
    for perms in _product_permutations(ordered_cells):
        pos = {}
        nxt = 0
        for cell_perm in perms:
            for v in cell_perm:
                pos[v] = nxt
                nxt += 1
        key = tuple(
            sorted((min(pos[u], pos[v]), max(pos[u], pos[v])) for u, v in g.edges())
        )
        if best is None or key < best:
            best = key
    return (n, sizes, best)


def _product_permutations(cells: list[list[int]]) -> Iterator[list]:
    if not cells:
        yield []
        return
    head, *rest = cells
    for p in permutations(head):
        for tail in _product_permutations(rest):
            yield [p, *tail]


def _all_cliques(adj: list[int], n: int) -> list[int]:
    """Every clique of the graph as a bitmask, the empty one included."""
    out = [0]

    def rec(base: int, allowed: int) -> None:
        m = allowed
        while m:
            low = m & -m
            m ^= low
            v = low.bit_length() - 1
            out.append(base | low)
            rec(base | low, m & adj[v])

    rec(0, (1 << n) - 1)
    return out


def all_chordal_graphs(n: int) -> list[Graph]:
    """All chordal graphs on n vertices, one per isomorphism class.

    Grown by attaching each new vertex to a clique (possibly empty) of a
    smaller chordal graph — every chordal graph arises this way — with
    canonical-form deduplication at each order.  Intended for n <= 7.
    """
    if n < 1:
        return []
    level: dict[tuple, Graph] = {}
    g1 = new_graph(1, [])
    level[canonical_key(g1)] = g1
    for size in range(2, n + 1):
        nxt: dict[tuple, Graph] = {}
        for g in level.values():
            adj = list(g.adj)
            for clique in _all_cliques(adj, g.n):
                edges = g.edges() + [(u, size - 1) for u in _bits(clique)]
                cand = new_graph(size, edges)
                key = canonical_key(cand)
                if key not in nxt:
                    nxt[key] = cand
        level = nxt
    return [level[k] for k in sorted(level)]
