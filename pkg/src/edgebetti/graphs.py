"""Finite simple graphs on dense integer vertices, stored as adjacency bitsets.

Vertices are 0..n-1; a vertex set is an int whose bit v is set iff v belongs
to the set.  All operations are pure functions on immutable inputs, so they
are safe to call from multiple threads or processes.
"""

from __future__ import annotations

import json
from typing import Iterable, Iterator, Sequence

Edge = tuple[int, int]


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of *mask* in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def as_mask(w, n: int) -> int:
    """Coerce an int bitmask or an iterable of vertices to a validated bitmask."""
    m = w if isinstance(w, int) else mask_of(w)
    if m < 0 or m >> n:
        raise ValueError(f"vertex set {bin(m)} out of range for n={n}")
    return m


class Graph:
    """Finite simple graph: no loops, no multiple edges.

    ``adj[v]`` is the open-neighborhood bitmask of v.  ``labels``, when
    present, are distinct display names (generators use them so search
    results stay human readable); they do not affect equality.
    """

    __slots__ = ("n", "adj", "labels")

    def __init__(self, n: int, adj: Sequence[int], labels: Sequence[str] | None = None):
        if len(adj) != n:
            raise ValueError("adjacency length must equal n")
        for v, row in enumerate(adj):
            if row >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            if row < 0 or row >> n:
                raise ValueError(f"adjacency of vertex {v} out of range")
        for v in range(n):
            for u in iter_bits(adj[v]):
                if not adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")
        if labels is not None:
            if len(labels) != n:
                raise ValueError("labels must have length n")
            if len(set(labels)) != n:
                raise ValueError("labels must be distinct")
            labels = tuple(labels)
        self.n = n
        self.adj = tuple(adj)
        self.labels = labels

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.num_edges()})"

    def vertices_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edges(self) -> list[Edge]:
        out = []
        for u in range(self.n):
            for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1)):
                out.append((u, v))
        return out

    def num_edges(self) -> int:
        return sum(self.degree(v) for v in range(self.n)) // 2

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)


def new_graph(n: int, edges: Iterable[Edge], labels: Sequence[str] | None = None) -> Graph:
    """Build a graph from an edge list; duplicate edges collapse."""
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u},{v}) out of range for n={n}")
        if u == v:
            raise ValueError(f"loop edge ({u},{v}) not allowed")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, adj, labels)


def induced_subgraph(g: Graph, w) -> tuple[Graph, tuple[int, ...]]:
    """Restrict g to the vertex set *w*.

    Returns the subgraph (vertices reindexed 0..|w|-1) together with the
    tuple mapping new index -> original vertex.
    """
    m = as_mask(w, g.n)
    kept = tuple(iter_bits(m))
    pos = {v: i for i, v in enumerate(kept)}
    adj = [0] * len(kept)
    for i, v in enumerate(kept):
        for u in iter_bits(g.adj[v] & m):
            adj[i] |= 1 << pos[u]
    labels = tuple(g.labels[v] for v in kept) if g.labels is not None else None
    return Graph(len(kept), adj, labels), kept


def neighborhood(g: Graph, v: int, closed: bool = False) -> int:
    """Open neighborhood bitmask of v, or the closed one when *closed*."""
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    m = g.adj[v]
    return m | (1 << v) if closed else m


def is_connected(g: Graph) -> bool:
    """BFS connectivity; the empty graph counts as connected."""
    if g.n == 0:
        return True
    seen = 1
    frontier = 1
    while frontier:
        grown = 0
        for v in iter_bits(frontier):
            grown |= g.adj[v]
        frontier = grown & ~seen
        seen |= frontier
    return seen == g.vertices_mask()


def is_chordal(g: Graph) -> bool:
    """Chordality via maximum cardinality search.

    MCS visits vertices by decreasing count of visited neighbors (ties go to
    the lowest index, so the ordering is reproducible).  The reverse visit
    order is a perfect elimination ordering iff the graph is chordal, which
    the second pass verifies directly.
    """
    n = g.n
    if n <= 2:
        return True
    weight = [0] * n
    visited = 0
    order = []
    for _ in range(n):
        best = -1
        best_w = -1
        for v in range(n):
            if not visited >> v & 1 and weight[v] > best_w:
                best_w = weight[v]
                best = v
        order.append(best)
        visited |= 1 << best
        for u in iter_bits(g.adj[best] & ~visited):
            weight[u] += 1
    elim = order[::-1]
    pos = [0] * n
    for i, v in enumerate(elim):
        pos[v] = i
    for i, v in enumerate(elim):
        later = [u for u in iter_bits(g.adj[v]) if pos[u] > i]
        if not later:
            continue
        parent = min(later, key=lambda u: pos[u])
        rest = mask_of(later) & ~(1 << parent)
        if rest & ~g.adj[parent]:
            return False
    return True


def _normalized_matching(g: Graph, m: Iterable[Edge]) -> list[Edge]:
    edges = []
    for u, v in m:
        if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
            raise ValueError(f"({u},{v}) is not an edge of the graph")
        edges.append((min(u, v), max(u, v)))
    return edges


def is_induced_matching(g: Graph, m: Iterable[Edge]) -> bool:
    """True iff *m* is a matching of g that no single edge of g meets twice.

    Raises ValueError when *m* contains a non-edge; returns False when the
    edges overlap or some edge of g touches two distinct members.
    """
    edges = _normalized_matching(g, m)
    masks = [(1 << u) | (1 << v) for u, v in edges]
    used = 0
    for em in masks:
        if em & used:
            return False
        used |= em
    for a, b in g.edges():
        eab = (1 << a) | (1 << b)
        touched = 0
        for em in masks:
            if em & eab:
                touched += 1
                if touched == 2:
                    return False
    return True


def induced_matching_number(g: Graph) -> int:
    """Maximum size of an induced matching, by exhaustive branch and bound.

    Picking an edge (u,v) removes N[u] | N[v] from play: any edge chosen
    later inside the remainder is automatically disjoint and unblocked, so
    the recursion enumerates exactly the induced matchings.  Branching is on
    the lowest-index vertex that still has an available incident edge.
    Intended for n up to ~20.
    """
    adj = g.adj
    best = 0

    def rec(avail: int, size: int) -> None:
        nonlocal best
        if size > best:
            best = size
        if size + (avail.bit_count() // 2) <= best:
            return
        rest = avail
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            rest ^= low
            nb = adj[v] & avail
            if not nb:
                avail ^= low  # isolated in the remainder, drop for good
                continue
            for u in iter_bits(nb):
                rec(avail & ~(adj[v] | adj[u] | low | (1 << u)), size + 1)
            rec(avail ^ low, size)
            return

    rec(g.vertices_mask(), 0)
    return best


# ---------------------------------------------------------------------------
# Graph text and JSON formats
#
# Text: first line "n m", then m lines "u v" (0-based).  JSON:
# {"n": int, "edges": [[u, v], ...], "labels": [...]? }.


def graph_to_text(g: Graph) -> str:
    lines = [f"{g.n} {g.num_edges()}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def graph_from_text(text: str) -> Graph:
    tokens = text.split()
    if len(tokens) < 2:
        raise ValueError("graph text must start with 'n m'")
    try:
        values = [int(t) for t in tokens]
    except ValueError as exc:
        raise ValueError(f"bad token in graph text: {exc}") from None
    n, m = values[0], values[1]
    if len(values) != 2 + 2 * m:
        raise ValueError(f"expected {m} edges, found {(len(values) - 2) / 2}")
    edges = [(values[2 + 2 * k], values[3 + 2 * k]) for k in range(m)]
    return new_graph(n, edges)


def graph_to_json_dict(g: Graph) -> dict:
    out: dict = {"n": g.n, "edges": [[u, v] for u, v in g.edges()]}
    if g.labels is not None:
        out["labels"] = list(g.labels)
    return out


def graph_from_json_dict(obj: dict) -> Graph:
    if not isinstance(obj, dict) or "n" not in obj or "edges" not in obj:
        raise ValueError("graph JSON needs 'n' and 'edges' keys")
    edges = [(int(u), int(v)) for u, v in obj["edges"]]
    return new_graph(int(obj["n"]), edges, obj.get("labels"))


def parse_graph(text: str) -> Graph:
    """Read a graph in either supported format (JSON is detected by '{')."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            obj = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise ValueError(f"bad graph JSON: {exc}") from None
        return graph_from_json_dict(obj)
    return graph_from_text(text)


def format_graph(g: Graph, fmt: str = "text") -> str:
    if fmt == "text":
        return graph_to_text(g)
    if fmt == "json":
        return json.dumps(graph_to_json_dict(g)) + "\n"
    raise ValueError(f"unknown graph format {fmt!r}")
