"""Dependency graphs and vertex-set algebra.

Vertex sets are plain ``int`` bitmasks: bit ``i`` set means vertex ``i``
(0-based) is a member.  The canonical order of sets is the integer order of
their masks, which is the order every table and enumeration in this package
uses.  Vertices are 1-based only at the I/O boundary (JSON, edge lists,
reports).
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

#: Hard limit on the number of vertices a :class:`Graph` may have.
MAX_VERTICES = 64


class GraphFormatError(ValueError):
    """Raised when a graph document cannot be ingested."""


# -- vertex-set helpers -----------------------------------------------------

def vset(members: Iterable[int] = ()) -> int:
    """Bitmask of the given 0-based vertices."""
    mask = 0
    for i in members:
        if i < 0:
            raise ValueError(f"negative vertex index {i}")
        mask |= 1 << i
    return mask


def members(mask: int) -> list[int]:
    """0-based members of ``mask`` in increasing order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def external(mask: int) -> list[int]:
    """1-based members of ``mask``, as they appear in reports."""
    return [i + 1 for i in members(mask)]


def full_set(n: int) -> int:
    return (1 << n) - 1


def lowest(mask: int) -> int:
    """Index of the lowest member of a nonempty set."""
    return (mask & -mask).bit_length() - 1


def submasks(mask: int) -> Iterator[int]:
    """All subsets of ``mask`` in increasing canonical order, ∅ first."""
    sub = 0
    while True:
        yield sub
        if sub == mask:
            return
        sub = (sub - mask) & mask


def popcount(mask: int) -> int:
    return bin(mask).count("1")


# -- graph ------------------------------------------------------------------

@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on vertices ``0..n-1``.

    ``adj[i]`` is the bitmask of the open neighbourhood of ``i``.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count {self.n} outside [1, {MAX_VERTICES}]")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match n")
        for i, nb in enumerate(self.adj):
            if nb >> self.n:
                raise ValueError(f"neighbour of {i} out of range")
            if nb >> i & 1:
                raise ValueError(f"self-loop at vertex {i}")
            for j in members(nb):
                if not self.adj[j] >> i & 1:
                    raise ValueError(f"asymmetric adjacency between {i} and {j}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]], one_based: bool = False) -> "Graph":
        shift = 1 if one_based else 0
        adj = [0] * n
        for pos, edge in enumerate(edges):
            if len(edge) != 2:
                raise GraphFormatError(f"edge #{pos}: expected a pair, got {edge!r}")
            i, j = (int(v) - shift for v in edge)
            for v in (i, j):
                if not 0 <= v < n:
                    raise GraphFormatError(f"edge #{pos}: vertex {v + shift} out of range")
            if i == j:
                raise GraphFormatError(f"edge #{pos}: self-loop at vertex {i + shift}")
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        return cls(n, tuple(adj))

    @property
    def vertices(self) -> int:
        return full_set(self.n)

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.n) for j in members(self.adj[i]) if i < j]

    def degree(self, i: int) -> int:
        return popcount(self.adj[i])

    @property
    def max_degree(self) -> int:
        return max(self.degree(i) for i in range(self.n))

    def closed(self, i: int) -> int:
        """Closed neighbourhood mask, without range checks (hot path)."""
        return self.adj[i] | (1 << i)

    def induced(self, keep: int) -> tuple["Graph", list[int]]:
        """Induced subgraph on ``keep`` plus the old index of each new vertex."""
        old = members(keep)
        pos = {v: k for k, v in enumerate(old)}
        adj = tuple(vset(pos[j] for j in members(self.adj[v] & keep)) for v in old)
        return Graph(len(old), adj), old

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [[i + 1, j + 1] for i, j in self.edges()]}


def closed_neighborhood(G: Graph, i: int) -> int:
    """Γ⁺(i) = Γ(i) ∪ {i}."""
    if not 0 <= i < G.n:
        raise IndexError(f"vertex {i} out of range for n={G.n}")
    return G.adj[i] | (1 << i)


def is_independent(G: Graph, S: int) -> bool:
    rest = S
    while rest:
        low = rest & -rest
        if G.adj[low.bit_length() - 1] & S:
            return False
        rest ^= low
    return True


def enumerate_independent_subsets(G: Graph, S: int) -> list[int]:
    """Every independent ``I ⊆ S``, once each, in canonical order.

    Brute force over all subsets of ``S``; intended for oracles, not for the
    table builders.
    """
    return [I for I in submasks(S) if is_independent(G, I)]


def induced_components(G: Graph, S: int) -> list[int]:
    """Connected components of the subgraph induced on ``S``.

    Parts are ordered by their lowest member.
    """
    parts = []
    rest = S
    while rest:
        comp = rest & -rest
        frontier = comp
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            new = G.adj[low.bit_length() - 1] & rest & ~comp
            comp |= new
            frontier |= new
        parts.append(comp)
        rest &= ~comp
    return parts


# -- ingestion --------------------------------------------------------------

def _parse_edge_list(text: str) -> Graph:
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if n is None:
            if len(fields) != 2 or fields[0] != "n":
                raise GraphFormatError(f"line {lineno}: expected header 'n <int>'")
            try:
                n = int(fields[1])
            except ValueError:
                raise GraphFormatError(f"line {lineno}: bad vertex count {fields[1]!r}") from None
            continue
        if len(fields) != 2:
            raise GraphFormatError(f"line {lineno}: expected 'i j', got {line!r}")
        try:
            i, j = int(fields[0]), int(fields[1])
        except ValueError:
            raise GraphFormatError(f"line {lineno}: non-integer vertex in {line!r}") from None
        if not (1 <= i <= n and 1 <= j <= n):
            raise GraphFormatError(f"line {lineno}: vertex out of range 1..{n}")
        if i == j:
            raise GraphFormatError(f"line {lineno}: self-loop at vertex {i}")
        edges.append((i, j))
    if n is None:
        raise GraphFormatError("empty edge list: missing 'n <int>' header")
    _check_n(n)
    return Graph.from_edges(n, edges, one_based=True)


def _check_n(n) -> None:
    if not isinstance(n, int) or isinstance(n, bool) or not 1 <= n <= MAX_VERTICES:
        raise GraphFormatError(f"vertex count must be an integer in [1, {MAX_VERTICES}], got {n!r}")


def _parse_json_graph(doc: dict) -> Graph:
    if not isinstance(doc, dict) or "n" not in doc:
        raise GraphFormatError("graph JSON must be an object with keys 'n' and 'edges'")
    n = doc["n"]
    _check_n(n)
    edges = doc.get("edges", [])
    if not isinstance(edges, list):
        raise GraphFormatError("'edges' must be a list of [i, j] pairs")
    for pos, e in enumerate(edges):
        if not (isinstance(e, list) and len(e) == 2 and all(isinstance(v, int) for v in e)):
            raise GraphFormatError(f"edge #{pos}: expected [int, int], got {e!r}")
    return Graph.from_edges(n, edges, one_based=True)


def parse_graph(document: str | dict) -> Graph:
    """Build a graph from JSON (text or decoded object) or edge-list text.

    Duplicate edges collapse.  Vertices are 1-based in both formats.
    """
    if isinstance(document, dict):
        return _parse_json_graph(document)
    text = document.lstrip()
    if text.startswith("{"):
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise GraphFormatError(f"invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from None
        return _parse_json_graph(doc)
    return _parse_edge_list(document)


def load_graph(path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())


# -- standard families ------------------------------------------------------

def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def random_graph(n: int, edge_prob: float, seed: int | None = None) -> Graph:
    rng = random.Random(seed)
    return Graph.from_edges(
        n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < edge_prob]
    )


def random_tree(n: int, seed: int | None = None) -> Graph:
    rng = random.Random(seed)
    return Graph.from_edges(n, [(rng.randrange(i), i) for i in range(1, n)])
