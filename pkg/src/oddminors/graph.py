"""Simple undirected graphs with dense 0-based vertex ids.

Everything downstream (partitions, quotients, coloring, minor search)
consumes this representation.  Graphs are immutable after construction;
adjacency iteration is always in ascending vertex id, which makes every
greedy algorithm in the package fully deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import ParseError, StructureError

Edge = tuple[int, int]


class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    Edges are stored normalized as ``(u, v)`` with ``u < v``.  Self-loops
    and out-of-range endpoints are rejected; duplicate edges collapse.
    Instances are immutable: do not mutate ``edges`` or adjacency.
    """

    __slots__ = ("n", "edges", "_adj")

    def __init__(self, n: int, edges: Iterable[Edge] = ()) -> None:
        if n < 0:
            raise StructureError(f"vertex count must be non-negative, got {n}")
        normalized = set()
        for u, v in edges:
            if u == v:
                raise StructureError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise StructureError(f"edge ({u}, {v}) out of range for n={n}")
            normalized.add((u, v) if u < v else (v, u))
        self.n = n
        self.edges: frozenset[Edge] = frozenset(normalized)
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in normalized:
            adj[u].add(v)
            adj[v].add(u)
        self._adj: tuple[tuple[int, ...], ...] = tuple(
            tuple(sorted(s)) for s in adj
        )

    def neighbors(self, v: int) -> tuple[int, ...]:
        """Neighbors of ``v`` in ascending id order."""
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    @property
    def m(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class TwoSides:
    """The two sides of the unique bipartition of a connected subgraph.

    Canonical orientation: the lowest vertex id of the subset is in
    ``side_a``.  No edge runs inside either side.
    """

    side_a: frozenset[int]
    side_b: frozenset[int]

    @property
    def members(self) -> frozenset[int]:
        return self.side_a | self.side_b

    def side_of(self, v: int) -> int:
        """0 for side A, 1 for side B."""
        if v in self.side_a:
            return 0
        if v in self.side_b:
            return 1
        raise KeyError(v)


@dataclass(frozen=True)
class OddCycleWitness:
    """A closed walk of odd length proving a vertex subset non-bipartite.

    ``walk[0] == walk[-1]`` and consecutive entries are adjacent; the
    number of edges ``len(walk) - 1`` is odd.
    """

    walk: tuple[int, ...]


def connected_components(g: Graph, subset: Iterable[int]) -> list[frozenset[int]]:
    """Partition ``subset`` into the components of the induced subgraph.

    Components are returned in ascending order of their minimum vertex id.
    """
    members = set(subset)
    for v in members:
        if not (0 <= v < g.n):
            raise StructureError(f"vertex {v} out of range for n={g.n}")
    out: list[frozenset[int]] = []
    seen: set[int] = set()
    for start in sorted(members):
        if start in seen:
            continue
        comp = {start}
        queue = [start]
        while queue:
            x = queue.pop()
            for y in g.neighbors(x):
                if y in members and y not in comp:
                    comp.add(y)
                    queue.append(y)
        seen |= comp
        out.append(frozenset(comp))
    return out


def is_connected(g: Graph, subset: Iterable[int]) -> bool:
    members = set(subset)
    if not members:
        return True
    return len(connected_components(g, members)) == 1


def bipartition_of(g: Graph, subset: Iterable[int]) -> TwoSides | OddCycleWitness:
    """Two-color the induced subgraph on ``subset``, or exhibit an odd walk.

    The subset must induce a connected subgraph (a structural requirement:
    only then is the bipartition unique).  On success the lowest id of the
    subset lands in side A.  On failure the returned witness is a closed
    walk of odd length built from two tree paths plus the violating edge.
    """
    members = set(subset)
    if not members:
        return TwoSides(frozenset(), frozenset())
    if not is_connected(g, members):
        raise StructureError(
            "subset does not induce a connected subgraph; bipartition undefined"
        )
    root = min(members)
    depth = {root: 0}
    parent: dict[int, int] = {}
    order = [root]
    i = 0
    while i < len(order):
        x = order[i]
        i += 1
        for y in g.neighbors(x):
            if y not in members:
                continue
            if y not in depth:
                depth[y] = depth[x] + 1
                parent[y] = x
                order.append(y)
            elif (depth[y] ^ depth[x]) % 2 == 0:
                # Same parity: u -> root -> v -> u is a closed odd walk.
                up = _path_to_root(x, parent)
                down = _path_to_root(y, parent)
                walk = up + down[::-1][1:] + (x,)
                return OddCycleWitness(walk)
    side_a = frozenset(v for v, d in depth.items() if d % 2 == 0)
    side_b = frozenset(v for v, d in depth.items() if d % 2 == 1)
    return TwoSides(side_a, side_b)


def _path_to_root(v: int, parent: dict[int, int]) -> tuple[int, ...]:
    path = [v]
    while path[-1] in parent:
        path.append(parent[path[-1]])
    return tuple(path)


# ---------------------------------------------------------------------------
# Parsing and rendering


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list format: first line ``n``, then ``u v`` lines.

    Lines starting with ``#`` are comments; blank lines are skipped.
    """
    n: int | None = None
    edges: list[Edge] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 1:
                raise ParseError(f"line {lineno}: expected vertex count, got {line!r}")
            n = _parse_int(parts[0], lineno)
            if n < 0:
                raise ParseError(f"line {lineno}: vertex count must be non-negative")
            continue
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected 'u v', got {line!r}")
        u = _parse_int(parts[0], lineno)
        v = _parse_int(parts[1], lineno)
        if u == v:
            raise ParseError(f"line {lineno}: self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"line {lineno}: vertex id out of range for n={n}")
        edges.append((u, v))
    if n is None:
        raise ParseError("line 1: missing vertex count")
    return Graph(n, edges)


def parse_dimacs(text: str) -> Graph:
    """Parse the DIMACS ``.col`` subset: ``p edge n m`` header, 1-based ``e`` lines."""
    n: int | None = None
    edges: list[Edge] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise ParseError(f"line {lineno}: duplicate problem line")
            if len(parts) != 4 or parts[1] != "edge":
                raise ParseError(f"line {lineno}: expected 'p edge n m', got {line!r}")
            n = _parse_int(parts[2], lineno)
            if n < 0:
                raise ParseError(f"line {lineno}: vertex count must be non-negative")
        elif parts[0] == "e":
            if n is None:
                raise ParseError(f"line {lineno}: edge before 'p edge' header")
            if len(parts) != 3:
                raise ParseError(f"line {lineno}: expected 'e u v', got {line!r}")
            u = _parse_int(parts[1], lineno) - 1
            v = _parse_int(parts[2], lineno) - 1
            if u == v:
                raise ParseError(f"line {lineno}: self-loop at vertex {u + 1}")
            if not (0 <= u < n and 0 <= v < n):
                raise ParseError(f"line {lineno}: vertex id out of range for n={n}")
            edges.append((u, v))
        else:
            raise ParseError(f"line {lineno}: unrecognized line {line!r}")
    if n is None:
        raise ParseError("missing 'p edge n m' header")
    return Graph(n, edges)


def parse_graph(text: str, fmt: str = "auto") -> Graph:
    """Parse a graph in ``edge-list`` or ``dimacs`` format.

    ``auto`` detects DIMACS by a leading ``p``/``c`` line.
    """
    if fmt == "auto":
        fmt = detect_format(text)
    if fmt == "edge-list":
        return parse_edge_list(text)
    if fmt == "dimacs":
        return parse_dimacs(text)
    raise ParseError(f"unknown graph format {fmt!r}")


def detect_format(text: str) -> str:
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith(("p", "c")):
            return "dimacs"
        return "edge-list"
    return "edge-list"


def render_edge_list(g: Graph) -> str:
    lines = [str(g.n)]
    lines.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"


def render_dimacs(g: Graph) -> str:
    lines = [f"p edge {g.n} {g.m}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Generators


def complete(t: int) -> Graph:
    if t < 1:
        raise StructureError("complete graph needs at least one vertex")
    return Graph(t, [(i, j) for i in range(t) for j in range(i + 1, t)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise StructureError("cycle needs at least three vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise StructureError("both sides of a complete bipartite graph must be non-empty")
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


class SplitMix64:
    """SplitMix64 PRNG: fixed, tiny, reproducible across runs and languages.

    state' = state + 0x9E3779B97F4A7C15;  output mixes with the constants
    0xBF58476D1CE4E5B9 and 0x94D049BB133111EB.  ``unit()`` maps the top 53
    bits to [0, 1).
    """

    MASK = (1 << 64) - 1

    def __init__(self, seed: int) -> None:
        self.state = seed & self.MASK

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & self.MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & self.MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & self.MASK
        return z ^ (z >> 31)

    def unit(self) -> float:
        return (self.next_u64() >> 11) * 2.0**-53


def gnp(n: int, p: float, seed: int = 0) -> Graph:
    """G(n, p) with a SplitMix64 stream.

    One draw is consumed per unordered pair (u, v), u < v, in lexicographic
    order, so the same (n, seed) prefix yields nested edge decisions for
    any p.
    """
    if n < 1:
        raise StructureError("gnp needs at least one vertex")
    if not (0.0 <= p <= 1.0):
        raise StructureError("edge probability must lie in [0, 1]")
    rng = SplitMix64(seed)
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.unit() < p:
                edges.append((u, v))
    return Graph(n, edges)


def generate(spec: str, seed: int = 0) -> Graph:
    """Build a named graph from a textual spec like ``"cycle 5"`` or ``"gnp 10 0.3"``."""
    tokens = spec.split()
    if not tokens:
        raise ParseError("empty generator spec")
    kind, args = tokens[0], tokens[1:]
    try:
        if kind == "complete" and len(args) == 1:
            return complete(int(args[0]))
        if kind == "cycle" and len(args) == 1:
            return cycle(int(args[0]))
        if kind == "complete-bipartite" and len(args) == 2:
            return complete_bipartite(int(args[0]), int(args[1]))
        if kind == "gnp" and len(args) == 2:
            return gnp(int(args[0]), float(args[1]), seed)
        if kind == "petersen" and not args:
            return petersen()
    except ValueError as exc:
        raise ParseError(f"bad generator spec {spec!r}: {exc}") from None
    raise ParseError(
        f"unknown generator spec {spec!r}; expected one of: complete t, cycle n, "
        "complete-bipartite a b, gnp n p, petersen"
    )


def _parse_int(token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"line {lineno}: expected integer, got {token!r}") from None
