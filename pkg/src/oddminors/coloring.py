"""Proper colorings: exact (branch and bound), greedy, and composed.

The composed coloring is the point of the whole pipeline: color the
quotient, give every vertex the pair (part color, side bit), flatten, and
the result is proper on the original graph with at most twice the
quotient's palette.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .errors import BudgetExceeded, ContractViolation, ParseError
from .graph import Graph
from .quotient import QuotientGraph
from .verification import VerificationReport

DEFAULT_MAX_VERTICES = 16
DEFAULT_MAX_NODES = 2_000_000


@dataclass(frozen=True)
class Coloring:
    """Color per vertex, indexed by vertex id; colors are 0-based."""

    colors: tuple[int, ...]

    @property
    def palette(self) -> int:
        return len(set(self.colors))


def verify_coloring(g: Graph, c: Coloring) -> VerificationReport:
    """PASS iff every vertex is colored and every edge is bichromatic."""
    failures: list[str] = []
    if len(c.colors) != g.n:
        failures.append(f"coloring covers {len(c.colors)} vertices, graph has {g.n}")
        return VerificationReport(tuple(failures))
    for u, v in g.sorted_edges():
        if c.colors[u] == c.colors[v]:
            failures.append(f"edge ({u}, {v}) is monochromatic (color {c.colors[u]})")
    return VerificationReport(tuple(failures))


def color_heuristic(g: Graph) -> Coloring:
    """Saturation-degree greedy.

    Pick the uncolored vertex with the most distinct neighbor colors,
    break ties by higher degree then lower id, and give it the least
    color absent from its neighborhood.
    """
    colors: list[int] = [-1] * g.n
    neighbor_colors: list[set[int]] = [set() for _ in range(g.n)]
    for _ in range(g.n):
        v = min(
            (u for u in range(g.n) if colors[u] == -1),
            key=lambda u: (-len(neighbor_colors[u]), -g.degree(u), u),
        )
        c = 0
        while c in neighbor_colors[v]:
            c += 1
        colors[v] = c
        for w in g.neighbors(v):
            if colors[w] == -1:
                neighbor_colors[w].add(c)
    return Coloring(tuple(colors))


def color_exact(
    g: Graph,
    *,
    max_vertices: int = DEFAULT_MAX_VERTICES,
    max_nodes: int = DEFAULT_MAX_NODES,
    max_seconds: float | None = None,
) -> Coloring:
    """Minimum proper coloring by DSATUR branch and bound.

    A greedy clique seeds the lower bound (its vertices are pre-colored,
    which is sound up to color renaming); the saturation greedy seeds the
    upper bound.  Branching order is fixed, so the returned coloring is
    deterministic.  Budgets are hard: exceeding them raises, it never
    degrades to a heuristic answer.
    """
    if g.n > max_vertices:
        raise BudgetExceeded(
            f"exact coloring budget is {max_vertices} vertices, graph has {g.n}; "
            "raise the budget or use color_heuristic"
        )
    if g.n == 0:
        return Coloring(())

    greedy = color_heuristic(g)
    best_k = greedy.palette
    best = list(greedy.colors)
    clique = _greedy_clique(g)
    if len(clique) == best_k:
        return greedy

    colors = [-1] * g.n
    neighbor_colors: list[set[int]] = [set() for _ in range(g.n)]
    for rank, v in enumerate(clique):
        colors[v] = rank
        for w in g.neighbors(v):
            if colors[w] == -1:
                neighbor_colors[w].add(rank)
    start_k = len(clique)
    nodes = 0
    deadline = None if max_seconds is None else time.monotonic() + max_seconds

    def pick() -> int:
        return min(
            (u for u in range(g.n) if colors[u] == -1),
            key=lambda u: (-len(neighbor_colors[u]), -g.degree(u), u),
        )

    def down(v: int, c: int) -> list[int]:
        colors[v] = c
        touched = []
        for w in g.neighbors(v):
            if colors[w] == -1 and c not in neighbor_colors[w]:
                neighbor_colors[w].add(c)
                touched.append(w)
        return touched

    def up(v: int, c: int, touched: list[int]) -> None:
        colors[v] = -1
        for w in touched:
            neighbor_colors[w].remove(c)

    def search(used: int) -> None:
        nonlocal best_k, best, nodes
        nodes += 1
        if nodes > max_nodes:
            raise BudgetExceeded(f"exact coloring exceeded {max_nodes} search nodes")
        if deadline is not None and time.monotonic() > deadline:
            raise BudgetExceeded(f"exact coloring exceeded {max_seconds} seconds")
        if all(c != -1 for c in colors):
            if used < best_k:
                best_k = used
                best = colors[:]
            return
        v = pick()
        for c in range(used):
            if c in neighbor_colors[v]:
                continue
            touched = down(v, c)
            search(used)
            up(v, c, touched)
        # One fresh color; higher ones are symmetric to it.
        if used + 1 < best_k:
            touched = down(v, used)
            search(used + 1)
            up(v, used, touched)

    search(start_k)
    return Coloring(tuple(best))


def _greedy_clique(g: Graph) -> list[int]:
    """Deterministic greedy clique, largest found over all start vertices."""
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    best: list[int] = []
    for start in order:
        clique = [start]
        candidates = set(g.neighbors(start))
        while candidates:
            v = min(candidates, key=lambda u: (-g.degree(u), u))
            clique.append(v)
            candidates &= set(g.neighbors(v))
        if len(clique) > len(best):
            best = clique
    return best


def compose_coloring(q: QuotientGraph, c_h: Coloring) -> Coloring:
    """Flatten (part color, side bit) into one coloring of the base graph.

    Vertex x in part i gets 2 * c_h(i) + side(x), then used colors are
    renumbered densely.  Proper whenever c_h is proper on q.h: edges
    inside a part cross sides, edges between parts cross part colors.
    """
    report = verify_coloring(q.h, c_h)
    if not report.passed:
        raise ContractViolation(
            "quotient coloring is not proper: " + "; ".join(report.failures)
        )
    n = sum(len(part.members) for part in q.partition.parts)
    raw: list[int] = [-1] * n
    for i, part in enumerate(q.partition.parts):
        for v in part.members:
            raw[v] = 2 * c_h.colors[i] + part.side_of(v)
    rank = {c: k for k, c in enumerate(sorted(set(raw)))}
    return Coloring(tuple(rank[c] for c in raw))


def render_coloring(c: Coloring) -> str:
    lines = [f"palette {c.palette}"]
    lines.extend(f"{v} {col}" for v, col in enumerate(c.colors))
    return "\n".join(lines) + "\n"


def parse_coloring(text: str) -> Coloring:
    """Inverse of render_coloring; vertex lines must be 0,1,... in order."""
    header = None
    colors: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if header is None:
            if len(fields) != 2 or fields[0] != "palette":
                raise ParseError(f"line {lineno}: expected 'palette k', got {raw!r}")
            header = int(fields[1])
            continue
        try:
            v, c = (int(x) for x in fields)
        except ValueError:
            raise ParseError(f"line {lineno}: cannot parse color line {raw!r}") from None
        if v != len(colors):
            raise ParseError(f"line {lineno}: expected vertex {len(colors)}, got {v}")
        colors.append(c)
    if header is None:
        raise ParseError("coloring is empty")
    out = Coloring(tuple(colors))
    if out.palette != header:
        raise ParseError(f"header claims palette {header}, lines use {out.palette}")
    return out
