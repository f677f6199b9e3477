"""Quotient graph over a bipartite-connected partition.

Contracting every part of the partition to a single vertex gives a graph
on part indices; each of its edges carries one witness triple, the handle
the lifting step later grabs to pick a monochromatic connecting edge.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ParseError, StructureError
from .graph import Graph, parse_edge_list
from .partition import BcpPartition, find_witness_triple, verify_partition
from .verification import VerificationReport


@dataclass(frozen=True)
class WitnessTriple:
    """Vertices u1, u2 on sides A and B of the lower-indexed part, plus a
    common neighbor v in the higher-indexed part; u1v and u2v are edges."""

    u1: int
    u2: int
    v: int


@dataclass(frozen=True)
class QuotientGraph:
    h: Graph
    witnesses: dict[tuple[int, int], WitnessTriple]
    partition: BcpPartition


def build_quotient(g: Graph, p: BcpPartition) -> QuotientGraph:
    """Contract each part to a vertex and record one witness per edge.

    The partition is re-verified first; the stored witness for edge (i, j)
    is the least triple by (v, u1, u2) with u1 on side A of part i.
    """
    report = verify_partition(g, p)
    if not report.passed:
        raise StructureError(
            "partition fails verification: " + "; ".join(report.failures)
        )
    part_of = p.part_of
    h_edges = set()
    for u, v in g.edges:
        i, j = part_of[u], part_of[v]
        if i != j:
            h_edges.add((min(i, j), max(i, j)))
    witnesses: dict[tuple[int, int], WitnessTriple] = {}
    for i, j in sorted(h_edges):
        triple = find_witness_triple(g, p, i, j)
        if triple is None:
            raise StructureError(f"no witness triple for quotient edge ({i}, {j})")
        witnesses[(i, j)] = WitnessTriple(*triple)
    return QuotientGraph(Graph(len(p), sorted(h_edges)), witnesses, p)


def contraction_check(g: Graph, q: QuotientGraph) -> VerificationReport:
    """PASS iff q.h equals the contraction of g along q.partition.

    Identifies each part to one vertex, drops loops and parallel edges,
    and compares edge sets.
    """
    failures: list[str] = []
    p = q.partition
    if q.h.n != len(p):
        failures.append(f"h has {q.h.n} vertices but the partition has {len(p)} parts")
        return VerificationReport(tuple(failures))
    part_of = p.part_of
    expected = set()
    for u, v in g.edges:
        i, j = part_of.get(u), part_of.get(v)
        if i is None or j is None:
            failures.append(f"edge ({u}, {v}) has an endpoint outside the partition")
            continue
        if i != j:
            expected.add((min(i, j), max(i, j)))
    for e in sorted(expected - q.h.edges):
        failures.append(f"contraction edge {e} missing from h")
    for e in sorted(q.h.edges - expected):
        failures.append(f"h edge {e} not present in the contraction")
    return VerificationReport(tuple(failures))


def verify_quotient(g: Graph, q: QuotientGraph) -> VerificationReport:
    """contraction_check plus structural validity of every witness triple.

    A witness (u1, u2, v) for edge (i, j) needs u1 on side A and u2 on
    side B of part i, and v a common neighbor of both inside part j.
    """
    failures = list(contraction_check(g, q).failures)
    p = q.partition
    for (i, j), w in sorted(q.witnesses.items()):
        if not (0 <= i < len(p) and 0 <= j < len(p)) or i >= j:
            failures.append(f"witness for ({i}, {j}): not an ordered part pair")
            continue
        part_i, part_j = p.parts[i], p.parts[j]
        if w.u1 not in part_i.side_a:
            failures.append(f"witness for ({i}, {j}): {w.u1} not on side A of part {i}")
        elif w.u2 not in part_i.side_b:
            failures.append(f"witness for ({i}, {j}): {w.u2} not on side B of part {i}")
        elif w.v not in part_j.members:
            failures.append(f"witness for ({i}, {j}): {w.v} not in part {j}")
        elif not (g.has_edge(w.u1, w.v) and g.has_edge(w.u2, w.v)):
            failures.append(
                f"witness for ({i}, {j}): {w.v} is not a common neighbor "
                f"of {w.u1} and {w.u2}"
            )
    for i, j in sorted(set(q.h.edges) - set(q.witnesses)):
        failures.append(f"quotient edge ({i}, {j}) has no witness")
    return VerificationReport(tuple(failures))


def render_quotient(q: QuotientGraph) -> str:
    """h in edge-list format, then one "w i j : u1 u2 v" line per edge."""
    lines = [str(q.h.n)]
    lines.extend(f"{i} {j}" for i, j in q.h.sorted_edges())
    for (i, j), w in sorted(q.witnesses.items()):
        lines.append(f"w {i} {j} : {w.u1} {w.u2} {w.v}")
    return "\n".join(lines) + "\n"


def parse_quotient(text: str) -> tuple[Graph, dict[tuple[int, int], WitnessTriple]]:
    """Inverse of render_quotient, minus the partition (not serialized)."""
    graph_lines: list[str] = []
    witnesses: dict[tuple[int, int], WitnessTriple] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if not line.startswith("w "):
            if witnesses:
                raise ParseError(f"line {lineno}: edge line after witness lines")
            graph_lines.append(line)
            continue
        try:
            pair_part, triple_part = line[2:].split(":")
            i, j = (int(x) for x in pair_part.split())
            u1, u2, v = (int(x) for x in triple_part.split())
        except ValueError:
            raise ParseError(f"line {lineno}: cannot parse witness {raw!r}") from None
        if (i, j) in witnesses:
            raise ParseError(f"line {lineno}: duplicate witness for edge ({i}, {j})")
        witnesses[(i, j)] = WitnessTriple(u1, u2, v)
    h = parse_edge_list("\n".join(graph_lines) + "\n")
    missing = sorted(set(h.edges) - set(witnesses))
    extra = sorted(set(witnesses) - set(h.edges))
    if missing:
        raise ParseError(f"edges without witnesses: {missing}")
    if extra:
        raise ParseError(f"witnesses without edges: {extra}")
    return h, witnesses
