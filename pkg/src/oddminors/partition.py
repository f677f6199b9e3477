"""Bipartite-connected partitions.

``compute_partition`` splits the vertex set into parts, each inducing a
connected bipartite subgraph, by repeatedly extracting an inclusion-wise
maximal such set from the unused vertices.  Between any two parts joined
by an edge there is then a witness triple: two vertices on opposite sides
of the lower part with a common neighbor in the higher one.  That triple
is what later turns a clique expansion of the quotient into an odd one.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import ParseError
from .graph import Graph, TwoSides, connected_components
from .verification import VerificationReport


@dataclass(frozen=True)
class BcpPartition:
    """Ordered parts, each stored with its canonical bipartition."""

    parts: tuple[TwoSides, ...]

    def __len__(self) -> int:
        return len(self.parts)

    def members(self, i: int) -> frozenset[int]:
        return self.parts[i].members

    @cached_property
    def part_of(self) -> dict[int, int]:
        """Map vertex id to the index of the part holding it."""
        out: dict[int, int] = {}
        for i, part in enumerate(self.parts):
            for v in part.members:
                out[v] = i
        return out


def compute_partition(g: Graph) -> BcpPartition:
    """Greedy extraction of maximal bipartite-connected parts.

    Each part is seeded at the lowest unused vertex and grown by absorbing,
    in ascending id order with a rescan after every absorption, any unused
    vertex whose neighbors inside the part all lie on one side (the vertex
    joins the opposite side).  A part with no absorbable neighbor is
    inclusion-wise maximal: any larger bipartite-connected superset would
    be reachable by absorbing one adjacent vertex at a time.
    """
    unused = set(range(g.n))
    parts: list[TwoSides] = []
    while unused:
        seed = min(unused)
        side: dict[int, int] = {seed: 0}
        unused.remove(seed)
        grown = True
        while grown:
            grown = False
            for v in sorted(unused):
                sides_seen = {side[w] for w in g.neighbors(v) if w in side}
                if len(sides_seen) != 1:
                    continue
                side[v] = 1 - sides_seen.pop()
                unused.remove(v)
                grown = True
                break
        side_a = frozenset(v for v, s in side.items() if s == 0)
        side_b = frozenset(v for v, s in side.items() if s == 1)
        parts.append(TwoSides(side_a, side_b))
    return BcpPartition(tuple(parts))


def verify_partition(g: Graph, p: BcpPartition) -> VerificationReport:
    """Re-check both defining properties of the partition against g directly.

    Checked independently of how ``p`` was built: coverage and disjointness,
    per-part connectivity and proper canonical bipartition, and for every
    pair of parts joined by an edge the existence of a witness triple
    (u1, u2 on opposite sides of the lower part, common neighbor v in the
    higher part).
    """
    failures: list[str] = []
    seen: dict[int, int] = {}
    for i, part in enumerate(p.parts):
        members = part.members
        if not members:
            failures.append(f"part {i} is empty")
            continue
        for v in sorted(members):
            if not (0 <= v < g.n):
                failures.append(f"part {i}: vertex {v} out of range")
            elif v in seen:
                failures.append(f"vertex {v} appears in parts {seen[v]} and {i}")
            else:
                seen[v] = i
        if part.side_a & part.side_b:
            failures.append(f"part {i}: sides overlap")
        comps = connected_components(g, members & frozenset(range(g.n)))
        if len(comps) != 1:
            failures.append(f"part {i}: induces {len(comps)} components, expected 1")
        for u, v in g.edges:
            if u in members and v in members:
                same_a = u in part.side_a and v in part.side_a
                same_b = u in part.side_b and v in part.side_b
                if same_a or same_b:
                    failures.append(
                        f"part {i}: edge ({u}, {v}) joins two vertices on one side"
                    )
        if members and min(members) not in part.side_a:
            failures.append(f"part {i}: lowest vertex not on side A")

    missing = set(range(g.n)) - set(seen)
    if missing:
        failures.append(f"uncovered vertices: {sorted(missing)}")

    if not failures:
        for i, j in _adjacent_part_pairs(g, p):
            if find_witness_triple(g, p, i, j) is None:
                failures.append(
                    f"parts ({i}, {j}) are joined by an edge but admit no witness triple"
                )
    return VerificationReport(tuple(failures))


def _adjacent_part_pairs(g: Graph, p: BcpPartition) -> list[tuple[int, int]]:
    pairs = set()
    part_of = p.part_of
    for u, v in g.edges:
        i, j = part_of.get(u), part_of.get(v)
        if i is None or j is None or i == j:
            continue
        pairs.add((min(i, j), max(i, j)))
    return sorted(pairs)


def find_witness_triple(
    g: Graph, p: BcpPartition, i: int, j: int
) -> tuple[int, int, int] | None:
    """Least triple (u1, u2, v): u1 in side A, u2 in side B of part i,
    v in part j adjacent to both.  Ordered by (v, u1, u2)."""
    low = p.parts[i]
    for v in sorted(p.members(j)):
        in_a = sorted(w for w in g.neighbors(v) if w in low.side_a)
        in_b = sorted(w for w in g.neighbors(v) if w in low.side_b)
        if in_a and in_b:
            return in_a[0], in_b[0], v
    return None


# ---------------------------------------------------------------------------
# Serialization: one line per part, "i: A=<ids> B=<ids>", ids comma-separated.


def render_partition(p: BcpPartition) -> str:
    lines = []
    for i, part in enumerate(p.parts):
        a = ",".join(str(v) for v in sorted(part.side_a))
        b = ",".join(str(v) for v in sorted(part.side_b))
        lines.append(f"{i}: A={a} B={b}")
    return "\n".join(lines) + ("\n" if lines else "")


def parse_partition(text: str) -> BcpPartition:
    parts: list[TwoSides] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            head, rest = line.split(":", 1)
            idx = int(head)
            a_field, b_field = rest.split()
            if not a_field.startswith("A=") or not b_field.startswith("B="):
                raise ValueError
            side_a = _parse_ids(a_field[2:])
            side_b = _parse_ids(b_field[2:])
        except ValueError:
            raise ParseError(f"line {lineno}: expected 'i: A=<ids> B=<ids>'") from None
        if idx != len(parts):
            raise ParseError(f"line {lineno}: part index {idx} out of order")
        parts.append(TwoSides(side_a, side_b))
    return BcpPartition(tuple(parts))


def _parse_ids(field: str) -> frozenset[int]:
    if not field:
        return frozenset()
    return frozenset(int(tok) for tok in field.split(","))
