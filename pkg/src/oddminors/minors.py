"""K_t-expansion certificates: brute-force finders and trusted verifiers.

A K_t-expansion is t vertex-disjoint trees plus one chosen connecting edge
per tree pair.  The odd variant additionally carries a 2-coloring under
which every tree edge is bichromatic and every connector monochromatic.
Finders are exhaustive within a hard assignment budget; verifiers check a
certificate clause by clause and never trust the finder.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .errors import BudgetExceeded, ContractViolation, ParseError, StructureError
from .graph import Graph
from .verification import VerificationReport

# (t+1)^n must stay under this; covers n=10 at t=5 (6^10 ~ 60.5M).
DEFAULT_MAX_ASSIGNMENTS = 100_000_000


@dataclass(frozen=True)
class ExpansionTree:
    vertices: frozenset[int]
    edges: frozenset[tuple[int, int]]


@dataclass(frozen=True)
class ExpansionCertificate:
    """Trees indexed 0..t-1; connectors keyed by (s, s') with s < s'."""

    trees: tuple[ExpansionTree, ...]
    connectors: dict[tuple[int, int], tuple[int, int]]


@dataclass(frozen=True)
class OddExpansionCertificate:
    """Expansion plus a {1,2}-coloring of the tree vertices."""

    base: ExpansionCertificate
    parity: dict[int, int]


def bfs_tree_edges(g: Graph, vertices: frozenset[int]) -> tuple[tuple[int, int], ...]:
    """Breadth-first spanning tree of g[vertices], rooted at the lowest id."""
    if not vertices:
        return ()
    root = min(vertices)
    seen = {root}
    queue = [root]
    edges: list[tuple[int, int]] = []
    while queue:
        u = queue.pop(0)
        for w in g.neighbors(u):
            if w in vertices and w not in seen:
                seen.add(w)
                queue.append(w)
                edges.append((u, w) if u < w else (w, u))
    if len(seen) != len(vertices):
        raise StructureError(f"vertex set {sorted(vertices)} induces a disconnected subgraph")
    return tuple(edges)


def two_color_tree(edges: frozenset[tuple[int, int]], root: int) -> dict[int, int]:
    """Proper {1,2}-coloring of a tree given by its edges; root gets 1."""
    adj: dict[int, list[int]] = {root: []}
    for u, v in edges:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    color = {root: 1}
    stack = [root]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w not in color:
                color[w] = 3 - color[u]
                stack.append(w)
    return color


def _tree_violation(g: Graph, s: int, tree: ExpansionTree, claimed: dict[int, int]) -> str | None:
    """First violated clause for tree s (1-based label), or None."""
    if not tree.vertices:
        return f"tree {s} is empty"
    for v in sorted(tree.vertices):
        if not 0 <= v < g.n:
            return f"tree {s} contains out-of-range vertex {v}"
    for v in sorted(tree.vertices):
        if v in claimed:
            return f"tree {s} shares vertex {v} with tree {claimed[v]}"
    for u, v in sorted(tree.edges):
        if u not in tree.vertices or v not in tree.vertices:
            return f"tree {s} edge ({u}, {v}) leaves its vertex set"
        if not g.has_edge(u, v):
            return f"tree {s} edge ({u}, {v}) is not an edge of the graph"
    if len(tree.edges) != len(tree.vertices) - 1:
        return (
            f"tree {s} has {len(tree.edges)} edges for {len(tree.vertices)} vertices, "
            "not a spanning tree"
        )
    # With |E| = |V|-1, connectivity alone rules out cycles.
    adj: dict[int, list[int]] = {v: [] for v in tree.vertices}
    for u, v in tree.edges:
        adj[u].append(v)
        adj[v].append(u)
    root = min(tree.vertices)
    seen = {root}
    stack = [root]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    if len(seen) != len(tree.vertices):
        return f"tree {s} is not connected by its edges"
    return None


def verify_expansion(g: Graph, cert: ExpansionCertificate) -> VerificationReport:
    """Check every K_t-expansion clause; first violated clause per tree/pair."""
    failures: list[str] = []
    trees = cert.trees
    t = len(trees)
    if t == 0:
        return VerificationReport(("certificate has no trees",))
    claimed: dict[int, int] = {}
    for s, tree in enumerate(trees, start=1):
        msg = _tree_violation(g, s, tree, claimed)
        if msg is not None:
            failures.append(msg)
        for v in tree.vertices:
            if 0 <= v < g.n and v not in claimed:
                claimed[v] = s
    for a in range(t):
        for b in range(a + 1, t):
            if (a, b) not in cert.connectors:
                failures.append(f"pair ({a + 1}, {b + 1}) has no connector")
                continue
            u, v = cert.connectors[(a, b)]
            if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
                failures.append(
                    f"connector for pair ({a + 1}, {b + 1}) uses non-edge ({u}, {v})"
                )
                continue
            va, vb = trees[a].vertices, trees[b].vertices
            if not ((u in va and v in vb) or (v in va and u in vb)):
                failures.append(
                    f"connector for pair ({a + 1}, {b + 1}) edge ({u}, {v}) "
                    f"does not join tree {a + 1} to tree {b + 1}"
                )
    valid_pairs = {(a, b) for a in range(t) for b in range(a + 1, t)}
    for a, b in sorted(set(cert.connectors) - valid_pairs):
        failures.append(
            f"connector for pair ({a + 1}, {b + 1}) does not match any tree pair"
        )
    return VerificationReport(tuple(failures))


def verify_odd_expansion(g: Graph, cert: OddExpansionCertificate) -> VerificationReport:
    """verify_expansion plus both parity clauses of the odd definition."""
    failures = list(verify_expansion(g, cert.base).failures)
    parity = cert.parity
    tree_vertices: set[int] = set()
    for tree in cert.base.trees:
        tree_vertices |= tree.vertices
    for v in sorted(tree_vertices):
        if v not in parity:
            failures.append(f"tree vertex {v} has no parity color")
        elif parity[v] not in (1, 2):
            failures.append(f"parity color of vertex {v} is {parity[v]}, not 1 or 2")
    for v in sorted(set(parity) - tree_vertices):
        failures.append(f"parity assigns a color to non-tree vertex {v}")
    for s, tree in enumerate(cert.base.trees, start=1):
        for u, v in sorted(tree.edges):
            if parity.get(u) in (1, 2) and parity.get(u) == parity.get(v):
                failures.append(
                    f"tree {s} edge ({u}, {v}) is monochromatic (color {parity[u]})"
                )
                break
    for (a, b), (u, v) in sorted(cert.base.connectors.items()):
        cu, cv = parity.get(u), parity.get(v)
        if cu in (1, 2) and cv in (1, 2) and cu != cv:
            failures.append(
                f"connector for pair ({a + 1}, {b + 1}) edge ({u}, {v}) "
                f"is bichromatic (colors {cu}, {cv})"
            )
    return VerificationReport(tuple(failures))


def find_expansion(
    g: Graph, t: int, *, max_assignments: int = DEFAULT_MAX_ASSIGNMENTS
) -> ExpansionCertificate | None:
    """Exhaustive K_t-expansion search; None when no branch-set map works.

    Enumerates vertex → {unused, 1..t} maps in lexicographic order and
    returns the certificate of the first map whose classes are nonempty,
    connected, and pairwise joined by an edge.  Pruning (canonical label
    order, class connectability, pair coverage) only skips maps that are
    relabelings of others or provably not completable, so the outcome
    matches plain enumeration.
    """
    return _search(g, t, max_assignments, odd=False)


def find_odd_expansion(
    g: Graph, t: int, *, max_assignments: int = DEFAULT_MAX_ASSIGNMENTS
) -> OddExpansionCertificate | None:
    """Exhaustive odd K_t-expansion search over branch-set maps.

    For each valid branch-set map, each class gets its breadth-first
    spanning tree and canonical 2-coloring; a tree's coloring is unique up
    to one flip, so the 2^t flip vectors exhaust the parity freedom for
    those trees.  The first map admitting a flip vector that makes every
    connector monochromatic yields the certificate.
    """
    return _search(g, t, max_assignments, odd=True)


def _search(g: Graph, t: int, max_assignments: int, odd: bool):
    if t < 1:
        raise ContractViolation(f"t must be a positive integer, got {t}")
    n = g.n
    total = (t + 1) ** n
    if total > max_assignments:
        raise BudgetExceeded(
            f"(t+1)^n = {total} assignments exceeds the budget of {max_assignments}"
        )
    if t > n:
        return None

    adj = [0] * n
    for u, v in g.sorted_edges():
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    # suffix_mask[i] / suffix_nbr[i]: vertices >= i and their neighborhoods.
    suffix_mask = [0] * (n + 1)
    suffix_nbr = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix_mask[i] = suffix_mask[i + 1] | (1 << i)
        suffix_nbr[i] = suffix_nbr[i + 1] | adj[i]

    cmask = [0] * (t + 1)
    cnbr = [0] * (t + 1)

    def connected(mask: int, allowed: int) -> bool:
        # All bits of `mask` in one component of g[mask | allowed]?
        if mask == 0:
            return True
        whole = mask | allowed
        reached = mask & -mask
        frontier = reached
        while frontier:
            nxt = 0
            f = frontier
            while f:
                b = f & -f
                f ^= b
                nxt |= adj[b.bit_length() - 1]
            frontier = nxt & whole & ~reached
            reached |= frontier
        return not (mask & ~reached)

    def feasible(i: int, used: int) -> bool:
        # Called with vertices 0..i assigned; suffix starts at i + 1.
        if t - used > n - i - 1:
            return False
        smask, snbr = suffix_mask[i + 1], suffix_nbr[i + 1]
        for k in range(1, used + 1):
            if not connected(cmask[k], smask):
                return False
        for a in range(1, used + 1):
            for b in range(a + 1, used + 1):
                if not ((cnbr[a] | snbr) & (cmask[b] | smask)):
                    return False
        return True

    def at_leaf():
        classes = [cmask[k] for k in range(1, t + 1)]
        for mask in classes:
            if not connected(mask, 0):
                return None
        for a in range(t):
            for b in range(a + 1, t):
                if not (cnbr[a + 1] & classes[b]):
                    return None
        return _certify(g, classes, odd)

    def search(i: int, used: int):
        if i == n:
            return at_leaf() if used == t else None
        bit = 1 << i
        for val in range(0, min(t, used + 1) + 1):
            if val == 0:
                if feasible(i, used):
                    out = search(i + 1, used)
                    if out is not None:
                        return out
                continue
            saved_mask, saved_nbr = cmask[val], cnbr[val]
            cmask[val] |= bit
            cnbr[val] |= adj[i]
            new_used = max(used, val)
            if feasible(i, new_used):
                out = search(i + 1, new_used)
                if out is not None:
                    return out
            cmask[val], cnbr[val] = saved_mask, saved_nbr
        return None

    return search(0, 0)


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        b = mask & -mask
        mask ^= b
        out.append(b.bit_length() - 1)
    return out


def _certify(g: Graph, class_masks: list[int], odd: bool):
    t = len(class_masks)
    classes = [frozenset(_bits(m)) for m in class_masks]
    trees = tuple(
        ExpansionTree(cls, frozenset(bfs_tree_edges(g, cls))) for cls in classes
    )
    connectors: dict[tuple[int, int], tuple[int, int]] = {}
    for a in range(t):
        for b in range(a + 1, t):
            connectors[(a, b)] = min(
                (u, w) if u < w else (w, u)
                for u in classes[a]
                for w in g.neighbors(u)
                if w in classes[b]
            )
    base = ExpansionCertificate(trees, connectors)
    if not odd:
        return base
    # Canonical coloring per tree; flips are the only remaining freedom.
    canon = [two_color_tree(tree.edges, min(tree.vertices)) for tree in trees]
    home = {v: s for s, cls in enumerate(classes) for v in cls}
    for flips in product((0, 1), repeat=t):
        ok = True
        for (a, b), (u, v) in connectors.items():
            cu = canon[home[u]][u] if not flips[home[u]] else 3 - canon[home[u]][u]
            cv = canon[home[v]][v] if not flips[home[v]] else 3 - canon[home[v]][v]
            if cu != cv:
                ok = False
                break
        if ok:
            parity = {
                v: (canon[s][v] if not flips[s] else 3 - canon[s][v])
                for s, cls in enumerate(classes)
                for v in cls
            }
            return OddExpansionCertificate(base, parity)
    return None


def render_certificate(cert: ExpansionCertificate | OddExpansionCertificate) -> str:
    """Structured text form; see the grammar in the README."""
    base = cert.base if isinstance(cert, OddExpansionCertificate) else cert
    lines = [f"trees {len(base.trees)}"]
    for s, tree in enumerate(base.trees, start=1):
        verts = ",".join(str(v) for v in sorted(tree.vertices))
        edges = ",".join(f"{u}-{v}" for u, v in sorted(tree.edges))
        lines.append(f"T {s}: {verts} / {edges}".rstrip())
    for a, b in sorted(base.connectors):
        u, v = base.connectors[(a, b)]
        lines.append(f"conn {a + 1} {b + 1} : {u} {v}")
    if isinstance(cert, OddExpansionCertificate):
        for v in sorted(cert.parity):
            lines.append(f"parity {v} : {cert.parity[v]}")
    return "\n".join(lines) + "\n"


def parse_certificate(text: str) -> ExpansionCertificate | OddExpansionCertificate:
    """Inverse of render_certificate; parity lines make the result odd."""
    trees: list[ExpansionTree] = []
    connectors: dict[tuple[int, int], tuple[int, int]] = {}
    parity: dict[int, int] = {}
    expected = None  # number of trees, once the header is seen
    section = "header"
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            if section == "header":
                head, count = line.split()
                if head != "trees":
                    raise ValueError
                expected = int(count)
                if expected < 1:
                    raise ValueError
                section = "trees"
            elif line.startswith("T "):
                if section != "trees":
                    raise ValueError
                head, rest = line.split(":", 1)
                if int(head.split()[1]) != len(trees) + 1:
                    raise ValueError("tree labels must be 1,2,... in order")
                vpart, _, epart = rest.partition("/")
                verts = frozenset(int(x) for x in vpart.split(",") if x.strip())
                edges = set()
                for item in epart.split(","):
                    if not item.strip():
                        continue
                    u, v = (int(x) for x in item.split("-"))
                    edges.add((u, v) if u < v else (v, u))
                trees.append(ExpansionTree(verts, frozenset(edges)))
            elif line.startswith("conn "):
                if section == "trees" and len(trees) == expected:
                    section = "conn"
                if section != "conn":
                    raise ValueError
                pair_part, edge_part = line[len("conn "):].split(":")
                a, b = (int(x) for x in pair_part.split())
                u, v = (int(x) for x in edge_part.split())
                if not 1 <= a < b:
                    raise ValueError("connector labels must satisfy s < s'")
                if (a - 1, b - 1) in connectors:
                    raise ValueError(f"duplicate connector for pair ({a}, {b})")
                connectors[(a - 1, b - 1)] = (u, v) if u < v else (v, u)
            elif line.startswith("parity "):
                if section in ("trees", "conn") and len(trees) == expected:
                    section = "parity"
                if section != "parity":
                    raise ValueError
                vpart, cpart = line[len("parity "):].split(":")
                v, c = int(vpart), int(cpart)
                if c not in (1, 2):
                    raise ValueError("parity color must be 1 or 2")
                if v in parity:
                    raise ValueError(f"duplicate parity line for vertex {v}")
                parity[v] = c
            else:
                raise ValueError
        except ParseError:
            raise
        except ValueError as exc:
            detail = str(exc) or f"cannot parse certificate line {raw!r}"
            raise ParseError(f"line {lineno}: {detail}") from None
    if expected is None:
        raise ParseError("certificate is empty")
    if len(trees) != expected:
        raise ParseError(f"expected {expected} trees, found {len(trees)}")
    base = ExpansionCertificate(tuple(trees), connectors)
    return OddExpansionCertificate(base, parity) if parity else base
