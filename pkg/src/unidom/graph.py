"""Simple undirected graphs on up to one machine word of vertices.

Each graph stores one adjacency bitmask per vertex, so neighborhood unions,
domination tests and complement arithmetic are single integer operations.
This module also carries the structural toolbox the rest of the package is
built on: two-coloring, bipartite complement, graph6 / edge-list / DOT
serialization, and a small-order isomorphism test.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Optional

# One adjacency row per machine word; nothing in this package needs more.
MAX_VERTICES = 64


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bit_list(mask: int) -> list[int]:
    """Set bit positions of ``mask`` as a sorted list."""
    return list(iter_bits(mask))


def mask_of(vertices: Iterable[int]) -> int:
    """Bitmask with exactly the given vertex positions set."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph: ``adj[i]`` is the neighbor bitmask of vertex i."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count {self.n} outside 0..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency row count does not match vertex count")
        full = (1 << self.n) - 1
        for i, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"row {i} has bits beyond vertex range")
            if (row >> i) & 1:
                raise ValueError(f"self-loop at vertex {i}")
        for i in range(self.n):
            for j in iter_bits(self.adj[i]):
                if not (self.adj[j] >> i) & 1:
                    raise ValueError(f"asymmetric adjacency between {i} and {j}")

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def size(self) -> int:
        """Number of edges."""
        return sum(row.bit_count() for row in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) pairs with u < v, lexicographically sorted."""
        out = []
        for u in range(self.n):
            row = self.adj[u] >> (u + 1)
            for off in iter_bits(row):
                out.append((u, u + 1 + off))
        return out

    def isolated_vertices(self) -> int:
        """Bitmask of degree-zero vertices."""
        m = 0
        for v in range(self.n):
            if not self.adj[v]:
                m |= 1 << v
        return m


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge list; duplicate edges collapse."""
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def degree_sequence(g: Graph) -> list[int]:
    """Vertex degrees sorted in non-increasing order."""
    return sorted((g.degree(v) for v in range(g.n)), reverse=True)


@dataclass(frozen=True)
class Bipartition:
    """Two-coloring witness: vertex masks ``a`` and ``b`` cover V disjointly."""

    a: int
    b: int


def check_bipartition(g: Graph, p: Bipartition) -> None:
    """Raise ValueError unless ``p`` is a valid bipartition of ``g``."""
    if p.a & p.b:
        raise ValueError("partition sides overlap")
    if (p.a | p.b) != g.full_mask:
        raise ValueError("partition does not cover all vertices")
    for v in iter_bits(p.a):
        if g.adj[v] & p.a:
            raise ValueError(f"edge inside partition side at vertex {v}")
    for v in iter_bits(p.b):
        if g.adj[v] & p.b:
            raise ValueError(f"edge inside partition side at vertex {v}")


def find_bipartition(g: Graph) -> Optional[Bipartition]:
    """Two-color ``g`` by BFS, or return None if it has an odd cycle.

    Disconnected graphs are colored per component with each BFS root
    placed on side ``a``.
    """
    color = [-1] * g.n
    for root in range(g.n):
        if color[root] != -1:
            continue
        color[root] = 0
        frontier = [root]
        while frontier:
            nxt = []
            for u in frontier:
                cu = color[u]
                for w in iter_bits(g.adj[u]):
                    if color[w] == -1:
                        color[w] = 1 - cu
                        nxt.append(w)
                    elif color[w] == cu:
                        return None
            frontier = nxt
    a = mask_of(v for v in range(g.n) if color[v] == 0)
    return Bipartition(a, g.full_mask & ~a)


def bipartite_complement(g: Graph, p: Bipartition) -> Graph:
    """Swap present and absent cross edges; sides of ``p`` stay independent."""
    check_bipartition(g, p)
    rows = [0] * g.n
    for v in iter_bits(p.a):
        rows[v] = p.b & ~g.adj[v]
    for v in iter_bits(p.b):
        rows[v] = p.a & ~g.adj[v]
    return Graph(g.n, tuple(rows))


# ---------------------------------------------------------------------------
# graph6


class Graph6Error(ValueError):
    """Malformed graph6 input."""


def _g6_encode_order(n: int) -> str:
    if n <= 62:
        return chr(63 + n)
    # 18-bit long form covers everything this package can represent
    return "~" + "".join(chr(63 + ((n >> s) & 63)) for s in (12, 6, 0))


def emit_graph6(g: Graph) -> str:
    """Encode as one graph6 line (no trailing newline)."""
    parts = [_g6_encode_order(g.n)]
    buf = 0
    nbits = 0
    for j in range(1, g.n):
        col = g.adj[j]
        for i in range(j):
            buf = (buf << 1) | ((col >> i) & 1)
            nbits += 1
            if nbits == 6:
                parts.append(chr(63 + buf))
                buf = 0
                nbits = 0
    if nbits:
        parts.append(chr(63 + (buf << (6 - nbits))))
    return "".join(parts)


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line (an optional ``>>graph6<<`` header is stripped)."""
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise Graph6Error("empty graph6 input")
    vals = []
    for ch in s:
        o = ord(ch)
        if not 63 <= o <= 126:
            raise Graph6Error(f"byte {o} outside graph6 range")
        vals.append(o - 63)
    if vals[0] < 63:
        n = vals[0]
        body = vals[1:]
    else:
        if len(vals) < 4:
            raise Graph6Error("truncated order field")
        if vals[1] == 63:
            raise Graph6Error("graph6 orders beyond 18 bits are not supported")
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        body = vals[4:]
    if n > MAX_VERTICES:
        raise Graph6Error(f"order {n} exceeds the {MAX_VERTICES}-vertex cap")
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) < need:
        raise Graph6Error("truncated bit payload")
    if len(body) > need:
        raise Graph6Error("trailing bytes after bit payload")
    rows = [0] * n
    idx = 0
    for j in range(1, n):
        for i in range(j):
            bit = (body[idx // 6] >> (5 - idx % 6)) & 1
            if bit:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            idx += 1
    return Graph(n, tuple(rows))


# ---------------------------------------------------------------------------
# edge-list text format: "n m" header, then one "u v" line per edge


def emit_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.size()}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    lines = [ln for ln in (raw.strip() for raw in text.splitlines())
             if ln and not ln.startswith("#")]
    if not lines:
        raise ValueError("empty edge-list input")
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError("edge-list header must be 'n m'")
    n, m = int(head[0]), int(head[1])
    if len(lines) - 1 < m:
        raise ValueError(f"expected {m} edge lines, found {len(lines) - 1}")
    edges = []
    for ln in lines[1:m + 1]:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"bad edge line: {ln!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return from_edge_list(n, edges)


def emit_dot(g: Graph, labels: Optional[Mapping[int, str]] = None,
             name: str = "G") -> str:
    """DOT output (undirected); ``labels`` override the numeric node names."""
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        if labels and v in labels:
            lines.append(f'  {v} [label="{labels[v]}"];')
        else:
            lines.append(f"  {v};")
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# isomorphism


def _joint_refinement(g: Graph, h: Graph) -> Optional[tuple[list[int], list[int]]]:
    """Iterated neighbor-color refinement run jointly over both graphs.

    Returns per-vertex colors drawn from a shared palette, or None once the
    color histograms diverge (then no isomorphism exists).
    """
    cg = [g.degree(v) for v in range(g.n)]
    ch = [h.degree(v) for v in range(h.n)]
    for _ in range(max(g.n, 1)):
        table: dict[tuple, int] = {}

        def recolor(graph: Graph, colors: list[int]) -> list[int]:
            out = []
            for v in range(graph.n):
                sig = (colors[v], tuple(sorted(colors[u] for u in iter_bits(graph.adj[v]))))
                out.append(table.setdefault(sig, len(table)))
            return out

        ng, nh = recolor(g, cg), recolor(h, ch)
        if sorted(ng) != sorted(nh):
            return None
        if ng == cg and nh == ch:
            break
        cg, ch = ng, nh
    return cg, ch


def are_isomorphic(g: Graph, h: Graph) -> bool:
    """Exact isomorphism test, intended for small orders (n <= 12 or so)."""
    if g.n != h.n or g.size() != h.size():
        return False
    if degree_sequence(g) != degree_sequence(h):
        return False
    refined = _joint_refinement(g, h)
    if refined is None:
        return False
    cg, ch = refined
    by_color: dict[int, list[int]] = {}
    for w in range(h.n):
        by_color.setdefault(ch[w], []).append(w)
    # map the most constrained vertices first
    order = sorted(range(g.n), key=lambda v: (len(by_color[cg[v]]), cg[v], v))
    image = [-1] * g.n
    used = 0

    def extend(pos: int) -> bool:
        nonlocal used
        if pos == g.n:
            return True
        v = order[pos]
        for w in by_color[cg[v]]:
            if (used >> w) & 1:
                continue
            ok = True
            for prev in order[:pos]:
                if ((g.adj[v] >> prev) & 1) != ((h.adj[w] >> image[prev]) & 1):
                    ok = False
                    break
            if not ok:
                continue
            image[v] = w
            used |= 1 << w
            if extend(pos + 1):
                return True
            image[v] = -1
            used &= ~(1 << w)
        return False

    return extend(0)
