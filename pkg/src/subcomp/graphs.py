"""Graph representation and core operations.

Graphs are immutable, undirected, simple, and dense: adjacency is a tuple of
int bitrows, one per vertex, so neighborhood algebra (intersections, region
masks, complementing) is plain integer arithmetic. Vertex indices are stable;
everything downstream (split partitions, solvers, gadget layouts) relies on
that.
"""

from __future__ import annotations

import json
from typing import Iterable, Iterator, Optional

from .errors import (
    CapMismatch,
    InvalidPattern,
    MalformedG6,
    NullGraph,
    PatternTooSmall,
)


class Graph:
    """Undirected simple graph on vertices 0..n-1 with bitrow adjacency.

    rows[v] has bit u set iff uv is an edge; rows are symmetric and
    irreflexive. labels, when present, annotate vertices (gadget generators
    use them for roles) and do not take part in equality.
    """

    __slots__ = ("n", "rows", "labels")

    def __init__(self, n: int, rows: Iterable[int], labels=None):
        rows = tuple(rows)
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        if len(rows) != n:
            raise ValueError(f"expected {n} adjacency rows, got {len(rows)}")
        full = (1 << n) - 1
        for v, row in enumerate(rows):
            if row & ~full:
                raise ValueError(f"row {v} has bits outside 0..{n - 1}")
            if (row >> v) & 1:
                raise ValueError(f"self-loop at vertex {v}")
            m = row
            while m:
                ubit = m & -m
                m ^= ubit
                u = ubit.bit_length() - 1
                if not (rows[u] >> v) & 1:
                    raise ValueError(f"adjacency not symmetric at ({u}, {v})")
        if labels is not None:
            labels = tuple(labels)
            if len(labels) != n:
                raise ValueError("labels must have exactly one entry per vertex")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "labels", labels)

    # Internal constructor for operations that guarantee the invariants.
    @classmethod
    def _unchecked(cls, n: int, rows: tuple, labels=None) -> "Graph":
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "rows", rows)
        object.__setattr__(g, "labels", labels)
        return g

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, lexicographically sorted."""
        out = []
        for u in range(self.n):
            above = self.rows[u] >> (u + 1)
            v = u + 1
            while above:
                if above & 1:
                    out.append((u, v))
                above >>= 1
                v += 1
        return out

    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.n, self.rows))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edge_count()})"


class VertexSet:
    """Subset of the vertices of an n-vertex graph, as a bitmask plus its cap."""

    __slots__ = ("bits", "cap")

    def __init__(self, bits: int, cap: int):
        if cap < 0:
            raise ValueError("cap must be nonnegative")
        if bits < 0 or bits >> cap:
            raise ValueError(f"bitmask {bits:#x} has bits at or above cap {cap}")
        object.__setattr__(self, "bits", bits)
        object.__setattr__(self, "cap", cap)

    @classmethod
    def from_members(cls, members: Iterable[int], cap: int) -> "VertexSet":
        bits = 0
        for v in members:
            bits |= 1 << v
        return cls(bits, cap)

    @classmethod
    def empty(cls, cap: int) -> "VertexSet":
        return cls(0, cap)

    def __setattr__(self, name, value):
        raise AttributeError("VertexSet is immutable")

    def members(self) -> tuple[int, ...]:
        out = []
        m = self.bits
        while m:
            b = m & -m
            m ^= b
            out.append(b.bit_length() - 1)
        return tuple(out)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __contains__(self, v: int) -> bool:
        return 0 <= v < self.cap and bool((self.bits >> v) & 1)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members())

    def __eq__(self, other) -> bool:
        if not isinstance(other, VertexSet):
            return NotImplemented
        return self.bits == other.bits and self.cap == other.cap

    def __hash__(self) -> int:
        return hash((self.bits, self.cap))

    def __repr__(self) -> str:
        return f"VertexSet({set(self.members()) or '{}'}, cap={self.cap})"


class PatternSpec:
    """Recipe for a named pattern graph (complete, empty, path, cycle, star,
    or the complement of another spec)."""

    __slots__ = ("kind", "size", "inner")

    COMPLETE = "complete"
    EMPTY = "empty"
    PATH = "path"
    CYCLE = "cycle"
    STAR = "star"
    COMPLEMENT = "complement"

    def __init__(self, kind: str, size: int = 0, inner: Optional["PatternSpec"] = None):
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "size", size)
        object.__setattr__(self, "inner", inner)

    def __setattr__(self, name, value):
        raise AttributeError("PatternSpec is immutable")

    @classmethod
    def complete(cls, t: int) -> "PatternSpec":
        return cls(cls.COMPLETE, t)

    @classmethod
    def empty(cls, t: int) -> "PatternSpec":
        return cls(cls.EMPTY, t)

    @classmethod
    def path(cls, t: int) -> "PatternSpec":
        return cls(cls.PATH, t)

    @classmethod
    def cycle(cls, t: int) -> "PatternSpec":
        return cls(cls.CYCLE, t)

    @classmethod
    def star(cls, t: int) -> "PatternSpec":
        """K_{1,t}: a center plus t leaves, t+1 vertices in total."""
        return cls(cls.STAR, t)

    @classmethod
    def complement_of(cls, inner: "PatternSpec") -> "PatternSpec":
        return cls(cls.COMPLEMENT, 0, inner)

    def __repr__(self) -> str:
        if self.kind == self.COMPLEMENT:
            return f"PatternSpec.complement_of({self.inner!r})"
        return f"PatternSpec({self.kind!r}, {self.size})"


def make_pattern(spec: PatternSpec) -> Graph:
    """Build the canonical pattern graph for a spec.

    Path and cycle vertices come in walk order 0..t-1; the star center is
    vertex 0. Raises InvalidPattern when size constraints are violated.
    """
    kind = spec.kind
    if kind == PatternSpec.COMPLEMENT:
        if spec.inner is None:
            raise InvalidPattern("complement spec without an inner pattern")
        return complement(make_pattern(spec.inner))
    t = spec.size
    if t < 1:
        raise InvalidPattern(f"pattern size must be at least 1, got {t}")
    if kind == PatternSpec.COMPLETE:
        full = (1 << t) - 1
        return Graph._unchecked(t, tuple((full ^ (1 << v)) for v in range(t)))
    if kind == PatternSpec.EMPTY:
        return Graph._unchecked(t, (0,) * t)
    if kind == PatternSpec.PATH:
        return graph_from_edges(t, [(i, i + 1) for i in range(t - 1)])
    if kind == PatternSpec.CYCLE:
        if t < 3:
            raise InvalidPattern(f"cycles need at least 3 vertices, got {t}")
        edges = [(i, i + 1) for i in range(t - 1)] + [(0, t - 1)]
        return graph_from_edges(t, edges)
    if kind == PatternSpec.STAR:
        return graph_from_edges(t + 1, [(0, leaf) for leaf in range(1, t + 1)])
    raise InvalidPattern(f"unknown pattern kind {kind!r}")


def graph_from_edges(n: int, edges: Iterable[tuple[int, int]], labels=None) -> Graph:
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph._unchecked(n, tuple(rows), tuple(labels) if labels else None)


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    rows = tuple((full ^ row ^ (1 << v)) for v, row in enumerate(g.rows))
    return Graph._unchecked(g.n, rows, g.labels)


def subgraph_complement(g: Graph, s: VertexSet) -> Graph:
    """Flip adjacency exactly between pairs of vertices both inside s.

    With |s| <= 1 there is no such pair and the graph comes back unchanged.
    """
    if s.cap != g.n:
        raise CapMismatch(f"set indexes {s.cap} vertices, graph has {g.n}")
    mask = s.bits
    rows = tuple(
        (row ^ (mask & ~(1 << v))) if (mask >> v) & 1 else row
        for v, row in enumerate(g.rows)
    )
    return Graph._unchecked(g.n, rows, g.labels)


def induced(g: Graph, s: VertexSet) -> Graph:
    """Subgraph induced by s, vertices renumbered by ascending original index."""
    if s.cap != g.n:
        raise CapMismatch(f"set indexes {s.cap} vertices, graph has {g.n}")
    verts = s.members()
    rows = []
    for u in verts:
        row = 0
        grow = g.rows[u]
        for j, w in enumerate(verts):
            if (grow >> w) & 1:
                row |= 1 << j
        rows.append(row)
    labels = tuple(g.labels[u] for u in verts) if g.labels is not None else None
    return Graph._unchecked(len(verts), tuple(rows), labels)


def disjoint_union(a: Graph, b: Graph) -> Graph:
    rows = list(a.rows) + [row << a.n for row in b.rows]
    labels = None
    if a.labels is not None and b.labels is not None:
        labels = a.labels + b.labels
    return Graph._unchecked(a.n + b.n, tuple(rows), labels)


def cross_product(a: Graph, b: Graph) -> Graph:
    """Cross product: vertex (i, j) maps to index i*b.n + j; (u,u') ~ (v,v')
    iff u = v and u' ~ v', or u' = v' and u ~ v."""
    n = a.n * b.n
    rows = [0] * n
    for i in range(a.n):
        arow = a.rows[i]
        base = i * b.n
        for j in range(b.n):
            row = b.rows[j] << base  # same a-vertex, adjacent b-pair
            m = arow
            while m:  # same b-vertex, adjacent a-pair
                kbit = m & -m
                m ^= kbit
                row |= 1 << ((kbit.bit_length() - 1) * b.n + j)
            rows[base + j] = row
    return Graph._unchecked(n, tuple(rows))


def no_instance(h: Graph) -> Graph:
    """complement(h) x h: admits no subgraph complement to an h-free graph."""
    if h.n < 2:
        raise PatternTooSmall("no-instance construction needs a pattern with >= 2 vertices")
    return cross_product(complement(h), h)


class InducedCopy:
    """Witness of an induced copy: mapping[i] is the host vertex playing
    pattern vertex i."""

    __slots__ = ("mapping", "cap")

    def __init__(self, mapping: tuple[int, ...], cap: int):
        object.__setattr__(self, "mapping", tuple(mapping))
        object.__setattr__(self, "cap", cap)

    def __setattr__(self, name, value):
        raise AttributeError("InducedCopy is immutable")

    @property
    def vertices(self) -> VertexSet:
        return VertexSet.from_members(self.mapping, self.cap)

    def __repr__(self) -> str:
        return f"InducedCopy({self.mapping})"


def _search_induced(g: Graph, h: Graph, root_is_min: bool) -> Optional[tuple[int, ...]]:
    """Backtracking embedding search over pattern vertices in index order,
    with bitmask candidate domains shrunk by adjacency consistency against
    every placed vertex. With root_is_min, only embeddings whose pattern
    vertex 0 sits on the copy's minimum host vertex are considered (sound
    exactly when the pattern is vertex-transitive)."""
    hn, gn = h.n, g.n
    if hn > gn:
        return None
    gfull = (1 << gn) - 1
    gdeg = [row.bit_count() for row in g.rows]
    base = []
    for j in range(hn):
        dj = h.rows[j].bit_count()
        cj = hn - 1 - dj
        m = 0
        for v in range(gn):
            if gdeg[v] >= dj and gn - 1 - gdeg[v] >= cj:
                m |= 1 << v
        if not m:
            return None
        base.append(m)

    grows = g.rows
    hrows = h.rows
    mapping = [0] * hn

    def extend(j: int, doms: list[int]) -> bool:
        cand = doms[0]
        while cand:
            vbit = cand & -cand
            cand ^= vbit
            v = vbit.bit_length() - 1
            mapping[j] = v
            if j + 1 == hn:
                return True
            grow = grows[v]
            gnon = gfull ^ grow ^ vbit
            if j == 0 and root_is_min:
                gnon &= ~(vbit - 1)
                grow &= ~(vbit - 1)
            hrow = hrows[j]
            nxt = []
            ok = True
            for k in range(j + 1, hn):
                d = doms[k - j] & (grow if (hrow >> k) & 1 else gnon)
                if not d:
                    ok = False
                    break
                nxt.append(d)
            if ok and extend(j + 1, nxt):
                return True
        return False

    if extend(0, base):
        return tuple(mapping)
    return None


def find_induced(g: Graph, h: Graph) -> Optional[InducedCopy]:
    """Lexicographically least induced embedding of h into g, or None."""
    if h.n < 1:
        raise PatternTooSmall("pattern must have at least one vertex")
    got = _search_induced(g, h, False)
    return InducedCopy(got, g.n) if got is not None else None


def _is_vertex_transitive_shape(h: Graph) -> bool:
    """Cheap sufficient test for vertex transitivity: complete, empty, a
    single cycle, or the complement of one. Enough for the patterns where
    the root-is-minimum search restriction pays off."""
    if h.n == 0:
        return False
    degs = {row.bit_count() for row in h.rows}
    if degs == {h.n - 1} or degs == {0}:
        return True
    for cand in (h, complement(h)):
        if h.n >= 3 and {row.bit_count() for row in cand.rows} == {2}:
            # all degree 2 and connected means one cycle
            seen = 1
            frontier = cand.rows[0] & ~seen
            while frontier:
                seen |= frontier
                nxt = 0
                m = frontier
                while m:
                    vbit = m & -m
                    m ^= vbit
                    nxt |= cand.rows[vbit.bit_length() - 1]
                frontier = nxt & ~seen
            if seen == (1 << h.n) - 1:
                return True
    return False


def is_pattern_free(g: Graph, h: Graph) -> bool:
    """True iff g contains no induced copy of h.

    Decision only, so for vertex-transitive patterns the search is allowed
    to anchor pattern vertex 0 at the copy's minimum host vertex.
    """
    if h.n < 1:
        raise PatternTooSmall("pattern must have at least one vertex")
    return _search_induced(g, h, _is_vertex_transitive_shape(h)) is None


def degeneracy(g: Graph) -> int:
    """Smallest k such that every subgraph has a vertex of degree <= k,
    by iterated minimum-degree removal."""
    if g.n == 0:
        raise NullGraph("degeneracy undefined on the null graph")
    rows = g.rows
    remaining = (1 << g.n) - 1
    k = 0
    while remaining:
        best_v = -1
        best_d = g.n
        m = remaining
        while m:
            vbit = m & -m
            m ^= vbit
            v = vbit.bit_length() - 1
            d = (rows[v] & remaining).bit_count()
            if d < best_d:
                best_v, best_d = v, d
        if best_d > k:
            k = best_d
        remaining ^= 1 << best_v
    return k


def all_adjacent(g: Graph, a: VertexSet, b: VertexSet) -> bool:
    """True iff every vertex of a is adjacent to every vertex of b
    (the sets must be disjoint for the question to make sense)."""
    if a.cap != g.n or b.cap != g.n:
        raise CapMismatch("vertex sets must index this graph")
    if a.bits & b.bits:
        return False
    for v in a.members():
        if (g.rows[v] & b.bits) != b.bits:
            return False
    return True


def is_module(g: Graph, s: VertexSet) -> bool:
    """True iff all members of s share the same neighborhood outside s."""
    if s.cap != g.n:
        raise CapMismatch("vertex set must index this graph")
    outside = None
    for v in s.members():
        seen = g.rows[v] & ~s.bits
        if outside is None:
            outside = seen
        elif outside != seen:
            return False
    return True


# graph6 encoding: header-less standard variant. Upper triangle, column-major
# (columns v = 1..n-1, rows u = 0..v-1), packed big-endian into 6-bit groups,
# each group offset by 63.

def _g6_size_bytes(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126, (n >> 12) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63])
    if n <= 68719476735:
        out = [126, 126]
        for shift in range(30, -1, -6):
            out.append(((n >> shift) & 63) + 63)
        return bytes(out)
    raise ValueError("graph too large for graph6")


def g6_encode(g: Graph) -> bytes:
    out = bytearray(_g6_size_bytes(g.n))
    acc = 0
    nbits = 0
    for v in range(1, g.n):
        col = g.rows[v]
        for u in range(v):
            acc = (acc << 1) | ((col >> u) & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = 0
                nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return bytes(out)


def g6_decode(data: bytes) -> Graph:
    if isinstance(data, str):
        data = data.encode("ascii")
    if not data:
        raise MalformedG6("empty input", 0)
    for i, byte in enumerate(data):
        if not 63 <= byte <= 126:
            raise MalformedG6(f"byte {byte:#x} outside graph6 range", i)
    pos = 0
    if data[0] != 126:
        n = data[0] - 63
        pos = 1
    elif len(data) >= 2 and data[1] != 126:
        if len(data) < 4:
            raise MalformedG6("truncated 3-byte size word", len(data))
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        pos = 4
        if n <= 62:
            raise MalformedG6("non-canonical size word", 1)
    else:
        if len(data) < 8:
            raise MalformedG6("truncated 6-byte size word", len(data))
        n = 0
        for i in range(2, 8):
            n = (n << 6) | (data[i] - 63)
        pos = 8
        if n <= 258047:
            raise MalformedG6("non-canonical size word", 2)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(data) - pos != nbytes:
        raise MalformedG6(
            f"expected {nbytes} adjacency bytes for n={n}, got {len(data) - pos}",
            min(pos + nbytes, len(data)),
        )
    rows = [0] * n
    bit = 0
    for i in range(nbytes):
        group = data[pos + i] - 63
        for k in range(5, -1, -1):
            if bit >= nbits:
                if (group >> k) & 1:
                    raise MalformedG6("nonzero padding bits", pos + i)
                continue
            if (group >> k) & 1:
                u, v = _g6_bit_to_pair(bit)
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            bit += 1
    return Graph._unchecked(n, tuple(rows))


def _g6_bit_to_pair(bit: int) -> tuple[int, int]:
    # Column-major upper triangle: column v holds v bits (u = 0..v-1).
    v = 1
    while bit >= v:
        bit -= v
        v += 1
    return bit, v


def graph_to_json(g: Graph) -> str:
    doc: dict = {"n": g.n, "edges": [[u, v] for u, v in g.edges()]}
    if g.labels is not None:
        doc["labels"] = list(g.labels)
    return json.dumps(doc)


def graph_from_json(text: str) -> Graph:
    doc = json.loads(text)
    if not isinstance(doc, dict) or "n" not in doc or "edges" not in doc:
        raise ValueError("graph JSON needs 'n' and 'edges' fields")
    n = doc["n"]
    if not isinstance(n, int) or n < 0:
        raise ValueError("'n' must be a nonnegative integer")
    seen = set()
    edges = []
    for item in doc["edges"]:
        if not (isinstance(item, list) and len(item) == 2):
            raise ValueError(f"edge entry {item!r} is not a pair")
        u, v = item
        if not (isinstance(u, int) and isinstance(v, int)):
            raise ValueError(f"edge entry {item!r} is not an integer pair")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ValueError(f"edge {{{u}, {v}}} listed more than once")
        seen.add(key)
        edges.append((u, v))
    labels = doc.get("labels")
    return graph_from_edges(n, edges, labels)
