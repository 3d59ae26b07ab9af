"""(p, q)-split partitions and their enumeration.

A (p, q)-split partition of G is a bipartition (P, Q) of V(G) where G[P] has
no clique on p+1 vertices and G[Q] has no independent set on q+1 vertices.
Any two such partitions of the same graph differ on fewer than R(p+1, q+1)
vertices per side, which is what keeps the enumeration polynomial for fixed
p and q.
"""

from __future__ import annotations

import itertools
from math import comb
from typing import Optional

from .errors import InvalidArgs, InvalidSeed
from .graphs import Graph, VertexSet, complement


class RamseyBound:
    """Value of (an upper bound on) the Ramsey number R(p, q), with a flag
    saying whether the value is known to be exact."""

    __slots__ = ("p", "q", "value", "exact")

    def __init__(self, p: int, q: int, value: int, exact: bool):
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "value", value)
        object.__setattr__(self, "exact", exact)

    def __setattr__(self, name, value):
        raise AttributeError("RamseyBound is immutable")

    def __repr__(self) -> str:
        tag = "exact" if self.exact else "upper bound"
        return f"RamseyBound(R({self.p}, {self.q}) <= {self.value}, {tag})"


_RAMSEY_EXACT = {
    (3, 3): 6,
    (3, 4): 9,
    (3, 5): 14,
    (4, 4): 18,
}


def ramsey_bound(p: int, q: int) -> RamseyBound:
    """R(p, q) when it is known exactly, else the binomial upper bound
    C(p+q-2, p-1)."""
    if p < 1 or q < 1:
        raise InvalidArgs(f"Ramsey arguments must be positive, got ({p}, {q})")
    if p == 1 or q == 1:
        return RamseyBound(p, q, 1, True)
    if p == 2:
        return RamseyBound(p, q, q, True)
    if q == 2:
        return RamseyBound(p, q, p, True)
    key = (p, q) if p <= q else (q, p)
    if key in _RAMSEY_EXACT:
        return RamseyBound(p, q, _RAMSEY_EXACT[key], True)
    return RamseyBound(p, q, comb(p + q - 2, p - 1), False)


def _least_clique(rows, within: int, size: int) -> Optional[int]:
    """First clique of the given size inside the mask `within` in ascending
    vertex order, as a bitmask, or None. size=0 finds the empty clique."""
    if size == 0:
        return 0

    def grow(chosen: int, count: int, cand: int) -> Optional[int]:
        if count == size:
            return chosen
        if count + cand.bit_count() < size:
            return None
        while cand:
            vbit = cand & -cand
            cand ^= vbit
            got = grow(chosen | vbit, count + 1, cand & rows[vbit.bit_length() - 1])
            if got is not None:
                return got
        return None

    return grow(0, 0, within)


def has_clique(g: Graph, within: int, size: int) -> bool:
    return _least_clique(g.rows, within, size) is not None


class SplitPartition:
    """A concrete (p, q)-split partition of some graph."""

    __slots__ = ("p", "q", "P", "Q")

    def __init__(self, p: int, q: int, P: VertexSet, Q: VertexSet):
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "P", P)
        object.__setattr__(self, "Q", Q)

    def __setattr__(self, name, value):
        raise AttributeError("SplitPartition is immutable")

    def __eq__(self, other) -> bool:
        if not isinstance(other, SplitPartition):
            return NotImplemented
        return (self.p, self.q, self.P, self.Q) == (other.p, other.q, other.P, other.Q)

    def __hash__(self) -> int:
        return hash((self.p, self.q, self.P, self.Q))

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "q": self.q,
            "P": list(self.P.members()),
            "Q": list(self.Q.members()),
        }

    def __repr__(self) -> str:
        return f"SplitPartition(p={self.p}, q={self.q}, P={set(self.P.members()) or '{}'}, Q={set(self.Q.members()) or '{}'})"


def is_split_partition(g: Graph, p: int, q: int, pbits: int, qbits: int) -> bool:
    """Check the two sides directly: no K_{p+1} in P, no (q+1)-independent
    set in Q."""
    full = (1 << g.n) - 1
    if (pbits | qbits) != full or (pbits & qbits):
        return False
    if has_clique(g, pbits, p + 1):
        return False
    co = complement(g)
    if _least_clique(co.rows, qbits, q + 1) is not None:
        return False
    return True


def find_split_partition(g: Graph, p: int, q: int) -> Optional[SplitPartition]:
    """One (p, q)-split partition of g, or None when the graph has none.

    Branching on cliques: while the tentative P side still holds a K_{p+1},
    one of its vertices must move to Q; recurse over the p+1 choices. The Q
    side is pruned as soon as it gains a (q+1)-independent set, so the tree
    has branching p+1 and depth bounded by the Ramsey argument.
    """
    if p < 1 or q < 1:
        raise InvalidArgs(f"split parameters must be positive, got ({p}, {q})")
    rows = g.rows
    co_rows = complement(g).rows
    full = (1 << g.n) - 1
    seen = set()

    def solve(qbits: int) -> Optional[int]:
        if qbits in seen:
            return None
        seen.add(qbits)
        if _least_clique(co_rows, qbits, q + 1) is not None:
            return None
        clique = _least_clique(rows, full & ~qbits, p + 1)
        if clique is None:
            return qbits
        m = clique
        while m:
            vbit = m & -m
            m ^= vbit
            got = solve(qbits | vbit)
            if got is not None:
                return got
        return None

    qbits = solve(0)
    if qbits is None:
        return None
    return SplitPartition(
        p, q, VertexSet(full & ~qbits, g.n), VertexSet(qbits, g.n)
    )


def enumerate_split_partitions(
    g: Graph, p: int, q: int, seed: SplitPartition
) -> list[SplitPartition]:
    """All (p, q)-split partitions of g, grown from one seed partition.

    Any other partition (P', Q') satisfies |P ∩ Q'| and |Q ∩ P'| below
    R(p+1, q+1), so sweeping bounded exchanges X ⊆ P, Y ⊆ Q and validating
    each candidate finds every partition. Results are deduplicated by the
    P-side bitmask and returned sorted by it.
    """
    if p < 1 or q < 1:
        raise InvalidArgs(f"split parameters must be positive, got ({p}, {q})")
    if seed.P.cap != g.n or seed.Q.cap != g.n:
        raise InvalidSeed("seed partition does not index this graph")
    if not is_split_partition(g, p, q, seed.P.bits, seed.Q.bits):
        raise InvalidSeed("seed is not a valid split partition of this graph")
    bound = ramsey_bound(p + 1, q + 1).value
    pmem = seed.P.members()
    qmem = seed.Q.members()
    found: dict[int, int] = {}
    for xs in range(min(bound - 1, len(pmem)) + 1):
        for x_combo in itertools.combinations(pmem, xs):
            xm = sum(1 << v for v in x_combo)
            for ys in range(min(bound - 1, len(qmem)) + 1):
                for y_combo in itertools.combinations(qmem, ys):
                    ym = sum(1 << v for v in y_combo)
                    pb = (seed.P.bits ^ xm) | ym
                    if pb in found:
                        continue
                    qb = (seed.Q.bits ^ ym) | xm
                    if is_split_partition(g, p, q, pb, qb):
                        found[pb] = qb
    return [
        SplitPartition(p, q, VertexSet(pb, g.n), VertexSet(qb, g.n))
        for pb, qb in sorted(found.items())
    ]
