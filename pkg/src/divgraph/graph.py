"""Explicit divisor graph: vertices are the proper divisors of n, with an
edge between u and v exactly when n divides u*v.

This is the ground truth every brute-force oracle runs against. Adjacency is
stored as one bitmask per vertex (Python ints double as arbitrary-width
bitsets), which keeps the exponential oracles fast at desk scale.
"""

from __future__ import annotations

import json

from .arith import Factorization, exponent_vector, proper_divisors
from .errors import EmptyGraphError, SizeCapError

DEFAULT_VERTEX_CAP = 4096


class DivisorGraph:
    """Immutable-by-convention graph over the proper divisors of n."""

    __slots__ = ("n", "vertices", "exponent_vectors", "adjacency", "_index")

    def __init__(self, n, vertices, exponent_vectors, adjacency):
        self.n = n
        self.vertices = tuple(vertices)
        self.exponent_vectors = tuple(exponent_vectors)
        self.adjacency = tuple(adjacency)
        self._index = {v: i for i, v in enumerate(self.vertices)}

    def __len__(self) -> int:
        return len(self.vertices)

    def __repr__(self) -> str:
        return f"DivisorGraph(n={self.n}, vertices={len(self.vertices)}, edges={self.edge_count()})"

    def index_of(self, v: int) -> int:
        try:
            return self._index[v]
        except KeyError:
            raise ValueError(f"unknown vertex {v} for n={self.n}") from None

    def degree_of(self, v: int) -> int:
        return self.adjacency[self.index_of(v)].bit_count()

    def neighbors(self, v: int) -> set[int]:
        mask = self.adjacency[self.index_of(v)]
        return {self.vertices[i] for i in _bit_indices(mask)}

    def is_edge(self, u: int, v: int) -> bool:
        iu, iv = self.index_of(u), self.index_of(v)
        return bool(self.adjacency[iu] >> iv & 1)

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) pairs with u < v, sorted lexicographically."""
        out = []
        for i, u in enumerate(self.vertices):
            mask = self.adjacency[i] >> (i + 1)
            j = i + 1
            while mask:
                if mask & 1:
                    out.append((u, self.vertices[j]))
                mask >>= 1
                j += 1
        out.sort()
        return out

    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self.adjacency) // 2

    def max_degree(self) -> int:
        return max(m.bit_count() for m in self.adjacency)

    def to_dot(self) -> str:
        lines = [f"graph divisors_{self.n} {{"]
        for v in self.vertices:
            lines.append(f"  {v};")
        for u, v in self.edges():
            lines.append(f"  {u} -- {v};")
        lines.append("}")
        return "\n".join(lines)

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "vertices": list(self.vertices),
            "edges": [[u, v] for u, v in self.edges()],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2)


def _bit_indices(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def build(f: Factorization, max_vertices: int = DEFAULT_VERTEX_CAP) -> DivisorGraph:
    """Construct the divisor graph of a composite n.

    Rejects primes (empty graph) and refuses to build beyond ``max_vertices``
    so that misuse of the exponential oracles fails loudly.
    """
    if f.is_prime():
        raise EmptyGraphError(f"empty graph: {f.n} is prime")
    verts = proper_divisors(f)
    if len(verts) > max_vertices:
        raise SizeCapError(
            f"graph for n={f.n} has {len(verts)} vertices, above cap {max_vertices}"
        )
    vecs = [exponent_vector(f, v) for v in verts]
    n = f.n
    m = len(verts)
    adjacency = [0] * m
    for i in range(m):
        vi = verts[i]
        for j in range(i + 1, m):
            if (vi * verts[j]) % n == 0:
                adjacency[i] |= 1 << j
                adjacency[j] |= 1 << i
    return DivisorGraph(n, verts, vecs, adjacency)
