"""Constructive colorings of the divisor graph.

The vertex coloring realizes chromatic number = clique number directly: the
maximum clique gets distinct colors, one anchor vertex is designated per
prime, and every remaining vertex inherits the color of the anchor for the
first prime whose "half power" fails to divide it.

Two constructive edge colorings hit the chromatic index exactly: one for
prime powers (color by the quotient u*v/n) and one for squarefree n (colors
indexed by the divisors strictly between 1 and sqrt(n)). No constructive
algorithm is attempted for other n; that case is an open problem and callers
must fall back to the exact backtracking oracle or give up.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .arith import Factorization, proper_divisors
from .errors import OpenProblemError
from .formulas import clique_witness, require_standard
from .graph import DivisorGraph


class EdgeType(Enum):
    TYPE_I = "Type-I"
    TYPE_II = "Type-II"
    TYPE_III = "Type-III"
    PRIME_POWER = "PrimePower"


@dataclass(frozen=True)
class VertexColoring:
    """Proper vertex coloring with normalized color ids 0..color_count-1.

    ``anchor_vertices`` lists, per prime of n in construction order, the
    clique vertex whose color the outside vertices may inherit.
    """

    color_of: dict[int, int]
    color_count: int
    anchor_vertices: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class EdgeColoring:
    """Proper edge coloring with normalized color ids 0..color_count-1.

    ``index_set`` maps color id -> divisor-flavored label: the quotient
    u*v/n for prime powers, the color-index divisor for squarefree n.
    """

    color_of: dict[tuple[int, int], int]
    color_count: int
    edge_type: dict[tuple[int, int], EdgeType]
    index_set: tuple[int, ...]


def vertex_coloring(f: Factorization) -> VertexColoring:
    """Color the divisor graph properly with exactly clique-number colors."""
    require_standard(f)
    witness = clique_witness(f)
    clique_vs = sorted(witness.members())
    color_of = {v: i for i, v in enumerate(clique_vs)}

    # primes with odd exponent come first; within a parity class the
    # canonical factor order is kept
    order = [i for i, a in enumerate(f.exponents) if a % 2 == 1]
    order += [i for i, a in enumerate(f.exponents) if a % 2 == 0]

    full = f.n
    anchors = []
    half_powers = []
    for i in order:
        p, a = f.factors[i]
        gamma = (a + 1) // 2
        half_powers.append(p**gamma)
        # odd exponent: drop p_i just below half; even exponent: put it at half
        w = (full // p**a) * p ** (gamma - 1 if a % 2 == 1 else gamma)
        anchors.append((w, color_of[w]))

    for u in proper_divisors(f):
        if u in color_of:
            continue
        for pos, hp in enumerate(half_powers):
            if u % hp != 0:
                color_of[u] = anchors[pos][1]
                break
        else:
            raise AssertionError(f"vertex {u} lies inside the clique witness")

    return VertexColoring(color_of, len(clique_vs), tuple(anchors))


def edge_coloring_prime_power(f: Factorization) -> EdgeColoring:
    """Edge coloring for n = p^a, a >= 3: edge {u, v} is colored by the
    exponent j with u*v/n = p^j, using exactly a - 2 colors."""
    require_standard(f)
    if f.k != 1:
        raise ValueError(f"{f.n} is not a prime power")
    p, a = f.factors[0]
    n = f.n
    color_of = {}
    edge_type = {}
    for u, v in _edges_of(f):
        quotient = u * v // n
        j = 0
        q = quotient
        while q % p == 0:
            q //= p
            j += 1
        color_of[(u, v)] = j
        edge_type[(u, v)] = EdgeType.PRIME_POWER
    labels = tuple(p**j for j in range(a - 2))
    return EdgeColoring(color_of, a - 2, edge_type, labels)


def edge_coloring_squarefree(f: Factorization) -> EdgeColoring:
    """Edge coloring for squarefree composite n with colors indexed by
    I = {j : j | n, 1 < j < sqrt(n)}, of size 2^(k-1) - 1.

    An edge {u, v} with quotient l = u*v/n is colored by l itself when
    1 < l < sqrt(n), by n/l when l > sqrt(n), and greedily (lowest free
    index, edges taken by ascending smaller endpoint) when l = 1.
    """
    require_standard(f)
    if not f.is_squarefree() or f.k < 2:
        raise ValueError(f"{f.n} is not a squarefree composite")
    n = f.n
    index_set = tuple(d for d in proper_divisors(f) if d * d < n)
    rank = {d: i for i, d in enumerate(index_set)}

    color_of = {}
    edge_type = {}
    type_iii = []
    for u, v in _edges_of(f):
        quotient = u * v // n
        if quotient == 1:
            edge_type[(u, v)] = EdgeType.TYPE_III
            type_iii.append((u, v))
        elif quotient * quotient < n:
            edge_type[(u, v)] = EdgeType.TYPE_I
            color_of[(u, v)] = rank[quotient]
        else:
            edge_type[(u, v)] = EdgeType.TYPE_II
            color_of[(u, v)] = rank[n // quotient]

    type_iii.sort()
    for u, v in type_iii:
        taken = {
            c
            for edge, c in color_of.items()
            if u in edge or v in edge
        }
        for c in range(len(index_set)):
            if c not in taken:
                color_of[(u, v)] = c
                break
        else:
            raise AssertionError(f"no free color for edge ({u}, {v}) of n={n}")

    return EdgeColoring(color_of, len(index_set), edge_type, index_set)


def edge_coloring(f: Factorization) -> EdgeColoring:
    """Dispatch to the constructive edge coloring that applies to n.

    Raises ``OpenProblemError`` when n is neither a prime power nor
    squarefree; no constructive optimal algorithm is known there.
    """
    require_standard(f)
    if f.k == 1:
        return edge_coloring_prime_power(f)
    if f.is_squarefree():
        return edge_coloring_squarefree(f)
    raise OpenProblemError(
        f"not constructively colorable: no constructive algorithm for n={f.n} (open problem)"
    )


def validate_vertex_coloring(g: DivisorGraph, coloring: VertexColoring) -> bool:
    """True when the coloring covers exactly g's vertices, is proper, and the
    declared color count matches the number of colors actually used."""
    if set(coloring.color_of) != set(g.vertices):
        raise ValueError("coloring domain does not match the graph's vertices")
    for u, v in g.edges():
        if coloring.color_of[u] == coloring.color_of[v]:
            return False
    return len(set(coloring.color_of.values())) == coloring.color_count


def validate_edge_coloring(g: DivisorGraph, coloring: EdgeColoring) -> bool:
    """Edge-coloring counterpart of ``validate_vertex_coloring``."""
    edges = g.edges()
    if set(coloring.color_of) != set(edges):
        raise ValueError("coloring domain does not match the graph's edges")
    by_vertex: dict[int, set[int]] = {}
    for (u, v), c in coloring.color_of.items():
        for x in (u, v):
            if c in by_vertex.setdefault(x, set()):
                return False
            by_vertex[x].add(c)
    return len(set(coloring.color_of.values())) == coloring.color_count


def _edges_of(f: Factorization) -> list[tuple[int, int]]:
    n = f.n
    divs = proper_divisors(f)
    out = []
    for i, u in enumerate(divs):
        for v in divs[i + 1:]:
            if (u * v) % n == 0:
                out.append((u, v))
    return out
