"""Automorphism group of the divisor graph, enumerated from the factorization.

For generic n the group is a direct product of symmetric groups, one per
block of primes sharing an exponent: permuting primes inside a block induces
a graph automorphism by carrying exponent vectors across. Two small shapes
are exceptional and have exactly two automorphisms apiece: prime powers
(swap the two tied-degree vertices) and p^2*q (reverse the 4-vertex path).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import permutations, product
from math import factorial

from .arith import Factorization
from .errors import SizeCapError
from .formulas import require_standard
from .graph import DivisorGraph

DEFAULT_ORDER_CAP = 40320  # 8!


class SpecialCase(Enum):
    GENERIC = "Generic"
    PRIME_POWER_SWAP = "PrimePowerSwap"
    PATH_REVERSAL = "PathReversal"


@dataclass(frozen=True)
class AutBlock:
    """Primes of n sharing one exponent (indices into the canonical factor
    order, 0-based)."""

    exponent: int
    prime_indices: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.prime_indices)


@dataclass(frozen=True)
class AutGroup:
    blocks: tuple[AutBlock, ...]
    block_count: int
    order: int
    structure: tuple[int, ...]
    special_case: SpecialCase

    def structure_text(self) -> str:
        return " x ".join(f"S{k}" for k in self.structure)


@dataclass(frozen=True)
class Automorphism:
    """A graph automorphism as an explicit vertex permutation, stored as
    (vertex, image) pairs sorted by vertex."""

    vertex_map: tuple[tuple[int, int], ...]

    @classmethod
    def from_dict(cls, mapping: dict[int, int]) -> "Automorphism":
        return cls(tuple(sorted(mapping.items())))

    def as_dict(self) -> dict[int, int]:
        return dict(self.vertex_map)

    def apply(self, v: int) -> int:
        return self.as_dict()[v]


def _blocks(f: Factorization) -> tuple[AutBlock, ...]:
    # factors are exponent-descending, so equal exponents are consecutive
    blocks = []
    start = 0
    exps = f.exponents
    for i in range(1, f.k + 1):
        if i == f.k or exps[i] != exps[start]:
            blocks.append(AutBlock(exps[start], tuple(range(start, i))))
            start = i
    return tuple(blocks)


def aut_structure(f: Factorization) -> AutGroup:
    """Describe the automorphism group without materializing its elements."""
    require_standard(f)
    blocks = _blocks(f)
    structure = tuple(b.size for b in blocks)
    if f.k == 1:
        return AutGroup(blocks, len(blocks), 2, structure, SpecialCase.PRIME_POWER_SWAP)
    if f.exponents == (2, 1):
        return AutGroup(blocks, len(blocks), 2, structure, SpecialCase.PATH_REVERSAL)
    order = 1
    for size in structure:
        order *= factorial(size)
    return AutGroup(blocks, len(blocks), order, structure, SpecialCase.GENERIC)


def enumerate_automorphisms(
    f: Factorization,
    g: DivisorGraph,
    max_order: int = DEFAULT_ORDER_CAP,
) -> list[Automorphism]:
    """Materialize every automorphism as a vertex permutation.

    Enumeration order is lexicographic over per-block permutations in
    one-line notation, so output is reproducible.
    """
    require_standard(f)
    group = aut_structure(f)
    if group.order > max_order:
        raise SizeCapError(
            f"automorphism group of n={f.n} has order {group.order}, above cap {max_order}"
        )

    if group.special_case is SpecialCase.PRIME_POWER_SWAP:
        p, a = f.factors[0]
        half = (a + 1) // 2
        u, v = p ** (half - 1), p**half
        identity = {w: w for w in g.vertices}
        swap = dict(identity)
        swap[u], swap[v] = v, u
        return [Automorphism.from_dict(identity), Automorphism.from_dict(swap)]

    if group.special_case is SpecialCase.PATH_REVERSAL:
        p1, p2 = f.primes
        identity = {w: w for w in g.vertices}
        reversal = {p1: p2, p2: p1, p1 * p2: p1 * p1, p1 * p1: p1 * p2}
        return [Automorphism.from_dict(identity), Automorphism.from_dict(reversal)]

    out = []
    block_index_lists = [b.prime_indices for b in group.blocks]
    for perm_tuple in product(*(permutations(ix) for ix in block_index_lists)):
        sigma = {}
        for src_ix, img_ix in zip(block_index_lists, perm_tuple):
            sigma.update(zip(src_ix, img_ix))
        out.append(_from_prime_permutation(f, g, sigma))
    return out


def _from_prime_permutation(
    f: Factorization, g: DivisorGraph, sigma: dict[int, int]
) -> Automorphism:
    """Vertex map induced by a within-block permutation of prime indices:
    each vertex's exponents travel with their primes."""
    primes = f.primes
    mapping = {}
    for v, vec in zip(g.vertices, g.exponent_vectors):
        image = 1
        for i, s in enumerate(vec):
            image *= primes[sigma[i]] ** s
        mapping[v] = image
    return Automorphism.from_dict(mapping)


def generating_set(f: Factorization, g: DivisorGraph) -> list[Automorphism]:
    """A small generating set: the swap or reversal in the special cases,
    adjacent within-block prime transpositions otherwise."""
    require_standard(f)
    group = aut_structure(f)
    if group.special_case is not SpecialCase.GENERIC:
        both = enumerate_automorphisms(f, g)
        return [both[1]] if both[1] != both[0] else []
    gens = []
    for block in group.blocks:
        ix = block.prime_indices
        for a, b in zip(ix, ix[1:]):
            sigma = {i: i for i in range(f.k)}
            sigma[a], sigma[b] = b, a
            gens.append(_from_prime_permutation(f, g, sigma))
    return gens
