from itertools import product

import pytest

from divgraph import automorphisms as A
from divgraph.arith import factorize
from divgraph.errors import SizeCapError
from divgraph.graph import build
from divgraph.oracles import bf_automorphisms
from tests.conftest import admissible


def f(n):
    return factorize(n)


def setup(n):
    fac = f(n)
    return fac, build(fac)


def test_structure_prime_power():
    group = A.aut_structure(f(32))
    assert group.order == 2
    assert group.special_case is A.SpecialCase.PRIME_POWER_SWAP


def test_structure_generic():
    group = A.aut_structure(f(30))
    assert group.structure == (3,)
    assert group.order == 6
    assert group.special_case is A.SpecialCase.GENERIC

    group = A.aut_structure(f(60))
    assert group.structure == (1, 2)
    assert group.order == 2
    assert group.block_count == 2
    assert group.structure_text() == "S1 x S2"

    assert A.aut_structure(f(210)).order == 24
    assert A.aut_structure(f(72)).order == 1


def test_structure_path_reversal():
    group = A.aut_structure(f(12))
    assert group.order == 2
    assert group.special_case is A.SpecialCase.PATH_REVERSAL


def test_blocks_partition_the_primes():
    for fac in admissible(4, 400):
        group = A.aut_structure(fac)
        indices = [i for b in group.blocks for i in b.prime_indices]
        assert sorted(indices) == list(range(fac.k))
        assert sum(group.structure) == fac.k


def test_enumerate_30():
    fac, g = setup(30)
    auts = A.enumerate_automorphisms(fac, g)
    assert len(auts) == 6
    swap23 = A.Automorphism.from_dict({2: 3, 3: 2, 5: 5, 6: 6, 10: 15, 15: 10})
    assert swap23 in auts


def test_enumerate_16_swaps_the_tied_pair():
    fac, g = setup(16)
    auts = A.enumerate_automorphisms(fac, g)
    assert len(auts) == 2
    swap = A.Automorphism.from_dict({2: 4, 4: 2, 8: 8})
    assert auts == [A.Automorphism.from_dict({2: 2, 4: 4, 8: 8}), swap]


def test_enumerate_12_reverses_the_path():
    fac, g = setup(12)
    auts = A.enumerate_automorphisms(fac, g)
    assert len(auts) == 2
    assert A.Automorphism.from_dict({2: 3, 3: 2, 6: 4, 4: 6}) in auts


def test_order_cap():
    fac, g = setup(210)
    with pytest.raises(SizeCapError):
        A.enumerate_automorphisms(fac, g, max_order=6)


def test_generating_set_generates():
    for n in (12, 16, 30, 60, 72, 210):
        fac, g = setup(n)
        gens = A.generating_set(fac, g)
        elements = {a.vertex_map for a in A.enumerate_automorphisms(fac, g)}
        identity = tuple((v, v) for v in g.vertices)
        generated = {identity}
        frontier = [dict(identity)]
        gen_dicts = [a.as_dict() for a in gens]
        while frontier:
            current = frontier.pop()
            for gen in gen_dicts:
                composed = {v: gen[current[v]] for v in current}
                key = tuple(sorted(composed.items()))
                if key not in generated:
                    generated.add(key)
                    frontier.append(composed)
        assert generated == elements


def test_matches_brute_force_to_300():
    for fac in admissible(4, 300):
        g = build(fac)
        if len(g) > 10:
            continue
        enum = {a.vertex_map for a in A.enumerate_automorphisms(fac, g)}
        brute = {tuple(sorted(d.items())) for d in bf_automorphisms(g)}
        assert enum == brute, f"n={fac.n}"


def test_count_matches_structure():
    for fac in admissible(4, 500):
        g = build(fac)
        group = A.aut_structure(fac)
        assert len(A.enumerate_automorphisms(fac, g)) == group.order


def test_group_axioms_small_orders():
    for n in (12, 16, 30, 36, 60, 72, 210):
        fac, g = setup(n)
        auts = A.enumerate_automorphisms(fac, g)
        if len(auts) > 24:
            continue
        maps = {a.vertex_map for a in auts}
        identity = tuple((v, v) for v in g.vertices)
        assert identity in maps
        for a, b in product(auts, repeat=2):
            da, db = a.as_dict(), b.as_dict()
            composed = tuple(sorted((v, da[db[v]]) for v in db))
            assert composed in maps
        for a in auts:
            inverse = tuple(sorted((w, v) for v, w in a.vertex_map))
            assert inverse in maps


def test_every_enumerated_map_preserves_adjacency():
    for fac in admissible(4, 300):
        g = build(fac)
        for aut in A.enumerate_automorphisms(fac, g):
            mapping = aut.as_dict()
            assert sorted(mapping) == sorted(mapping.values()) == list(g.vertices)
            for u, v in g.edges():
                assert g.is_edge(mapping[u], mapping[v])


def test_pendants_go_to_equal_exponent_pendants():
    from divgraph.formulas import pendant_vertices

    for fac in admissible(4, 400):
        if fac.k < 2 or fac.exponents == (2, 1):
            continue
        g = build(fac)
        pendants = set(pendant_vertices(fac))
        exponent_of = dict(fac.factors)
        for aut in A.enumerate_automorphisms(fac, g):
            mapping = aut.as_dict()
            for p in pendants:
                q = mapping[p]
                assert q in pendants
                assert exponent_of[p] == exponent_of[q]


def test_distinct_automorphisms_differ_on_pendants():
    from divgraph.formulas import pendant_vertices

    for fac in admissible(4, 400):
        if fac.k < 2:
            continue
        g = build(fac)
        pendants = pendant_vertices(fac)
        seen = set()
        for aut in A.enumerate_automorphisms(fac, g):
            mapping = aut.as_dict()
            restriction = tuple(mapping[p] for p in pendants)
            assert restriction not in seen
            seen.add(restriction)
