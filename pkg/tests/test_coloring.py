from itertools import combinations

import pytest

from divgraph import coloring as C
from divgraph import formulas as F
from divgraph.arith import factorize
from divgraph.errors import OpenProblemError, TrivialGraphError
from divgraph.graph import build
from tests.conftest import admissible

PRIMES_UNDER_50 = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47]


def f(n):
    return factorize(n)


def test_vertex_coloring_36():
    vc = C.vertex_coloring(f(36))
    assert vc.color_count == 3
    assert [w for w, _ in vc.anchor_vertices] == [18, 12]
    # outside vertices inherit the anchor colors through the half-power rule
    assert vc.color_of[2] == vc.color_of[4] == vc.color_of[12]
    assert vc.color_of[3] == vc.color_of[9] == vc.color_of[18]
    assert C.validate_vertex_coloring(build(f(36)), vc) is True


def test_vertex_coloring_k2():
    vc = C.vertex_coloring(f(8))
    assert vc.color_count == 2
    assert C.validate_vertex_coloring(build(f(8)), vc) is True


def test_vertex_coloring_30():
    vc = C.vertex_coloring(f(30))
    assert vc.color_count == 3
    assert sorted(v for v in vc.color_of if v in (6, 10, 15)) == [6, 10, 15]
    assert C.validate_vertex_coloring(build(f(30)), vc) is True


def test_vertex_coloring_sweep():
    for fac in admissible(4, 600):
        vc = C.vertex_coloring(fac)
        assert vc.color_count == F.clique_number(fac)
        assert C.validate_vertex_coloring(build(fac), vc) is True


def test_prime_power_edge_coloring_32():
    ec = C.edge_coloring_prime_power(f(32))
    assert ec.color_of == {(2, 16): 0, (4, 8): 0, (4, 16): 1, (8, 16): 2}
    assert ec.color_count == 3
    assert ec.index_set == (1, 2, 4)
    assert all(t is C.EdgeType.PRIME_POWER for t in ec.edge_type.values())
    assert C.validate_edge_coloring(build(f(32)), ec) is True


def test_prime_power_edge_coloring_8_and_16():
    ec = C.edge_coloring_prime_power(f(8))
    assert ec.color_of == {(2, 4): 0} and ec.color_count == 1

    ec = C.edge_coloring_prime_power(f(16))
    assert ec.color_of == {(2, 8): 0, (4, 8): 1} and ec.color_count == 2


def test_prime_power_edge_coloring_rejects_other_n():
    with pytest.raises(ValueError):
        C.edge_coloring_prime_power(f(12))


def test_squarefree_edge_coloring_30_exact_table():
    ec = C.edge_coloring_squarefree(f(30))
    assert ec.index_set == (2, 3, 5)
    # color ids are ranks in the index set: c_2 -> 0, c_3 -> 1, c_5 -> 2
    assert ec.color_of == {
        (6, 10): 0,
        (6, 15): 1,
        (10, 15): 2,
        (2, 15): 0,
        (3, 10): 1,
        (5, 6): 2,
    }
    assert ec.edge_type[(6, 10)] is C.EdgeType.TYPE_I
    assert ec.edge_type[(2, 15)] is C.EdgeType.TYPE_III
    assert C.validate_edge_coloring(build(f(30)), ec) is True


def test_squarefree_edge_coloring_small_and_big():
    ec = C.edge_coloring_squarefree(f(6))
    assert ec.color_count == 1 and list(ec.color_of.values()) == [0]

    ec = C.edge_coloring_squarefree(f(210))
    assert ec.color_count == 7 and len(ec.index_set) == 7
    assert C.validate_edge_coloring(build(f(210)), ec) is True


def test_squarefree_edge_coloring_rejects_other_n():
    with pytest.raises(ValueError):
        C.edge_coloring_squarefree(f(12))


def test_type_one_and_two_partition():
    n = 2 * 3 * 5 * 7
    ec = C.edge_coloring_squarefree(f(n))
    for (u, v), t in ec.edge_type.items():
        quotient = u * v // n
        if quotient == 1:
            assert t is C.EdgeType.TYPE_III
        elif quotient * quotient < n:
            assert t is C.EdgeType.TYPE_I
            assert ec.index_set[ec.color_of[(u, v)]] == quotient
        else:
            assert t is C.EdgeType.TYPE_II
            assert ec.index_set[ec.color_of[(u, v)]] == n // quotient


def test_adjacent_quotient_colored_edges_never_collide():
    # the pre-greedy assignment alone is already conflict-free
    for n in (2 * 3 * 5 * 7, 3 * 5 * 7 * 11, 2 * 3 * 5 * 7 * 11):
        ec = C.edge_coloring_squarefree(f(n))
        fixed = [
            (e, c)
            for e, c in ec.color_of.items()
            if ec.edge_type[e] is not C.EdgeType.TYPE_III
        ]
        for i, (e1, c1) in enumerate(fixed):
            for e2, c2 in fixed[i + 1:]:
                if set(e1) & set(e2):
                    assert c1 != c2, (n, e1, e2)


def test_edge_coloring_dispatch():
    assert C.edge_coloring(f(32)).color_count == 3
    assert C.edge_coloring(f(30)).color_count == 3
    with pytest.raises(OpenProblemError):
        C.edge_coloring(f(72))
    with pytest.raises(TrivialGraphError):
        C.edge_coloring(f(9))


def test_all_prime_power_colorings_up_to_million():
    cases = []
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59,
              61, 67, 71, 73, 79, 83, 89, 97):
        a = 3
        while p**a <= 10**6:
            cases.append((p, a))
            a += 1
    assert len(cases) >= 60
    for p, a in cases:
        fac = f(p**a)
        ec = C.edge_coloring_prime_power(fac)
        assert ec.color_count == a - 2 == F.delta(fac)
        assert C.validate_edge_coloring(build(fac), ec) is True


def test_squarefree_colorings_k_up_to_3():
    for k in (2, 3):
        for primes in combinations(PRIMES_UNDER_50[:8], k):
            n = 1
            for p in primes:
                n *= p
            fac = f(n)
            ec = C.edge_coloring_squarefree(fac)
            assert ec.color_count == 2 ** (k - 1) - 1 == F.delta(fac)
            assert C.validate_edge_coloring(build(fac), ec) is True


def test_type_three_free_color_margin():
    # both endpoints non-pendant: their incident color counts leave slack
    for primes in combinations(PRIMES_UNDER_50[:6], 4):
        n = 1
        for p in primes:
            n *= p
        fac = f(n)
        ec = C.edge_coloring_squarefree(fac)
        g = build(fac)
        delta = F.delta(fac)
        for (u, v), t in ec.edge_type.items():
            if t is not C.EdgeType.TYPE_III:
                continue
            a = g.degree_of(u) - 1
            b = g.degree_of(v) - 1
            assert a + b < delta
            if g.degree_of(u) > 1 and g.degree_of(v) > 1:
                assert a + b <= delta - 3


def test_validators_reject_faults():
    g30 = build(f(30))
    ec = C.edge_coloring_squarefree(f(30))
    broken = dict(ec.color_of)
    broken[(2, 15)] = broken[(6, 15)]  # clash at vertex 15
    faulty = C.EdgeColoring(broken, ec.color_count, ec.edge_type, ec.index_set)
    assert C.validate_edge_coloring(g30, faulty) is False

    g36 = build(f(36))
    vc = C.vertex_coloring(f(36))
    broken = dict(vc.color_of)
    broken[2] = broken[18]  # 2 ~ 18
    faulty = C.VertexColoring(broken, vc.color_count, vc.anchor_vertices)
    assert C.validate_vertex_coloring(g36, faulty) is False


def test_validators_check_color_count_and_domain():
    g8 = build(f(8))
    one_color = C.EdgeColoring({(2, 4): 0}, 1, {(2, 4): C.EdgeType.PRIME_POWER}, (1,))
    assert C.validate_edge_coloring(g8, one_color) is True
    overdeclared = C.EdgeColoring({(2, 4): 0}, 2, {(2, 4): C.EdgeType.PRIME_POWER}, (1, 2))
    assert C.validate_edge_coloring(g8, overdeclared) is False
    with pytest.raises(ValueError):
        C.validate_edge_coloring(build(f(12)), one_color)
    with pytest.raises(ValueError):
        C.validate_vertex_coloring(g8, C.vertex_coloring(f(12)))
