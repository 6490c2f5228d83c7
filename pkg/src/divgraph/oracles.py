"""Exact brute-force oracles computed directly on the explicit graph.

These are the independent ground truth the closed-form layer is checked
against: nothing here consults a formula. All searches are deterministic,
and each one either returns the exact optimum or raises ``OracleSkipped``
when its vertex cap or time budget is exceeded.
"""

from __future__ import annotations

import time
from collections import deque
from dataclasses import dataclass

from .errors import OracleSkipped
from .graph import DivisorGraph


@dataclass(frozen=True)
class OracleBudget:
    """Per-oracle vertex caps plus a shared per-call timeout (seconds)."""

    clique_cap: int = 200
    independence_cap: int = 200
    matching_cap: int = 200
    vertex_cover_cap: int = 200
    edge_cover_cap: int = 200
    chromatic_cap: int = 26
    chromatic_index_cap: int = 26
    dominating_cap: int = 26
    automorphism_cap: int = 10
    isomorphism_cap: int = 10
    perfect_cap: int = 14
    timeout: float = 60.0


DEFAULT_BUDGET = OracleBudget()


def _require(g: DivisorGraph, cap: int, name: str) -> None:
    if len(g) > cap:
        raise OracleSkipped(
            f"oracle skipped: {name} cap is {cap} vertices, graph has {len(g)}"
        )


def _deadline(budget: OracleBudget) -> float:
    return time.monotonic() + budget.timeout


def _tick(deadline: float, name: str) -> None:
    if time.monotonic() > deadline:
        raise OracleSkipped(f"oracle skipped: {name} timed out")


# ---------------------------------------------------------------- cliques


def _max_clique_masks(masks: list[int], deadline: float, name: str) -> int:
    """Branch and bound with a greedy-coloring upper bound."""
    n = len(masks)
    if n == 0:
        return 0
    best = [1]

    def expand(cand: int, size: int) -> None:
        _tick(deadline, name)
        # greedy coloring of the candidate set; a vertex in color class c
        # can extend the clique to at most size + c
        order: list[tuple[int, int]] = []
        rest = cand
        color = 0
        while rest:
            color += 1
            avail = rest
            while avail:
                v = (avail & -avail).bit_length() - 1
                bit = 1 << v
                avail &= ~(masks[v] | bit)
                rest ^= bit
                order.append((v, color))
        for v, bound in reversed(order):
            if size + bound <= best[0]:
                return
            sub = cand & masks[v]
            if sub:
                expand(sub, size + 1)
            elif size + 1 > best[0]:
                best[0] = size + 1
            cand &= ~(1 << v)

    expand((1 << n) - 1, 0)
    return best[0]


def bf_max_clique(g: DivisorGraph, budget: OracleBudget = DEFAULT_BUDGET) -> int:
    _require(g, budget.clique_cap, "clique")
    return _max_clique_masks(list(g.adjacency), _deadline(budget), "clique")


def _complement_masks(g: DivisorGraph) -> list[int]:
    n = len(g)
    full = (1 << n) - 1
    return [full & ~(m | (1 << i)) for i, m in enumerate(g.adjacency)]


def bf_independence(g: DivisorGraph, budget: OracleBudget = DEFAULT_BUDGET) -> int:
    """Maximum independent set, as a clique search on the complement."""
    _require(g, budget.independence_cap, "independence")
    return _max_clique_masks(_complement_masks(g), _deadline(budget), "independence")


# ---------------------------------------------------------------- coloring


def _color_k(masks: list[int], k: int, deadline: float, name: str):
    """Return a proper k-coloring as a list, or None when impossible.

    Backtracking over vertices chosen by saturation (most distinct neighbor
    colors first); new color ids are introduced in ascending order, which
    kills color-permutation symmetry.
    """
    n = len(masks)
    if n == 0:
        return []
    colors = [-1] * n
    neighbor_colors = [0] * n
    degrees = [m.bit_count() for m in masks]

    def rec(done: int, used: int) -> bool:
        _tick(deadline, name)
        if done == n:
            return True
        v = -1
        best_key = (-1, -1)
        for i in range(n):
            if colors[i] < 0:
                key = (neighbor_colors[i].bit_count(), degrees[i])
                if key > best_key:
                    best_key = key
                    v = i
        for c in range(min(used + 1, k)):
            if neighbor_colors[v] >> c & 1:
                continue
            colors[v] = c
            touched = []
            m = masks[v]
            while m:
                w = (m & -m).bit_length() - 1
                m &= m - 1
                if colors[w] < 0 and not neighbor_colors[w] >> c & 1:
                    neighbor_colors[w] |= 1 << c
                    touched.append(w)
            if rec(done + 1, max(used, c + 1)):
                return True
            colors[v] = -1
            for w in touched:
                neighbor_colors[w] &= ~(1 << c)
        return False

    return list(colors) if rec(0, 0) else None


def bf_chromatic(g: DivisorGraph, budget: OracleBudget = DEFAULT_BUDGET) -> int:
    """Exact chromatic number, seeded with the clique lower bound."""
    _require(g, budget.chromatic_cap, "chromatic")
    deadline = _deadline(budget)
    masks = list(g.adjacency)
    low = _max_clique_masks(masks, deadline, "chromatic")
    for k in range(low, len(g) + 1):
        if _color_k(masks, k, deadline, "chromatic") is not None:
            return k
    raise AssertionError("uncolorable graph")


def _line_graph(g: DivisorGraph) -> tuple[list[tuple[int, int]], list[int]]:
    """Edges sorted by descending endpoint degree sum, plus their mutual
    adjacency masks."""
    edges = sorted(
        g.edges(),
        key=lambda e: (-(g.degree_of(e[0]) + g.degree_of(e[1])), e),
    )
    m = len(edges)
    masks = [0] * m
    for i in range(m):
        u, v = edges[i]
        for j in range(i + 1, m):
            x, y = edges[j]
            if u in (x, y) or v in (x, y):
                masks[i] |= 1 << j
                masks[j] |= 1 << i
    return edges, masks


def bf_chromatic_index(
    g: DivisorGraph,
    budget: OracleBudget = DEFAULT_BUDGET,
    want_assignment: bool = False,
):
    """Exact chromatic index via backtracking on the line graph.

    By Vizing's theorem the answer is the maximum degree or one more, so at
    most two target values are tried.
    """
    _require(g, budget.chromatic_index_cap, "chromatic-index")
    deadline = _deadline(budget)
    edges, masks = _line_graph(g)
    if not edges:
        return (0, {}) if want_assignment else 0
    delta = g.max_degree()
    for k in (delta, delta + 1):
        assignment = _color_k(masks, k, deadline, "chromatic-index")
        if assignment is not None:
            if want_assignment:
                return k, {e: c for e, c in zip(edges, assignment)}
            return k
    raise AssertionError("edge coloring above the Vizing bound required")


# ---------------------------------------------------------------- matching


def bf_max_matching(g: DivisorGraph, budget: OracleBudget = DEFAULT_BUDGET) -> int:
    _require(g, budget.matching_cap, "matching")
    deadline = _deadline(budget)
    masks = list(g.adjacency)
    n = len(masks)
    best = [0]

    def rec(avail: int, size: int) -> None:
        _tick(deadline, "matching")
        # drop vertices with no available partner
        while True:
            live = avail
            changed = False
            m = avail
            while m:
                v = (m & -m).bit_length() - 1
                m &= m - 1
                if not masks[v] & live:
                    avail &= ~(1 << v)
                    changed = True
            if not changed:
                break
        if size > best[0]:
            best[0] = size
        if not avail or size + avail.bit_count() // 2 <= best[0]:
            return
        v = (avail & -avail).bit_length() - 1
        partners = masks[v] & avail
        while partners:
            w = (partners & -partners).bit_length() - 1
            partners &= partners - 1
            rec(avail & ~((1 << v) | (1 << w)), size + 1)
        rec(avail & ~(1 << v), size)

    rec((1 << n) - 1, 0)
    return best[0]


# ---------------------------------------------------------------- covers


def _greedy_matching_size(masks: list[int], active: int) -> int:
    size = 0
    left = active
    while left:
        v = (left & -left).bit_length() - 1
        left &= ~(1 << v)
        partner = masks[v] & left
        if partner:
            w = (partner & -partner).bit_length() - 1
            left &= ~(1 << w)
            size += 1
    return size


def bf_min_vertex_cover(g: DivisorGraph, budget: OracleBudget = DEFAULT_BUDGET) -> int:
    """Minimum vertex cover by branching on a maximum-degree vertex
    (take it, or take its whole neighborhood), with a matching lower bound."""
    _require(g, budget.vertex_cover_cap, "vertex-cover")
    deadline = _deadline(budget)
    masks = list(g.adjacency)
    n = len(masks)
    best = [n]

    def rec(active: int, size: int) -> None:
        _tick(deadline, "vertex-cover")
        # pendant reduction: a degree-1 vertex forces its neighbor
        while True:
            forced = -1
            m = active
            while m:
                v = (m & -m).bit_length() - 1
                m &= m - 1
                nb = masks[v] & active
                if nb and nb.bit_count() == 1:
                    forced = nb.bit_length() - 1
                    break
            if forced < 0:
                break
            active &= ~(1 << forced)
            size += 1
            if size >= best[0]:
                return
        top, top_deg = -1, 0
        m = active
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            d = (masks[v] & active).bit_count()
            if d > top_deg:
                top, top_deg = v, d
        if top_deg == 0:
            if size < best[0]:
                best[0] = size
            return
        if size + _greedy_matching_size(masks, active) >= best[0]:
            return
        rec(active & ~(1 << top), size + 1)
        nb = masks[top] & active
        rec(active & ~(nb | (1 << top)), size + nb.bit_count())

    rec((1 << n) - 1, 0)
    return best[0]


def bf_min_edge_cover(g: DivisorGraph, budget: OracleBudget = DEFAULT_BUDGET) -> int:
    """Minimum edge cover, from a maximum matching extended by one edge per
    unmatched vertex (optimal for graphs without isolated vertices)."""
    _require(g, budget.edge_cover_cap, "edge-cover")
    if any(m == 0 for m in g.adjacency):
        raise ValueError("edge cover undefined: graph has an isolated vertex")
    return len(g) - bf_max_matching(g, budget)


def bf_min_edge_cover_direct(g: DivisorGraph, cap: int = 12) -> int:
    """Direct search over edge subsets; a cross-check for tiny graphs."""
    _require(g, cap, "edge-cover-direct")
    if any(m == 0 for m in g.adjacency):
        raise ValueError("edge cover undefined: graph has an isolated vertex")
    edges = g.edges()
    n = len(g)
    best = [len(edges)]

    def rec(chosen: int, covered: int, next_uncovered: int) -> None:
        if chosen >= best[0]:
            return
        while next_uncovered < n and covered >> next_uncovered & 1:
            next_uncovered += 1
        if next_uncovered == n:
            best[0] = chosen
            return
        v = g.vertices[next_uncovered]
        for u, w in edges:
            if v in (u, w):
                bits = (1 << g.index_of(u)) | (1 << g.index_of(w))
                rec(chosen + 1, covered | bits, next_uncovered)

    rec(0, 0, 0)
    return best[0]


# ---------------------------------------------------------------- domination


def bf_min_dominating(g: DivisorGraph, budget: OracleBudget = DEFAULT_BUDGET) -> int:
    """Minimum dominating set, branching over who dominates the vertex with
    the smallest closed neighborhood."""
    _require(g, budget.dominating_cap, "dominating")
    deadline = _deadline(budget)
    n = len(g)
    closed = [m | (1 << i) for i, m in enumerate(g.adjacency)]
    full = (1 << n) - 1
    max_closed = max(c.bit_count() for c in closed)
    best = [n]

    def rec(dominated: int, size: int) -> None:
        _tick(deadline, "dominating")
        if dominated == full:
            if size < best[0]:
                best[0] = size
            return
        missing = (full & ~dominated).bit_count()
        if size + (missing + max_closed - 1) // max_closed >= best[0]:
            return
        undom = full & ~dominated
        pick_opts = None
        m = undom
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            if pick_opts is None or closed[v].bit_count() < pick_opts.bit_count():
                pick_opts = closed[v]
        opts = pick_opts
        while opts:
            u = (opts & -opts).bit_length() - 1
            opts &= opts - 1
            rec(dominated | closed[u], size + 1)

    rec(0, 0)
    return best[0]


# ---------------------------------------------------------------- metrics


def _bfs_depths(adjacency, start: int) -> list[int]:
    dist = [-1] * len(adjacency)
    dist[start] = 0
    queue = deque([start])
    while queue:
        v = queue.popleft()
        m = adjacency[v]
        while m:
            w = (m & -m).bit_length() - 1
            m &= m - 1
            if dist[w] < 0:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def bf_diameter(g: DivisorGraph) -> int:
    """All-pairs eccentricity maximum by BFS from every vertex."""
    if not g.vertices:
        raise ValueError("diameter undefined for the empty graph")
    best = 0
    for i in range(len(g)):
        dist = _bfs_depths(g.adjacency, i)
        if min(dist) < 0:
            raise ValueError(f"graph for n={g.n} is disconnected")
        best = max(best, max(dist))
    return best


def bf_connected(g: DivisorGraph) -> bool:
    if not g.vertices:
        return True
    return min(_bfs_depths(g.adjacency, 0)) >= 0


def bf_cut_vertices(g: DivisorGraph) -> list[int]:
    """Articulation points by deleting each vertex and counting components."""
    n = len(g)
    out = []
    for i in range(n):
        removed = [m & ~(1 << i) for m in g.adjacency]
        start = 0 if i != 0 else 1
        if start >= n:
            continue
        dist = _bfs_depths(removed, start)
        reached = sum(1 for j, d in enumerate(dist) if d >= 0 and j != i)
        if reached < n - 1:
            out.append(g.vertices[i])
    return sorted(out)


def bf_degree_sequence(g: DivisorGraph) -> list[int]:
    return sorted(m.bit_count() for m in g.adjacency)


# ---------------------------------------------------------------- symmetry


def bf_automorphisms(
    g: DivisorGraph, budget: OracleBudget = DEFAULT_BUDGET
) -> list[dict[int, int]]:
    """Every adjacency-preserving bijection, via backtracking with a degree
    partition filter."""
    _require(g, budget.automorphism_cap, "automorphism")
    n = len(g)
    degs = [m.bit_count() for m in g.adjacency]
    found: list[dict[int, int]] = []
    image = [-1] * n

    def rec(i: int, used: int) -> None:
        if i == n:
            found.append({g.vertices[a]: g.vertices[image[a]] for a in range(n)})
            return
        for c in range(n):
            if used >> c & 1 or degs[c] != degs[i]:
                continue
            ok = True
            for j in range(i):
                if (g.adjacency[i] >> j & 1) != (g.adjacency[c] >> image[j] & 1):
                    ok = False
                    break
            if ok:
                image[i] = c
                rec(i + 1, used | (1 << c))
                image[i] = -1

    rec(0, 0)
    return found


def bf_isomorphic(
    g1: DivisorGraph, g2: DivisorGraph, budget: OracleBudget = DEFAULT_BUDGET
) -> bool:
    """Graph isomorphism by backtracking, with a degree-sequence prefilter."""
    _require(g1, budget.isomorphism_cap, "isomorphism")
    _require(g2, budget.isomorphism_cap, "isomorphism")
    if len(g1) != len(g2):
        return False
    if bf_degree_sequence(g1) != bf_degree_sequence(g2):
        return False
    n = len(g1)
    d1 = [m.bit_count() for m in g1.adjacency]
    d2 = [m.bit_count() for m in g2.adjacency]
    image = [-1] * n

    def rec(i: int, used: int) -> bool:
        if i == n:
            return True
        for c in range(n):
            if used >> c & 1 or d2[c] != d1[i]:
                continue
            ok = True
            for j in range(i):
                if (g1.adjacency[i] >> j & 1) != (g2.adjacency[c] >> image[j] & 1):
                    ok = False
                    break
            if ok:
                image[i] = c
                if rec(i + 1, used | (1 << c)):
                    return True
                image[i] = -1
        return False

    return rec(0, 0)


# ---------------------------------------------------------------- perfection


def _has_odd_hole(masks: list[int], deadline: float) -> bool:
    """Induced odd cycle of length >= 5.

    Grows induced paths anchored at their smallest vertex. A candidate
    adjacent to the anchor closes a cycle and is never extended; a candidate
    adjacent to any interior vertex is discarded outright.
    """
    n = len(masks)
    for start in range(n):
        above = ~((1 << (start + 1)) - 1)
        stack = []
        m = masks[start] & above
        while m:
            w = (m & -m).bit_length() - 1
            m &= m - 1
            # state: (last vertex, path bitmask, forbidden = nbrs of interior)
            stack.append((w, (1 << start) | (1 << w), 0))
        while stack:
            _tick(deadline, "perfectness")
            last, path_bits, forbid = stack.pop()
            path_len = path_bits.bit_count()
            m = masks[last] & above & ~path_bits & ~forbid
            while m:
                x = (m & -m).bit_length() - 1
                m &= m - 1
                if masks[x] >> start & 1:
                    if path_len + 1 >= 5 and (path_len + 1) % 2 == 1:
                        return True
                else:
                    stack.append((x, path_bits | (1 << x), forbid | masks[last]))
    return False


def bf_is_perfect(g: DivisorGraph, budget: OracleBudget = DEFAULT_BUDGET) -> bool:
    """Strong-perfect-graph test: no induced odd hole in the graph or in its
    complement."""
    _require(g, budget.perfect_cap, "perfectness")
    deadline = _deadline(budget)
    if _has_odd_hole(list(g.adjacency), deadline):
        return False
    return not _has_odd_hole(_complement_masks(g), deadline)
