"""Naive reference implementations and small builders shared by the tests.

Everything here is deliberately slow and simpleminded; the point is
independence from the library's own algorithms.
"""

from __future__ import annotations

import cycledec as cd


def canon(g: cd.MultiGraph):
    return cd.endpoint_multiset(g)


def mk_k5() -> cd.MultiGraph:
    return cd.MultiGraph(5, [(i, j) for i in range(5) for j in range(i + 1, 5)])


def mk_k4() -> cd.MultiGraph:
    return cd.MultiGraph(4, [(i, j) for i in range(4) for j in range(i + 1, 4)])


def mk_bowtie() -> cd.MultiGraph:
    c3 = cd.gen_cycle(3)
    return cd.vertex_identification(c3, 0, c3, 0)[0]


def naive_bridges(g: cd.MultiGraph) -> list[int]:
    out = []
    for e in range(g.m):
        u, v = g.endpoints(e)
        seen = {u}
        stack = [u]
        while stack:
            x = stack.pop()
            for f in g.incident(x):
                if f == e:
                    continue
                w = g.other(f, x)
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if v not in seen:
            out.append(e)
    return out


def naive_cut_vertices(g: cd.MultiGraph) -> set[int]:
    if g.n == 1:
        return set()
    base = len(cd.connected_components(g))
    out = set()
    for v in range(g.n):
        sub, _, _ = cd.induced_subgraph(g, (w for w in range(g.n) if w != v))
        if len(cd.connected_components(sub)) > base:
            out.add(v)
    return out


def brute_tw_le_2(g: cd.MultiGraph) -> bool:
    """Width-2 elimination search: a vertex may be eliminated when it sees at
    most two not-yet-eliminated vertices through the eliminated set. Such an
    order exists iff the graph has a tree decomposition of width <= 2."""
    n = g.n
    adj = [0] * n
    for u, v in g.edges():
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    full = (1 << n) - 1
    memo: dict[int, bool] = {}

    def reach(v: int, S: int) -> int:
        res = 0
        seen = 1 << v
        stack = [v]
        while stack:
            x = stack.pop()
            rest = adj[x] & ~seen
            while rest:
                wbit = rest & -rest
                rest ^= wbit
                seen |= wbit
                if S & wbit:
                    stack.append(wbit.bit_length() - 1)
                else:
                    res |= wbit
        return res

    def ok(S: int) -> bool:
        if S == full:
            return True
        hit = memo.get(S)
        if hit is not None:
            return hit
        ans = False
        for v in range(n):
            bit = 1 << v
            if S & bit:
                continue
            if bin(reach(v, S)).count("1") <= 2 and ok(S | bit):
                ans = True
                break
        memo[S] = ans
        return ans

    return ok(0)


def check_cycle(g: cd.MultiGraph, cyc: cd.Cycle) -> None:
    """Structural validity of one cycle against g: distinct vertices, distinct
    edges, consecutive steps incident."""
    steps = cyc.steps
    assert len(steps) >= 2
    verts = [v for v, _ in steps]
    assert len(set(verts)) == len(verts), "cycle repeats a vertex"
    edges = [e for _, e in steps]
    assert len(set(edges)) == len(edges), "cycle repeats an edge"
    for i, (v, e) in enumerate(steps):
        w = steps[(i + 1) % len(steps)][0]
        a, b = g.endpoints(e)
        assert {a, b} == {v, w}, f"step {i} not incident"


def mutate_with_cycle(g: cd.MultiGraph, seed: int) -> cd.MultiGraph:
    """Add one short random cycle; keeps all degrees even and connectivity."""
    rng = cd.Rng(seed)
    length = 2 + rng.below(min(g.n, 4) - 1) if g.n > 2 else 2
    pool = list(range(g.n))
    for j in range(length):
        k = j + rng.below(g.n - j)
        pool[j], pool[k] = pool[k], pool[j]
    cyc = pool[:length]
    edges = list(g.edges()) + [(cyc[j], cyc[(j + 1) % length]) for j in range(length)]
    return cd.MultiGraph(g.n, edges)


def mixed_small_eulerian(index: int) -> cd.MultiGraph:
    """Deterministic mixed-family instance stream: built graphs, plain random
    Eulerian graphs, and mutated built graphs. Sizes aim at n <= 10."""
    kind = index % 3
    if kind == 0:
        n = 2 + (index * 7919 + 13) % 9
        return cd.gen_class_G(n, 1_000_000 + index, max_leaf=2)[0]
    if kind == 1:
        n = 3 + (index * 104729) % 8
        return cd.gen_random_eulerian(n, (index // 3) % 3, 2_000_000 + index)
    n = 2 + (index * 7919 + 13) % 9
    g = cd.gen_class_G(n, 3_000_000 + index, max_leaf=2)[0]
    return mutate_with_cycle(g, 4_000_000 + index)


def small_eulerian_corpus(count: int, max_m: int = 16, max_n: int = 10) -> list[cd.MultiGraph]:
    out = []
    index = 0
    while len(out) < count:
        g = mixed_small_eulerian(index)
        index += 1
        if g.n <= max_n and g.m <= max_m:
            out.append(g)
    return out
