"""Seeded graph family generators and the construction script language.

All randomness flows through Rng, a 64-bit xorshift-star stream whose seed
passes through one splitmix64 round, so a (family, params, seed) triple pins
the output bit for bit on every platform.

Construction scripts are little stack programs that rebuild a generated
graph through the public operators, id for id:

    M <k>                    push the Eulerian multiedge with 2k edges
    N <k>                    push the closed necklace on k vertices
    C <k>                    push the cycle on k vertices
    D <e>                    subdivide edge e of the top graph
    V <u1> <u2>              pop g2, pop g1, push vertex identification
    E <e1> <u1> <e2> <u2>    pop g2, pop g1, push edge identification
    X <e1> <u1> <e2> <u2>    pop g2, pop g1, push vertex-edge identification

The big-graph generators build on raw edge lists that mirror the operators'
id conventions exactly, sidestepping the quadratic cost of rebuilding an
immutable graph per application; replaying the emitted script through the
operators must reproduce the same labeled graph.
"""

from __future__ import annotations

from .errors import InvalidParamError
from .multigraph import MultiGraph
from .operators import edge_identification, vertex_identification, vertex_edge_identification

_MASK = (1 << 64) - 1
_SPLITMIX_GAMMA = 0x9E3779B97F4A7C15
_SPLITMIX_MUL1 = 0xBF58476D1CE4E5B9
_SPLITMIX_MUL2 = 0x94D049BB133111EB
_STAR_MUL = 0x2545F4914F6CDD1D


class Rng:
    """xorshift64* with shifts 12/25/27, seeded by one splitmix64 round.

    Tiny, well studied, and trivially portable; not for cryptography.
    """

    __slots__ = ("_state",)

    def __init__(self, seed: int) -> None:
        z = (seed + _SPLITMIX_GAMMA) & _MASK
        z = ((z ^ (z >> 30)) * _SPLITMIX_MUL1) & _MASK
        z = ((z ^ (z >> 27)) * _SPLITMIX_MUL2) & _MASK
        z ^= z >> 31
        # xorshift state must never be zero
        self._state = z if z else _SPLITMIX_GAMMA

    def next_u64(self) -> int:
        x = self._state
        x ^= x >> 12
        x = (x ^ (x << 25)) & _MASK
        x ^= x >> 27
        self._state = x
        return (x * _STAR_MUL) & _MASK

    def below(self, n: int) -> int:
        """Uniform draw from 0..n-1, rejection sampled against modulo bias."""
        if n <= 0:
            raise InvalidParamError(f"below() needs a positive bound, got {n}")
        limit = (1 << 64) - ((1 << 64) % n)
        while True:
            x = self.next_u64()
            if x < limit:
                return x % n

    def shuffle(self, items: list) -> None:
        """In-place Fisher-Yates."""
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]


def gen_eulerian_multiedge(k: int) -> MultiGraph:
    """Two vertices joined by 2k parallel edges."""
    if k < 1:
        raise InvalidParamError(f"k={k}, need at least one edge pair")
    return MultiGraph(2, [(0, 1)] * (2 * k))


def gen_cycle(k: int) -> MultiGraph:
    """The cycle on k vertices; k = 2 is a parallel pair."""
    if k < 2:
        raise InvalidParamError(f"k={k}, a cycle needs at least two vertices")
    return MultiGraph(k, [(i, (i + 1) % k) for i in range(k)])


def gen_closed_necklace(k: int) -> MultiGraph:
    """The cycle on k vertices with every edge doubled."""
    if k < 2:
        raise InvalidParamError(f"k={k}, a closed necklace needs at least two vertices")
    edges = []
    for i in range(k):
        edges.append((i, (i + 1) % k))
        edges.append((i, (i + 1) % k))
    return MultiGraph(k, edges)


def subdivide_edge(g: MultiGraph, e: int) -> MultiGraph:
    """Replace edge e = (u, v) by u - w - v through a fresh vertex w = n.

    The half u-w keeps the id e, the half w-v takes the last id.
    """
    if not (0 <= e < g.m):
        raise InvalidParamError(f"e={e} out of range for m={g.m}")
    u, v = g.endpoints(e)
    w = g.n
    edges = list(g.edges())
    edges[e] = (u, w)
    edges.append((w, v))
    return MultiGraph(g.n + 1, edges)


# Raw counterparts working on [n, edge list] pairs. These must mirror the
# public operators' id conventions exactly; the differential tests replay
# emitted scripts through the operators and compare labeled graphs.

def _raw_multiedge(k: int) -> list:
    return [2, [(0, 1)] * (2 * k)]

def _raw_necklace(k: int) -> list:
    edges = []
    for i in range(k):
        edges.append((i, (i + 1) % k))
        edges.append((i, (i + 1) % k))
    return [k, edges]

def _raw_vident(g1: list, u1: int, g2: list, u2: int) -> None:
    n1 = g1[0]
    def remap(w: int) -> int:
        return u1 if w == u2 else n1 + (w if w < u2 else w - 1)
    g1[1].extend((remap(a), remap(b)) for a, b in g2[1])
    g1[0] = n1 + g2[0] - 1

def _raw_eident(g1: list, e1: int, u1: int, g2: list, e2: int, u2: int) -> None:
    n1 = g1[0]
    a1, b1 = g1[1][e1]
    v1 = b1 if u1 == a1 else a1
    del g1[1][e1]
    a2, b2 = g2[1][e2]
    v2 = b2 if u2 == a2 else a2
    for idx, (x, y) in enumerate(g2[1]):
        if idx == e2:
            continue
        g1[1].append((n1 + x, n1 + y))
    g1[1].append((u1, n1 + u2))
    g1[1].append((v1, n1 + v2))
    g1[0] = n1 + g2[0]

def _raw_veident(g1: list, e1: int, u1: int, g2: list, e2: int, u2: int) -> None:
    n1 = g1[0]
    a1, b1 = g1[1][e1]
    v1 = b1 if u1 == a1 else a1
    del g1[1][e1]
    a2, b2 = g2[1][e2]
    v2 = b2 if u2 == a2 else a2
    def remap(w: int) -> int:
        return v1 if w == v2 else n1 + (w if w < v2 else w - 1)
    for idx, (x, y) in enumerate(g2[1]):
        if idx == e2:
            continue
        g1[1].append((remap(x), remap(y)))
    g1[1].append((u1, remap(u2)))
    g1[0] = n1 + g2[0] - 1


def gen_class_G(target_n: int, seed: int, max_leaf: int = 3) -> tuple[MultiGraph, tuple]:
    """Random member of the vee/cross closure of Eulerian multiedges.

    Grows a random binary plan whose leaves are multiedges on 2 vertices and
    whose joins merge exactly one vertex, so sizes work out to target_n
    exactly. Returns the graph and its construction script. max_leaf bounds
    the parallel-pair count per leaf, hence m <= 2 * max_leaf * (n - 1).
    """
    if target_n < 2:
        raise InvalidParamError(f"target_n={target_n}, need at least two vertices")
    if max_leaf < 1:
        raise InvalidParamError(f"max_leaf={max_leaf}, need at least one pair")
    rng = Rng(seed)
    # phase 1: pre-order size plan. node = ["M", k] or [kind, left, right].
    nodes: list[list] = []
    pending = [(target_n, -1, 0)]
    while pending:
        tn, parent, slot = pending.pop()
        idx = len(nodes)
        if parent >= 0:
            nodes[parent][slot] = idx
        if tn == 2:
            nodes.append(["M", 1 + rng.below(max_leaf)])
            continue
        kind = "V" if rng.below(2) == 0 else "X"
        n1 = 2 + rng.below(tn - 2)
        nodes.append([kind, None, None])
        pending.append((tn + 1 - n1, idx, 2))
        pending.append((n1, idx, 1))
    # phase 2: post-order evaluation; anchors drawn in emission order.
    script: list[tuple] = []
    results: dict[int, list] = {}
    stack = [(0, False)]
    while stack:
        idx, expanded = stack.pop()
        node = nodes[idx]
        if node[0] == "M":
            script.append(("M", node[1]))
            results[idx] = _raw_multiedge(node[1])
            continue
        if not expanded:
            stack.append((idx, True))
            stack.append((node[2], False))
            stack.append((node[1], False))
            continue
        g1 = results.pop(node[1])
        g2 = results.pop(node[2])
        if node[0] == "V":
            u1 = rng.below(g1[0])
            u2 = rng.below(g2[0])
            script.append(("V", u1, u2))
            _raw_vident(g1, u1, g2, u2)
        else:
            e1 = rng.below(len(g1[1]))
            u1 = g1[1][e1][rng.below(2)]
            e2 = rng.below(len(g2[1]))
            u2 = g2[1][e2][rng.below(2)]
            script.append(("X", e1, u1, e2, u2))
            _raw_veident(g1, e1, u1, g2, e2, u2)
        results[idx] = g1
    raw = results[0]
    return MultiGraph(raw[0], raw[1]), tuple(script)


def gen_class_H(target_n: int, seed: int) -> MultiGraph:
    """Random biconnected 4-regular treewidth-2 graph.

    Closed necklaces glued by edge identification, which adds vertex counts,
    so the plan splits target_n into parts of size >= 2.
    """
    if target_n < 2:
        raise InvalidParamError(f"target_n={target_n}, need at least two vertices")
    rng = Rng(seed)
    nodes: list[list] = []
    pending = [(target_n, -1, 0)]
    while pending:
        tn, parent, slot = pending.pop()
        idx = len(nodes)
        if parent >= 0:
            nodes[parent][slot] = idx
        if tn <= 3 or rng.below(4) == 0:
            nodes.append(["N", tn])
            continue
        n1 = 2 + rng.below(tn - 3)
        nodes.append(["E", None, None])
        pending.append((tn - n1, idx, 2))
        pending.append((n1, idx, 1))
    results: dict[int, list] = {}
    stack = [(0, False)]
    while stack:
        idx, expanded = stack.pop()
        node = nodes[idx]
        if node[0] == "N":
            results[idx] = _raw_necklace(node[1])
            continue
        if not expanded:
            stack.append((idx, True))
            stack.append((node[2], False))
            stack.append((node[1], False))
            continue
        g1 = results.pop(node[1])
        g2 = results.pop(node[2])
        e1 = rng.below(len(g1[1]))
        u1 = g1[1][e1][rng.below(2)]
        e2 = rng.below(len(g2[1]))
        u2 = g2[1][e2][rng.below(2)]
        _raw_eident(g1, e1, u1, g2, e2, u2)
        results[idx] = g1
    raw = results[0]
    return MultiGraph(raw[0], raw[1])


def gen_class_H_prime(target_n: int, seed: int) -> MultiGraph:
    """Random connected even graph with max degree <= 4 and treewidth <= 2.

    Starts from a necklace or a cycle and grows by subdividing edges,
    edge-identifying fresh necklaces or cycles on, and gluing cycles at
    degree-2 vertices; every move keeps the class invariants, so membership
    holds by construction.
    """
    if target_n < 1:
        raise InvalidParamError(f"target_n={target_n}, need at least one vertex")
    if target_n == 1:
        return MultiGraph(1, [])
    rng = Rng(seed)
    if rng.below(2) == 0:
        g = _raw_necklace(2 + rng.below(min(3, target_n - 1)))
    else:
        k = 2 + rng.below(min(4, target_n - 1))
        g = [k, [(i, (i + 1) % k) for i in range(k)]]
    while g[0] < target_n:
        room = target_n - g[0]
        choice = rng.below(4)
        if choice in (1, 2) and room < 2:
            choice = 0
        if choice == 3:
            deg: dict[int, int] = {}
            for a, b in g[1]:
                deg[a] = deg.get(a, 0) + 1
                deg[b] = deg.get(b, 0) + 1
            low = sorted(v for v in range(g[0]) if deg.get(v, 0) == 2)
            if not low:
                choice = 0
        if choice == 0:
            e = rng.below(len(g[1]))
            u, v = g[1][e]
            w = g[0]
            g[1][e] = (u, w)
            g[1].append((w, v))
            g[0] = w + 1
        elif choice in (1, 2):
            if choice == 1:
                fresh = _raw_necklace(2 + rng.below(min(2, room - 1)))
            else:
                k = 2 + rng.below(min(4, room - 1))
                fresh = [k, [(i, (i + 1) % k) for i in range(k)]]
            e1 = rng.below(len(g[1]))
            u1 = g[1][e1][rng.below(2)]
            e2 = rng.below(len(fresh[1]))
            u2 = fresh[1][e2][rng.below(2)]
            _raw_eident(g, e1, u1, fresh, e2, u2)
        else:
            u1 = low[rng.below(len(low))]
            k = 2 + rng.below(min(4, room))
            fresh = [k, [(i, (i + 1) % k) for i in range(k)]]
            u2 = rng.below(k)
            _raw_vident(g, u1, fresh, u2)
    return MultiGraph(g[0], g[1])


def gen_random_eulerian(n: int, extra_cycles: int, seed: int) -> MultiGraph:
    """Connected even graph: a spanning cycle through a shuffled vertex
    order plus extra_cycles short random cycles. extra_cycles = 0 gives a
    plain (relabeled) cycle."""
    if n < 1:
        raise InvalidParamError(f"n={n}, need at least one vertex")
    if extra_cycles < 0:
        raise InvalidParamError(f"extra_cycles={extra_cycles} must not be negative")
    if n == 1:
        return MultiGraph(1, [])
    rng = Rng(seed)
    order = list(range(n))
    rng.shuffle(order)
    edges = [(order[i], order[(i + 1) % n]) for i in range(n)]
    for _ in range(extra_cycles):
        length = 2 + rng.below(max(1, min(n, 6) - 1))
        pool = list(range(n))
        for i in range(length):
            j = i + rng.below(n - i)
            pool[i], pool[j] = pool[j], pool[i]
        cyc = pool[:length]
        edges.extend((cyc[i], cyc[(i + 1) % length]) for i in range(length))
    return MultiGraph(n, edges)


_SCRIPT_ARITY = {"M": 1, "N": 1, "C": 1, "D": 1, "V": 2, "E": 4, "X": 4}


def script_to_text(script: tuple) -> str:
    return "".join(" ".join(str(x) for x in instr) + "\n" for instr in script)


def parse_script(text: str) -> tuple:
    """Parse the script language; inverse of script_to_text."""
    out = []
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        op = parts[0]
        arity = _SCRIPT_ARITY.get(op)
        if arity is None:
            raise InvalidParamError(f"line {ln}: unknown instruction {op!r}")
        if len(parts) != arity + 1:
            raise InvalidParamError(f"line {ln}: {op} takes {arity} arguments")
        try:
            args = [int(p) for p in parts[1:]]
        except ValueError:
            raise InvalidParamError(f"line {ln}: arguments must be integers") from None
        out.append((op, *args))
    return tuple(out)


def replay_script(script: tuple) -> MultiGraph:
    """Evaluate a construction script through the public operators."""
    stack: list[MultiGraph] = []

    def pop2() -> tuple[MultiGraph, MultiGraph]:
        if len(stack) < 2:
            raise InvalidParamError("script pops from an empty stack")
        g2 = stack.pop()
        g1 = stack.pop()
        return g1, g2

    for instr in script:
        op = instr[0]
        if op == "M":
            stack.append(gen_eulerian_multiedge(instr[1]))
        elif op == "N":
            stack.append(gen_closed_necklace(instr[1]))
        elif op == "C":
            stack.append(gen_cycle(instr[1]))
        elif op == "D":
            if not stack:
                raise InvalidParamError("script pops from an empty stack")
            stack.append(subdivide_edge(stack.pop(), instr[1]))
        elif op == "V":
            g1, g2 = pop2()
            stack.append(vertex_identification(g1, instr[1], g2, instr[2])[0])
        elif op == "E":
            g1, g2 = pop2()
            stack.append(edge_identification(g1, instr[1], instr[2], g2, instr[3], instr[4])[0])
        elif op == "X":
            g1, g2 = pop2()
            stack.append(vertex_edge_identification(g1, instr[1], instr[2], g2, instr[3], instr[4])[0])
        else:
            raise InvalidParamError(f"unknown instruction {op!r}")
    if len(stack) != 1:
        raise InvalidParamError(f"script leaves {len(stack)} graphs on the stack")
    return stack[0]
