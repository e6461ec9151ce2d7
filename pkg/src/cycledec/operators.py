"""Binary identification operators and their inverse separation steps.

Three ways to combine two graphs:

* vertex identification: glue at one vertex,
* edge identification: delete one edge on each side, then join the four
  endpoints crosswise with two fresh edges,
* vertex-edge identification: delete one edge on each side, glue the two
  far endpoints, and join the two anchor endpoints with one fresh edge.

Id conventions are fixed so results are reproducible: the left operand keeps
its vertex and edge ids, the right operand's surviving ids follow in order,
and freshly created edges take the last ids. Every application returns the
new graph plus a record carrying the full relabelling maps.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import (
    InvalidParamError,
    InvalidVertexError,
    NotAnEndpointError,
    NotASeparatorError,
    NotATwoCutError,
    NotBiconnectedError,
    PreconditionViolatedError,
    SharedEndpointError,
)
from .connectivity import find_cut_edge, is_biconnected
from .multigraph import MultiGraph, degree, induced_subgraph


@dataclass(frozen=True)
class OperatorApplication:
    """Result bookkeeping for one operator application.

    Maps send operand ids to result ids; None marks a deleted edge.
    kind is "V", "E" or "X" for vertex, edge and vertex-edge identification.
    """

    kind: str
    anchors1: tuple[int, ...]
    anchors2: tuple[int, ...]
    vertex_map1: tuple[Optional[int], ...]
    vertex_map2: tuple[Optional[int], ...]
    edge_map1: tuple[Optional[int], ...]
    edge_map2: tuple[Optional[int], ...]
    new_edges: tuple[int, ...]
    merged_vertex: Optional[int]

    def trace_line(self) -> str:
        a1 = " ".join(str(x) for x in self.anchors1)
        a2 = " ".join(str(x) for x in self.anchors2)
        if self.kind == "V":
            return f"V {a1} {a2}"
        if self.kind == "E":
            f1, f2 = self.new_edges
            return f"E {a1} {a2} -> {f1} {f2}"
        return f"X {a1} {a2} -> {self.merged_vertex} {self.new_edges[0]}"


def _check_vertex(g: MultiGraph, v: int, label: str) -> None:
    if not (0 <= v < g.n):
        raise InvalidVertexError(f"{label}={v} out of range for n={g.n}")


def _check_edge(g: MultiGraph, e: int, label: str) -> None:
    if not (0 <= e < g.m):
        raise InvalidParamError(f"{label}={e} out of range for m={g.m}")


def vertex_identification(g1: MultiGraph, u1: int, g2: MultiGraph, u2: int) -> tuple[MultiGraph, OperatorApplication]:
    """Glue g1 and g2 at u1 = u2. The merged vertex keeps the id u1."""
    _check_vertex(g1, u1, "u1")
    _check_vertex(g2, u2, "u2")
    n1 = g1.n
    vmap2 = tuple(u1 if w == u2 else n1 + (w if w < u2 else w - 1) for w in range(g2.n))
    edges = list(g1.edges())
    edges.extend((vmap2[a], vmap2[b]) for a, b in g2.edges())
    rec = OperatorApplication(
        kind="V",
        anchors1=(u1,),
        anchors2=(u2,),
        vertex_map1=tuple(range(n1)),
        vertex_map2=vmap2,
        edge_map1=tuple(range(g1.m)),
        edge_map2=tuple(range(g1.m, g1.m + g2.m)),
        new_edges=(),
        merged_vertex=u1,
    )
    return MultiGraph(n1 + g2.n - 1, edges), rec


def edge_identification(g1: MultiGraph, e1: int, u1: int, g2: MultiGraph, e2: int, u2: int) -> tuple[MultiGraph, OperatorApplication]:
    """Delete e1 and e2, then join the sides with edges u1-u2 and v1-v2.

    v1 and v2 are the far endpoints of e1 and e2. No vertices merge; the new
    edges take the last two ids, anchor pair first.
    """
    _check_edge(g1, e1, "e1")
    _check_edge(g2, e2, "e2")
    a1, b1 = g1.endpoints(e1)
    if u1 not in (a1, b1):
        raise NotAnEndpointError(f"u1={u1} is not an endpoint of edge {e1}")
    a2, b2 = g2.endpoints(e2)
    if u2 not in (a2, b2):
        raise NotAnEndpointError(f"u2={u2} is not an endpoint of edge {e2}")
    v1 = b1 if u1 == a1 else a1
    v2 = b2 if u2 == a2 else a2
    n1 = g1.n
    vmap2 = tuple(n1 + w for w in range(g2.n))
    edges = []
    emap1: list[Optional[int]] = [None] * g1.m
    for e in range(g1.m):
        if e == e1:
            continue
        emap1[e] = len(edges)
        edges.append(g1.endpoints(e))
    emap2: list[Optional[int]] = [None] * g2.m
    for e in range(g2.m):
        if e == e2:
            continue
        x, y = g2.endpoints(e)
        emap2[e] = len(edges)
        edges.append((vmap2[x], vmap2[y]))
    fu = len(edges)
    edges.append((u1, vmap2[u2]))
    fv = fu + 1
    edges.append((v1, vmap2[v2]))
    rec = OperatorApplication(
        kind="E",
        anchors1=(e1, u1),
        anchors2=(e2, u2),
        vertex_map1=tuple(range(n1)),
        vertex_map2=vmap2,
        edge_map1=tuple(emap1),
        edge_map2=tuple(emap2),
        new_edges=(fu, fv),
        merged_vertex=None,
    )
    return MultiGraph(n1 + g2.n, edges), rec


def vertex_edge_identification(g1: MultiGraph, e1: int, u1: int, g2: MultiGraph, e2: int, u2: int) -> tuple[MultiGraph, OperatorApplication]:
    """Delete e1 and e2, glue their far endpoints, and add one edge u1-u2.

    The merged vertex keeps the id of e1's far endpoint; the new edge takes
    the last id.
    """
    _check_edge(g1, e1, "e1")
    _check_edge(g2, e2, "e2")
    a1, b1 = g1.endpoints(e1)
    if u1 not in (a1, b1):
        raise NotAnEndpointError(f"u1={u1} is not an endpoint of edge {e1}")
    a2, b2 = g2.endpoints(e2)
    if u2 not in (a2, b2):
        raise NotAnEndpointError(f"u2={u2} is not an endpoint of edge {e2}")
    v1 = b1 if u1 == a1 else a1
    v2 = b2 if u2 == a2 else a2
    n1 = g1.n
    vmap2 = tuple(v1 if w == v2 else n1 + (w if w < v2 else w - 1) for w in range(g2.n))
    edges = []
    emap1: list[Optional[int]] = [None] * g1.m
    for e in range(g1.m):
        if e == e1:
            continue
        emap1[e] = len(edges)
        edges.append(g1.endpoints(e))
    emap2: list[Optional[int]] = [None] * g2.m
    for e in range(g2.m):
        if e == e2:
            continue
        x, y = g2.endpoints(e)
        emap2[e] = len(edges)
        edges.append((vmap2[x], vmap2[y]))
    f = len(edges)
    edges.append((u1, vmap2[u2]))
    rec = OperatorApplication(
        kind="X",
        anchors1=(e1, u1),
        anchors2=(e2, u2),
        vertex_map1=tuple(range(n1)),
        vertex_map2=vmap2,
        edge_map1=tuple(emap1),
        edge_map2=tuple(emap2),
        new_edges=(f,),
        merged_vertex=v1,
    )
    return MultiGraph(n1 + g2.n - 1, edges), rec


@dataclass(frozen=True)
class VESeparator:
    """A vertex v and an edge e not at v whose joint removal disconnects."""

    vertex: int
    edge: int


def find_cut_edge_avoiding(g: MultiGraph, v: int) -> Optional[int]:
    """Smallest bridge edge id of g - v, or None. Ids refer to g.

    Deliberately naive: materializes the punctured graph and reuses the
    plain bridge scan. The recognition module carries a fused fast path
    that must agree with this on every input.
    """
    _check_vertex(g, v, "v")
    if g.n == 1:
        return None
    sub, _, edge_ids = induced_subgraph(g, (w for w in range(g.n) if w != v))
    b = find_cut_edge(sub)
    return None if b is None else edge_ids[b]


def find_ve_separator(g: MultiGraph) -> Optional[VESeparator]:
    """First vertex-edge separator of a biconnected graph, scanning vertices
    in ascending id order, or None when the graph is irreducible."""
    if not is_biconnected(g):
        raise NotBiconnectedError("vertex-edge separators are defined on biconnected graphs")
    for v in range(g.n):
        e = find_cut_edge_avoiding(g, v)
        if e is not None:
            return VESeparator(v, e)
    return None


@dataclass(frozen=True)
class VeSeparationRecord:
    """One vertex-edge separation: delete edge, split vertex, add two edges.

    v1 keeps the separated vertex's id and sits on u1's side; v2 is the new
    vertex on u2's side. f1 = (u1, v1) and f2 = (u2, v2) take the last two
    edge ids. edge_map sends surviving input edge ids to result ids.
    """

    vertex: int
    edge: int
    u1: int
    u2: int
    v1: int
    v2: int
    f1: int
    f2: int
    edge_map: tuple[Optional[int], ...]

    def trace_line(self) -> str:
        return f"VE {self.vertex} {self.edge} -> {self.v1} {self.v2} {self.u1} {self.u2} {self.f1} {self.f2}"


def ve_separation_step(g: MultiGraph, sep: VESeparator) -> tuple[MultiGraph, VeSeparationRecord]:
    """Undo one vertex-edge identification at separator sep.

    Returns the disjoint union of the two parts as one graph, with the
    separated vertex duplicated and each anchor endpoint of the deleted edge
    joined to the copy on its own side.
    """
    v, e = sep.vertex, sep.edge
    _check_vertex(g, v, "v")
    _check_edge(g, e, "e")
    u1, u2 = g.endpoints(e)
    if v in (u1, u2):
        raise NotASeparatorError(f"edge {e} is incident to vertex {v}")
    # side of u1 in g - v - e
    side = {u1}
    stack = [u1]
    while stack:
        x = stack.pop()
        for f in g.incident(x):
            if f == e:
                continue
            w = g.other(f, x)
            if w != v and w not in side:
                side.add(w)
                stack.append(w)
    if u2 in side:
        raise NotASeparatorError(f"edge {e} is not a bridge of the graph minus vertex {v}")
    v2 = g.n
    edges = []
    edge_map: list[Optional[int]] = [None] * g.m
    for f in range(g.m):
        if f == e:
            continue
        a, b = g.endpoints(f)
        if a == v and b not in side:
            a = v2
        elif b == v and a not in side:
            b = v2
        edge_map[f] = len(edges)
        edges.append((a, b))
    f1 = len(edges)
    edges.append((u1, v))
    f2 = f1 + 1
    edges.append((u2, v2))
    rec = VeSeparationRecord(
        vertex=v, edge=e, u1=u1, u2=u2, v1=v, v2=v2, f1=f1, f2=f2, edge_map=tuple(edge_map)
    )
    return MultiGraph(g.n + 1, edges), rec


def _check_two_cut_preconditions(g: MultiGraph) -> None:
    from .oracle import is_treewidth_at_most_2  # late import, oracle depends on this module

    if not is_biconnected(g):
        raise PreconditionViolatedError("graph is not biconnected")
    if any(degree(g, v) != 4 for v in range(g.n)):
        raise PreconditionViolatedError("graph is not 4-regular")
    if not is_treewidth_at_most_2(g):
        raise PreconditionViolatedError("graph has treewidth above 2")


def _iter_disjoint_two_cuts(g: MultiGraph):
    """Yield 2-cuts {e1, e2} with four distinct endpoints, lexicographically."""
    m = g.m
    for e1 in range(m):
        a1, b1 = g.endpoints(e1)
        for e2 in range(e1 + 1, m):
            a2, b2 = g.endpoints(e2)
            if a2 in (a1, b1) or b2 in (a1, b1):
                continue
            side = {a1}
            stack = [a1]
            while stack:
                x = stack.pop()
                for f in g.incident(x):
                    if f in (e1, e2):
                        continue
                    w = g.other(f, x)
                    if w not in side:
                        side.add(w)
                        stack.append(w)
            if b1 in side:
                continue
            if (a2 in side) == (b2 in side):
                continue
            yield (e1, e2)


def find_disjoint_two_cut(g: MultiGraph) -> Optional[tuple[int, int]]:
    """First 2-cut with four distinct endpoints, or None.

    Defined on biconnected 4-regular graphs of treewidth at most 2; on that
    class None identifies exactly the closed necklaces. The pair scan is
    exhaustive, ordered by (e1, e2).
    """
    _check_two_cut_preconditions(g)
    return next(_iter_disjoint_two_cuts(g), None)


@dataclass(frozen=True)
class EdgeSeparationRecord:
    """One edge separation: delete a 2-cut, rejoin endpoints per side.

    pair1 = (a1, c1) is the new edge f1 inside the side listed in `side`
    (where a1 comes from e1 and c1 from e2); pair2 = (b1, c2) is f2 in the
    other side. edge_map sends surviving input edge ids to result ids.
    """

    e1: int
    e2: int
    f1: int
    f2: int
    pair1: tuple[int, int]
    pair2: tuple[int, int]
    side: tuple[int, ...]
    edge_map: tuple[Optional[int], ...]

    def trace_line(self) -> str:
        return f"E2 {self.e1} {self.e2} -> {self.f1} {self.f2}"


def edge_separation_step(g: MultiGraph, cut: tuple[int, int]) -> tuple[MultiGraph, EdgeSeparationRecord]:
    """Undo one edge identification at a 2-cut with four distinct endpoints.

    Each component keeps one endpoint of each cut edge; those two endpoints
    get joined. Vertex ids are unchanged, the two new edges take the last
    two ids.
    """
    e1, e2 = cut
    _check_edge(g, e1, "e1")
    _check_edge(g, e2, "e2")
    if e1 == e2:
        raise NotATwoCutError("the two cut edges must be distinct")
    a1, b1 = g.endpoints(e1)
    a2, b2 = g.endpoints(e2)
    if a2 in (a1, b1) or b2 in (a1, b1):
        raise SharedEndpointError("cut edges share an endpoint")
    side = {a1}
    stack = [a1]
    while stack:
        x = stack.pop()
        for f in g.incident(x):
            if f in (e1, e2):
                continue
            w = g.other(f, x)
            if w not in side:
                side.add(w)
                stack.append(w)
    if b1 in side:
        raise NotATwoCutError("removing the pair does not disconnect the graph")
    if (a2 in side) == (b2 in side):
        raise NotATwoCutError("second edge does not cross the cut")
    c1, c2 = (a2, b2) if a2 in side else (b2, a2)
    edges = []
    edge_map: list[Optional[int]] = [None] * g.m
    for f in range(g.m):
        if f in (e1, e2):
            continue
        edge_map[f] = len(edges)
        edges.append(g.endpoints(f))
    f1 = len(edges)
    edges.append((a1, c1))
    f2 = f1 + 1
    edges.append((b1, c2))
    rec = EdgeSeparationRecord(
        e1=e1, e2=e2, f1=f1, f2=f2,
        pair1=(a1, c1), pair2=(b1, c2),
        side=tuple(sorted(side)),
        edge_map=tuple(edge_map),
    )
    return MultiGraph(g.n, edges), rec
