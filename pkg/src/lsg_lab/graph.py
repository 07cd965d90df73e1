"""Large sum graphs and exact graph invariants.

The graph of a module has the nonzero non-large submodules as vertices, with
an edge when the submodule sum is again non-large.  All invariants are exact;
the NP-hard ones (clique, independence, domination) run deterministic
exhaustive searches under a work cap and raise :class:`ExactSearchAborted`
rather than approximate.
"""

from __future__ import annotations

import itertools
import math
from collections import deque
from dataclasses import dataclass
from functools import cached_property

from .modules import FiniteModule, Submodule
from .predicates import is_large, minimal_submodules

INF = math.inf
DEFAULT_WORK_CAP = 1_000_000

__all__ = [
    "DEFAULT_WORK_CAP",
    "ExactSearchAborted",
    "Graph",
    "GraphInvariants",
    "INF",
    "LargeSumGraph",
    "build_graph",
    "clique_number",
    "complement",
    "components",
    "compute_invariants",
    "cut_vertices",
    "degrees",
    "diameter",
    "domination_number",
    "girth",
    "graph_json_dict",
    "has_universal_vertex",
    "independence_number",
    "invariants_json_dict",
    "is_complete",
    "is_complete_multipartite",
    "is_regular",
    "pendant_vertices",
    "to_dot",
]


class ExactSearchAborted(RuntimeError):
    """An exact search exceeded its work cap; no approximation is returned."""


@dataclass(frozen=True)
class Graph:
    """Immutable undirected graph on vertices ``0..n-1``."""

    n: int
    edges: frozenset[tuple[int, int]]  # normalized with i < j

    @classmethod
    def from_edges(cls, n: int, pairs) -> "Graph":
        norm = set()
        for u, v in pairs:
            if u == v:
                raise ValueError("self-loops are not allowed")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for {n} vertices")
            norm.add((u, v) if u < v else (v, u))
        return cls(n, frozenset(norm))

    @cached_property
    def neighbors(self) -> tuple[frozenset[int], ...]:
        nbr: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbr[u].add(v)
            nbr[v].add(u)
        return tuple(frozenset(s) for s in nbr)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def degree(self, v: int) -> int:
        return len(self.neighbors[v])


def complement(graph: Graph) -> Graph:
    pairs = [
        (u, v)
        for u in range(graph.n)
        for v in range(u + 1, graph.n)
        if (u, v) not in graph.edges
    ]
    return Graph.from_edges(graph.n, pairs)


def _bfs_distances(graph: Graph, start: int, skip_edge: tuple[int, int] | None = None):
    dist = {start: 0}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for v in graph.neighbors[u]:
            if skip_edge is not None and (min(u, v), max(u, v)) == skip_edge:
                continue
            if v not in dist:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def components(graph: Graph) -> list[list[int]]:
    """Connected components, each sorted, ordered by smallest member."""
    seen: set[int] = set()
    out: list[list[int]] = []
    for start in range(graph.n):
        if start in seen:
            continue
        comp = sorted(_bfs_distances(graph, start))
        seen.update(comp)
        out.append(comp)
    return out


def diameter(graph: Graph):
    """Max pairwise distance: 0 for a single vertex, ``INF`` when
    disconnected, None for the null graph."""
    if graph.n == 0:
        return None
    worst = 0
    for v in range(graph.n):
        dist = _bfs_distances(graph, v)
        if len(dist) < graph.n:
            return INF
        worst = max(worst, max(dist.values()))
    return worst


def girth(graph: Graph):
    """Length of the shortest cycle, ``INF`` for a forest.

    Any shortest cycle contains each of its edges, and for an edge (u,v) on
    it the rest of the cycle is a shortest u-v path avoiding that edge; so
    min over edges of (distance without the edge) + 1 is exact.
    """
    best = INF
    for u, v in sorted(graph.edges):
        dist = _bfs_distances(graph, u, skip_edge=(u, v))
        if v in dist:
            best = min(best, dist[v] + 1)
    return best


def cut_vertices(graph: Graph) -> list[int]:
    """Vertices whose removal increases the component count among the
    remaining vertices."""
    base = len(components(graph))
    out = []
    for v in range(graph.n):
        keep = [u for u in range(graph.n) if u != v]
        index = {u: i for i, u in enumerate(keep)}
        sub = Graph.from_edges(
            len(keep),
            [
                (index[a], index[b])
                for a, b in graph.edges
                if a != v and b != v
            ],
        )
        if len(components(sub)) > base:
            out.append(v)
    return out


def degrees(graph: Graph) -> list[int]:
    return [graph.degree(v) for v in range(graph.n)]


def pendant_vertices(graph: Graph) -> list[int]:
    return [v for v in range(graph.n) if graph.degree(v) == 1]


def is_regular(graph: Graph) -> tuple[bool, int | None]:
    """(True, r) when every vertex has degree r; (False, None) otherwise or
    on the null graph."""
    if graph.n == 0:
        return False, None
    degs = degrees(graph)
    if len(set(degs)) == 1:
        return True, degs[0]
    return False, None


def is_complete(graph: Graph) -> bool:
    return graph.n >= 1 and graph.edge_count == graph.n * (graph.n - 1) // 2


def has_universal_vertex(graph: Graph) -> bool:
    return graph.n >= 1 and any(
        graph.degree(v) == graph.n - 1 for v in range(graph.n)
    )


def is_complete_multipartite(graph: Graph) -> tuple[bool, list[list[int]] | None]:
    """Whether the graph is complete n-partite with n >= 2 parts.

    Equivalent to the complement being a disjoint union of at least two
    cliques; the parts are the complement's components.  Complete graphs
    qualify with singleton parts.
    """
    if graph.n == 0:
        return False, None
    comp_graph = complement(graph)
    parts = components(comp_graph)
    if len(parts) < 2:
        return False, None
    for part in parts:
        for a, b in itertools.combinations(part, 2):
            if not comp_graph.has_edge(a, b):
                return False, None
    return True, parts


def clique_number(graph: Graph, work_cap: int = DEFAULT_WORK_CAP) -> int:
    """Exact maximum clique size via branch and bound with pivoting."""
    if graph.n == 0:
        return 0
    nbr = graph.neighbors
    best = 0
    calls = 0

    def expand(size: int, cand: set[int], excl: set[int]) -> None:
        nonlocal best, calls
        calls += 1
        if calls > work_cap:
            raise ExactSearchAborted(
                f"exact clique search aborted after {work_cap} steps"
            )
        if not cand and not excl:
            best = max(best, size)
            return
        if size + len(cand) <= best:
            return
        pivot, pivot_gain = -1, -1
        for u in sorted(cand | excl):
            gain = len(cand & nbr[u])
            if gain > pivot_gain:
                pivot, pivot_gain = u, gain
        for v in sorted(cand - nbr[pivot]):
            expand(size + 1, cand & nbr[v], excl & nbr[v])
            cand = cand - {v}
            excl = excl | {v}

    expand(0, set(range(graph.n)), set())
    return best


def independence_number(graph: Graph, work_cap: int = DEFAULT_WORK_CAP) -> int:
    """Exact maximum independent set size (clique number of the complement)."""
    return clique_number(complement(graph), work_cap)


def domination_number(graph: Graph, work_cap: int = DEFAULT_WORK_CAP) -> int:
    """Exact minimum dominating set size by increasing-size subset search.

    Isolated vertices are forced into every dominating set, which prunes the
    search to the remaining vertices.
    """
    n = graph.n
    if n == 0:
        return 0
    closed = [0] * n
    for v in range(n):
        mask = 1 << v
        for u in graph.neighbors[v]:
            mask |= 1 << u
        closed[v] = mask
    full = (1 << n) - 1
    isolated = [v for v in range(n) if graph.degree(v) == 0]
    base = 0
    for v in isolated:
        base |= closed[v]
    rest = [v for v in range(n) if graph.degree(v) > 0]
    work = 0
    for extra in range(len(rest) + 1):
        for combo in itertools.combinations(rest, extra):
            work += 1
            if work > work_cap:
                raise ExactSearchAborted(
                    f"exact domination search aborted after {work_cap} steps"
                )
            mask = base
            for v in combo:
                mask |= closed[v]
            if mask == full:
                return len(isolated) + extra
    raise RuntimeError("internal error: no dominating set found")  # unreachable


@dataclass(frozen=True)
class GraphInvariants:
    """Exact invariant bundle.  On the null graph ``null_graph`` is set and
    the per-graph fields that have no sensible value are None."""

    null_graph: bool
    vertex_count: int
    edge_count: int
    component_count: int
    components: tuple[tuple[int, ...], ...]
    connected: bool | None
    diameter: float | int | None
    girth: float | int | None
    degrees: tuple[int, ...]
    degree_sequence: tuple[int, ...]
    pendant_vertices: tuple[int, ...]
    cut_vertices: tuple[int, ...]
    is_regular: bool | None
    regularity: int | None
    is_complete: bool | None
    has_universal_vertex: bool | None
    is_complete_multipartite: bool | None
    multipartite_parts: tuple[tuple[int, ...], ...] | None
    clique_number: int | None
    independence_number: int | None
    domination_number: int | None
    aborted: tuple[str, ...] = ()


def compute_invariants(
    graph: Graph,
    work_cap: int = DEFAULT_WORK_CAP,
    abort_mode: str = "raise",
) -> GraphInvariants:
    """Compute the full invariant bundle.

    ``abort_mode="raise"`` propagates :class:`ExactSearchAborted`;
    ``"mark"`` instead leaves the affected fields None and lists them in
    ``aborted``.
    """
    if abort_mode not in ("raise", "mark"):
        raise ValueError("abort_mode must be 'raise' or 'mark'")
    if graph.n == 0:
        return GraphInvariants(
            null_graph=True,
            vertex_count=0,
            edge_count=0,
            component_count=0,
            components=(),
            connected=None,
            diameter=None,
            girth=None,
            degrees=(),
            degree_sequence=(),
            pendant_vertices=(),
            cut_vertices=(),
            is_regular=None,
            regularity=None,
            is_complete=None,
            has_universal_vertex=None,
            is_complete_multipartite=None,
            multipartite_parts=None,
            clique_number=None,
            independence_number=None,
            domination_number=None,
        )
    comps = components(graph)
    regular, r = is_regular(graph)
    cm, parts = is_complete_multipartite(graph)
    degs = degrees(graph)
    aborted: list[str] = []
    exact: dict[str, int | None] = {}
    for name, fn in (
        ("clique_number", clique_number),
        ("independence_number", independence_number),
        ("domination_number", domination_number),
    ):
        try:
            exact[name] = fn(graph, work_cap)
        except ExactSearchAborted:
            if abort_mode == "raise":
                raise
            exact[name] = None
            aborted.append(name)
    return GraphInvariants(
        null_graph=False,
        vertex_count=graph.n,
        edge_count=graph.edge_count,
        component_count=len(comps),
        components=tuple(tuple(c) for c in comps),
        connected=len(comps) == 1,
        diameter=diameter(graph),
        girth=girth(graph),
        degrees=tuple(degs),
        degree_sequence=tuple(sorted(degs, reverse=True)),
        pendant_vertices=tuple(pendant_vertices(graph)),
        cut_vertices=tuple(cut_vertices(graph)),
        is_regular=regular,
        regularity=r,
        is_complete=is_complete(graph),
        has_universal_vertex=has_universal_vertex(graph),
        is_complete_multipartite=cm,
        multipartite_parts=tuple(tuple(p) for p in parts) if parts else None,
        clique_number=exact["clique_number"],
        independence_number=exact["independence_number"],
        domination_number=exact["domination_number"],
        aborted=tuple(aborted),
    )


class LargeSumGraph:
    """The graph of a module: vertices are the nonzero non-large submodules in
    canonical order (ascending order, then element list); two vertices are
    adjacent when their sum is non-large.  Frozen after construction."""

    def __init__(self, module: FiniteModule, vertices: tuple[Submodule, ...], graph: Graph):
        self.module = module
        self.vertices = vertices
        self.graph = graph
        self._index = {sub: i for i, sub in enumerate(vertices)}

    @property
    def is_null(self) -> bool:
        return self.graph.n == 0

    def index_of(self, sub: Submodule) -> int:
        return self._index[sub]

    def __repr__(self) -> str:
        return (
            f"<LargeSumGraph of {self.module.spec_string}: "
            f"{self.graph.n} vertices, {self.graph.edge_count} edges>"
        )


def build_graph(module: FiniteModule) -> LargeSumGraph:
    """Construct the large sum graph of a module."""
    verts = tuple(
        s
        for s in module.submodules()
        if not s.is_zero and not is_large(module, s)
    )
    pairs = []
    for i, u in enumerate(verts):
        for j in range(i + 1, len(verts)):
            if not is_large(module, u.sum(verts[j])):
                pairs.append((i, j))
    return LargeSumGraph(module, verts, Graph.from_edges(len(verts), pairs))


# -- serialization ---------------------------------------------------------


def to_dot(lsg: LargeSumGraph) -> str:
    """Deterministic DOT rendering: vertex ids ``v<k>``, labels
    ``o=<order>;g=<generators>``."""
    lines = [f'graph "{lsg.module.spec_string}" {{']
    for k, sub in enumerate(lsg.vertices):
        lines.append(f'  v{k} [label="{sub.label()}"];')
    for i, j in sorted(lsg.graph.edges):
        lines.append(f"  v{i} -- v{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _jsonable(value):
    if value is INF:
        return "inf"
    if isinstance(value, tuple):
        return [_jsonable(v) for v in value]
    return value


def invariants_json_dict(inv: GraphInvariants) -> dict:
    return {
        "null_graph": inv.null_graph,
        "vertex_count": inv.vertex_count,
        "edge_count": inv.edge_count,
        "component_count": inv.component_count,
        "components": _jsonable(inv.components),
        "connected": inv.connected,
        "diameter": _jsonable(inv.diameter),
        "girth": _jsonable(inv.girth),
        "degrees": _jsonable(inv.degrees),
        "degree_sequence": _jsonable(inv.degree_sequence),
        "pendant_vertices": _jsonable(inv.pendant_vertices),
        "cut_vertices": _jsonable(inv.cut_vertices),
        "is_regular": inv.is_regular,
        "regularity": inv.regularity,
        "is_complete": inv.is_complete,
        "has_universal_vertex": inv.has_universal_vertex,
        "is_complete_multipartite": inv.is_complete_multipartite,
        "multipartite_parts": _jsonable(inv.multipartite_parts),
        "clique_number": inv.clique_number,
        "independence_number": inv.independence_number,
        "domination_number": inv.domination_number,
        "exact_search_aborted": _jsonable(inv.aborted),
    }


def graph_json_dict(lsg: LargeSumGraph, inv: GraphInvariants | None = None,
                    work_cap: int = DEFAULT_WORK_CAP) -> dict:
    """JSON document for a module graph: vertices with orders/generators and
    a minimality flag, edges as index pairs, plus the invariant bundle."""
    if inv is None:
        inv = compute_invariants(lsg.graph, work_cap)
    atoms = set(minimal_submodules(lsg.module))
    return {
        "module": lsg.module.spec_string,
        "vertices": [
            {
                "id": k,
                "order": sub.order,
                "generators": [list(g) for g in sub.generators],
                "minimal": sub in atoms,
            }
            for k, sub in enumerate(lsg.vertices)
        ],
        "edges": [[i, j] for i, j in sorted(lsg.graph.edges)],
        "invariants": invariants_json_dict(inv),
    }
