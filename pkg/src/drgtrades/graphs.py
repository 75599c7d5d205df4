"""Generic finite-graph machinery: BFS distances, regularity, bipartiteness,
isometric subgraphs, completely regular sets, clique systems and
distance-regularity testing.

Every check returns a Verdict carrying a witness on failure, because a bare
"false" is not actionable when the point of the run is verification.  Heavy
counting loops are vectorized with numpy; all values involved are small
integers, so nothing leaves exact arithmetic.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Any

import numpy as np

from .errors import CliqueSearchTooLarge, Disconnected

# Graphs up to this many vertices get a cached dense distance matrix
# (computed by level-synchronous BFS over a float32 adjacency product;
# all counts stay below 2**24, hence exact).  Larger graphs fall back to
# per-source BFS.
DENSE_DISTANCE_CAP = 4096

# Below this size plain deque BFS beats numpy set-up costs.
_SMALL_BFS = 1024


@dataclass(frozen=True)
class Verdict:
    """Outcome of a verification, with payload on success or witness on failure."""

    ok: bool
    value: Any = None
    witness: Any = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.ok


class Graph:
    """Finite simple undirected graph with canonical string labels.

    Vertex order is the label order handed in by the constructor; family
    builders always pass labels sorted, so indices are reproducible across
    runs and serializations are byte-identical.
    """

    def __init__(self, labels, edges, family=None, params=None):
        self.labels = list(labels)
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("duplicate vertex labels")
        self.family = family
        self.params = tuple(params) if params is not None else None
        n = len(self.labels)
        e = np.asarray(list(edges) if not isinstance(edges, np.ndarray) else edges,
                       dtype=np.int64)
        if e.size == 0:
            e = e.reshape(0, 2)
        if e.ndim != 2 or e.shape[1] != 2:
            raise ValueError("edges must be index pairs")
        if e.size and (e.min() < 0 or e.max() >= n):
            raise ValueError("edge endpoint out of range")
        if (e[:, 0] == e[:, 1]).any():
            raise ValueError("loops are not allowed")
        und = np.concatenate([e, e[:, ::-1]]) if e.size else e
        keys = np.unique(und[:, 0] * n + und[:, 1]) if und.size else und[:, 0]
        self._flat = (keys % n).astype(np.int32)
        heads = (keys // n).astype(np.int64)
        self._off = np.zeros(n + 1, dtype=np.int64)
        np.add.at(self._off, heads + 1, 1)
        np.cumsum(self._off, out=self._off)
        self._degrees = np.diff(self._off)
        self._index = {lab: i for i, lab in enumerate(self.labels)}
        self._adj_sets = None
        self._dm = None

    # -- basic accessors ------------------------------------------------

    @property
    def num_vertices(self) -> int:
        return len(self.labels)

    @property
    def num_edges(self) -> int:
        return int(len(self._flat)) // 2

    def degree(self, v: int) -> int:
        return int(self._degrees[v])

    @property
    def degrees(self) -> np.ndarray:
        return self._degrees

    def neighbors(self, v: int) -> np.ndarray:
        return self._flat[self._off[v]:self._off[v + 1]]

    @property
    def adj_sets(self) -> list:
        if self._adj_sets is None:
            self._adj_sets = [frozenset(self.neighbors(v).tolist())
                              for v in range(self.num_vertices)]
        return self._adj_sets

    def index_of(self, label: str) -> int:
        return self._index[label]

    def edges(self):
        """Edge pairs (i, j) with i < j, lexicographically sorted."""
        for u in range(self.num_vertices):
            for v in self.neighbors(u).tolist():
                if u < v:
                    yield (u, int(v))

    # -- distances --------------------------------------------------------

    def _bfs_deque(self, sources) -> np.ndarray:
        dist = np.full(self.num_vertices, -1, dtype=np.int32)
        dq = deque()
        for s in sources:
            dist[s] = 0
            dq.append(s)
        flat, off = self._flat, self._off
        while dq:
            u = dq.popleft()
            du1 = dist[u] + 1
            for v in flat[off[u]:off[u + 1]].tolist():
                if dist[v] < 0:
                    dist[v] = du1
                    dq.append(v)
        return dist

    def _bfs_numpy(self, sources) -> np.ndarray:
        dist = np.full(self.num_vertices, -1, dtype=np.int32)
        frontier = np.asarray(sorted(set(sources)), dtype=np.int64)
        dist[frontier] = 0
        level = 0
        flat, off, deg = self._flat, self._off, self._degrees
        while frontier.size:
            lens = deg[frontier]
            total = int(lens.sum())
            if total == 0:
                break
            starts = off[frontier]
            before = np.concatenate(([0], np.cumsum(lens)[:-1]))
            idx = np.repeat(starts - before, lens) + np.arange(total)
            nbrs = np.unique(flat[idx])
            new = nbrs[dist[nbrs] < 0]
            level += 1
            dist[new] = level
            frontier = new.astype(np.int64)
        return dist

    def multi_source_distances(self, sources) -> np.ndarray:
        """Distances from a vertex set; -1 marks unreachable vertices."""
        sources = list(sources)
        if not sources:
            raise ValueError("empty source set")
        if self.num_vertices <= _SMALL_BFS:
            return self._bfs_deque(sources)
        return self._bfs_numpy(sources)

    def distances_from(self, x: int) -> np.ndarray:
        if self._dm is not None:
            return self._dm[x]
        dist = self.multi_source_distances([x])
        if (dist < 0).any():
            bad = int(np.flatnonzero(dist < 0)[0])
            raise Disconnected(
                f"vertex {self.labels[bad]!r} unreachable from {self.labels[x]!r}")
        return dist

    @property
    def is_connected(self) -> bool:
        return not (self.multi_source_distances([0]) < 0).any()

    def distance_matrix(self) -> np.ndarray:
        """Full distance matrix, cached.  Rows are BFS distance vectors.

        Uses repeated frontier @ adjacency products in float32; every entry
        produced is an exact small integer.
        """
        if self._dm is not None:
            return self._dm
        n = self.num_vertices
        if n > DENSE_DISTANCE_CAP:
            raise MemoryError(
                f"dense distance matrix disabled for {n} > {DENSE_DISTANCE_CAP} vertices")
        A = np.zeros((n, n), dtype=np.float32)
        for u in range(n):
            A[u, self.neighbors(u)] = 1.0
        D = np.full((n, n), -1, dtype=np.int16)
        np.fill_diagonal(D, 0)
        reached = np.eye(n, dtype=bool)
        frontier = reached.copy()
        level = 0
        while True:
            nxt = (frontier.astype(np.float32) @ A) > 0
            frontier = nxt & ~reached
            if not frontier.any():
                break
            level += 1
            D[frontier] = level
            reached |= frontier
        if (D < 0).any():
            raise Disconnected("graph is disconnected")
        self._dm = D
        return D

    def eccentricity(self, x: int) -> int:
        return int(self.distances_from(x).max())

    def diameter(self) -> int:
        if self.num_vertices <= DENSE_DISTANCE_CAP:
            return int(self.distance_matrix().max())
        return max(self.eccentricity(x) for x in range(self.num_vertices))

    def __repr__(self):
        tag = f" {self.family}{self.params}" if self.family else ""
        return f"Graph({self.num_vertices} vertices, {self.num_edges} edges{tag})"


def bfs_distances(g: Graph, x: int) -> list[int]:
    """Exact distances from x to every vertex; raises Disconnected if any
    vertex is unreachable."""
    return g.distances_from(x).tolist()


@dataclass(frozen=True)
class IntersectionArray:
    """Sequence (b_0,...,b_{rho-1}; c_1,...,c_rho) attached to degree k.

    a_i = k - b_i - c_i with the conventions b_rho = c_0 = 0.
    """

    k: int
    b: tuple[int, ...]
    c: tuple[int, ...]

    def __post_init__(self):
        if len(self.b) != len(self.c):
            raise ValueError("b and c must have equal length")
        if any(x <= 0 for x in self.b) or any(x <= 0 for x in self.c):
            raise ValueError("b_i (i < rho) and c_i (i >= 1) must be positive")
        for i in range(self.rho + 1):
            if self.a(i) < 0:
                raise ValueError(f"a_{i} = {self.a(i)} negative")

    @property
    def rho(self) -> int:
        return len(self.b)

    def b_at(self, i: int) -> int:
        return self.b[i] if i < self.rho else 0

    def c_at(self, i: int) -> int:
        return self.c[i - 1] if i >= 1 else 0

    def a(self, i: int) -> int:
        return self.k - self.b_at(i) - self.c_at(i)

    def matrix(self) -> list[list[int]]:
        """Tridiagonal intersection matrix: M[i][i]=a_i, M[i][i+1]=b_i,
        M[i][i-1]=c_i."""
        n = self.rho + 1
        m = [[0] * n for _ in range(n)]
        for i in range(n):
            m[i][i] = self.a(i)
            if i + 1 < n:
                m[i][i + 1] = self.b[i]
                m[i + 1][i] = self.c[i]
        return m

    def __str__(self):
        bs = ",".join(str(x) for x in self.b)
        cs = ",".join(str(x) for x in self.c)
        return f"({bs};{cs})"


@dataclass(frozen=True)
class CliqueSystem:
    """A set of (s+1)-cliques covering every host edge exactly m times."""

    host: Graph
    cliques: tuple[tuple[int, ...], ...]
    s: int
    m: int

    def __post_init__(self):
        for c in self.cliques:
            if len(c) != self.s + 1:
                raise ValueError("clique of wrong size in system")

    def __repr__(self):
        return f"CliqueSystem({len(self.cliques)} cliques of size {self.s + 1}, m={self.m})"


# --- verdict-style checks -----------------------------------------------------


def is_regular(g: Graph) -> Verdict:
    """Common degree as value, or a witness vertex of deviating degree."""
    degs = g.degrees
    k = int(degs[0])
    bad = np.flatnonzero(degs != k)
    if bad.size:
        v = int(bad[0])
        return Verdict(False, witness=(g.labels[v], int(degs[v]), k),
                       detail="degree deviates from vertex 0")
    return Verdict(True, value=k)


def induced_subgraph(g: Graph, verts) -> tuple[Graph, list[int]]:
    """Subgraph on verts with inherited labels; second item maps subgraph
    indices back to host indices."""
    back = sorted(set(int(v) for v in verts))
    if not back:
        raise ValueError("empty vertex set")
    pos = {h: i for i, h in enumerate(back)}
    edges = []
    for h in back:
        for w in g.neighbors(h).tolist():
            if w in pos and h < w:
                edges.append((pos[h], pos[w]))
    sub = Graph([g.labels[h] for h in back], edges)
    return sub, back


def is_isometric_subgraph(g: Graph, verts) -> Verdict:
    """True iff induced-subgraph distances equal host distances on verts."""
    sub, back = induced_subgraph(g, verts)
    for i in range(sub.num_vertices):
        dsub = sub.multi_source_distances([i])
        dhost = g.distances_from(back[i])
        for j in range(i + 1, sub.num_vertices):
            dij = int(dsub[j])
            hij = int(dhost[back[j]])
            if dij != hij:
                return Verdict(
                    False,
                    witness=(sub.labels[i], sub.labels[j],
                             None if dij < 0 else dij, hij),
                    detail="internal distance differs from host distance")
    return Verdict(True)


def is_bipartite(g: Graph) -> Verdict:
    """BFS 2-coloring as value, or an odd cycle as witness."""
    n = g.num_vertices
    color = np.full(n, -1, dtype=np.int8)
    parent = np.full(n, -1, dtype=np.int64)
    color[0] = 0
    dq = deque([0])
    while dq:
        u = dq.popleft()
        cu = color[u]
        for v in g.neighbors(u).tolist():
            if color[v] < 0:
                color[v] = 1 - cu
                parent[v] = u
                dq.append(v)
            elif color[v] == cu:
                cycle = _odd_cycle(parent, u, v)
                return Verdict(False, witness=[g.labels[x] for x in cycle],
                               detail="odd cycle")
    if (color < 0).any():
        raise Disconnected("2-coloring undefined on a disconnected graph")
    return Verdict(True, value=tuple(int(c) for c in color))


def _odd_cycle(parent, u, v):
    def chain(x):
        out = [x]
        while parent[out[-1]] >= 0:
            out.append(int(parent[out[-1]]))
        return out

    pu, pv = chain(u), chain(v)
    while len(pu) >= 2 and len(pv) >= 2 and pu[-1] == pv[-1] and pu[-2] == pv[-2]:
        pu.pop()
        pv.pop()
    return pu + pv[:-1][::-1]


def segment_sums(values: np.ndarray, offsets: np.ndarray) -> np.ndarray:
    """Per-segment sums of a flat array cut at offsets (robust to empty
    segments, unlike reduceat)."""
    c = np.concatenate(([0], np.cumsum(values, dtype=np.int64)))
    return c[offsets[1:]] - c[offsets[:-1]]


def _shell_counts(g: Graph, dist: np.ndarray):
    """Per-vertex counts of neighbors one shell out (fwd) and one shell in
    (bwd) relative to the distance vector."""
    flat, off = g._flat, g._off
    nbd = dist[flat].astype(np.int32)
    own = np.repeat(dist, g.degrees).astype(np.int32)
    fwd = segment_sums(nbd == own + 1, off)
    bwd = segment_sums(nbd == own - 1, off)
    return fwd, bwd


def _uniform_array(g: Graph, dist: np.ndarray, k: int):
    """(IntersectionArray, None) if shell counts are uniform per distance,
    else (None, witness)."""
    fwd, bwd = _shell_counts(g, dist)
    rho = int(dist.max())
    b, c = [], []
    for i in range(rho + 1):
        shell = np.flatnonzero(dist == i)
        fv = fwd[shell]
        bv = bwd[shell]
        if int(fv.min()) != int(fv.max()):
            v = int(shell[int(fv.argmin())])
            return None, (g.labels[v], i, "forward", int(fv.min()), int(fv.max()))
        if int(bv.min()) != int(bv.max()):
            v = int(shell[int(bv.argmin())])
            return None, (g.labels[v], i, "backward", int(bv.min()), int(bv.max()))
        if i < rho:
            b.append(int(fv[0]))
        if i >= 1:
            c.append(int(bv[0]))
    return IntersectionArray(k, tuple(b), tuple(c)), None


def completely_regular_check(g: Graph, C) -> Verdict:
    """Intersection array of the set C as value, or a witness of failure.

    Partitions vertices by distance to C and demands that forward/backward
    neighbor counts depend only on the distance.
    """
    reg = is_regular(g)
    if not reg.ok:
        return Verdict(False, witness=reg.witness, detail="host graph not regular")
    C = sorted(set(int(v) for v in C))
    if not C:
        raise ValueError("empty vertex set")
    dist = g.multi_source_distances(C)
    if (dist < 0).any():
        raise Disconnected("set does not reach the whole graph")
    arr, witness = _uniform_array(g, dist, reg.value)
    if arr is None:
        return Verdict(False, witness=witness, detail="non-uniform shell counts")
    return Verdict(True, value=arr)


def distance_regularity_check(g: Graph) -> Verdict:
    """Common singleton intersection array as value, else a witness."""
    reg = is_regular(g)
    if not reg.ok:
        return Verdict(False, witness=reg.witness, detail="not regular")
    k = reg.value
    n = g.num_vertices
    use_matrix = n <= DENSE_DISTANCE_CAP
    dm = g.distance_matrix() if use_matrix else None
    common = None
    for x in range(n):
        dist = dm[x].astype(np.int32) if use_matrix else g.distances_from(x)
        arr, witness = _uniform_array(g, dist, k)
        if arr is None:
            return Verdict(False, witness=(g.labels[x],) + witness,
                           detail="singleton not completely regular")
        if common is None:
            common = arr
        elif arr != common:
            return Verdict(False, witness=(g.labels[x], str(arr), str(common)),
                           detail="intersection array differs between vertices")
    return Verdict(True, value=common)


def verify_clique_system(g: Graph, S: CliqueSystem) -> Verdict:
    """Checks clique-ness, uniform size s+1, and exact edge multiplicity m."""
    adj = g.adj_sets
    counts = {}
    for ci, clique in enumerate(S.cliques):
        if len(set(clique)) != S.s + 1:
            return Verdict(False, witness=ci, detail="clique of wrong size")
        cl = sorted(clique)
        for i, u in enumerate(cl):
            for v in cl[i + 1:]:
                if v not in adj[u]:
                    return Verdict(False, witness=(ci, g.labels[u], g.labels[v]),
                                   detail="clique contains a non-edge")
                counts[(u, v)] = counts.get((u, v), 0) + 1
    for u, v in g.edges():
        got = counts.pop((u, v), 0)
        if got != S.m:
            return Verdict(False, witness=(g.labels[u], g.labels[v], got, S.m),
                           detail="edge multiplicity mismatch")
    assert not counts
    return Verdict(True, value=(g.degrees[0] if g.num_vertices else 0, S.s, S.m))


def max_clique_order(g: Graph, node_budget: int = 2_000_000) -> int:
    """Exact maximum clique cardinality via branch and bound with a greedy
    coloring bound.  Raises CliqueSearchTooLarge past the node budget."""
    adj = g.adj_sets
    best = 0
    nodes = 0

    def color_order(cands):
        classes = []
        for v in cands:
            for cl in classes:
                if not (adj[v] & cl):
                    cl.add(v)
                    break
            else:
                classes.append({v})
        out = []
        for bound, cl in enumerate(classes, start=1):
            for v in sorted(cl):
                out.append((v, bound))
        return out

    def expand(size, cands):
        nonlocal best, nodes
        nodes += 1
        if nodes > node_budget:
            raise CliqueSearchTooLarge(f"exceeded {node_budget} search nodes")
        if not cands:
            best = max(best, size)
            return
        colored = color_order(cands)
        for pos in range(len(colored) - 1, -1, -1):
            v, bound = colored[pos]
            if size + bound <= best:
                return
            rest = [u for u, _ in colored[:pos] if u in adj[v]]
            expand(size + 1, rest)

    order = sorted(range(g.num_vertices), key=lambda v: -g.degree(v))
    expand(0, order)
    return best


def graph_to_json(g: Graph) -> dict:
    """Serialization with vertices sorted by label and lexicographic edges,
    bit-exact across runs."""
    assert g.labels == sorted(g.labels), "constructors must sort labels"
    return {
        "family": g.family,
        "params": list(g.params) if g.params is not None else None,
        "vertices": list(g.labels),
        "edges": [[u, v] for u, v in g.edges()],
    }
