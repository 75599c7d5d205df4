"""Clique bitrades: representation, the three equivalent verification
criteria, Delsarte-pair validation, minimality against the
weight-distribution bound, distance-regularity of the trade subgraph, clique
designs, and explicit minimum-bitrade constructors for every family.

A bitrade is an ordered pair (T0, T1) of disjoint nonempty independent
vertex sets.  For a (k,s,m) pair the following are equivalent and are all
computed here, each by its own route:

  a. every clique meets each of T0, T1 exactly once or misses both;
  b. the signed indicator (+1 on T0, -1 on T1) is an eigenfunction at -k/s;
  c. the induced subgraph on T0 u T1 is k/s-regular (bipartite by
     independence).

Minimum bitrades additionally meet the weight-distribution bound, which is
equivalent to the trade subgraph being isometric in the host; that subgraph
is then distance-regular with shells |W^i|.  Disagreement between any two of
these independently computed verdicts raises CrossCheckViolation.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import CrossCheckViolation, DegenerateEmpty, NotDistanceRegular
from .families import (
    build_dual_polar_D,
    build_grassmann,
    build_hamming,
    build_halved_cube,
    build_johnson,
    build_octahedron,
    build_doob,
)
from .gfq import DEFAULT_ENUMERATION_CAP
from .graphs import (
    CliqueSystem,
    Graph,
    IntersectionArray,
    Verdict,
    completely_regular_check,
    distance_regularity_check,
    induced_subgraph,
    is_bipartite,
    is_isometric_subgraph,
    is_regular,
    max_clique_order,
)
from .spectral import (
    VertexFunction,
    intersection_matrix_eigenvalues,
    is_matrix_eigenvalue,
    verify_eigenfunction,
    wd_bound,
    wd_coefficients,
)


@dataclass(frozen=True)
class Bitrade:
    """Disjoint nonempty independent vertex sets (T0, T1) in a host graph."""

    host: Graph
    t0: frozenset
    t1: frozenset

    def __post_init__(self):
        if not self.t0 or not self.t1:
            raise ValueError("both trades must be nonempty")
        if self.t0 & self.t1:
            raise ValueError("trades must be disjoint")
        adj = self.host.adj_sets
        for side, name in ((self.t0, "T0"), (self.t1, "T1")):
            for v in side:
                if adj[v] & side:
                    raise ValueError(f"{name} is not an independent set")

    @property
    def cardinality(self) -> int:
        return len(self.t0) + len(self.t1)

    @property
    def support(self) -> frozenset:
        return self.t0 | self.t1

    def labels(self, side) -> list[str]:
        return sorted(self.host.labels[v] for v in side)

    def signed_function(self) -> VertexFunction:
        vals = [Fraction(0)] * self.host.num_vertices
        for v in self.t0:
            vals[v] = Fraction(1)
        for v in self.t1:
            vals[v] = Fraction(-1)
        return VertexFunction(self.host, tuple(vals))

    def __repr__(self):
        return f"Bitrade(|T0|={len(self.t0)}, |T1|={len(self.t1)})"


def bitrade_to_json(T: Bitrade) -> dict:
    fam = T.host.family or "custom"
    params = ",".join(str(p) for p in (T.host.params or ()))
    return {
        "host": f"{fam}:{params}" if params else fam,
        "T0": T.labels(T.t0),
        "T1": T.labels(T.t1),
    }


def bitrade_from_json(host: Graph, doc: dict) -> Bitrade:
    t0 = frozenset(host.index_of(lab) for lab in doc["T0"])
    t1 = frozenset(host.index_of(lab) for lab in doc["T1"])
    return Bitrade(host, t0, t1)


# --- Delsarte pair -------------------------------------------------------------

@dataclass(frozen=True)
class DelsartePairReport:
    ok: bool
    k: int
    s: int
    theta_min: int
    hoffman_order: Fraction          # 1 - k/theta_min
    max_clique: int | None

    def __bool__(self):
        return self.ok


def verify_delsarte_pair(g: Graph, S: CliqueSystem, host_array=None,
                         confirm_maximality: bool = False) -> DelsartePairReport:
    """A (k,s,m) pair is Delsarte when the host is distance-regular and the
    clique order s+1 reaches the Hoffman bound 1 - k/theta_min."""
    if host_array is None:
        dr = distance_regularity_check(g)
        if not dr.ok:
            raise NotDistanceRegular(str(dr.witness))
        host_array = dr.value
    k = host_array.k
    th = intersection_matrix_eigenvalues(host_array)[-1]
    hoffman = 1 - Fraction(k, th)
    mc = max_clique_order(g) if confirm_maximality else None
    ok = (S.s + 1 == hoffman) and (mc is None or mc == S.s + 1)
    return DelsartePairReport(ok, k, S.s, th, hoffman, mc)


# --- the three criteria -----------------------------------------------------------

def check_criterion_a(g: Graph, S: CliqueSystem, T: Bitrade) -> Verdict:
    """Every clique meets each of T0 and T1 exactly once, or misses both."""
    for ci, clique in enumerate(S.cliques):
        hits0 = sum(1 for v in clique if v in T.t0)
        hits1 = sum(1 for v in clique if v in T.t1)
        if (hits0, hits1) not in ((0, 0), (1, 1)):
            members = sorted(g.labels[v] for v in clique)
            return Verdict(False, witness=(ci, members, hits0, hits1),
                           detail="clique meets the trades unevenly")
    return Verdict(True)


def check_criterion_b(g: Graph, S: CliqueSystem, T: Bitrade) -> Verdict:
    """The signed indicator function is an eigenfunction at -k/s."""
    k = is_regular(g).value
    return verify_eigenfunction(g, T.signed_function(), Fraction(-k, S.s))


def check_criterion_c(g: Graph, S: CliqueSystem, T: Bitrade) -> Verdict:
    """The induced subgraph on T0 u T1 is regular of degree k/s with all
    edges between the sides (bipartite by independence)."""
    k = is_regular(g).value
    target = Fraction(k, S.s)
    sub, back = induced_subgraph(g, T.support)
    for i in range(sub.num_vertices):
        if sub.degree(i) != target:
            return Verdict(False,
                           witness=(sub.labels[i], sub.degree(i), target),
                           detail="trade subgraph degree mismatch")
        h = back[i]
        side = T.t0 if h in T.t0 else T.t1
        for j in sub.neighbors(i).tolist():
            if back[j] in side:
                return Verdict(False, witness=(sub.labels[i], sub.labels[j]),
                               detail="edge inside one trade side")
    return Verdict(True)


# --- minimality and the trade subgraph ----------------------------------------------

@dataclass(frozen=True)
class MinimalityReport:
    cardinality: int
    bound: int
    meets_bound: bool
    isometric: Verdict
    minimal: bool

    def __bool__(self):
        return self.minimal


def _host_array(g: Graph, host_array) -> IntersectionArray:
    if host_array is not None:
        return host_array
    dr = distance_regularity_check(g)
    if not dr.ok:
        raise NotDistanceRegular(str(dr.witness))
    return dr.value


def check_minimality(g: Graph, S: CliqueSystem, T: Bitrade,
                     host_array=None) -> MinimalityReport:
    """|T0 u T1| against the weight-distribution bound at -k/s, and the
    isometric-subgraph test, which must agree (their equivalence is the
    content of the minimality theory; disagreement is a hard failure)."""
    arr = _host_array(g, host_array)
    th = Fraction(-arr.k, S.s)
    bound = wd_bound(arr, th)
    assert bound.denominator == 1
    bound = int(bound)
    meets = T.cardinality == bound
    iso = is_isometric_subgraph(g, T.support)
    if meets != iso.ok:
        raise CrossCheckViolation(
            f"meets-bound={meets} but isometric={iso.ok}: {iso.witness}")
    return MinimalityReport(T.cardinality, bound, meets, iso, meets and iso.ok)


@dataclass(frozen=True)
class SubgraphReport:
    array: IntersectionArray
    shell_sizes: tuple[int, ...]

    def __bool__(self):
        return True


def check_subgraph_dr(g: Graph, S: CliqueSystem, T: Bitrade,
                      host_array=None,
                      expected_array: IntersectionArray | None = None) -> SubgraphReport:
    """For a minimal bitrade the trade subgraph must be distance-regular
    with shell sizes |W^i| computed from the host array; failure here is a
    violated equivalence, not a user error."""
    arr = _host_array(g, host_array)
    th = Fraction(-arr.k, S.s)
    sub, _ = induced_subgraph(g, T.support)
    dr = distance_regularity_check(sub)
    if not dr.ok:
        raise CrossCheckViolation(
            f"trade subgraph of a minimal bitrade not distance-regular: {dr.witness}")
    shells = tuple(abs(int(w)) for w in wd_coefficients(arr, th).coefficients)
    for x in range(sub.num_vertices):
        dist = sub.distances_from(x)
        got = tuple(int((dist == i).sum()) for i in range(int(dist.max()) + 1))
        if got != shells:
            raise CrossCheckViolation(
                f"shells {got} at {sub.labels[x]} differ from |W^i| = {shells}")
    if expected_array is not None and dr.value != expected_array:
        raise CrossCheckViolation(
            f"trade subgraph array {dr.value} != expected {expected_array}")
    return SubgraphReport(dr.value, shells)


# --- whole-pipeline report ------------------------------------------------------------

@dataclass(frozen=True)
class VerificationReport:
    a: Verdict
    b: Verdict
    c: Verdict
    theta: Fraction
    subgraph_degree: Fraction
    cardinality: int
    bound: int | None = None
    meets_bound: bool | None = None
    isometric: Verdict | None = None
    minimal: bool | None = None
    subgraph_array: IntersectionArray | None = None
    shell_sizes: tuple[int, ...] | None = None

    @property
    def criteria_agree(self) -> bool:
        return self.a.ok == self.b.ok == self.c.ok

    @property
    def all_pass(self) -> bool:
        return self.a.ok and self.b.ok and self.c.ok


def verify_bitrade(g: Graph, S: CliqueSystem, T: Bitrade,
                   host_array=None) -> VerificationReport:
    """Run criteria a/b/c; when all pass, also minimality and the trade
    subgraph's distance regularity."""
    k = is_regular(g).value
    th = Fraction(-k, S.s)
    a = check_criterion_a(g, S, T)
    b = check_criterion_b(g, S, T)
    c = check_criterion_c(g, S, T)
    degree = Fraction(k, S.s)
    if not (a.ok and b.ok and c.ok):
        return VerificationReport(a, b, c, th, degree, T.cardinality)
    arr = _host_array(g, host_array)
    mini = check_minimality(g, S, T, host_array=arr)
    sub_arr = None
    shells = None
    if mini.minimal:
        rep = check_subgraph_dr(g, S, T, host_array=arr)
        sub_arr, shells = rep.array, rep.shell_sizes
    return VerificationReport(a, b, c, th, degree, T.cardinality, mini.bound,
                              mini.meets_bound, mini.isometric, mini.minimal,
                              sub_arr, shells)


# --- constructors ------------------------------------------------------------------------

def min_bitrade_johnson(n: int, w: int, host: Graph | None = None) -> Bitrade:
    """Blocks {a_1^{b_1},...,a_w^{b_w}} over the fixed points a_i^0 = 2i-1,
    a_i^1 = 2i, split by the parity of b_1+...+b_w."""
    if host is None:
        host, _ = build_johnson(n, w)
    sides = ([], [])
    for bits in itertools.product((0, 1), repeat=w):
        block = tuple(2 * i + 1 + bits[i] for i in range(w))
        label = ",".join(str(x) for x in sorted(block))
        sides[sum(bits) % 2].append(host.index_of(label))
    return Bitrade(host, frozenset(sides[0]), frozenset(sides[1]))


def min_bitrade_hamming(n: int, q: int, host: Graph | None = None) -> Bitrade:
    """Binary words inside the q-ary cube, split by weight parity."""
    if host is None:
        host, _ = build_hamming(n, q)
    sides = ([], [])
    for bits in itertools.product((0, 1), repeat=n):
        label = "".join(str(b) for b in bits)
        sides[sum(bits) % 2].append(host.index_of(label))
    return Bitrade(host, frozenset(sides[0]), frozenset(sides[1]))


def min_bitrade_halved_cube(n: int, host: Graph | None = None) -> Bitrade:
    """Doubled words (x,x), split by the weight parity of x."""
    if host is None:
        host, _ = build_halved_cube(n)
    sides = ([], [])
    for bits in itertools.product((0, 1), repeat=n // 2):
        label = "".join(str(b) for b in bits) * 2
        sides[sum(bits) % 2].append(host.index_of(label))
    return Bitrade(host, frozenset(sides[0]), frozenset(sides[1]))


def min_bitrade_octahedron(n: int, host: Graph | None = None) -> Bitrade:
    """A square: two antipodal pairs, one per side."""
    if host is None:
        host, _ = build_octahedron(n)
    return Bitrade(host,
                   frozenset((host.index_of("0+"), host.index_of("0-"))),
                   frozenset((host.index_of("1+"), host.index_of("1-"))))


def min_bitrade_grassmann(n: int, d: int, q: int, host: Graph | None = None,
                          cap: int = DEFAULT_ENUMERATION_CAP) -> Bitrade:
    """The bipartition of the dual polar graph on F_q^{2d}, embedded into
    the d-subspaces of F_q^n by zero-extending basis vectors.

    The two color classes come from BFS 2-coloring started at the
    lexicographically least vertex, which is canonical given canonical
    labels."""
    if n < 2 * d:
        raise ValueError("need n >= 2d")
    if host is None:
        host, _ = build_grassmann(n, d, q, cap=cap)
    dp = build_dual_polar_D(d, q, cap=cap)
    bip = is_bipartite(dp)
    assert bip.ok
    pad = "0" * (n - 2 * d)
    sides = ([], [])
    for v, lab in enumerate(dp.labels):
        ext = "/".join(row + pad for row in lab.split("/"))
        sides[bip.value[v]].append(host.index_of(ext))
    return Bitrade(host, frozenset(sides[0]), frozenset(sides[1]))


def pseudo_bitrade_doob(m: int, n: int,
                        host: Graph | None = None) -> tuple[Bitrade, Verdict]:
    """In the Doob graph there is no Delsarte clique system, so only the
    eigenfunction route exists: the vertex set {(0,j)}^m x {0,1}^n is split
    by a parity and certified directly against the minimum eigenvalue
    -(2m+n).  Both natural parities are tried; the certified one is
    returned."""
    if host is None:
        host = build_doob(m, n)
    theta = -(2 * m + n)
    members = []
    for shr in itertools.product(range(4), repeat=m):
        for bits in itertools.product((0, 1), repeat=n):
            tokens = [f"0{j}" for j in shr] + [str(b) for b in bits]
            members.append((host.index_of(".".join(tokens)),
                            sum(shr) + sum(bits),          # parity candidate 1
                            sum(j // 2 for j in shr) + sum(bits)))  # candidate 2
    for pick in (1, 2):
        sides = ([], [])
        for item in members:
            sides[item[pick] % 2].append(item[0])
        T = Bitrade(host, frozenset(sides[0]), frozenset(sides[1]))
        verdict = verify_eigenfunction(host, T.signed_function(), theta)
        if verdict.ok:
            return T, verdict
    raise CrossCheckViolation("no natural parity split certifies as an eigenfunction")


def double_johnson_bitrade(n: int, w: int, host: Graph | None = None) -> Bitrade:
    """Union of two point-disjoint minimum blocks systems, the second shifted
    to points 2w+1..4w: a valid bitrade of twice the minimum cardinality."""
    if n < 4 * w:
        raise ValueError("need n >= 4w for point-disjoint copies")
    if host is None:
        host, _ = build_johnson(n, w)
    sides = ([], [])
    for shift in (0, 2 * w):
        for bits in itertools.product((0, 1), repeat=w):
            block = tuple(shift + 2 * i + 1 + bits[i] for i in range(w))
            label = ",".join(str(x) for x in sorted(block))
            sides[sum(bits) % 2].append(host.index_of(label))
    return Bitrade(host, frozenset(sides[0]), frozenset(sides[1]))


MIN_BITRADES = {
    "octahedron": min_bitrade_octahedron,
    "hamming": min_bitrade_hamming,
    "johnson": min_bitrade_johnson,
    "halved_cube": min_bitrade_halved_cube,
    "grassmann": min_bitrade_grassmann,
}


# --- corruption (negative test surface) -----------------------------------------------

def corrupt_one_vertex(T: Bitrade, rng: random.Random) -> Bitrade:
    """A one-vertex corruption that keeps the pair well-formed (disjoint,
    nonempty, independent sides), so the criteria equivalence still applies.

    Moving a vertex to a neighbor is preferred, but in tight hosts (the
    triple graph on six points, the octahedron) no single move preserves
    independence; then a non-neighbor move, a one-vertex addition, or a
    one-vertex drop is used instead."""
    adj = T.host.adj_sets
    support = T.support
    n = T.host.num_vertices
    neighbor_moves, other_moves, adds, drops = [], [], [], []
    for side_name, side in (("t0", T.t0), ("t1", T.t1)):
        for v in sorted(side):
            rest = side - {v}
            for u in range(n):
                if u in support or (adj[u] & rest):
                    continue
                pool = neighbor_moves if u in adj[v] else other_moves
                pool.append((side_name, v, u))
        for u in range(n):
            if u not in support and not (adj[u] & side):
                adds.append((side_name, None, u))
        if len(side) >= 2:
            drops.extend((side_name, v, None) for v in sorted(side))
    for pool in (neighbor_moves, other_moves + adds, drops):
        if pool:
            side_name, v, u = pool[rng.randrange(len(pool))]
            t0, t1 = set(T.t0), set(T.t1)
            side = t0 if side_name == "t0" else t1
            if v is not None:
                side.discard(v)
            if u is not None:
                side.add(u)
            return Bitrade(T.host, frozenset(t0), frozenset(t1))
    raise RuntimeError("no admissible one-vertex corruption exists")


# --- clique designs --------------------------------------------------------------------

def check_clique_design(g: Graph, S: CliqueSystem, dset) -> Verdict:
    """True iff the set meets every clique of S in exactly one vertex.  A
    positive verdict is cross-checked against radius-1 complete regularity
    with the minimum eigenvalue."""
    D = set(int(v) for v in dset)
    if not D:
        return Verdict(False, detail="empty set is not a design")
    for ci, clique in enumerate(S.cliques):
        hits = sum(1 for v in clique if v in D)
        if hits != 1:
            return Verdict(False, witness=(ci, hits),
                           detail="clique not met exactly once")
    if len(D) < g.num_vertices:
        cr = completely_regular_check(g, D)
        k = is_regular(g).value
        th = Fraction(-k, S.s)
        if not (cr.ok and cr.value.rho == 1 and is_matrix_eigenvalue(cr.value, th)):
            raise CrossCheckViolation(
                "design is not completely regular of radius 1 at -k/s")
    return Verdict(True, value=len(D))


def design_difference(g: Graph, S: CliqueSystem, d1, d2) -> Bitrade:
    """The difference pair (D1 - D2, D2 - D1) of two distinct clique designs
    is always a clique bitrade; verified via criterion a before returning."""
    D1, D2 = set(d1), set(d2)
    for D in (D1, D2):
        v = check_clique_design(g, S, D)
        if not v.ok:
            raise ValueError(f"not a clique design: {v.detail} {v.witness}")
    if D1 == D2:
        raise DegenerateEmpty("designs are identical; difference is empty")
    T = Bitrade(g, frozenset(D1 - D2), frozenset(D2 - D1))
    a = check_criterion_a(g, S, T)
    if not a.ok:
        raise CrossCheckViolation(f"design difference failed criterion a: {a.witness}")
    return T
