"""Constructors for the distance-regular graph families in scope, together
with their natural Delsarte clique systems and closed-form parameters.

Vertex labels are canonical strings (digit words, comma-joined point sets,
'/'-joined RREF rows), sorted, so that structures built abstractly can be
located inside host graphs deterministically and serializations diff clean.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb

from .errors import CliquesNotDelsarte, EnumerationTooLarge
from .gfq import (
    DEFAULT_ENUMERATION_CAP,
    enumerate_subspaces,
    gaussian_binomial,
    hyperbolic_form,
    is_totally_isotropic,
    make_field,
    subspace_hyperplanes,
)
from .graphs import CliqueSystem, Graph, IntersectionArray


def _guard(count: int, cap: int, what: str):
    if count > cap:
        raise EnumerationTooLarge(f"{what}: {count} vertices exceeds cap {cap}")


# --- octahedron -------------------------------------------------------------

def build_octahedron(n: int) -> tuple[Graph, CliqueSystem]:
    """n antipodal pairs, all edges except within a pair; the clique system
    is all 2^n transversals (one vertex per pair), each edge lying in
    2^(n-2) of them."""
    if n < 2:
        raise ValueError("need n >= 2")
    labels = sorted(f"{i}{s}" for i in range(n) for s in "+-")
    idx = {lab: i for i, lab in enumerate(labels)}
    edges = [(i, j) for i, j in itertools.combinations(range(2 * n), 2)
             if labels[i].rstrip("+-") != labels[j].rstrip("+-")]
    g = Graph(labels, edges, family="octahedron", params=(n,))
    cliques = []
    for signs in itertools.product("+-", repeat=n):
        cliques.append(tuple(sorted(idx[f"{i}{s}"] for i, s in enumerate(signs))))
    S = CliqueSystem(g, tuple(sorted(cliques)), s=n - 1, m=2 ** (n - 2))
    return g, S


def octahedron_array(n: int) -> IntersectionArray:
    return IntersectionArray(2 * n - 2, (2 * n - 2, 1), (1, 2 * n - 2))


# --- Hamming ----------------------------------------------------------------

def build_hamming(n: int, q: int,
                  cap: int = DEFAULT_ENUMERATION_CAP) -> tuple[Graph, CliqueSystem]:
    """Words of length n over q symbols, adjacent at Hamming distance 1;
    cliques are the q-element lines obtained by freeing one coordinate."""
    if n < 1 or q < 2:
        raise ValueError("need n >= 1, q >= 2")
    _guard(q ** n, cap, f"hamming({n},{q})")
    labels = ["".join(str(d) for d in w)
              for w in itertools.product(range(q), repeat=n)]
    idx = {lab: i for i, lab in enumerate(labels)}
    edges = set()
    cliques = []
    for lab in labels:
        for pos in range(n):
            line = sorted(idx[lab[:pos] + str(v) + lab[pos + 1:]] for v in range(q))
            if idx[lab] == line[0]:
                cliques.append(tuple(line))
                edges.update(itertools.combinations(line, 2))
    g = Graph(labels, sorted(edges), family="hamming", params=(n, q))
    S = CliqueSystem(g, tuple(sorted(cliques)), s=q - 1, m=1)
    return g, S


def hamming_array(n: int, q: int) -> IntersectionArray:
    return IntersectionArray(n * (q - 1),
                             tuple((n - i) * (q - 1) for i in range(n)),
                             tuple(range(1, n + 1)))


# --- Johnson ----------------------------------------------------------------

def johnson_label(subset) -> str:
    return ",".join(str(x) for x in sorted(subset))


def build_johnson(n: int, w: int,
                  cap: int = DEFAULT_ENUMERATION_CAP) -> tuple[Graph, CliqueSystem]:
    """w-subsets of {1..n}, adjacent when sharing w-1 points; one clique per
    (w-1)-subset, consisting of the n-w+1 supersets."""
    if not 2 <= 2 * w <= n:
        raise ValueError("need 2 <= 2w <= n")
    _guard(comb(n, w), cap, f"johnson({n},{w})")
    points = range(1, n + 1)
    labels = sorted(johnson_label(s) for s in itertools.combinations(points, w))
    idx = {lab: i for i, lab in enumerate(labels)}
    edges = set()
    cliques = []
    for core in itertools.combinations(points, w - 1):
        members = sorted(idx[johnson_label(core + (x,))]
                         for x in points if x not in core)
        cliques.append(tuple(members))
        edges.update(itertools.combinations(members, 2))
    g = Graph(labels, sorted(edges), family="johnson", params=(n, w))
    S = CliqueSystem(g, tuple(sorted(cliques)), s=n - w, m=1)
    return g, S


def johnson_array(n: int, w: int) -> IntersectionArray:
    return IntersectionArray(w * (n - w),
                             tuple((w - i) * (n - w - i) for i in range(w)),
                             tuple(i * i for i in range(1, w + 1)))


# --- halved cube ------------------------------------------------------------

def build_halved_cube(n: int, check_delsarte: bool = True,
                      cap: int = DEFAULT_ENUMERATION_CAP) -> tuple[Graph, CliqueSystem]:
    """Even-weight binary words of length n, adjacent at Hamming distance 2;
    one clique per odd word: its n cube-neighbors.  The cliques reach the
    Hoffman bound only for even n, so odd n is rejected unless the caller
    asks for the raw pair."""
    if n < 4:
        raise ValueError("need n >= 4")
    if check_delsarte and n % 2 == 1:
        raise CliquesNotDelsarte(
            f"halved {n}-cube cliques have order {n} < Hoffman bound for odd n")
    _guard(2 ** (n - 1), cap, f"halved_cube({n})")
    labels = sorted("".join(str(b) for b in w)
                    for w in itertools.product((0, 1), repeat=n)
                    if sum(w) % 2 == 0)
    idx = {lab: i for i, lab in enumerate(labels)}
    edges = set()
    cliques = []
    for w in itertools.product((0, 1), repeat=n):
        if sum(w) % 2 == 0:
            continue
        members = []
        for pos in range(n):
            flipped = list(w)
            flipped[pos] ^= 1
            members.append(idx["".join(str(b) for b in flipped)])
        members.sort()
        cliques.append(tuple(members))
        edges.update(itertools.combinations(members, 2))
    g = Graph(labels, sorted(edges), family="halved_cube", params=(n,))
    S = CliqueSystem(g, tuple(sorted(cliques)), s=n - 1, m=2)
    return g, S


def halved_cube_array(n: int) -> IntersectionArray:
    rho = n // 2
    return IntersectionArray(comb(n, 2),
                             tuple(comb(n - 2 * i, 2) for i in range(rho)),
                             tuple(comb(2 * i, 2) for i in range(1, rho + 1)))


# --- Shrikhande and Doob ------------------------------------------------------

_SHRIKHANDE_DIFFS = {(0, 1), (0, 3), (1, 0), (3, 0), (1, 1), (3, 3)}


def _shrikhande_factor():
    labels = [f"{a}{b}" for a in range(4) for b in range(4)]
    adj = {}
    for a in range(4):
        for b in range(4):
            adj[f"{a}{b}"] = sorted(
                f"{(a + da) % 4}{(b + db) % 4}" for da, db in _SHRIKHANDE_DIFFS)
    return labels, adj


def _k4_factor():
    labels = [str(v) for v in range(4)]
    adj = {l: sorted(x for x in labels if x != l) for l in labels}
    return labels, adj


def build_shrikhande() -> Graph:
    """16 pairs over Z4 x Z4, adjacent when the difference lies in the
    six-element difference set."""
    labels, adj = _shrikhande_factor()
    labels = sorted(labels)
    idx = {lab: i for i, lab in enumerate(labels)}
    edges = sorted({tuple(sorted((idx[l], idx[o]))) for l in labels for o in adj[l]})
    return Graph(labels, edges, family="shrikhande", params=())


def build_doob(m: int, n: int, cap: int = DEFAULT_ENUMERATION_CAP) -> Graph:
    """Cartesian product of m Shrikhande factors and n complete 4-factors.
    No clique system: its natural cliques are too small for a Delsarte pair."""
    if m < 1 or n < 0:
        raise ValueError("need m >= 1, n >= 0")
    _guard(16 ** m * 4 ** n, cap, f"doob({m},{n})")
    factors = [_shrikhande_factor() for _ in range(m)] + \
              [_k4_factor() for _ in range(n)]
    words = [tuple(w) for w in itertools.product(*(f[0] for f in factors))]
    labels = sorted(".".join(w) for w in words)
    idx = {lab: i for i, lab in enumerate(labels)}
    edges = set()
    for w in words:
        lab = ".".join(w)
        for pos, (_, adj) in enumerate(factors):
            for other in adj[w[pos]]:
                nb = ".".join(w[:pos] + (other,) + w[pos + 1:])
                edges.add(tuple(sorted((idx[lab], idx[nb]))))
    return Graph(labels, sorted(edges), family="doob", params=(m, n))


def doob_array(m: int, n: int) -> IntersectionArray:
    return hamming_array(2 * m + n, 4)


# --- Grassmann ----------------------------------------------------------------

def _edges_from_buckets(buckets: dict) -> list[tuple[int, int]]:
    edges = []
    for key in sorted(buckets):
        members = sorted(buckets[key])
        edges.extend(itertools.combinations(members, 2))
    return edges


def build_grassmann(n: int, d: int, q: int,
                    cap: int = DEFAULT_ENUMERATION_CAP) -> tuple[Graph, CliqueSystem]:
    """d-dimensional subspaces of F_q^n, adjacent when meeting in dimension
    d-1.  Adjacency is assembled by bucketing vertices over their
    (d-1)-subspaces: adjacent vertices share exactly one, so within-bucket
    pairs list every edge exactly once, and the buckets are the cliques of
    the (M,1) system."""
    if not 2 <= 2 * d <= n:
        raise ValueError("need 2 <= 2d <= n")
    field = make_field(q)
    count = gaussian_binomial(n, d, q)
    _guard(count, cap, f"grassmann({n},{d},{q})")
    subs = enumerate_subspaces(n, d, field, cap=cap)
    labels = sorted(s.label() for s in subs)
    idx = {lab: i for i, lab in enumerate(labels)}
    buckets: dict[str, list[int]] = {}
    for s in subs:
        vi = idx[s.label()]
        for h in subspace_hyperplanes(s):
            buckets.setdefault(h.label(), []).append(vi)
    clique_order = gaussian_binomial(n - d + 1, 1, q)
    for key, members in buckets.items():
        assert len(members) == clique_order, key
    g = Graph(labels, _edges_from_buckets(buckets),
              family="grassmann", params=(n, d, q))
    cliques = tuple(sorted(tuple(sorted(buckets[k])) for k in buckets))
    S = CliqueSystem(g, cliques, s=clique_order - 1, m=1)
    return g, S


def grassmann_array(n: int, d: int, q: int) -> IntersectionArray:
    b = tuple(q ** (2 * i + 1)
              * gaussian_binomial(d - i, 1, q)
              * gaussian_binomial(n - d - i, 1, q) for i in range(d))
    c = tuple(gaussian_binomial(i, 1, q) ** 2 for i in range(1, d + 1))
    return IntersectionArray(b[0], b, c)


# --- dual polar (hyperbolic type) ------------------------------------------------

def build_dual_polar_D(d: int, q: int,
                       cap: int = DEFAULT_ENUMERATION_CAP) -> Graph:
    """Maximal totally isotropic subspaces of the hyperbolic form on
    F_q^{2d}, adjacent when meeting in dimension d-1.  Bipartite and
    (q^d-1)/(q-1)-regular; each isotropic hyperplane lies in exactly two
    vertices, so buckets have size two."""
    if d < 2:
        raise ValueError("need d >= 2")
    field = make_field(q)
    _guard(gaussian_binomial(2 * d, d, q), cap, f"dual_polar_D({d},{q})")
    form = hyperbolic_form(d, field)
    vertices = [s for s in enumerate_subspaces(2 * d, d, field, cap=cap)
                if is_totally_isotropic(s, form)]
    labels = sorted(s.label() for s in vertices)
    idx = {lab: i for i, lab in enumerate(labels)}
    buckets: dict[str, list[int]] = {}
    for s in vertices:
        vi = idx[s.label()]
        for h in subspace_hyperplanes(s):
            buckets.setdefault(h.label(), []).append(vi)
    for key, members in buckets.items():
        assert len(members) == 2, key
    return Graph(labels, _edges_from_buckets(buckets),
                 family="dual_polar_D", params=(d, q))


def dual_polar_array(d: int, q: int) -> IntersectionArray:
    b = tuple(q ** i * gaussian_binomial(d - i, 1, q) for i in range(d))
    c = tuple(gaussian_binomial(i, 1, q) for i in range(1, d + 1))
    return IntersectionArray(b[0], b, c)


# --- registry -----------------------------------------------------------------

@dataclass(frozen=True)
class FamilySpec:
    """One graph family: builder, arity, closed-form expectations."""

    name: str
    arity: int
    build: object                 # params -> Graph | (Graph, CliqueSystem)
    array: object | None          # params -> IntersectionArray
    theta_min: object | None      # params -> int
    has_cliques: bool


FAMILIES = {
    "octahedron": FamilySpec(
        "octahedron", 1, build_octahedron,
        lambda n: octahedron_array(n), lambda n: -2, True),
    "hamming": FamilySpec(
        "hamming", 2, build_hamming,
        lambda n, q: hamming_array(n, q), lambda n, q: -n, True),
    "johnson": FamilySpec(
        "johnson", 2, build_johnson,
        lambda n, w: johnson_array(n, w), lambda n, w: -w, True),
    "halved_cube": FamilySpec(
        "halved_cube", 1, build_halved_cube,
        lambda n: halved_cube_array(n), lambda n: -(n // 2), True),
    "shrikhande": FamilySpec(
        "shrikhande", 0, build_shrikhande,
        lambda: doob_array(1, 0), lambda: -2, False),
    "doob": FamilySpec(
        "doob", 2, build_doob,
        lambda m, n: doob_array(m, n), lambda m, n: -(2 * m + n), False),
    "grassmann": FamilySpec(
        "grassmann", 3, build_grassmann,
        lambda n, d, q: grassmann_array(n, d, q),
        lambda n, d, q: -gaussian_binomial(d, 1, q), True),
    "dual_polar_D": FamilySpec(
        "dual_polar_D", 2, build_dual_polar_D,
        lambda d, q: dual_polar_array(d, q),
        lambda d, q: -gaussian_binomial(d, 1, q), False),
}


def parse_family(spec: str) -> tuple[str, tuple[int, ...]]:
    """Parse 'name:p1,p2,...' strings, e.g. 'johnson:6,3' or 'shrikhande'."""
    name, _, rest = spec.partition(":")
    if name not in FAMILIES:
        raise ValueError(f"unknown family {name!r}; known: {sorted(FAMILIES)}")
    params = tuple(int(x) for x in rest.split(",")) if rest else ()
    if len(params) != FAMILIES[name].arity:
        raise ValueError(
            f"{name} takes {FAMILIES[name].arity} parameters, got {len(params)}")
    return name, params


def build_family(name: str, params: tuple[int, ...], cap: int | None = None):
    """Build a family instance; returns (Graph, CliqueSystem | None)."""
    spec = FAMILIES[name]
    kwargs = {}
    if cap is not None and name not in ("octahedron", "shrikhande"):
        kwargs["cap"] = cap
    out = spec.build(*params, **kwargs)
    if isinstance(out, tuple):
        return out
    return out, None


def family_array(name: str, params: tuple[int, ...]) -> IntersectionArray:
    spec = FAMILIES[name]
    if spec.array is None:
        raise ValueError(f"no closed-form array for {name}")
    return spec.array(*params)
