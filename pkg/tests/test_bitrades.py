"""Bitrade criteria, minimality, trade subgraphs, designs, corruptions."""

import itertools
import random

import pytest

from drgtrades.bitrades import (
    Bitrade,
    bitrade_from_json,
    bitrade_to_json,
    check_clique_design,
    check_criterion_a,
    check_criterion_b,
    check_criterion_c,
    check_minimality,
    corrupt_one_vertex,
    design_difference,
    double_johnson_bitrade,
    min_bitrade_grassmann,
    min_bitrade_halved_cube,
    min_bitrade_hamming,
    min_bitrade_johnson,
    min_bitrade_octahedron,
    pseudo_bitrade_doob,
    verify_bitrade,
    verify_delsarte_pair,
)
from drgtrades.errors import DegenerateEmpty
from drgtrades.families import (
    build_doob,
    build_halved_cube,
    build_hamming,
    build_johnson,
    build_octahedron,
    doob_array,
    hamming_array,
)
from drgtrades.graphs import distance_regularity_check
from drgtrades.spectral import wd_bound


@pytest.fixture(scope="module")
def johnson63():
    g, S = build_johnson(6, 3)
    return g, S


@pytest.fixture(scope="module")
def hamming33():
    g, S = build_hamming(3, 3)
    return g, S


# --- type invariants -----------------------------------------------------------

def test_bitrade_rejects_overlap(johnson63):
    g, _ = johnson63
    with pytest.raises(ValueError):
        Bitrade(g, frozenset([0, 1]), frozenset([1, 2]))


def test_bitrade_rejects_dependent_side(johnson63):
    g, _ = johnson63
    u = g.index_of("1,2,3")
    v = g.index_of("1,2,4")  # adjacent
    far = g.index_of("4,5,6")
    with pytest.raises(ValueError):
        Bitrade(g, frozenset([u, v]), frozenset([far]))


# --- Pasch configuration ----------------------------------------------------------

def test_pasch_blocks_match_parity_form(johnson63):
    g, _ = johnson63
    T = min_bitrade_johnson(6, 3, host=g)
    assert T.labels(T.t0) == ["1,3,5", "1,4,6", "2,3,6", "2,4,5"]
    assert T.labels(T.t1) == ["1,3,6", "1,4,5", "2,3,5", "2,4,6"]


def test_pasch_full_verification(johnson63):
    g, S = johnson63
    T = min_bitrade_johnson(6, 3, host=g)
    rep = verify_bitrade(g, S, T)
    assert rep.all_pass and rep.criteria_agree
    assert rep.cardinality == 8 == rep.bound
    assert rep.minimal
    assert rep.subgraph_array.b == (3, 2, 1) and rep.subgraph_array.c == (1, 2, 3)
    assert rep.shell_sizes == (1, 3, 3, 1)


def test_pasch_inside_larger_host():
    g, S = build_johnson(8, 3)
    T = min_bitrade_johnson(8, 3, host=g)
    rep = verify_bitrade(g, S, T)
    assert rep.all_pass and rep.minimal and rep.bound == 8


def test_johnson_4_2_square():
    g, S = build_johnson(4, 2)
    T = min_bitrade_johnson(4, 2, host=g)
    rep = verify_bitrade(g, S, T)
    assert rep.all_pass and rep.cardinality == 4 and rep.minimal


# --- negative instances -------------------------------------------------------------

def test_arbitrary_singletons_fail_all_criteria():
    g, S = build_hamming(3, 2)
    u = g.index_of("000")
    v = g.index_of("011")
    T = Bitrade(g, frozenset([u]), frozenset([v]))
    a = check_criterion_a(g, S, T)
    b = check_criterion_b(g, S, T)
    c = check_criterion_c(g, S, T)
    assert not a.ok and not b.ok and not c.ok
    assert a.witness is not None and b.witness is not None


@pytest.mark.parametrize("maker", [
    lambda: (build_octahedron(3), min_bitrade_octahedron),
    lambda: (build_hamming(3, 3), min_bitrade_hamming),
    lambda: (build_johnson(6, 3), min_bitrade_johnson),
    lambda: (build_halved_cube(6), min_bitrade_halved_cube),
])
def test_criteria_agree_under_corruption(maker):
    (g, S), ctor = maker()
    T = ctor(*g.params, host=g)
    rng = random.Random(20240 + g.num_vertices)
    rep = verify_bitrade(g, S, T)
    assert rep.all_pass and rep.criteria_agree
    for _ in range(12):
        bad = corrupt_one_vertex(T, rng)
        a = check_criterion_a(g, S, bad)
        b = check_criterion_b(g, S, bad)
        c = check_criterion_c(g, S, bad)
        assert a.ok == b.ok == c.ok


# --- minimality / double Pasch --------------------------------------------------------

def test_double_pasch_not_minimal_not_isometric():
    g, S = build_johnson(12, 3)
    T = double_johnson_bitrade(12, 3, host=g)
    a = check_criterion_a(g, S, T)
    assert a.ok  # still a valid bitrade
    rep = check_minimality(g, S, T)
    assert T.cardinality == 16 and rep.bound == 8
    assert not rep.meets_bound and not rep.isometric.ok and not rep.minimal


def test_minimality_positive_direction(johnson63):
    g, S = johnson63
    T = min_bitrade_johnson(6, 3, host=g)
    rep = check_minimality(g, S, T)
    assert rep.meets_bound and rep.isometric.ok and rep.minimal


# --- hamming / latin --------------------------------------------------------------------

def test_hamming_bitrade_33(hamming33):
    g, S = hamming33
    T = min_bitrade_hamming(3, 3, host=g)
    rep = verify_bitrade(g, S, T)
    assert rep.all_pass and rep.theta == -3
    assert rep.cardinality == 8 == rep.bound and rep.minimal
    assert rep.subgraph_array.b == (3, 2, 1)


def test_hamming_bitrade_binary_cases():
    g, S = build_hamming(2, 2)
    T = min_bitrade_hamming(2, 2, host=g)
    assert verify_bitrade(g, S, T).all_pass
    g, S = build_hamming(3, 2)
    T = min_bitrade_hamming(3, 2, host=g)
    assert T.cardinality == 8 == g.num_vertices
    assert verify_bitrade(g, S, T).all_pass


def cyclic_latin_square(order, shift):
    return {(r, c, (r + c + shift) % order)
            for r in range(order) for c in range(order)}


def latin_vertices(g, cells):
    return {g.index_of(f"{r}{c}{v}") for r, c, v in cells}


def all_latin_squares_order3():
    perms = list(itertools.permutations(range(3)))
    squares = []
    for rows in itertools.product(perms, repeat=3):
        if all(len({rows[r][c] for r in range(3)}) == 3 for c in range(3)):
            squares.append({(r, c, rows[r][c]) for r in range(3) for c in range(3)})
    return squares


def test_twelve_latin_squares_order3(hamming33):
    g, S = hamming33
    squares = all_latin_squares_order3()
    assert len(squares) == 12
    for sq in squares:
        assert check_clique_design(g, S, latin_vertices(g, sq)).ok


def test_design_difference_of_latin_squares(hamming33):
    g, S = hamming33
    d1 = latin_vertices(g, cyclic_latin_square(3, 0))
    d2 = latin_vertices(g, cyclic_latin_square(3, 1))
    T = design_difference(g, S, d1, d2)
    assert check_criterion_a(g, S, T).ok
    assert T.cardinality == 18


def test_design_difference_degenerate(hamming33):
    g, S = hamming33
    d = latin_vertices(g, cyclic_latin_square(3, 0))
    with pytest.raises(DegenerateEmpty):
        design_difference(g, S, d, d)


def test_design_difference_rejects_non_design(hamming33):
    g, S = hamming33
    d = latin_vertices(g, cyclic_latin_square(3, 0))
    with pytest.raises(ValueError):
        design_difference(g, S, d, {0, 1, 2})


def test_intercalate_swap_order4():
    g, S = build_hamming(3, 4)
    base = {(r, c, (r + c) % 4) for r in range(4) for c in range(4)}
    swapped = set(base)
    for r, c in ((0, 0), (0, 2), (2, 0), (2, 2)):
        swapped.discard((r, c, (r + c) % 4))
        swapped.add((r, c, (r + c + 2) % 4))
    d1 = latin_vertices(g, base)
    d2 = latin_vertices(g, swapped)
    T = design_difference(g, S, d1, d2)
    assert T.cardinality == 8
    assert check_criterion_a(g, S, T).ok


def test_empty_set_is_not_design(hamming33):
    g, S = hamming33
    assert not check_clique_design(g, S, set()).ok


# --- halved cube ---------------------------------------------------------------------------

def test_halved_cube_bitrades():
    g, S = build_halved_cube(4)
    T = min_bitrade_halved_cube(4, host=g)
    assert T.labels(T.t0) == ["0000", "1111"]
    rep = verify_bitrade(g, S, T)
    assert rep.all_pass and rep.minimal and rep.cardinality == 4
    g, S = build_halved_cube(6)
    T = min_bitrade_halved_cube(6, host=g)
    rep = verify_bitrade(g, S, T)
    assert rep.all_pass and rep.minimal and rep.cardinality == 8
    assert rep.subgraph_array.b == (3, 2, 1)


def test_extended_code_is_design_in_halved_8_cube():
    g, S = build_halved_cube(8)
    gens = (0b11111111, 0b01010101, 0b00110011, 0b00001111)
    words = set()
    for mask in range(16):
        w = 0
        for i, gvec in enumerate(gens):
            if (mask >> i) & 1:
                w ^= gvec
        words.add(w)
    labels = {format(w, "08b") for w in words}
    assert len(labels) == 16
    dset = {g.index_of(lab) for lab in labels}
    v = check_clique_design(g, S, dset)
    assert v.ok and v.value == 16


# --- octahedron ------------------------------------------------------------------------------

def test_octahedron_square_bitrade():
    g, S = build_octahedron(3)
    T = min_bitrade_octahedron(3, host=g)
    rep = verify_bitrade(g, S, T)
    assert rep.all_pass and rep.minimal and rep.cardinality == 4 == rep.bound


def test_octahedron_design_is_antipodal_pair():
    g, S = build_octahedron(3)
    pair = {g.index_of("0+"), g.index_of("0-")}
    assert check_clique_design(g, S, pair).ok


# --- grassmann -------------------------------------------------------------------------------

def test_grassmann_bitrade_4_2_2():
    from drgtrades.families import build_grassmann
    g, S = build_grassmann(4, 2, 2)
    T = min_bitrade_grassmann(4, 2, 2, host=g)
    rep = verify_bitrade(g, S, T)
    assert rep.all_pass and rep.cardinality == 6 == rep.bound and rep.minimal
    assert rep.subgraph_array.b == (3, 2) and rep.subgraph_array.c == (1, 3)


def test_grassmann_bitrade_extension_6_2_2():
    from drgtrades.families import build_grassmann
    g, S = build_grassmann(6, 2, 2)
    T = min_bitrade_grassmann(6, 2, 2, host=g)
    rep = verify_bitrade(g, S, T)
    assert rep.all_pass and rep.cardinality == 6 == rep.bound and rep.minimal


# --- doob ------------------------------------------------------------------------------------

def test_doob_pseudo_bitrades():
    g = build_doob(1, 0)
    T, verdict = pseudo_bitrade_doob(1, 0, host=g)
    assert verdict.ok and T.cardinality == 4
    assert wd_bound(doob_array(1, 0), -2) == 4

    g = build_doob(1, 1)
    T, verdict = pseudo_bitrade_doob(1, 1, host=g)
    assert verdict.ok and T.cardinality == 8
    assert wd_bound(doob_array(1, 1), -3) == 8
    # trade subgraph is the 3-cube
    from drgtrades.graphs import induced_subgraph
    sub, _ = induced_subgraph(g, T.support)
    assert distance_regularity_check(sub).value == hamming_array(3, 2)


def test_doob_2_0_pseudo_bitrade():
    g = build_doob(2, 0)
    T, verdict = pseudo_bitrade_doob(2, 0, host=g)
    assert verdict.ok and T.cardinality == 16
    assert wd_bound(doob_array(2, 0), -4) == 16


# --- delsarte pair reports ----------------------------------------------------------------------

def test_delsarte_pair_reports(johnson63, hamming33):
    g, S = johnson63
    assert verify_delsarte_pair(g, S).ok
    g, S = hamming33
    assert verify_delsarte_pair(g, S).ok


def test_halved_5_cube_is_not_delsarte():
    g, S = build_halved_cube(5, check_delsarte=False)
    rep = verify_delsarte_pair(g, S)
    assert not rep.ok
    assert rep.hoffman_order == 6 and S.s + 1 == 5


# --- serialization --------------------------------------------------------------------------------

def test_bitrade_json_roundtrip(johnson63):
    g, S = johnson63
    T = min_bitrade_johnson(6, 3, host=g)
    doc = bitrade_to_json(T)
    assert doc["host"] == "johnson:6,3"
    T2 = bitrade_from_json(g, doc)
    assert T2.t0 == T.t0 and T2.t1 == T.t1
