import io
import math

import pytest

from zagreb.combinatorics import MAX_ORDER
from zagreb.graph import (
    DegreeSequence,
    GnpParams,
    Seed,
    SimpleGraph,
    degree_sequence,
    read_edge_list,
    sample_gnp_degrees,
)
from zagreb.indices import (
    check_star_identity,
    complement_zagreb_check,
    star_count,
    star_vector,
    transform_matrix,
    zagreb_index,
    zagreb_vector,
)
from oracles import all_pairs, count_stars_brute

P3 = degree_sequence(read_edge_list(io.StringIO("1 2\n2 3")))
K4 = degree_sequence(SimpleGraph.complete(4))
EMPTY5 = degree_sequence(SimpleGraph.empty(5))
SINGLE_EDGE = degree_sequence(SimpleGraph(2, ((1, 2),)))


def test_zagreb_index_examples():
    assert zagreb_index(P3, 2) == 6
    assert zagreb_index(K4, 2) == 36  # complete graph: n (n-1)^k
    assert zagreb_index(EMPTY5, 3) == 0


def test_zagreb_vector_examples():
    assert zagreb_vector(P3, 3).values == (4, 6, 10)
    assert zagreb_vector(K4, 2).values == (12, 36)
    assert zagreb_vector(SINGLE_EDGE, 3).values == (2, 2, 2)


def test_star_count_examples():
    assert star_count(P3, 2) == 4  # both orientations: twice the edges
    assert star_count(P3, 3) == 1  # the single wedge
    assert star_count(K4, 3) == 12  # 4 * C(3, 2)


def test_star_vector_examples():
    assert star_vector(P3, 2).values == (4, 1)
    assert star_vector(EMPTY5, 4).values == (0, 0, 0, 0)
    assert star_vector(K4, 3).values == (12, 12, 4)


def test_star_count_brute_force_all_graphs_up_to_5():
    # Exhaustive: every labeled graph on n <= 5 vertices, every star size,
    # against literal center + leaf-subset enumeration.
    for n in range(2, 6):
        pairs = all_pairs(n)
        for mask in range(1 << len(pairs)):
            edges = tuple(
                (i + 1, j + 1) for t, (i, j) in enumerate(pairs) if mask >> t & 1
            )
            d = degree_sequence(SimpleGraph(n, edges))
            for m in range(2, n + 1):
                assert star_count(d, m) == count_stars_brute(n, edges, m)


def test_transform_matrix_values():
    assert transform_matrix(1).entries == ((1,),)
    assert transform_matrix(2).entries == ((1, 0), (1, 2))
    assert transform_matrix(3).entries[2] == (1, 6, 6)


def test_transform_matrix_lower_triangular_with_factorial_diagonal():
    t = transform_matrix(6)
    for m in range(6):
        assert t.entries[m][m] == math.factorial(m + 1)
        for l in range(m + 1, 6):
            assert t.entries[m][l] == 0


def test_star_identity_examples():
    chk = check_star_identity(P3, 2)
    assert chk.holds and chk.lhs == (4, 6) and chk.rhs == (4, 6)
    assert check_star_identity(K4, 3).holds  # 108 = 12 + 6*12 + 6*4
    assert check_star_identity(EMPTY5, 5).holds


def test_star_identity_on_seeded_graphs():
    for r in range(100):
        n = 2 + (r * 7) % 49
        d = sample_gnp_degrees(GnpParams(n, (0.1, 0.5, 0.9)[r % 3]), Seed(11, r))
        assert check_star_identity(d, 8).holds


def test_complement_identity_examples():
    assert complement_zagreb_check(K4, 2).holds  # complement empty: 4*9 + 0 = 36
    chk = complement_zagreb_check(P3, 1)
    assert chk.holds and chk.lhs == (4,)  # n(n-1) - Zbar = 6 - 2 = 4
    for k in range(1, 6):
        d = sample_gnp_degrees(GnpParams(20, 0.5), Seed(5, k))
        assert complement_zagreb_check(d, k).holds


def test_two_star_count_equals_first_index():
    for r in range(30):
        d = sample_gnp_degrees(GnpParams(25, 0.4), Seed(99, r))
        assert star_count(d, 2) == zagreb_index(d, 1)


def test_complete_graph_attains_index_bound():
    for n in (2, 5, 9):
        d = degree_sequence(SimpleGraph.complete(n))
        for k in (1, 3, 5):
            assert zagreb_index(d, k) == n * (n - 1) ** k
    # remove one edge: strictly below the bound
    near = SimpleGraph(5, tuple(e for e in SimpleGraph.complete(5).edges if e != (1, 2)))
    d = degree_sequence(near)
    assert zagreb_index(d, 3) < 5 * 4**3


def test_vector_invariants_reject_parity_violations():
    from zagreb.indices import IndexVector, StarVector

    with pytest.raises(ValueError):
        IndexVector(3, 1, (3,))  # first-order index must be even
    with pytest.raises(ValueError):
        StarVector(3, 1, (3,))  # 2-star count must be even


def test_order_bounds():
    with pytest.raises(ValueError):
        zagreb_index(P3, 0)
    with pytest.raises(ValueError):
        zagreb_index(P3, MAX_ORDER + 1)
    with pytest.raises(ValueError):
        star_count(P3, 1)
    with pytest.raises(ValueError):
        zagreb_vector(P3, -2)


def test_exact_values_beyond_int64():
    # n=50, k=12 overflows the int64 fast-path bound; the fallback must
    # agree with plain Python arithmetic.
    d = sample_gnp_degrees(GnpParams(50, 0.5), Seed(123, 0))
    assert 50 * 49**12 > 2**63
    vec = zagreb_vector(d, 12)
    degs = [int(x) for x in d]
    for m in range(1, 13):
        assert vec.values[m - 1] == sum(x**m for x in degs)
    sv = star_vector(d, 12)
    for m in range(1, 13):
        assert sv.values[m - 1] == sum(math.comb(x, m) for x in degs)


def test_fast_and_exact_paths_agree_near_boundary():
    d = DegreeSequence(6, [5, 5, 5, 5, 5, 5])
    g6 = degree_sequence(SimpleGraph.complete(6))
    assert list(d) == list(g6)
    for k in (20, 24, 30):  # 6*5^24 straddles the int64 bound
        assert zagreb_vector(d, k).values[-1] == 6 * 5**k
