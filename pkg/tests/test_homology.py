import random
from itertools import combinations

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from ripsnerve import SimplicialComplex
from ripsnerve.complex import TruncatedComplexError, clique_expand, euler_characteristic
from ripsnerve.homology import (
    NotASubcomplexError,
    PrimeField,
    betti_numbers,
    boundary_matrix,
    inclusion_rank,
)

from conftest import FIXTURES, cycle, full_simplex, octahedron, rp2, wedge_of_triangles
import oracles

PRIMES = [2, 3, 5]


def test_prime_field():
    F = PrimeField(7)
    assert all(a * F.inv(a) % 7 == 1 for a in range(1, 7))
    for bad in (0, 1, 4, 9):
        with pytest.raises(ValueError):
            PrimeField(bad)
    with pytest.raises(ZeroDivisionError):
        F.inv(0)


# --- boundary matrices ----------------------------------------------------

def test_triangle_boundary_matrix():
    M = boundary_matrix(cycle(3), 1, 2).to_dense()
    assert M.shape == (3, 3)
    assert (M.sum(axis=0) == 2).all()


def test_full_triangle_top_boundary():
    M = boundary_matrix(full_simplex(3), 2, 2).to_dense()
    assert M.shape == (3, 1) and M[:, 0].tolist() == [1, 1, 1]


def test_signs_follow_vertex_removal():
    M = boundary_matrix(full_simplex(3), 2, 5).to_dense()
    # facets of (0,1,2) in row order (0,1),(0,2),(1,2): signs +, -, +
    assert M[:, 0].tolist() == [1, 4, 1]


def test_degree_out_of_range():
    with pytest.raises(ValueError):
        boundary_matrix(cycle(3), 0)


@pytest.mark.parametrize("p", PRIMES)
def test_boundary_squares_to_zero(named_complex, p):
    _, c = named_complex
    for k in range(1, c.dim):
        d_k = boundary_matrix(c, k, p).to_dense()
        d_k1 = boundary_matrix(c, k + 1, p).to_dense()
        assert not (d_k @ d_k1 % p).any()


@pytest.mark.parametrize("p", PRIMES)
def test_boundary_matches_dense_oracle(named_complex, p):
    _, c = named_complex
    for k in range(1, c.dim + 1):
        expected = oracles.dense_boundary(c.of_dim(k - 1), c.of_dim(k), p)
        assert (boundary_matrix(c, k, p).to_dense() == expected).all()


# --- Betti numbers --------------------------------------------------------

@pytest.mark.parametrize("build,expected", [
    (lambda: cycle(6), (1, 1)),
    (octahedron, (1, 0, 1)),
    (lambda: SimplicialComplex.from_simplices([(i,) for i in range(6)]), (6,)),
    (lambda: full_simplex(6), (1, 0, 0, 0, 0)),
])
def test_betti_examples(build, expected):
    assert betti_numbers(build(), len(expected) - 1, 2).betti == expected


@pytest.mark.parametrize("p", PRIMES)
def test_betti_matches_dense_oracle(named_complex, p):
    _, c = named_complex
    assert betti_numbers(c, 3, p).betti == oracles.betti(list(c), 3, p)


def test_rp2_is_field_sensitive():
    assert betti_numbers(rp2(), 2, 2).betti == (1, 1, 1)
    assert betti_numbers(rp2(), 2, 3).betti == (1, 0, 0)


@pytest.mark.parametrize("p", PRIMES)
def test_euler_matches_alternating_betti(named_complex, p):
    _, c = named_complex
    assert betti_numbers(c, max(c.dim, 0), p).euler() == euler_characteristic(c)


def test_betti_invariant_under_reordering(named_complex):
    _, c = named_complex
    expected = betti_numbers(c, 2, 2).betti
    rnd = random.Random(7)
    for _ in range(10):
        facets = [list(s) for s in c.facets()]
        rnd.shuffle(facets)
        for f in facets:
            rnd.shuffle(f)
        relabel = list(range(max(c.vertices) + 1))
        rnd.shuffle(relabel)
        shuffled = SimplicialComplex.from_simplices([[relabel[v] for v in f] for f in facets])
        assert betti_numbers(shuffled, 2, 2).betti == expected


def test_truncated_complex_rejected():
    c = clique_expand(list(combinations(range(5), 2)), range(5), 2)
    assert betti_numbers(c, 1).betti == (1, 0)
    with pytest.raises(TruncatedComplexError):
        betti_numbers(c, 2)


def test_betti_table_tsv():
    t = betti_numbers(cycle(3), 1, 2)
    assert t.to_tsv() == "0\t1\t2\n1\t1\t2\n"


flag_inputs = st.integers(1, 8).flatmap(
    lambda n: st.tuples(st.just(n), st.sets(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1))
                                            .filter(lambda e: e[0] < e[1])))
)


@settings(max_examples=60, deadline=None)
@given(flag_inputs)
def test_random_flag_complexes_agree_across_fields(g):
    n, edges = g
    c = clique_expand(edges, range(n), 3)
    b2 = betti_numbers(c, 2, 2).betti
    assert b2 == oracles.betti(list(c), 2, 2)
    assert b2 == betti_numbers(c, 2, 3).betti
    assert all(b >= 0 for b in b2)


# --- inclusion rank -------------------------------------------------------

def test_identity_inclusion():
    assert inclusion_rank(cycle(6), cycle(6), 1) == 1


def test_cycle_into_full_simplex():
    assert inclusion_rank(cycle(6), full_simplex(6), 1) == 0


def test_wedge_inclusion():
    a, b = cycle(3), wedge_of_triangles()
    assert inclusion_rank(a, b, 1) == oracles.image_rank(list(a), list(b), 1) == 1


def test_not_a_subcomplex():
    with pytest.raises(NotASubcomplexError):
        inclusion_rank(full_simplex(3), cycle(3), 1)


def test_inclusion_rejects_truncation():
    b = clique_expand(list(combinations(range(5), 2)), range(5), 1)
    with pytest.raises(TruncatedComplexError):
        inclusion_rank(cycle(3), b, 1)


def _random_chain(rnd, n=7):
    """Three nested flag complexes on n vertices."""
    edges = [e for e in combinations(range(n), 2) if rnd.random() < 0.45]
    extra = [e for e in combinations(range(n), 2) if e not in edges and rnd.random() < 0.3]
    more = [e for e in combinations(range(n), 2) if e not in edges + extra and rnd.random() < 0.3]
    a = clique_expand(edges, range(n), 4)
    b = clique_expand(edges + extra, range(n), 4)
    c = clique_expand(edges + extra + more, range(n), 4)
    return a, b, c


@pytest.mark.parametrize("seed", range(25))
@pytest.mark.parametrize("p", [2, 3])
def test_inclusion_rank_properties(seed, p):
    a, b, c = _random_chain(random.Random(seed))
    for k in range(3):
        ab = inclusion_rank(a, b, k, p)
        assert ab == oracles.image_rank(list(a), list(b), k, p)
        assert ab <= min(betti_numbers(a, k, p)[k], betti_numbers(b, k, p)[k])
        assert inclusion_rank(a, a, k, p) == betti_numbers(a, k, p)[k]
        assert inclusion_rank(a, c, k, p) <= min(ab, inclusion_rank(b, c, k, p))
