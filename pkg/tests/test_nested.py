import json
from pathlib import Path

import numpy as np
import pytest

from ripsnerve.homology import betti_numbers
from ripsnerve.metric import FiniteMetric, rips
from ripsnerve.nested import (
    NestedSamplePair,
    example_space,
    example_space_points,
    extract,
    extract_homology,
    greedy_net,
    select_nested_samples,
)

from fixtures import NESTED, geodesic_circle, noisy_circle

GOLDEN = json.loads((Path(__file__).parent / "golden" / "nested.json").read_text())


# --- nets -----------------------------------------------------------------

def test_circle_net_sizes():
    pair = select_nested_samples(geodesic_circle(), 0.9, 0.3, 0.15)
    assert (len(pair.idx1), len(pair.idx2)) == (10, 20)


def test_single_point():
    pair = select_nested_samples(FiniteMetric(np.zeros((1, 1))), 1.0, 0.3, 0.1)
    assert pair.idx1 == pair.idx2 == (0,)


def test_equal_radii_give_equal_nets():
    pair = select_nested_samples(noisy_circle(), 0.6, 0.2, 0.2)
    assert set(pair.idx1) == set(pair.idx2)


@pytest.mark.parametrize("eps1,eps2,r", [(0.3, 0.4, 0.9), (0.5, 0.1, 0.9), (0.3, 0.0, 0.9), (0.45, 0.1, 0.9)])
def test_parameter_order_enforced(eps1, eps2, r):
    with pytest.raises(ValueError):
        select_nested_samples(geodesic_circle(), r, eps1, eps2)


@pytest.mark.parametrize("seed", range(5))
def test_net_properties(seed):
    X = noisy_circle(seed=seed)
    pair = select_nested_samples(X, 0.6, 0.25, 0.1, seed=seed)
    assert set(pair.idx1) <= set(pair.idx2) <= set(range(X.n))
    for idx, eps in ((pair.idx1, 0.25), (pair.idx2, 0.1)):
        sub = X.d[np.ix_(idx, idx)]
        assert (sub[~np.eye(len(idx), dtype=bool)] >= eps).all()
        assert (X.d[:, idx].min(axis=1) < eps).all()


def test_net_is_deterministic():
    X = noisy_circle()
    assert greedy_net(X.d, 0.2, seed=3) == greedy_net(X.d, 0.2, seed=3)


def test_pair_rejects_non_nested():
    with pytest.raises(ValueError):
        NestedSamplePair(geodesic_circle(), (0, 1), (1, 2), 0.9, "open")


# --- extraction against frozen values -------------------------------------

@pytest.mark.parametrize("name", sorted(NESTED))
def test_extraction_matches_golden(name):
    build, r, eps1, eps2, degrees = NESTED[name]
    gold = GOLDEN[name]
    X = build()
    assert X.n == gold["points"]
    pair = select_nested_samples(X, r, eps1, eps2)
    assert [len(pair.idx1), len(pair.idx2)] == gold["net_sizes"]
    for k in degrees:
        ex = extract(pair, k, 2)
        assert ex.rank == gold["rank"][str(k)]
        assert betti_numbers(ex.small, k)[k] == gold["betti_small"][k]
        assert betti_numbers(ex.large, k)[k] == gold["betti_large"][k]
        assert ex.rank <= min(gold["betti_small"][k], gold["betti_large"][k])


def test_noisy_circle_rank_below_small_betti():
    build, r, eps1, eps2, _ = NESTED["noisy_circle"]
    ex = extract(select_nested_samples(build(), r, eps1, eps2), 1, 2)
    assert ex.rank == 1 < betti_numbers(ex.small, 1)[1]


def test_two_circles_components():
    build, r, eps1, eps2, _ = NESTED["two_circles"]
    assert extract_homology(select_nested_samples(build(), r, eps1, eps2), 0) == 2


@pytest.mark.parametrize("eps1,eps2", [(0.3, 0.15), (0.3, 0.1), (0.25, 0.25), (0.2, 0.1), (0.15, 0.05), (0.1, 0.1)])
def test_refinement_stability_on_circle(eps1, eps2):
    pair = select_nested_samples(geodesic_circle(), 0.9, eps1, eps2)
    assert extract_homology(pair, 1, 2) == 1


@pytest.mark.parametrize("seed", range(6))
def test_sandwich_bound(seed):
    X = noisy_circle(seed=seed)
    r = 0.6
    n1 = greedy_net(X.d, 0.28)
    n2 = greedy_net(X.d, 0.15, start=n1)
    n3 = greedy_net(X.d, 0.08, start=n2)

    def rank(a, b):
        return extract_homology(NestedSamplePair(X, a, b, r, "open"), 1)

    assert rank(n1, n3) <= min(rank(n1, n2), rank(n2, n3))


def test_provenance_block():
    pair = select_nested_samples(geodesic_circle(), 0.9, 0.3, 0.15)
    info = extract(pair, 1).provenance(pair)
    assert info["net_sizes"] == [10, 20]
    assert info["f_vector_small"] == [10, 20, 10]
    assert info["truncated_large"] == 2


# --- the gapped-circle space ----------------------------------------------

def test_example_space_constraints():
    with pytest.raises(ValueError):
        example_space_points(0.2, 4.0, 10)
    with pytest.raises(ValueError):
        example_space_points(0.05, 3.0, 10)


def test_example_space_geometry():
    P = example_space_points(0.05, 4.0, 10)
    small = P[P[:, 0] <= -10]
    assert np.allclose(np.hypot(small[:, 0] + 10.5, small[:, 1]), 0.5)
    # the arc stops exactly at the two ends of a chord of length 0.05 on the far left
    angles = np.abs(np.arctan2(small[:, 1], small[:, 0] + 10.5))
    ends = small[np.isclose(angles, angles.max())]
    assert len(ends) == 2 and np.hypot(*(ends[0] - ends[1])) == pytest.approx(0.05)
    assert P[:, 0].max() == pytest.approx(4.0)


def test_example_space_connected_at_scale():
    X = example_space(0.05, 4.0, 10)
    assert betti_numbers(rips(X, 1.2, "open", 1), 0).betti == (1,)


@pytest.mark.slow
def test_dense_example_space_below_gap():
    gold = GOLDEN["example_space_dense"]
    X = example_space(0.05, 4.0, gold["density"])
    assert X.n == gold["points"]
    assert betti_numbers(rips(X, gold["scale"], "open", 2), 1).betti == tuple(gold["betti"]) == (1, 1)
