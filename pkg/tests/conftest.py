import math

import numpy as np
import pytest

from ripsnerve import SimplicialComplex
from ripsnerve.complex import clique_expand

# minimal 6-vertex triangulation of the projective plane
RP2_FACETS = [
    (0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5), (0, 1, 5),
    (1, 2, 4), (2, 3, 5), (1, 3, 4), (2, 4, 5), (1, 3, 5),
]

OCTAHEDRON_EDGES = [(i, j) for i in range(6) for j in range(i + 1, 6) if j != i + 3]


def cycle_edges(n):
    return [(i, (i + 1) % n) for i in range(n)]


def full_simplex(n):
    return SimplicialComplex.from_simplices([tuple(range(n))])


def cycle(n):
    return SimplicialComplex.from_simplices(cycle_edges(n))


def octahedron():
    return clique_expand(OCTAHEDRON_EDGES, range(6), 3)


def rp2():
    return SimplicialComplex.from_simplices(RP2_FACETS)


def torus():
    # 7-vertex Moebius torus
    facets = []
    for i in range(7):
        facets.append((i, (i + 1) % 7, (i + 3) % 7))
        facets.append((i, (i + 2) % 7, (i + 3) % 7))
    return SimplicialComplex.from_simplices(facets)


def wedge_of_triangles():
    return SimplicialComplex.from_simplices([(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])


FIXTURES = {
    "point": lambda: SimplicialComplex.from_simplices([(0,)]),
    "six_points": lambda: SimplicialComplex.from_simplices([(i,) for i in range(6)]),
    "triangle_boundary": lambda: cycle(3),
    "six_cycle": lambda: cycle(6),
    "full_2_simplex": lambda: full_simplex(3),
    "full_5_simplex": lambda: full_simplex(6),
    "octahedron": octahedron,
    "rp2": rp2,
    "torus": torus,
    "wedge": wedge_of_triangles,
}


@pytest.fixture(params=sorted(FIXTURES))
def named_complex(request):
    return request.param, FIXTURES[request.param]()


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


SQRT3 = math.sqrt(3)
