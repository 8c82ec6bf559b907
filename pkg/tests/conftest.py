"""Shared strategies and oracles for the test suite.

The oracle functions here deliberately avoid the package's own linear
algebra: ranks go through sympy (exact rationals / prime fields) so every
homology number is checked by two independent routes.
"""
import math

import pytest
from hypothesis import HealthCheck, assume, settings, strategies as st
from sympy import GF, Matrix, ZZ
from sympy.polys.matrices import DomainMatrix

from hcwr import FieldSpec, build_complex, generate_circle
from hcwr.morse import MorseLabeling

settings.register_profile(
    "suite",
    deadline=None,
    max_examples=30,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")


def oracle_rank(M, F: FieldSpec) -> int:
    """Exact matrix rank via sympy, independent of the package echelon."""
    if not M or not M[0]:
        return 0
    if F.is_rationals:
        return Matrix(M).rank()
    return DomainMatrix.from_list([list(r) for r in M], ZZ) \
        .convert_to(GF(F.p)).rank()


def _boundary_columns(K):
    """Ambient d2 columns (one per triangle) in edge coordinates."""
    edges = K.edges
    eidx = {e: j for j, e in enumerate(edges)}
    cols = []
    for (a, b, c) in K.triangles:
        col = [0] * len(edges)
        col[eidx[(b, c)]] += 1
        col[eidx[(a, c)]] -= 1
        col[eidx[(a, b)]] += 1
        cols.append(col)
    return cols


def oracle_betti1(K, F: FieldSpec) -> int:
    """dim H1 from dense boundary matrices ranked by sympy."""
    edges = K.edges
    d1 = [[0] * len(edges) for _ in range(K.vertex_count)]
    for j, (a, b) in enumerate(edges):
        d1[a][j] = -1
        d1[b][j] = 1
    r1 = oracle_rank(d1, F) if edges else 0
    d2_rows = [list(r) for r in zip(*_boundary_columns(K))]
    r2 = oracle_rank(d2_rows, F)
    return len(edges) - r1 - r2


def oracle_image_rank(K, vertex_set, F: FieldSpec) -> int:
    """rank im(H1(full subcomplex on vertex_set) -> H1(K)), all sympy.

    Z1 of the subcomplex comes from the sympy nullspace of its vertex/edge
    boundary map; the image rank is rank([d2 | Z1]) - rank(d2) in ambient
    edge coordinates.
    """
    vs = set(vertex_set)
    edges = K.edges
    eidx = {e: j for j, e in enumerate(edges)}
    sub_edges = [e for e in edges if e[0] in vs and e[1] in vs]
    if not sub_edges:
        return 0
    verts = sorted(vs)
    vidx = {v: i for i, v in enumerate(verts)}
    d1c = [[0] * len(sub_edges) for _ in verts]
    for j, (a, b) in enumerate(sub_edges):
        d1c[vidx[a]][j] = -1
        d1c[vidx[b]][j] = 1
    null = Matrix(d1c).nullspace()
    if not null:
        return 0
    b1_cols = _boundary_columns(K)
    cols = list(b1_cols)
    for vec in null:
        denom = 1
        for x in vec:
            denom = denom * x.q // math.gcd(denom, x.q)
        col = [0] * len(edges)
        for j, e in enumerate(sub_edges):
            col[eidx[e]] = int(vec[j] * denom)
        cols.append(col)
    r_all = oracle_rank([list(r) for r in zip(*cols)], F)
    r_b1 = oracle_rank([list(r) for r in zip(*b1_cols)], F)
    return r_all - r_b1


@st.composite
def small_complexes(draw, max_vertices=7, connected=False):
    """Random face-closed complexes on up to ``max_vertices`` vertices."""
    n = draw(st.integers(min_value=1, max_value=max_vertices))
    simplex = st.lists(st.integers(min_value=0, max_value=n - 1),
                       min_size=1, max_size=3, unique=True)
    maximal = draw(st.lists(simplex, min_size=0, max_size=8))
    if connected and n > 1:
        maximal = maximal + [(v, v + 1) for v in range(n - 1)]
    return build_complex(maximal, n)


@st.composite
def labeled_circles(draw, min_m=4, max_m=9):
    """A simplicial circle together with a random valid labeling: a closed
    +-1/0 walk around the cycle."""
    m = draw(st.integers(min_value=min_m, max_value=max_m))
    steps = draw(st.lists(st.sampled_from([-1, 0, 1]),
                          min_size=m - 1, max_size=m - 1))
    labels = [0]
    for s in steps:
        labels.append(labels[-1] + s)
    assume(abs(labels[-1] - labels[0]) <= 1)
    return generate_circle(m), MorseLabeling(tuple(labels))


@pytest.fixture(scope="session")
def rationals():
    return FieldSpec.rationals()
