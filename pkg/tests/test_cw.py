import json
from fractions import Fraction
import random

import pytest
from hypothesis import given, settings, strategies as st

from afnorm.cw import (
    BoundaryInconsistency,
    ComplexError,
    CW2Complex,
    Edge,
    Face,
    InstanceTooLarge,
    OpenWalk,
    UnderusedEdge,
    brute_force_min,
    coboundary,
    cocycle_norm,
    is_cocycle,
    load_cocycle,
    minimize_norm,
    presentation_complex,
    validate_complex,
)
from afnorm.norms import presentation_complex_norm, CohomologyClass
from afnorm.abelian import abelianize

from conftest import fixture_path, load, presentation_fixtures
from cw_gen import random_instance


def complex_fixture(name):
    return CW2Complex.from_json((fixture_path("complexes") / f"{name}.json").read_text())


def cocycle_fixture(name):
    return load_cocycle((fixture_path("complexes") / f"{name}_cocycle.json").read_text())


def test_torus_knot_complex_diagnostics():
    c = presentation_complex(load("torus_2_3"))
    d = validate_complex(c)
    assert d.adjacency == {"x": 2, "y": 3}
    assert d.weights == {"x": 0, "y": Fraction(1, 2)}
    assert d.euler == 0
    assert c == complex_fixture("torus_2_3")


def test_open_walk():
    c = CW2Complex(("u", "v"), (Edge("a", "u", "v"),), (Face("f", (("a", 1),)),))
    with pytest.raises(OpenWalk):
        validate_complex(c)


def test_underused_edge():
    c = CW2Complex(("v",), (Edge("a", "v", "v"), Edge("b", "v", "v")), (Face("f", (("a", 1), ("a", 1))),))
    with pytest.raises(UnderusedEdge) as info:
        validate_complex(c)
    assert info.value.edge == "b" and info.value.count == 0


def test_boundary_edge_needs_boundary_endpoints():
    c = CW2Complex(("u", "v"), (Edge("a", "u", "v"),), (), frozenset({"u"}), frozenset({"a"}))
    with pytest.raises(BoundaryInconsistency):
        validate_complex(c)


def test_malformed_documents():
    with pytest.raises(ComplexError):
        CW2Complex.from_dict({"vertices": ["v"]})
    with pytest.raises(ComplexError):
        load_cocycle('{"x": 1.5}')
    with pytest.raises(ComplexError):
        is_cocycle(complex_fixture("torus_2_3"), {"z": 1})


def test_json_round_trip():
    c = complex_fixture("with_boundary")
    assert CW2Complex.from_json(json.dumps(c.to_dict())) == c


def test_is_cocycle_examples():
    c = complex_fixture("torus_2_3")
    assert is_cocycle(c, {})
    assert is_cocycle(c, {"x": -3, "y": 2})
    assert not is_cocycle(c, {"x": 1, "y": 0})


def test_single_vertex_value_is_the_cocycle_norm():
    c = complex_fixture("torus_2_3")
    k0 = cocycle_fixture("torus_2_3")
    value, k = minimize_norm(c, k0)
    assert value == cocycle_norm(c, k0) == 1
    assert k == k0


def test_zero_cocycle():
    c = complex_fixture("two_vertex")
    assert minimize_norm(c, {}) == (0, {"a": 0, "b": 0})
    assert brute_force_min(c, {}, 3) == 0


def test_two_vertex_coboundary_found():
    c = complex_fixture("two_vertex")
    k0 = cocycle_fixture("two_vertex")
    assert cocycle_norm(c, k0) == 1
    value, k = minimize_norm(c, k0)
    assert value == 0 == brute_force_min(c, k0, 2)
    assert k == {"a": 0, "b": 0}


def test_boundary_potentials_are_fixed():
    c = complex_fixture("with_boundary")
    k0 = cocycle_fixture("with_boundary")
    value, k = minimize_norm(c, k0)
    assert value == 0 == brute_force_min(c, k0, 4)
    assert k["d"] == 0


def test_single_vertex_brute_force_ignores_box():
    c = complex_fixture("torus_2_3")
    k0 = cocycle_fixture("torus_2_3")
    assert brute_force_min(c, k0, 1) == brute_force_min(c, k0, 7) == 1


def test_instance_too_large():
    verts = tuple(f"v{i}" for i in range(12))
    edges = tuple(Edge(f"e{i}", verts[i], verts[i + 1]) for i in range(11))
    faces = tuple(Face(f"f{i}", ((f"e{i}", 1), (f"e{i}", -1))) for i in range(11))
    c = CW2Complex(verts, edges, faces + faces)
    with pytest.raises(InstanceTooLarge):
        brute_force_min(c, {}, 2)


def test_non_cocycle_rejected():
    with pytest.raises(ValueError):
        minimize_norm(complex_fixture("torus_2_3"), {"x": 1})


seeds = st.integers(0, 2**32 - 1)


@settings(max_examples=60)
@given(seeds)
def test_oracle_agreement(seed):
    c, k0 = random_instance(random.Random(seed))
    value, k = minimize_norm(c, k0)
    assert is_cocycle(c, k)
    assert cocycle_norm(c, k) == value
    box = max(1, sum(abs(v) for v in k0.values()))
    try:
        assert value == brute_force_min(c, k0, box)
    except InstanceTooLarge:
        pass


@settings(max_examples=60)
@given(seeds, st.data())
def test_coset_invariance(seed, data):
    rng = random.Random(seed)
    c, k0 = random_instance(rng)
    pot = {v: data.draw(st.integers(-3, 3)) for v in c.free_vertices()}
    d = coboundary(c, pot)
    shifted = {e: k0[e] + d[e] for e in k0}
    assert minimize_norm(c, shifted)[0] == minimize_norm(c, k0)[0]


@settings(max_examples=60)
@given(seeds, st.integers(0, 4))
def test_homogeneity_and_triangle(seed, n):
    rng = random.Random(seed)
    c, k0 = random_instance(rng)
    from cw_gen import random_cocycle

    k1 = random_cocycle(rng, c)
    v0, v1 = minimize_norm(c, k0)[0], minimize_norm(c, k1)[0]
    assert minimize_norm(c, {e: n * v for e, v in k0.items()})[0] == n * v0
    assert minimize_norm(c, {e: k0[e] + k1[e] for e in k0})[0] <= v0 + v1


@pytest.mark.parametrize("name", presentation_fixtures())
def test_presentation_complexes_agree_with_closed_form(name):
    p = load(name)
    a = abelianize(p)
    c = presentation_complex(p)
    for vals in ([1] * a.free_rank, [-2] + [1] * (a.free_rank - 1) if a.free_rank else []):
        cls = CohomologyClass(tuple(vals))
        k0 = dict(zip(p.names, cls.generator_values(a)))
        assert is_cocycle(c, k0)
        assert minimize_norm(c, k0)[0] == presentation_complex_norm(p, cls, a)
