from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from quiverk.core import (OrbitSpec, QuiverA, QuiverError, TorusVar, Weight, coordinate_weight,
                          dim_of_orbitspec, euler_form, render_var, RUNNING_EXAMPLE_LETTERS)


def test_quiver_parse_roundtrip():
    q = QuiverA.from_string("<><")
    assert q.n == 4
    assert q.to_string() == "<><"
    assert [(a.tail, a.head) for a in q.arrows] == [(2, 1), (2, 3), (4, 3)]


def test_quiver_parse_error_position():
    with pytest.raises(QuiverError) as err:
        QuiverA.from_string("x>")
    assert err.value.position == 1


def test_single_vertex_quiver():
    q = QuiverA.from_string("")
    assert q.n == 1 and q.arrows == ()


def test_orbit_parse_and_dims():
    q = QuiverA.from_string("<><")
    o = OrbitSpec.from_string("1-3,2-4,2-2")
    assert dim_of_orbitspec(q, o) == (1, 3, 2, 1)
    assert dim_of_orbitspec(q, OrbitSpec(())) == (0, 0, 0, 0)
    assert dim_of_orbitspec(q, OrbitSpec.from_string("2-2")) == (0, 1, 0, 0)


def test_orbit_errors():
    with pytest.raises(QuiverError) as err:
        OrbitSpec.from_string("1-2,3-1")
    assert err.value.position == 5
    with pytest.raises(QuiverError):
        dim_of_orbitspec(QuiverA.from_string(">"), OrbitSpec.from_string("1-3"))


def test_coordinate_weight_running_example():
    q = QuiverA.from_string("<><")
    d = (1, 3, 2, 1)
    w = coordinate_weight(q, d, 2, 2, 1)
    assert w == Weight.unit(TorusVar(2, 2)) - Weight.unit(TorusVar(3, 1))
    assert render_var(TorusVar(2, 2), RUNNING_EXAMPLE_LETTERS) == "u2"
    with pytest.raises(QuiverError):
        coordinate_weight(q, d, 2, 4, 1)


def test_coordinate_weight_square_additivity():
    q = QuiverA.from_string(">")
    d = (3, 3)
    for i in range(1, 4):
        for j in range(1, 4):
            lhs = coordinate_weight(q, d, 1, i, j) + coordinate_weight(q, d, 1, j, i)
            rhs = coordinate_weight(q, d, 1, i, i) + coordinate_weight(q, d, 1, j, j)
            assert lhs == rhs


def test_euler_form_values():
    q = QuiverA.from_string("<><")
    assert euler_form(q, (1, 3, 2, 1), (1, 3, 2, 1)) == 4
    assert euler_form(q, (0, 1, 0, 0), (0, 1, 0, 0)) == 1
    assert euler_form(QuiverA.from_string(">"), (1, 0), (0, 1)) == -1
    with pytest.raises(QuiverError):
        euler_form(q, (1, 2), (1, 2))


orientations = st.text(alphabet="<>", max_size=3)


@given(orientations, st.data())
def test_euler_form_bilinear(s, data):
    q = QuiverA.from_string(s)
    vec = st.lists(st.integers(0, 4), min_size=q.n, max_size=q.n)
    d1, d2, e = data.draw(vec), data.draw(vec), data.draw(vec)
    summed = [a + b for a, b in zip(d1, d2)]
    assert euler_form(q, summed, e) == euler_form(q, d1, e) + euler_form(q, d2, e)
    assert euler_form(q, e, summed) == euler_form(q, e, d1) + euler_form(q, e, d2)


@given(orientations, st.data())
def test_dims_additive_and_weights_count(s, data):
    q = QuiverA.from_string(s)
    lace = st.tuples(st.integers(1, q.n), st.integers(1, q.n)).map(lambda t: tuple(sorted(t)))
    o1 = OrbitSpec(tuple(data.draw(st.lists(lace, max_size=3))))
    o2 = OrbitSpec(tuple(data.draw(st.lists(lace, max_size=3))))
    d = dim_of_orbitspec(q, o1 + o2)
    assert d == tuple(a + b for a, b in zip(dim_of_orbitspec(q, o1), dim_of_orbitspec(q, o2)))
    weights = [coordinate_weight(q, d, a, i, j) for a in q.arrows
               for i in range(1, d[a.tail - 1] + 1) for j in range(1, d[a.head - 1] + 1)]
    assert len(weights) == q.rep_dim(d)
    assert all(w.degree == 0 for w in weights)
