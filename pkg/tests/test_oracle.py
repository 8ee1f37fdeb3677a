from __future__ import annotations

import random
from fractions import Fraction

import pytest
import sympy

from quiverk import running
from quiverk.core import OrbitSpec, QuiverA, QuiverError, TorusVar, Weight, dim_of_orbitspec
from quiverk.grothendieck import ConsistencyError
from quiverk.kpoly import codimension, component_formula
from quiverk.laurent import LaurentPoly, binomial_factor
from quiverk.oracle import (CORRESPONDENCE, PRESETS, GradingError, RankCondition,
                            ResourceLimitError, ext_dim, groebner_basis, hom_dim,
                            initial_ideal, kpoly_of_monomial_ideal, kpoly_via_groebner,
                            minors_ideal, orbit_codim_linear_algebra)
from quiverk.oracle.groebner import grevlex, leading


def _poly(terms):
    return {tuple(m): Fraction(c) for m, c in terms.items()}


def test_groebner_trivial_cases():
    assert groebner_basis([_poly({(1, 0): 1})]) == [_poly({(1, 0): 1})]
    det = _poly({(1, 0, 0, 1): 1, (0, 1, 1, 0): -1})
    for order in ("grevlex", "lex"):
        (g,) = groebner_basis([det], order)
        assert g in (det, {m: -c for m, c in det.items()})


def test_groebner_limits():
    with pytest.raises(ResourceLimitError):
        groebner_basis([_poly({(5,): 1})])
    with pytest.raises(ResourceLimitError):
        groebner_basis([_poly({(1,) + (0,) * 16: 1})])


def _to_sympy(f, gens):
    return sum(sympy.Rational(c.numerator, c.denominator) *
               sympy.prod([g ** e for g, e in zip(gens, m)]) for m, c in f.items())


@pytest.mark.parametrize("order", ["grevlex", "lex"])
def test_groebner_matches_sympy(order):
    rng = random.Random(7)
    gens = sympy.symbols("y0:4")
    for _ in range(15):
        fs = []
        for _ in range(3):
            f = {}
            for _ in range(3):
                m = tuple(rng.randint(0, 1) for _ in range(4))
                f[m] = Fraction(rng.randint(-3, 3))
            fs.append({m: c for m, c in f.items() if c})
        fs = [f for f in fs if f]
        ours = groebner_basis(fs, order)
        theirs = sympy.groebner([_to_sympy(f, gens) for f in fs], *gens, order=order)
        mine = {sympy.expand(_to_sympy(f, gens)) for f in ours}
        ref = {sympy.expand(g / sympy.LC(g, *gens, order=order)) for g in theirs.exprs}
        assert mine == ref


def test_running_minors_are_four_and_a_basis():
    gens = minors_ideal(PRESETS["running-example"])
    assert len(gens) == 4
    basis = groebner_basis(gens, "grevlex")
    assert len(basis) == 4


def test_minors_examples_and_grading():
    q = QuiverA.from_string(">")
    one = RankCondition(q, (1, 1), (("a:1:1:1",),), 0)
    assert len(minors_ideal(one)) == 1
    square = RankCondition(q, (2, 2), (("a:1:1:1", "a:1:1:2"), ("a:1:2:1", "a:1:2:2")), 1)
    assert len(minors_ideal(square)) == 1
    bad = RankCondition(q, (2, 2), (("a:1:1:1", "a:1:1:2"), ("a:1:1:2", "a:1:2:2")), 1)
    with pytest.raises(GradingError):
        minors_ideal(bad)
    with pytest.raises(QuiverError):
        RankCondition(q, (1, 1), (("a:1:2:1",),), 0)
    with pytest.raises(QuiverError):
        RankCondition(q, (1, 1), (("b1",),), 0)


def test_rank_condition_json_roundtrip():
    rc = PRESETS["running-example"]
    assert RankCondition.from_json(rc.to_json()) == rc


def test_monomial_ideal_kpolys():
    x = Weight.unit(TorusVar(1, 1)) - Weight.unit(TorusVar(2, 1))
    y = Weight.unit(TorusVar(3, 1)) - Weight.unit(TorusVar(4, 1))
    assert kpoly_of_monomial_ideal([], [x]) == 1
    assert kpoly_of_monomial_ideal([(1,)], [x]) == 1 - LaurentPoly.monomial(x)
    assert kpoly_of_monomial_ideal([(1, 1)], [x, y]) == 1 - LaurentPoly.monomial(x + y)
    # (x^2, xy): 1 - m_x^2 - m_x m_y + m_x^2 m_y
    mx, my = LaurentPoly.monomial(x), LaurentPoly.monomial(y)
    assert kpoly_of_monomial_ideal([(2, 0), (1, 1)], [x, y]) == 1 - mx * mx - mx * my + mx * mx * my


def test_determinantal_a2():
    k = kpoly_via_groebner(PRESETS["a2-right-2x2-rank1"])
    a1, a2, b1, b2 = (LaurentPoly.var(TorusVar(z, i)) for z, i in ((1, 1), (1, 2), (2, 1), (2, 2)))
    assert k == 1 - a1 * a2 * LaurentPoly.var(TorusVar(2, 1), -1) * LaurentPoly.var(TorusVar(2, 2), -1)
    assert kpoly_via_groebner(PRESETS["a2-right-1x1-rank0"]) == \
        binomial_factor(TorusVar(1, 1), TorusVar(2, 1))


@pytest.mark.parametrize("name", sorted(PRESETS))
def test_order_independence(name):
    rc = PRESETS[name]
    gens = minors_ideal(rc)
    weights = rc.ring.weights()
    ks = [kpoly_of_monomial_ideal(initial_ideal(groebner_basis(gens, o), o), weights)
          for o in ("grevlex", "lex")]
    assert ks[0] == ks[1]


@pytest.mark.parametrize("name,quiver,orbit", CORRESPONDENCE)
def test_correspondence_table(name, quiver, orbit):
    q, o = QuiverA.from_string(quiver), OrbitSpec.from_string(orbit)
    assert kpoly_via_groebner(PRESETS[name]) == component_formula(q, o)


def test_hom_examples():
    q = running.quiver()
    assert hom_dim(q, OrbitSpec.from_string("1-3"), OrbitSpec.from_string("1-3")) == 1
    for z in range(1, 5):
        for z2 in range(1, 5):
            simple, simple2 = OrbitSpec(((z, z),)), OrbitSpec(((z2, z2),))
            assert hom_dim(q, simple, simple2) == int(z == z2)
    assert ext_dim(q, running.orbit(), running.orbit()) == 2


def test_codim_linear_algebra_examples():
    q = running.quiver()
    assert orbit_codim_linear_algebra(q, running.orbit()) == 2
    assert orbit_codim_linear_algebra(q, OrbitSpec.from_string("1-4")) == 0
    zero = OrbitSpec.from_string("1-1,2-2,2-2,2-2,3-3,3-3,4-4")
    assert orbit_codim_linear_algebra(q, zero) == q.rep_dim(dim_of_orbitspec(q, zero))


def random_orbit(rng, n, max_dim=3):
    while True:
        laces = []
        for _ in range(rng.randint(1, 2 * n)):
            i = rng.randint(1, n)
            laces.append((i, rng.randint(i, n)))
        o = OrbitSpec(tuple(laces))
        if all(c <= max_dim for c in dim_of_orbitspec(QuiverA(n, ()) if n == 1 else
                                                        QuiverA.from_string(">" * (n - 1)), o)):
            return o


def test_three_way_codimension_random():
    rng = random.Random(2024)
    checked = 0
    for n in range(1, 5):
        for bits in range(2 ** (n - 1)):
            s = "".join(">" if bits >> k & 1 else "<" for k in range(n - 1))
            q = QuiverA.from_string(s)
            for _ in range(4):
                o = random_orbit(rng, n)
                c = codimension(q, o)
                assert c == ext_dim(q, o, o) == orbit_codim_linear_algebra(q, o)
                checked += 1
    assert checked >= 50


def test_consistency_error_is_assertion():
    assert issubclass(ConsistencyError, AssertionError)
