"""K-polynomials of orbit closures from K-theoretic lacing diagrams."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .core import OrbitSpec, QuiverA, Weight
from .grothendieck import ConsistencyError, GrothendieckCache, groth_of_diagram
from .lacing import (DEFAULT_CAP, LacingDiagram, diagrams_in_orbit,
                     k_theoretic_diagrams, minimal_diagrams)
from .laurent import LaurentPoly


def codimension(q: QuiverA, o: OrbitSpec, cap: int = DEFAULT_CAP) -> int:
    return min(w.length for w in diagrams_in_orbit(q, o, cap))


def signed_terms(diagrams: list[tuple[LacingDiagram, int]], codim: int,
                 cache: GrothendieckCache | None = None) -> list[tuple[int, LaurentPoly]]:
    return [((-1) ** (length - codim), groth_of_diagram(w, cache)) for w, length in diagrams]


def component_formula(q: QuiverA, o: OrbitSpec, cap: int = DEFAULT_CAP,
                      cache: GrothendieckCache | None = None,
                      side_conditions: bool = True) -> LaurentPoly:
    """Sum of ``(-1)^(|w| - codim) G_w`` over the K-theoretic diagrams of ``o``."""
    diagrams = k_theoretic_diagrams(q, o, cap, side_conditions=side_conditions)
    codim = min(length for _, length in diagrams)
    total = LaurentPoly()
    for sign, g in signed_terms(diagrams, codim, cache):
        total = total + sign * g
    if total.constant_term != 1:
        raise ConsistencyError(f"K-polynomial has constant term {total.constant_term}, expected 1")
    return total


@dataclass(frozen=True)
class GradedPoly:
    """Polynomial in the formal variables ``x_v`` split by total degree."""
    components: dict[int, LaurentPoly]
    truncation: int

    def component(self, k: int) -> LaurentPoly:
        return self.components.get(k, LaurentPoly())

    @property
    def lowest_degree(self) -> int | None:
        nonzero = [k for k, p in self.components.items() if p]
        return min(nonzero) if nonzero else None

    def lowest(self) -> LaurentPoly:
        k = self.lowest_degree
        return LaurentPoly() if k is None else self.components[k]

    def to_text(self) -> str:
        def name(v):
            return f"X[{v.vertex}][{v.index}]"
        lines = [f"deg {k}: {p.to_text(name)}"
                 for k, p in sorted(self.components.items()) if p]
        return "\n".join(lines) or "0"


def _one_minus_x_power(e: int, top: int) -> list[tuple[int, int]]:
    """Nonzero coefficients of ``(1 - x)^e`` up to ``x^top`` (negative ``e`` expands as a series)."""
    out = []
    for k in range(top + 1):
        c = comb(e, k) * (-1) ** k if e >= 0 else comb(-e + k - 1, k)
        if c:
            out.append((k, c))
    return out


def lowest_form(p: LaurentPoly, truncation_degree: int) -> GradedPoly:
    """Substitute ``v -> 1 - x_v`` and keep all terms of degree ``<= truncation_degree``."""
    T = truncation_degree
    names = sorted(p.variables())
    terms = [(tuple(m[v] for v in names), c) for m, c in p.terms.items()]

    def expand(group, k):
        # substitute variables k.. of every term in the group; keys are dense tuples
        if k == len(names):
            total = sum(c for _, c in group)
            return {(): total} if total else {}
        by_exp: dict[int, list] = {}
        for e, c in group:
            by_exp.setdefault(e[k], []).append((e, c))
        out: dict[tuple, int] = {}
        for e, sub in by_exp.items():
            child = expand(sub, k + 1)
            for d, cs in _one_minus_x_power(e, T):
                for m, cm in child.items():
                    if d + sum(m) <= T:
                        key = (d,) + m
                        out[key] = out.get(key, 0) + cs * cm
        return {m: c for m, c in out.items() if c}

    comps: dict[int, dict[Weight, int]] = {}
    for m, c in expand(terms, 0).items():
        w = Weight(tuple((v, e) for v, e in zip(names, m) if e))
        comps.setdefault(sum(m), {})[w] = c
    return GradedPoly({k: LaurentPoly(t) for k, t in sorted(comps.items())}, T)


def multidegree(p: LaurentPoly, codim: int) -> LaurentPoly:
    """Degree-``codim`` part of the lowest form."""
    return lowest_form(p, codim).component(codim)


def minimal_multidegree_sum(q: QuiverA, o: OrbitSpec, cap: int = DEFAULT_CAP,
                            cache: GrothendieckCache | None = None) -> LaurentPoly:
    """Sum over minimal diagrams of the lowest-degree parts of ``G_w``."""
    mins = minimal_diagrams(q, o, cap)
    codim = mins[0].length
    total = LaurentPoly()
    for w in mins:
        total = total + multidegree(groth_of_diagram(w, cache), codim)
    return total
