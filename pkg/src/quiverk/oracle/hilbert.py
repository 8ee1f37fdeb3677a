"""K-polynomials of monomial ideals by the exact-sequence recursion

    K(R/I) = K(R/(I + (x))) + m_x K(R/(I : x)).
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from typing import Sequence

from ..core import Weight
from ..laurent import LaurentPoly, product

Monomial = tuple[int, ...]


def minimalize(gens) -> tuple[Monomial, ...]:
    gens = sorted(set(gens), key=lambda m: (sum(m), m))
    kept: list[Monomial] = []
    for g in gens:
        if not any(all(a <= b for a, b in zip(h, g)) for h in kept):
            kept.append(g)
    return tuple(sorted(kept))


def kpoly_of_monomial_ideal(gens: Sequence[Monomial], weights: Sequence[Weight]) -> LaurentPoly:
    """K-polynomial of ``R/I`` where variable ``k`` has degree ``weights[k]``."""
    weights = tuple(weights)

    def mono(m: Monomial) -> Weight:
        w = Weight()
        for k, e in enumerate(m):
            if e:
                w = w + weights[k].scale(e)
        return w

    @lru_cache(maxsize=None)
    def rec(ideal: tuple[Monomial, ...]) -> LaurentPoly:
        if not ideal:
            return LaurentPoly.constant(1)
        if any(not any(g) for g in ideal):
            return LaurentPoly()  # unit ideal
        freq = Counter(k for g in ideal for k, e in enumerate(g) if e)
        if max(freq.values()) == 1:
            return product(LaurentPoly.constant(1) - LaurentPoly.monomial(mono(g)) for g in ideal)
        x = min(freq, key=lambda k: (-freq[k], k))
        unit = tuple(1 if k == x else 0 for k in range(len(ideal[0])))
        plus = minimalize(ideal + (unit,))
        colon = minimalize(tuple(g[:x] + (max(g[x] - 1, 0),) + g[x + 1:] for g in ideal))
        return rec(plus) + LaurentPoly.monomial(weights[x]) * rec(colon)

    gens = [tuple(g) for g in gens]
    if gens and any(len(g) != len(weights) for g in gens):
        raise ValueError("monomial length does not match the number of weights")
    return rec(minimalize(gens))
