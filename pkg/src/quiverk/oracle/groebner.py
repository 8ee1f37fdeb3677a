"""Buchberger's algorithm over the rationals.

Polynomials are dicts ``{exponent tuple: Fraction}``.  Monomial orders are
sort keys: a larger key is a larger monomial.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable

Monomial = tuple[int, ...]
Poly = dict[Monomial, Fraction]
OrderKey = Callable[[Monomial], tuple]


class ResourceLimitError(RuntimeError):
    pass


def grevlex(m: Monomial) -> tuple:
    return (sum(m), tuple(-e for e in reversed(m)))


def lex(m: Monomial) -> tuple:
    return m


ORDERS: dict[str, OrderKey] = {"grevlex": grevlex, "lex": lex}

DEFAULT_LIMITS = {"max_degree": 4, "max_vars": 16, "max_basis": 5000}


def leading(f: Poly, key: OrderKey) -> Monomial:
    return max(f, key=key)


def divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mlcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(map(max, a, b))


def mdiv(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))


def mmul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def _axpy(f: Poly, c: Fraction, shift: Monomial, g: Poly) -> None:
    """``f += c * x^shift * g`` in place."""
    for m, cg in g.items():
        k = mmul(m, shift)
        v = f.get(k, 0) + c * cg
        if v:
            f[k] = v
        else:
            f.pop(k, None)


def monic(f: Poly, key: OrderKey) -> Poly:
    lc = f[leading(f, key)]
    return {m: c / lc for m, c in f.items()}


def normal_form(f: Poly, basis: list[tuple[Monomial, Poly]], key: OrderKey) -> Poly:
    """Fully reduce ``f`` by a list of ``(leading monomial, monic poly)``."""
    f = dict(f)
    rem: Poly = {}
    while f:
        m = leading(f, key)
        c = f[m]
        for lm, g in basis:
            if divides(lm, m):
                _axpy(f, -c, mdiv(m, lm), g)
                break
        else:
            rem[m] = c
            del f[m]
    return rem


def _spoly(f: Poly, lf: Monomial, g: Poly, lg: Monomial) -> Poly:
    lcm = mlcm(lf, lg)
    out: Poly = {}
    _axpy(out, Fraction(1), mdiv(lcm, lf), f)
    _axpy(out, Fraction(-1), mdiv(lcm, lg), g)
    return out


def groebner_basis(gens: Iterable[Poly], order: str | OrderKey = "grevlex",
                   limits: dict | None = None) -> list[Poly]:
    """Reduced Groebner basis of the ideal generated by ``gens``."""
    key = ORDERS[order] if isinstance(order, str) else order
    lim = {**DEFAULT_LIMITS, **(limits or {})}
    gens = [{m: Fraction(c) for m, c in g.items() if c} for g in gens]
    gens = [g for g in gens if g]
    if not gens:
        return []
    nvars = len(next(iter(gens[0])))
    if nvars > lim["max_vars"]:
        raise ResourceLimitError(f"{nvars} variables exceed the limit {lim['max_vars']}")
    for g in gens:
        deg = max(sum(m) for m in g)
        if deg > lim["max_degree"]:
            raise ResourceLimitError(f"generator degree {deg} exceeds the limit {lim['max_degree']}")

    basis: list[tuple[Monomial, Poly]] = []
    pairs: set[tuple[int, int]] = set()

    def add(f: Poly):
        f = monic(f, key)
        lm = leading(f, key)
        idx = len(basis)
        basis.append((lm, f))
        pairs.update((i, idx) for i in range(idx))
        if len(basis) > lim["max_basis"]:
            raise ResourceLimitError(f"basis exceeded {lim['max_basis']} elements")

    for g in gens:
        r = normal_form(g, basis, key)
        if r:
            add(r)

    while pairs:
        # normal selection strategy, ties broken by index for determinism
        i, j = min(pairs, key=lambda p: (key(mlcm(basis[p[0]][0], basis[p[1]][0])), p))
        pairs.discard((i, j))
        li, fi = basis[i]
        lj, fj = basis[j]
        lcm = mlcm(li, lj)
        if lcm == mmul(li, lj):
            continue  # coprime leading monomials
        if any(k not in (i, j) and divides(basis[k][0], lcm)
               and (min(i, k), max(i, k)) not in pairs
               and (min(j, k), max(j, k)) not in pairs
               for k in range(len(basis))):
            continue  # chain criterion
        r = normal_form(_spoly(fi, li, fj, lj), basis, key)
        if r:
            add(r)
    return reduce_basis([f for _, f in basis], key)


def reduce_basis(basis: list[Poly], key: OrderKey) -> list[Poly]:
    items = [(leading(f, key), monic(f, key)) for f in basis]
    minimal = []
    for idx, (lm, f) in enumerate(items):
        if any(divides(lm2, lm) and (lm2 != lm or j < idx)
               for j, (lm2, _) in enumerate(items) if j != idx):
            continue
        minimal.append((lm, f))
    out = []
    for idx, (lm, f) in enumerate(minimal):
        others = [p for j, p in enumerate(minimal) if j != idx]
        tail = {m: c for m, c in f.items() if m != lm}
        out.append({lm: Fraction(1), **normal_form(tail, others, key)})
    return sorted(out, key=lambda f: key(leading(f, key)))


def initial_ideal(basis: list[Poly], order: str | OrderKey = "grevlex") -> list[Monomial]:
    key = ORDERS[order] if isinstance(order, str) else order
    return sorted(leading(f, key) for f in basis)
