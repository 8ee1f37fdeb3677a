"""Sparse Laurent polynomials with arbitrary-precision integer coefficients."""

from __future__ import annotations

from typing import Callable, Iterable, Mapping

from .core import TorusVar, Weight


class DivisionError(ArithmeticError):
    """An exact division left a remainder."""


class LaurentPoly:
    """Immutable mapping ``Weight -> int`` with no zero coefficients."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[Weight, int] | Iterable[tuple[Weight, int]] = ()):
        if isinstance(terms, Mapping):
            terms = terms.items()
        acc: dict[Weight, int] = {}
        for m, c in terms:
            acc[m] = acc.get(m, 0) + c
        self.terms = {m: c for m, c in acc.items() if c}
        self._hash = None

    @classmethod
    def constant(cls, c: int) -> LaurentPoly:
        return cls({Weight(): c})

    @classmethod
    def monomial(cls, w: Weight, c: int = 1) -> LaurentPoly:
        return cls({w: c})

    @classmethod
    def var(cls, key, power: int = 1) -> LaurentPoly:
        return cls({Weight.unit(key, power): 1})

    def __iter__(self):
        return iter(sorted(self.terms.items()))

    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        return isinstance(other, LaurentPoly) and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def _coerce(self, other) -> LaurentPoly:
        return LaurentPoly.constant(other) if isinstance(other, int) else other

    def __add__(self, other):
        other = self._coerce(other)
        acc = dict(self.terms)
        for m, c in other.terms.items():
            acc[m] = acc.get(m, 0) + c
        return LaurentPoly(acc)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        acc: dict[Weight, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = m1 + m2
                acc[m] = acc.get(m, 0) + c1 * c2
        return LaurentPoly(acc)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = LaurentPoly.constant(1)
        for _ in range(k):
            out = out * self
        return out

    def shift(self, w: Weight, c: int = 1) -> LaurentPoly:
        """Multiply by the monomial ``c * x^w``."""
        return LaurentPoly({m + w: c * v for m, v in self.terms.items()})

    def coefficient(self, w: Weight) -> int:
        return self.terms.get(w, 0)

    @property
    def constant_term(self) -> int:
        return self.terms.get(Weight(), 0)

    def variables(self) -> set:
        return {k for m in self.terms for k in m.keys()}

    def rename(self, mapping: Mapping | Callable) -> LaurentPoly:
        """Substitute variables by variables (a monomial map, so no collisions lost)."""
        f = mapping if callable(mapping) else (lambda k: mapping.get(k, k))
        return LaurentPoly((Weight((f(k), v) for k, v in m.items), c)
                           for m, c in self.terms.items())

    def swap(self, x, y) -> LaurentPoly:
        return self.rename({x: y, y: x})

    def divide_by_difference(self, x, y) -> LaurentPoly:
        """Exact quotient by ``x - y``.

        Synthetic division in ``x`` with the root ``x = y``: coefficients are
        grouped by the remaining exponents; a nonzero remainder raises.
        """
        groups: dict[tuple, dict[int, int]] = {}
        for m, c in self.terms.items():
            ex = ey = 0
            rest = []
            for k, v in m.items:
                if k == x:
                    ex = v
                elif k == y:
                    ey = v
                else:
                    rest.append((k, v))
            # write x^ex y^ey = y^(ex+ey) * (x/y)^ex; divide in t = x/y over y-degree
            key = (tuple(rest), ex + ey)
            g = groups.setdefault(key, {})
            g[ex] = g.get(ex, 0) + c
        # x - y = y (t - 1); so quotient(t) with t - 1, then divide by y
        out: dict[Weight, int] = {}
        for (rest, total), coeffs in groups.items():
            coeffs = {e: c for e, c in coeffs.items() if c}
            if not coeffs:
                continue
            lo, hi = min(coeffs), max(coeffs)
            carry = 0
            for e in range(hi, lo - 1, -1):
                carry += coeffs.get(e, 0)
                if e == lo:
                    if carry:
                        raise DivisionError(f"inexact division by ({x} - {y})")
                    break
                # quotient term t^(e-1) y^(total-1) with coefficient carry
                if carry:
                    te = e - 1
                    mono = Weight(rest + ((x, te), (y, total - 1 - te)))
                    out[mono] = out.get(mono, 0) + carry
        return LaurentPoly(out)

    def substitute(self, mapping: Mapping) -> LaurentPoly:
        """Substitute variables by Laurent polynomials (a ring map)."""
        out = LaurentPoly()
        for m, c in self.terms.items():
            term = LaurentPoly.constant(c)
            keep = []
            for k, v in m.items:
                if k in mapping:
                    p = mapping[k]
                    if v < 0:
                        if len(p) != 1:
                            raise DivisionError(f"cannot invert non-monomial image of {k}")
                        (pm, pc), = p.terms.items()
                        if pc not in (1, -1):
                            raise DivisionError(f"cannot invert image of {k}")
                        p = LaurentPoly({-pm: pc})
                    term = term * (p ** abs(v))
                else:
                    keep.append((k, v))
            out = out + term.shift(Weight(keep))
        return out

    def __repr__(self):
        return f"LaurentPoly({self.to_text()!r})"

    def to_text(self, namer: Callable | None = None) -> str:
        if not self.terms:
            return "0"
        namer = namer or str
        pieces = []
        for m, c in self:
            factors = []
            for k, v in m.items:
                name = namer(k)
                factors.append(name if v == 1 else f"{name}^{v}")
            body = "*".join(factors)
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if not body:
                piece = str(a)
            elif a == 1:
                piece = body
            else:
                piece = f"{a}*{body}"
            pieces.append((sign, piece))
        first_sign, first = pieces[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, piece in pieces[1:]:
            text += f" {sign} {piece}"
        return text

    def to_json(self) -> list[dict]:
        return [{"coeff": c, "exp": {str(k): v for k, v in m.items}} for m, c in self]

    @classmethod
    def from_json(cls, data: list[dict]) -> LaurentPoly:
        return cls((Weight((parse_var(k), v) for k, v in t["exp"].items()), int(t["coeff"]))
                   for t in data)


def parse_var(name: str) -> TorusVar:
    """Inverse of ``str(TorusVar)``: ``"x[2][1]" -> TorusVar(2, 1)``."""
    if not (name.startswith("x[") and name.endswith("]")):
        raise ValueError(f"not a torus variable name: {name!r}")
    z, i = name[2:-1].split("][")
    return TorusVar(int(z), int(i))


def binomial_factor(num_key, den_key) -> LaurentPoly:
    """``1 - num/den``, the K-class of a single vanishing coordinate."""
    return LaurentPoly({Weight(): 1, Weight(((num_key, 1), (den_key, -1))): -1})


def product(polys: Iterable[LaurentPoly]) -> LaurentPoly:
    out = LaurentPoly.constant(1)
    for p in polys:
        out = out * p
    return out
