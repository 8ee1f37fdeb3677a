"""Double Grothendieck polynomials of permutations and partial permutations.

The recursion starts from the longest permutation of size ``N``,

    G_{w0}(a; b) = prod_{i + j <= N} (1 - a_i / b_j),

and descends with the isobaric divided difference acting on the row alphabet,

    pi_i f = (a_{i+1} f - a_i s_i f) / (a_{i+1} - a_i),

via ``G_{w s_i} = pi_i G_w`` whenever ``l(w s_i) < l(w)``.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Sequence

from .core import TorusVar, Weight
from .laurent import LaurentPoly, binomial_factor, product
from .perm import Corner, PartialPerm, Permutation, complete_partial_perm


class ConsistencyError(AssertionError):
    """An internal identity failed; this signals a convention bug."""


def _a(i: int):
    return ("a", i)


def _b(j: int):
    return ("b", j)


@dataclass(frozen=True)
class AlphabetBinding:
    row_vars: tuple
    col_vars: tuple

    @classmethod
    def for_arrow(cls, tail: int, head: int, rows: int, cols: int) -> AlphabetBinding:
        return cls(tuple(TorusVar(tail, i) for i in range(1, rows + 1)),
                   tuple(TorusVar(head, j) for j in range(1, cols + 1)))

    @classmethod
    def abstract(cls, rows: int, cols: int) -> AlphabetBinding:
        return cls(tuple(_a(i) for i in range(1, rows + 1)),
                   tuple(_b(j) for j in range(1, cols + 1)))

    def reversed(self) -> AlphabetBinding:
        return AlphabetBinding(self.row_vars[::-1], self.col_vars[::-1])

    def apply(self, poly: LaurentPoly) -> LaurentPoly:
        """Rename the abstract alphabets ``a_i, b_j`` into this binding."""
        mapping = {}
        mapping.update({_a(i): v for i, v in enumerate(self.row_vars, start=1)})
        mapping.update({_b(j): v for j, v in enumerate(self.col_vars, start=1)})
        stray = poly.variables() - mapping.keys()
        if stray:
            raise ConsistencyError(f"variables {sorted(stray)} fall outside the binding")
        return poly.rename(mapping)


def demazure(i: int, f: LaurentPoly, row_vars: Sequence) -> LaurentPoly:
    """``(x_{i+1} f - x_i s_i f) / (x_{i+1} - x_i)`` over ``row_vars`` (1-based ``i``)."""
    if not 1 <= i < len(row_vars):
        raise IndexError(f"demazure index {i} out of range for {len(row_vars)} variables")
    x, y = row_vars[i - 1], row_vars[i]
    num = f.shift(Weight.unit(y)) - f.swap(x, y).shift(Weight.unit(x))
    try:
        return num.divide_by_difference(y, x)
    except ArithmeticError as exc:
        raise ConsistencyError(str(exc)) from exc


def _longest_element_poly(n: int) -> LaurentPoly:
    return product(binomial_factor(_a(i), _b(j))
                   for i in range(1, n) for j in range(1, n + 1 - i))


class GrothendieckCache:
    """Memo of ``G_w`` in the abstract alphabets, keyed by one-line notation.

    ``descent`` picks which ascent of ``w`` the recursion walks through:
    ``"first"`` or ``"last"``.  Both give the same polynomial.
    """

    def __init__(self, descent: str = "first"):
        if descent not in ("first", "last"):
            raise ValueError(descent)
        self.descent = descent
        self._memo: dict[tuple[int, ...], LaurentPoly] = {}
        self._lock = threading.Lock()

    def __call__(self, w: Permutation) -> LaurentPoly:
        key = w.images
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        n = w.size
        if w == Permutation.longest(n):
            result = _longest_element_poly(n)
        else:
            ascents = [i for i in range(1, n) if w.is_ascent(i)]
            i = ascents[0] if self.descent == "first" else ascents[-1]
            above = self(w.times_simple(i))
            result = demazure(i, above, [_a(k) for k in range(1, n + 1)])
        with self._lock:
            self._memo.setdefault(key, result)
        return result


_default_cache = GrothendieckCache()


def grothendieck_of_permutation(w: Permutation, binding: AlphabetBinding | None = None,
                                cache: GrothendieckCache | None = None) -> LaurentPoly:
    cache = cache or _default_cache
    poly = cache(w)
    if binding is None:
        binding = AlphabetBinding.abstract(w.size, w.size)
    return binding.apply(poly)


def groth_partial_nw(w: PartialPerm, binding: AlphabetBinding | None = None,
                     cache: GrothendieckCache | None = None) -> LaurentPoly:
    """``G_w`` for the matrix Schubert variety of a partial permutation."""
    if binding is None:
        binding = AlphabetBinding.abstract(w.rows, w.cols)
    if (len(binding.row_vars), len(binding.col_vars)) != w.shape:
        raise ValueError(f"binding shape {len(binding.row_vars)}x{len(binding.col_vars)} "
                         f"does not match {w.rows}x{w.cols}")
    perm = complete_partial_perm(w, Corner.NW)
    poly = (cache or _default_cache)(perm)
    # real alphabet only; AlphabetBinding.apply rejects anything virtual
    return binding.apply(poly)


def groth_partial_se(w: PartialPerm, binding: AlphabetBinding | None = None,
                     cache: GrothendieckCache | None = None) -> LaurentPoly:
    """Opposite Grothendieck polynomial ``G^w``: rotate, reverse both alphabets."""
    if binding is None:
        binding = AlphabetBinding.abstract(w.rows, w.cols)
    return groth_partial_nw(w.rotated(), binding.reversed(), cache)


def groth_of_diagram(diagram, cache: GrothendieckCache | None = None) -> LaurentPoly:
    """Product over arrows: ``G_{w_a}`` if rightward, ``G^{w_a}`` if leftward."""
    return product(groth_factors(diagram, cache))


def groth_factors(diagram, cache: GrothendieckCache | None = None) -> list[LaurentPoly]:
    out = []
    for arrow, w in zip(diagram.quiver.arrows, diagram.mats):
        binding = AlphabetBinding.for_arrow(arrow.tail, arrow.head, w.rows, w.cols)
        if arrow.rightward:
            out.append(groth_partial_nw(w, binding, cache))
        else:
            out.append(groth_partial_se(w, binding, cache))
    return out
