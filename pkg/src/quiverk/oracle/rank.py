"""Rank-condition ideals and their K-polynomials via Groebner degeneration."""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from fractions import Fraction

from ..core import OrbitSpec, QuiverA, QuiverError, Weight, coordinate_weight
from ..grothendieck import ConsistencyError
from ..laurent import LaurentPoly
from .groebner import Poly, groebner_basis, initial_ideal
from .hilbert import kpoly_of_monomial_ideal


class GradingError(ValueError):
    pass


@dataclass(frozen=True)
class CoordRing:
    """Polynomial ring on the matrix entries of ``rep_Q(d)``, arrow-major then row-major."""
    quiver: QuiverA
    dims: tuple[int, ...]

    @property
    def coords(self) -> list[tuple[int, int, int]]:
        out = []
        for a in self.quiver.arrows:
            m, n = self.quiver.shape(self.dims, a)
            out.extend((a.index, i, j) for i in range(1, m + 1) for j in range(1, n + 1))
        return out

    @property
    def nvars(self) -> int:
        return len(self.coords)

    def index(self, coord: tuple[int, int, int]) -> int:
        try:
            return self.coords.index(coord)
        except ValueError:
            raise QuiverError(f"no coordinate a:{coord[0]}:{coord[1]}:{coord[2]} "
                              f"in rep of dimension {self.dims}") from None

    def weights(self) -> list[Weight]:
        return [coordinate_weight(self.quiver, self.dims, k, i, j) for k, i, j in self.coords]

    def var(self, coord) -> Poly:
        e = [0] * self.nvars
        e[self.index(coord)] = 1
        return {tuple(e): Fraction(1)}

    def weight_of(self, mono: tuple[int, ...]) -> Weight:
        w = Weight()
        for wk, e in zip(self.weights(), mono):
            if e:
                w = w + wk.scale(e)
        return w


def _parse_token(tok: str):
    tok = tok.strip()
    if tok == "0":
        return None
    parts = tok.split(":")
    if len(parts) != 4 or parts[0] != "a":
        raise QuiverError(f"bad pattern token {tok!r}; expected '0' or 'a:<arrow>:<i>:<j>'")
    try:
        return tuple(int(p) for p in parts[1:])
    except ValueError:
        raise QuiverError(f"bad pattern token {tok!r}") from None


@dataclass(frozen=True)
class RankCondition:
    """``rank(pattern) <= rank`` where cells are coordinates or fixed zeros."""
    quiver: QuiverA
    dims: tuple[int, ...]
    pattern: tuple[tuple, ...]
    rank: int

    def __post_init__(self):
        object.__setattr__(self, "dims", self.quiver.check_dims(self.dims))
        rows = tuple(tuple(c if c is None or isinstance(c, tuple) else _parse_token(c)
                           for c in row) for row in self.pattern)
        if not rows or len({len(r) for r in rows}) != 1:
            raise QuiverError("pattern must be a non-empty rectangular grid")
        object.__setattr__(self, "pattern", rows)
        if self.rank < 0:
            raise QuiverError(f"rank bound {self.rank} is negative")
        ring = self.ring
        for row in rows:
            for c in row:
                if c is not None:
                    ring.index(c)

    @property
    def ring(self) -> CoordRing:
        return CoordRing(self.quiver, self.dims)

    @classmethod
    def from_json(cls, data: dict | str) -> RankCondition:
        if isinstance(data, str):
            data = json.loads(data)
        try:
            return cls(QuiverA.from_string(data["quiver"]), tuple(data["dims"]),
                       tuple(tuple(r) for r in data["pattern"]), int(data["rank"]))
        except KeyError as exc:
            raise QuiverError(f"rank condition is missing key {exc.args[0]!r}") from None

    def to_json(self) -> dict:
        def tok(c):
            return "0" if c is None else "a:%d:%d:%d" % c
        return {"quiver": self.quiver.to_string(), "dims": list(self.dims),
                "pattern": [[tok(c) for c in row] for row in self.pattern], "rank": self.rank}


def _det(mat: list[list[Poly]]) -> Poly:
    if len(mat) == 1:
        return dict(mat[0][0])
    out: Poly = {}
    for col, entry in enumerate(mat[0]):
        if not entry:
            continue
        minor = _det([row[:col] + row[col + 1:] for row in mat[1:]])
        sign = -1 if col % 2 else 1
        for m1, c1 in entry.items():
            for m2, c2 in minor.items():
                k = tuple(a + b for a, b in zip(m1, m2))
                v = out.get(k, 0) + sign * c1 * c2
                if v:
                    out[k] = v
                else:
                    out.pop(k, None)
    return out


def minors_ideal(rc: RankCondition) -> list[Poly]:
    """All nonzero ``(rank+1)``-minors of the pattern; each is checked homogeneous."""
    ring = rc.ring
    grid = [[{} if c is None else ring.var(c) for c in row] for row in rc.pattern]
    k = rc.rank + 1
    out = []
    for rows in itertools.combinations(range(len(grid)), k):
        for cols in itertools.combinations(range(len(grid[0])), k):
            f = _det([[grid[i][j] for j in cols] for i in rows])
            if not f:
                continue
            degs = {ring.weight_of(m) for m in f}
            if len(degs) != 1:
                raise GradingError(f"minor on rows {rows} cols {cols} is not homogeneous")
            out.append(f)
    return out


def kpoly_via_groebner(rc: RankCondition, orders=("grevlex", "lex"), limits=None) -> LaurentPoly:
    """K-polynomial of the minors ideal from the initial ideal, checked across orders."""
    gens = minors_ideal(rc)
    weights = rc.ring.weights()
    results = []
    for order in orders:
        basis = groebner_basis(gens, order, limits)
        results.append(kpoly_of_monomial_ideal(initial_ideal(basis, order), weights))
    if any(r != results[0] for r in results[1:]):
        raise ConsistencyError(f"K-polynomial depends on the monomial order {orders}")
    return results[0]


# --- built-in presets -------------------------------------------------------

def _a2_condition(direction: str, m: int, n: int, r: int) -> RankCondition:
    """Generic matrix of the A2 arrow with rank at most ``r``; ``d = (m, n)``."""
    q = QuiverA.from_string(direction)
    rows, cols = q.shape((m, n), q.arrows[0])
    pattern = tuple(tuple((1, i, j) for j in range(1, cols + 1)) for i in range(1, rows + 1))
    return RankCondition(q, (m, n), pattern, r)


def a2_orbit(m: int, n: int, r: int) -> OrbitSpec:
    return OrbitSpec(((1, 2),) * r + ((1, 1),) * (m - r) + ((2, 2),) * (n - r))


def _running_example() -> RankCondition:
    q = QuiverA.from_string("<><")
    pattern = [["0", "a:3:1:1", "a:3:1:2"]]
    pattern += [[f"a:1:{i}:1", f"a:2:{i}:1", f"a:2:{i}:2"] for i in (1, 2, 3)]
    return RankCondition(q, (1, 3, 2, 1), tuple(map(tuple, pattern)), 2)


def _build_presets():
    presets = {"running-example": _running_example()}
    table = [("running-example", "<><", "1-3,2-4,2-2")]
    for direction, tag in ((">", "right"), ("<", "left")):
        for m in (1, 2, 3):
            for n in (1, 2, 3):
                for r in range(min(m, n)):
                    name = f"a2-{tag}-{m}x{n}-rank{r}"
                    presets[name] = _a2_condition(direction, m, n, r)
                    table.append((name, direction, a2_orbit(m, n, r).to_string()))
    return presets, table


PRESETS, CORRESPONDENCE = _build_presets()
