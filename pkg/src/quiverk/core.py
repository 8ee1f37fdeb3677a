"""Type A quivers, dimension vectors, torus variables and weights.

Vertices are numbered ``1..n``; arrow ``k`` (also 1-based) joins vertices
``k`` and ``k + 1``.  A rightward arrow points ``k -> k+1``, a leftward one
``k+1 -> k``.  The matrix of an arrow has ``d(tail)`` rows and ``d(head)``
columns, so row labels live at the tail and column labels at the head.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, NamedTuple


class QuiverError(ValueError):
    """Raised for malformed quivers, dimension vectors or orbit specs."""

    def __init__(self, message: str, position: int | None = None):
        super().__init__(message)
        self.position = position


class Direction(Enum):
    RIGHT = ">"
    LEFT = "<"


class Arrow(NamedTuple):
    index: int  # 1-based, joins vertices index and index + 1
    tail: int
    head: int

    @property
    def rightward(self) -> bool:
        return self.head == self.tail + 1


@dataclass(frozen=True)
class QuiverA:
    n: int
    directions: tuple[Direction, ...]

    def __post_init__(self):
        if self.n < 1:
            raise QuiverError(f"quiver needs at least one vertex, got n={self.n}")
        if len(self.directions) != self.n - 1:
            raise QuiverError(
                f"expected {self.n - 1} arrow directions, got {len(self.directions)}")

    @classmethod
    def from_string(cls, s: str) -> QuiverA:
        """Parse an orientation string such as ``"<><"`` (``'>'`` is rightward).

        Error positions are 1-based character columns.
        """
        dirs = []
        for pos, ch in enumerate(s, start=1):
            try:
                dirs.append(Direction(ch))
            except ValueError:
                raise QuiverError(
                    f"invalid orientation character {ch!r} at position {pos}",
                    position=pos) from None
        return cls(len(dirs) + 1, tuple(dirs))

    def to_string(self) -> str:
        return "".join(d.value for d in self.directions)

    @property
    def arrows(self) -> tuple[Arrow, ...]:
        out = []
        for k, d in enumerate(self.directions, start=1):
            if d is Direction.RIGHT:
                out.append(Arrow(k, k, k + 1))
            else:
                out.append(Arrow(k, k + 1, k))
        return tuple(out)

    def check_dims(self, d: Iterable[int]) -> tuple[int, ...]:
        d = tuple(d)
        if len(d) != self.n:
            raise QuiverError(f"dimension vector {d} has length {len(d)}, expected {self.n}")
        if any(x < 0 for x in d):
            raise QuiverError(f"dimension vector {d} has negative entries")
        return d

    def shape(self, d: tuple[int, ...], arrow: Arrow) -> tuple[int, int]:
        return d[arrow.tail - 1], d[arrow.head - 1]

    def rep_dim(self, d: tuple[int, ...]) -> int:
        """Dimension of the representation variety."""
        return sum(d[a.tail - 1] * d[a.head - 1] for a in self.arrows)


class TorusVar(NamedTuple):
    """The ``index``-th diagonal coordinate of the torus at ``vertex``."""
    vertex: int
    index: int

    def __str__(self):
        return f"x[{self.vertex}][{self.index}]"


def torus_vars(d: tuple[int, ...]) -> list[TorusVar]:
    return [TorusVar(z, i) for z, dz in enumerate(d, start=1) for i in range(1, dz + 1)]


class Weight:
    """A finitely supported integer vector indexed by hashable, sortable keys.

    Used both as a torus weight and as the exponent vector of a monomial.
    Zero entries are never stored, so equal vectors have equal ``items``.
    """

    __slots__ = ("items", "_hash")

    def __init__(self, entries=()):
        if isinstance(entries, dict):
            entries = entries.items()
        acc: dict = {}
        for k, v in entries:
            acc[k] = acc.get(k, 0) + v
        self.items = tuple(sorted((k, v) for k, v in acc.items() if v))
        self._hash = hash(self.items)

    @classmethod
    def unit(cls, key, value: int = 1) -> Weight:
        return cls(((key, value),))

    @classmethod
    def _raw(cls, items: tuple) -> Weight:
        w = cls.__new__(cls)
        w.items = items
        w._hash = hash(items)
        return w

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        return isinstance(other, Weight) and self.items == other.items

    def __lt__(self, other):
        return self.items < other.items

    def __bool__(self):
        return bool(self.items)

    def __getitem__(self, key) -> int:
        for k, v in self.items:
            if k == key:
                return v
        return 0

    def as_dict(self) -> dict:
        return dict(self.items)

    def keys(self):
        return [k for k, _ in self.items]

    def __add__(self, other: Weight) -> Weight:
        if not other.items:
            return self
        if not self.items:
            return other
        acc = dict(self.items)
        for k, v in other.items:
            acc[k] = acc.get(k, 0) + v
        return Weight._raw(tuple(sorted((k, v) for k, v in acc.items() if v)))

    def __neg__(self) -> Weight:
        return Weight._raw(tuple((k, -v) for k, v in self.items))

    def __sub__(self, other: Weight) -> Weight:
        return self + (-other)

    def scale(self, c: int) -> Weight:
        if c == 0:
            return Weight()
        return Weight._raw(tuple((k, c * v) for k, v in self.items))

    @property
    def degree(self) -> int:
        return sum(v for _, v in self.items)

    def __repr__(self):
        return f"Weight({dict(self.items)!r})"


@dataclass(frozen=True)
class OrbitSpec:
    """A multiset of vertex intervals, i.e. a direct sum of interval modules."""
    laces: tuple[tuple[int, int], ...]

    def __post_init__(self):
        laces = []
        for lace in self.laces:
            i, j = lace
            if not 1 <= i <= j:
                raise QuiverError(f"invalid interval [{i},{j}]")
            laces.append((int(i), int(j)))
        object.__setattr__(self, "laces", tuple(sorted(laces)))

    @classmethod
    def from_string(cls, s: str) -> OrbitSpec:
        """Parse ``"1-3,2-4,2-2"``; an empty string is the zero representation."""
        laces = []
        if not s.strip():
            return cls(())
        pos = 1
        for token in s.split(","):
            parts = token.strip().split("-")
            try:
                if len(parts) != 2:
                    raise ValueError
                i, j = int(parts[0]), int(parts[1])
                if not 1 <= i <= j:
                    raise ValueError
            except ValueError:
                raise QuiverError(f"malformed interval token {token!r} at position {pos}",
                                  position=pos) from None
            laces.append((i, j))
            pos += len(token) + 1
        return cls(tuple(laces))

    def to_string(self) -> str:
        return ",".join(f"{i}-{j}" for i, j in self.laces)

    def __add__(self, other: OrbitSpec) -> OrbitSpec:
        return OrbitSpec(self.laces + other.laces)

    def counts(self) -> Counter:
        return Counter(self.laces)


def dim_of_orbitspec(q: QuiverA, o: OrbitSpec) -> tuple[int, ...]:
    d = [0] * q.n
    for i, j in o.laces:
        if j > q.n:
            raise QuiverError(f"interval [{i},{j}] exceeds the {q.n} vertices of the quiver")
        for z in range(i, j + 1):
            d[z - 1] += 1
    return tuple(d)


def coordinate_weight(q: QuiverA, d: tuple[int, ...], arrow: Arrow | int,
                      i: int, j: int) -> Weight:
    """Torus weight of the coordinate function at entry ``(i, j)`` of an arrow.

    Row label minus column label: ``x[tail][i] - x[head][j]``.
    """
    if isinstance(arrow, int):
        arrow = q.arrows[arrow - 1]
    m, n = q.shape(d, arrow)
    if not (1 <= i <= m and 1 <= j <= n):
        raise QuiverError(f"entry ({i},{j}) outside the {m}x{n} matrix of arrow {arrow.index}")
    return Weight(((TorusVar(arrow.tail, i), 1), (TorusVar(arrow.head, j), -1)))


def euler_form(q: QuiverA, d: Iterable[int], e: Iterable[int]) -> int:
    d, e = tuple(d), tuple(e)
    if len(d) != q.n or len(e) != q.n:
        raise QuiverError(f"dimension vectors must have length {q.n}")
    return (sum(x * y for x, y in zip(d, e))
            - sum(d[a.tail - 1] * e[a.head - 1] for a in q.arrows))


# Letters used for the 4-vertex example quiver "<><" with d = (1, 3, 2, 1).
RUNNING_EXAMPLE_LETTERS = {1: "v", 2: "u", 3: "s", 4: "t"}


def render_var(v: TorusVar, letters: dict[int, str] | None = None) -> str:
    if letters and v.vertex in letters:
        return f"{letters[v.vertex]}{v.index}"
    return str(v)
