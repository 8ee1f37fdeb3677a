"""Lacing diagrams: laces, completions, lengths, enumeration and local moves.

A lacing diagram is one partial permutation per arrow.  Its extended diagram
completes every rightward arrow in the NW corner and every leftward arrow in
the SE corner; the length is the total inversion count of the completions.

Moves act at a middle vertex ``z`` on two real dots ``i < j`` of column ``z``.
Each dot has one partner on the left (through the arrow joining ``z - 1`` and
``z``) and one on the right.  A side is *crossed* when the partners appear in
the opposite order to ``i, j``.  With L/R for the left/right side:

    swap move   (L crossed, R parallel) <-> (L parallel, R crossed)
    K-moves     (L crossed, R parallel) <-> (both crossed) <-> (L parallel, R crossed)

Swapping partners on one side amounts to exchanging rows (or columns) ``i``
and ``j`` of that arrow's partial permutation.  Both middle dots are real by
construction, at least one partner per side must be real, and the two middle
dots must be consecutive (``j = i + 1``).  Real dots of a column are
contiguous in every completion, so adjacency among real dots and among all
dots coincide.
"""

from __future__ import annotations

import itertools
import json
import math
from collections import Counter, deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

from .core import Arrow, OrbitSpec, QuiverA, QuiverError, dim_of_orbitspec
from .perm import (Corner, PartialPerm, Permutation, all_partial_perms,
                   complete_partial_perm)

DEFAULT_CAP = 10**7


class EnumerationCapError(RuntimeError):
    def __init__(self, estimate: int, cap: int):
        super().__init__(f"enumeration needs about {estimate} candidate diagrams, cap is {cap}")
        self.estimate = estimate
        self.cap = cap


def corner_of(arrow: Arrow) -> Corner:
    return Corner.NW if arrow.rightward else Corner.SE


@dataclass(frozen=True)
class LacingDiagram:
    quiver: QuiverA
    dims: tuple[int, ...]
    mats: tuple[PartialPerm, ...]

    def __post_init__(self):
        dims = self.quiver.check_dims(self.dims)
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "mats", tuple(self.mats))
        arrows = self.quiver.arrows
        if len(self.mats) != len(arrows):
            raise QuiverError(f"need {len(arrows)} matrices, got {len(self.mats)}")
        for a, w in zip(arrows, self.mats):
            if w.shape != self.quiver.shape(dims, a):
                raise QuiverError(f"arrow {a.index} needs shape {self.quiver.shape(dims, a)}, "
                                  f"got {w.shape}")

    @classmethod
    def from_matrices(cls, quiver: QuiverA, dims, mats) -> LacingDiagram:
        arrows = quiver.arrows
        return cls(quiver, tuple(dims), tuple(
            PartialPerm.from_matrix(m, quiver.shape(tuple(dims), a)[1])
            for a, m in zip(arrows, mats)))

    @classmethod
    def zero(cls, quiver: QuiverA, dims) -> LacingDiagram:
        dims = tuple(dims)
        return cls(quiver, dims, tuple(PartialPerm(*quiver.shape(dims, a), ())
                                       for a in quiver.arrows))

    @property
    def sort_key(self) -> tuple:
        return tuple(w.pairs for w in self.mats)

    def __lt__(self, other: LacingDiagram) -> bool:
        return self.sort_key < other.sort_key

    @cached_property
    def completions(self) -> tuple[Permutation, ...]:
        return tuple(complete_partial_perm(w, corner_of(a))
                     for a, w in zip(self.quiver.arrows, self.mats))

    @cached_property
    def length(self) -> int:
        return sum(p.length for p in self.completions)

    def replace(self, k: int, w: PartialPerm) -> LacingDiagram:
        mats = list(self.mats)
        mats[k - 1] = w
        return LacingDiagram(self.quiver, self.dims, tuple(mats))

    def to_json(self) -> dict:
        return {"arrows": [{"pairs": [list(p) for p in w.pairs]} for w in self.mats]}

    @classmethod
    def from_json(cls, quiver: QuiverA, dims, data: dict | str) -> LacingDiagram:
        if isinstance(data, str):
            data = json.loads(data)
        dims = tuple(dims)
        arrows = data["arrows"]
        if len(arrows) != len(quiver.arrows):
            raise QuiverError(f"diagram lists {len(arrows)} arrows, quiver has "
                              f"{len(quiver.arrows)}")
        mats = []
        for a, entry in zip(quiver.arrows, arrows):
            m, n = quiver.shape(dims, a)
            mats.append(PartialPerm(m, n, tuple(tuple(p) for p in entry["pairs"])))
        return cls(quiver, dims, tuple(mats))

    def to_text(self) -> str:
        blocks = []
        for a, w in zip(self.quiver.arrows, self.mats):
            rows = [" ".join(map(str, r)) for r in w.to_matrix()] or ["(empty)"]
            arrow = f"{a.tail}->{a.head}"
            blocks.append(f"arrow {a.index} ({arrow}, {w.rows}x{w.cols}): " + " | ".join(rows))
        return "\n".join(blocks)


def diagram_from_json_file(quiver: QuiverA, path) -> LacingDiagram:
    """Read a diagram whose dimension vector is implied by ``"dims"`` in the file."""
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    if "dims" not in data:
        raise QuiverError("diagram file needs a \"dims\" entry")
    return LacingDiagram.from_json(quiver, data["dims"], data)


def _sides(arrow: Arrow, z: int) -> tuple[bool, int]:
    """Whether vertex ``z`` indexes the rows of ``arrow``, and the other vertex."""
    if arrow.tail == z:
        return True, arrow.head
    return False, arrow.tail


def laces_of(w: LacingDiagram) -> OrbitSpec:
    """Follow matched dots column to column; return the interval of each lace."""
    q, d = w.quiver, w.dims
    right_of: dict[tuple[int, int], int] = {}
    has_left: set[tuple[int, int]] = set()
    for a, pp in zip(q.arrows, w.mats):
        lo = min(a.tail, a.head)
        for r, c in pp.pairs:
            i_lo, i_hi = (r, c) if a.tail == lo else (c, r)
            right_of[(lo, i_lo)] = i_hi
            has_left.add((lo + 1, i_hi))
    laces = []
    for z in range(1, q.n + 1):
        for i in range(1, d[z - 1] + 1):
            if (z, i) in has_left:
                continue
            end, k = z, i
            while (end, k) in right_of:
                k = right_of[(end, k)]
                end += 1
            laces.append((z, end))
    return OrbitSpec(tuple(laces))


def complete(w: PartialPerm, corner: Corner) -> Permutation:
    return complete_partial_perm(w, corner)


def diagram_length(w: LacingDiagram) -> int:
    return w.length


def _arrow_ranks(q: QuiverA, o: OrbitSpec) -> list[int]:
    """Rank of each arrow's matrix: laces covering both of its endpoints."""
    return [sum(1 for i, j in o.laces if i <= a.index and a.index + 1 <= j) for a in q.arrows]


def estimate_orbit_candidates(q: QuiverA, o: OrbitSpec) -> int:
    d = dim_of_orbitspec(q, o)
    total = 1
    for a, r in zip(q.arrows, _arrow_ranks(q, o)):
        m, n = q.shape(d, a)
        total *= math.comb(m, r) * math.comb(n, r) * math.factorial(r)
    return total


def diagrams_in_orbit(q: QuiverA, o: OrbitSpec, cap: int = DEFAULT_CAP) -> list[LacingDiagram]:
    """All lacing diagrams whose laces are exactly ``o``, canonically sorted."""
    d = dim_of_orbitspec(q, o)
    estimate = estimate_orbit_candidates(q, o)
    if estimate > cap:
        raise EnumerationCapError(estimate, cap)
    choices = [list(all_partial_perms(*q.shape(d, a), rank=r))
               for a, r in zip(q.arrows, _arrow_ranks(q, o))]
    out = []
    for mats in itertools.product(*choices):
        w = LacingDiagram(q, d, mats)
        if laces_of(w) == o:
            out.append(w)
    return sorted(out)


def minimal_diagrams(q: QuiverA, o: OrbitSpec, cap: int = DEFAULT_CAP) -> list[LacingDiagram]:
    ds = diagrams_in_orbit(q, o, cap)
    best = min(w.length for w in ds)
    return [w for w in ds if w.length == best]


# --- local moves -----------------------------------------------------------

@dataclass(frozen=True)
class MoveSite:
    """Two real dots ``i < j`` of the middle column ``z`` and their partners."""
    z: int
    i: int
    j: int
    left_crossed: bool
    right_crossed: bool
    left_real: tuple[bool, bool]
    right_real: tuple[bool, bool]


def _partners(w: LacingDiagram, arrow: Arrow, z: int, dots: tuple[int, int]):
    """Extended-diagram partners of real dots of column ``z`` through ``arrow``.

    Returns partner positions (in the arrow's extended indexing) and whether
    each partner is a real dot.
    """
    k = arrow.index
    pp = w.mats[k - 1]
    perm = w.completions[k - 1]
    size = perm.size
    z_is_rows, _ = _sides(arrow, z)
    corner = corner_of(arrow)
    m, n = pp.shape
    own, other = (m, n) if z_is_rows else (n, m)
    off_own = 0 if corner is Corner.NW else size - own
    off_other = 0 if corner is Corner.NW else size - other
    if z_is_rows:
        lookup = perm.images
    else:
        inverse = [0] * size
        for r, c in enumerate(perm.images, start=1):
            inverse[c - 1] = r
        lookup = tuple(inverse)
    positions, real = [], []
    for dot in dots:
        pos = lookup[off_own + dot - 1]
        positions.append(pos)
        real.append(off_other < pos <= off_other + other)
    return positions, tuple(real)


def move_sites(w: LacingDiagram, adjacent_only: bool = False) -> Iterator[MoveSite]:
    q = w.quiver
    arrows = q.arrows
    for z in range(2, q.n):
        left, right = arrows[z - 2], arrows[z - 1]
        dz = w.dims[z - 1]
        for i in range(1, dz + 1):
            for j in range(i + 1, dz + 1):
                if adjacent_only and j != i + 1:
                    continue
                lp, lr = _partners(w, left, z, (i, j))
                rp, rr = _partners(w, right, z, (i, j))
                yield MoveSite(z, i, j, lp[0] > lp[1], rp[0] > rp[1], lr, rr)


def _swap_side(w: LacingDiagram, arrow: Arrow, z: int, i: int, j: int) -> LacingDiagram:
    pp = w.mats[arrow.index - 1]
    z_is_rows, _ = _sides(arrow, z)
    new = pp.swap_rows(i, j) if z_is_rows else pp.swap_cols(i, j)
    return w.replace(arrow.index, new)


def _swap_left(w: LacingDiagram, s: MoveSite) -> LacingDiagram:
    return _swap_side(w, w.quiver.arrows[s.z - 2], s.z, s.i, s.j)


def _swap_right(w: LacingDiagram, s: MoveSite) -> LacingDiagram:
    return _swap_side(w, w.quiver.arrows[s.z - 1], s.z, s.i, s.j)


def _outer_ok(s: MoveSite) -> bool:
    return any(s.left_real) and any(s.right_real)


def swap_moves(w: LacingDiagram, side_conditions: bool = True) -> Iterator[LacingDiagram]:
    """Diagrams one swap move away (laces and length are preserved)."""
    for s in move_sites(w, adjacent_only=side_conditions):
        if side_conditions and not _outer_ok(s):
            continue
        if s.left_crossed != s.right_crossed:
            yield _swap_right(_swap_left(w, s), s)


def k_moves(w: LacingDiagram, side_conditions: bool = True) -> Iterator[LacingDiagram]:
    """Diagrams one K-theoretic transformation away."""
    for s in move_sites(w, adjacent_only=side_conditions):
        if side_conditions and not _outer_ok(s):
            continue
        if s.left_crossed and not s.right_crossed:
            yield _swap_right(w, s)
        elif s.right_crossed and not s.left_crossed:
            yield _swap_left(w, s)
        elif s.left_crossed and s.right_crossed:
            yield _swap_right(w, s)
            yield _swap_left(w, s)


def closure(start: Iterable[LacingDiagram], step) -> list[LacingDiagram]:
    """Breadth-first closure of ``start`` under ``step``; asserts each move
    changes the length by at most one."""
    seen = set(start)
    queue = deque(sorted(seen))
    while queue:
        w = queue.popleft()
        for v in step(w):
            if abs(v.length - w.length) > 1:
                raise AssertionError(
                    f"move changed length by {v.length - w.length}: {w.sort_key} -> {v.sort_key}")
            if v not in seen:
                seen.add(v)
                queue.append(v)
    return sorted(seen)


def k_theoretic_diagrams(q: QuiverA, o: OrbitSpec, cap: int = DEFAULT_CAP,
                         side_conditions: bool = True) -> list[tuple[LacingDiagram, int]]:
    """K-theoretic lacing diagrams of the orbit closure with their lengths."""
    mins = minimal_diagrams(q, o, cap)
    step = (lambda w: k_moves(w, side_conditions))
    if not side_conditions:
        # an unconstrained move can jump by more than one; skip the length guard
        return [(w, w.length) for w in _plain_closure(mins, step)]
    return [(w, w.length) for w in closure(mins, step)]


def _plain_closure(start, step) -> list[LacingDiagram]:
    seen = set(start)
    queue = deque(sorted(seen))
    while queue:
        for v in step(queue.popleft()):
            if v not in seen:
                seen.add(v)
                queue.append(v)
    return sorted(seen)


def length_histogram(pairs: Iterable[tuple[LacingDiagram, int]]) -> dict[int, int]:
    return dict(sorted(Counter(length for _, length in pairs).items()))
