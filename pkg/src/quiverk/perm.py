"""Permutations, partial permutation matrices and their minimal completions.

All indices are 1-based.  A permutation is stored in one-line notation:
``images[i-1]`` is the column of the 1 in row ``i`` of its permutation matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence


class Corner(Enum):
    NW = "NW"
    SE = "SE"


@dataclass(frozen=True, order=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(self.images)}: {self.images}")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def longest(cls, n: int) -> Permutation:
        return cls(tuple(range(n, 0, -1)))

    @property
    def size(self) -> int:
        return len(self.images)

    def __len__(self):
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    @property
    def length(self) -> int:
        """Coxeter length, i.e. the number of inversions."""
        w = self.images
        return sum(1 for a in range(len(w)) for b in range(a + 1, len(w)) if w[a] > w[b])

    def times_simple(self, i: int) -> Permutation:
        """Right multiplication by ``s_i``: swap positions ``i`` and ``i+1``."""
        w = list(self.images)
        w[i - 1], w[i] = w[i], w[i - 1]
        return Permutation(tuple(w))

    def is_ascent(self, i: int) -> bool:
        return self.images[i - 1] < self.images[i]

    def padded(self, n: int) -> Permutation:
        return Permutation(self.images + tuple(range(self.size + 1, n + 1)))

    def __str__(self):
        return "[" + ",".join(map(str, self.images)) + "]"


@dataclass(frozen=True, order=True)
class PartialPerm:
    """An ``rows x cols`` 0/1 matrix with at most one 1 per row and column."""
    rows: int
    cols: int
    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        pairs = tuple(sorted((int(i), int(j)) for i, j in self.pairs))
        object.__setattr__(self, "pairs", pairs)
        rs = [i for i, _ in pairs]
        cs = [j for _, j in pairs]
        if len(set(rs)) != len(rs) or len(set(cs)) != len(cs):
            raise ValueError(f"more than one 1 in a row or column: {pairs}")
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative shape")
        for i, j in pairs:
            if not (1 <= i <= self.rows and 1 <= j <= self.cols):
                raise ValueError(f"entry ({i},{j}) outside {self.rows}x{self.cols}")

    @classmethod
    def from_matrix(cls, mat: Sequence[Sequence[int]], cols: int | None = None) -> PartialPerm:
        rows = len(mat)
        if cols is None:
            cols = len(mat[0]) if rows else 0
        pairs = []
        for i, row in enumerate(mat, start=1):
            if len(row) != cols:
                raise ValueError("ragged matrix")
            for j, x in enumerate(row, start=1):
                if x not in (0, 1):
                    raise ValueError(f"entry {x!r} is not 0 or 1")
                if x:
                    pairs.append((i, j))
        return cls(rows, cols, tuple(pairs))

    @classmethod
    def from_permutation(cls, w: Permutation) -> PartialPerm:
        return cls(w.size, w.size, tuple((i, w(i)) for i in range(1, w.size + 1)))

    def to_matrix(self) -> list[list[int]]:
        mat = [[0] * self.cols for _ in range(self.rows)]
        for i, j in self.pairs:
            mat[i - 1][j - 1] = 1
        return mat

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def rank(self) -> int:
        return len(self.pairs)

    def col_of_row(self) -> dict[int, int]:
        return dict(self.pairs)

    def row_of_col(self) -> dict[int, int]:
        return {j: i for i, j in self.pairs}

    def rotated(self) -> PartialPerm:
        """The 180 degree rotation."""
        m, n = self.rows, self.cols
        return PartialPerm(m, n, tuple((m + 1 - i, n + 1 - j) for i, j in self.pairs))

    def transposed(self) -> PartialPerm:
        return PartialPerm(self.cols, self.rows, tuple((j, i) for i, j in self.pairs))

    def swap_rows(self, a: int, b: int) -> PartialPerm:
        t = {a: b, b: a}
        return PartialPerm(self.rows, self.cols, tuple((t.get(i, i), j) for i, j in self.pairs))

    def swap_cols(self, a: int, b: int) -> PartialPerm:
        t = {a: b, b: a}
        return PartialPerm(self.rows, self.cols, tuple((i, t.get(j, j)) for i, j in self.pairs))


def complete_partial_perm(w: PartialPerm, corner: Corner = Corner.NW) -> Permutation:
    """The unique permutation of minimal size and length holding ``w`` in ``corner``.

    Size is ``m + n - rank``.  Unmatched real rows take the virtual columns in
    increasing order, virtual rows take the unmatched real columns likewise.
    """
    m, n, r = w.rows, w.cols, w.rank
    size = m + n - r
    cor = w.col_of_row()
    free_rows = [i for i in range(1, m + 1) if i not in cor]
    used_cols = set(cor.values())
    free_cols = [j for j in range(1, n + 1) if j not in used_cols]
    images = [0] * size
    if corner is Corner.NW:
        for i, j in cor.items():
            images[i - 1] = j
        for k, i in enumerate(free_rows):
            images[i - 1] = n + 1 + k
        for k, j in enumerate(free_cols):
            images[m + k] = j
    else:
        roff, coff = size - m, size - n
        for i, j in cor.items():
            images[roff + i - 1] = coff + j
        for k, i in enumerate(free_rows):
            images[roff + i - 1] = 1 + k
        for k, j in enumerate(free_cols):
            images[k] = coff + j
    return Permutation(tuple(images))


def restrict(perm: Permutation, rows: int, cols: int, corner: Corner) -> PartialPerm:
    """Inverse of completion: the real ``rows x cols`` block in ``corner``."""
    size = perm.size
    if corner is Corner.NW:
        pairs = [(i, perm(i)) for i in range(1, rows + 1) if perm(i) <= cols]
    else:
        roff, coff = size - rows, size - cols
        pairs = [(i - roff, perm(i) - coff) for i in range(roff + 1, size + 1) if perm(i) > coff]
    return PartialPerm(rows, cols, tuple(pairs))


def all_partial_perms(rows: int, cols: int, rank: int | None = None) -> Iterable[PartialPerm]:
    """Every partial permutation of the given shape (optionally of fixed rank)."""
    from itertools import combinations, permutations

    ranks = range(min(rows, cols) + 1) if rank is None else [rank]
    for r in ranks:
        if r > min(rows, cols) or r < 0:
            continue
        for rs in combinations(range(1, rows + 1), r):
            for cs in permutations(range(1, cols + 1), r):
                yield PartialPerm(rows, cols, tuple(zip(rs, cs)))
