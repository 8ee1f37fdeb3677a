"""Hom and Ext between type A representations by exact linear algebra.

A representation assigns to each arrow a ``d(ta) x d(ha)`` matrix acting on
row vectors.  A morphism ``phi: M -> N`` is one matrix per vertex with
``M_a phi_{ha} = phi_{ta} N_a`` for every arrow.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..core import OrbitSpec, QuiverA, dim_of_orbitspec, euler_form


@dataclass(frozen=True)
class ExplicitRep:
    quiver: QuiverA
    dims: tuple[int, ...]
    mats: tuple[tuple[tuple[Fraction, ...], ...], ...]

    def __post_init__(self):
        dims = self.quiver.check_dims(self.dims)
        object.__setattr__(self, "dims", dims)
        if len(self.mats) != len(self.quiver.arrows):
            raise ValueError("one matrix per arrow is required")
        for a, mat in zip(self.quiver.arrows, self.mats):
            m, n = self.quiver.shape(dims, a)
            if len(mat) != m or any(len(row) != n for row in mat):
                raise ValueError(f"matrix of arrow {a.index} should be {m}x{n}")

    @classmethod
    def from_orbit(cls, q: QuiverA, o: OrbitSpec) -> ExplicitRep:
        """Direct sum of interval modules with identity maps along each lace."""
        d = dim_of_orbitspec(q, o)
        basis = {z: [k for k, (i, j) in enumerate(o.laces) if i <= z <= j]
                 for z in range(1, q.n + 1)}
        mats = []
        for a in q.arrows:
            rows, cols = basis[a.tail], basis[a.head]
            mats.append(tuple(tuple(Fraction(int(r == c)) for c in cols) for r in rows))
        return cls(q, d, tuple(mats))


def _as_rep(q: QuiverA, x) -> ExplicitRep:
    return x if isinstance(x, ExplicitRep) else ExplicitRep.from_orbit(q, x)


def rank_of(rows: list[list[Fraction]]) -> int:
    rows = [list(r) for r in rows if any(r)]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        pivot = next((k for k in range(rank, len(rows)) if rows[k][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        p = rows[rank]
        for k in range(rank + 1, len(rows)):
            if rows[k][col]:
                f = rows[k][col] / p[col]
                rows[k] = [x - f * y for x, y in zip(rows[k], p)]
        rank += 1
    return rank


def hom_dim(q: QuiverA, M, N) -> int:
    M, N = _as_rep(q, M), _as_rep(q, N)
    dm, dn = M.dims, N.dims
    offset, total = {}, 0
    for z in range(1, q.n + 1):
        offset[z] = total
        total += dm[z - 1] * dn[z - 1]

    def unknown(z, p, r):
        return offset[z] + (p - 1) * dn[z - 1] + (r - 1)

    eqs = []
    for a, Ma, Na in zip(q.arrows, M.mats, N.mats):
        t, h = a.tail, a.head
        # entry (p, r) of M_a phi_h - phi_t N_a
        for p in range(1, dm[t - 1] + 1):
            for r in range(1, dn[h - 1] + 1):
                row = [Fraction(0)] * total
                for s in range(1, dm[h - 1] + 1):
                    if Ma[p - 1][s - 1]:
                        row[unknown(h, s, r)] += Ma[p - 1][s - 1]
                for s in range(1, dn[t - 1] + 1):
                    if Na[s - 1][r - 1]:
                        row[unknown(t, p, s)] -= Na[s - 1][r - 1]
                eqs.append(row)
    return total - rank_of(eqs)


def ext_dim(q: QuiverA, M, N) -> int:
    M, N = _as_rep(q, M), _as_rep(q, N)
    return hom_dim(q, M, N) - euler_form(q, M.dims, N.dims)


def orbit_codim_linear_algebra(q: QuiverA, o: OrbitSpec) -> int:
    d = dim_of_orbitspec(q, o)
    group = sum(x * x for x in d)
    return q.rep_dim(d) - (group - hom_dim(q, o, o))
