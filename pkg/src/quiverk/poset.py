"""Containment order on products of (opposite) matrix Schubert varieties.

``X_w`` is cut out by rank bounds on NW-justified submatrices for rightward
arrows and SE-justified ones for leftward arrows, so ``X_v`` lies in ``X_w``
exactly when every rank matrix of ``v`` is entrywise at most that of ``w``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .core import OrbitSpec, QuiverA
from .lacing import DEFAULT_CAP, LacingDiagram, corner_of, minimal_diagrams
from .perm import Corner, PartialPerm, all_partial_perms

RankMatrix = tuple[tuple[int, ...], ...]
RankMatrixProfile = tuple[RankMatrix, ...]


class PosetError(ValueError):
    pass


def rank_matrix(w: PartialPerm, corner: Corner = Corner.NW) -> RankMatrix:
    """Entry ``(p, q)``: rank of rows ``1..p`` x cols ``1..q`` (NW) or of
    rows ``p..m`` x cols ``q..n`` (SE)."""
    m, n = w.shape
    grid = [[0] * (n + 2) for _ in range(m + 2)]
    for i, j in w.pairs:
        grid[i][j] = 1
    acc = [[0] * (n + 2) for _ in range(m + 2)]
    if corner is Corner.NW:
        for p in range(1, m + 1):
            for q in range(1, n + 1):
                acc[p][q] = grid[p][q] + acc[p - 1][q] + acc[p][q - 1] - acc[p - 1][q - 1]
    else:
        for p in range(m, 0, -1):
            for q in range(n, 0, -1):
                acc[p][q] = grid[p][q] + acc[p + 1][q] + acc[p][q + 1] - acc[p + 1][q + 1]
    return tuple(tuple(acc[p][1:n + 1]) for p in range(1, m + 1))


def rank_profile(w: LacingDiagram) -> RankMatrixProfile:
    return tuple(rank_matrix(pp, corner_of(a)) for a, pp in zip(w.quiver.arrows, w.mats))


def _leq(r: RankMatrixProfile, s: RankMatrixProfile) -> bool:
    return all(x <= y for ra, sa in zip(r, s) for rr, sr in zip(ra, sa) for x, y in zip(rr, sr))


def closure_leq(v: LacingDiagram, w: LacingDiagram) -> bool:
    """True iff ``X_v`` is contained in ``X_w``."""
    if v.quiver != w.quiver or v.dims != w.dims:
        raise PosetError("diagrams live in different representation varieties")
    return _leq(rank_profile(v), rank_profile(w))


@dataclass
class FinitePoset:
    """Elements keyed by rank profile, with an adjoined top element."""
    elements: list[LacingDiagram]
    profiles: list[RankMatrixProfile]
    leq: list[list[bool]]

    @classmethod
    def of(cls, diagrams: Iterable[LacingDiagram]) -> FinitePoset:
        by_profile: dict[RankMatrixProfile, LacingDiagram] = {}
        for w in sorted(diagrams):
            by_profile.setdefault(rank_profile(w), w)
        profiles = list(by_profile)
        elements = [by_profile[p] for p in profiles]
        n = len(profiles)
        leq = [[_leq(profiles[i], profiles[j]) for j in range(n)] for i in range(n)]
        poset = cls(elements, profiles, leq)
        poset.check()
        return poset

    def check(self):
        n = len(self.elements)
        for i in range(n):
            if not self.leq[i][i]:
                raise PosetError("relation is not reflexive")
            for j in range(n):
                if i != j and self.leq[i][j] and self.leq[j][i]:
                    raise PosetError("relation is not antisymmetric")
                if self.leq[i][j]:
                    for k in range(n):
                        if self.leq[j][k] and not self.leq[i][k]:
                            raise PosetError("relation is not transitive")

    def covers(self) -> list[tuple[int, int]]:
        """Pairs ``(i, j)`` with ``element i`` covered by ``element j``."""
        n = len(self.elements)
        out = []
        for i in range(n):
            for j in range(n):
                if i == j or not self.leq[i][j]:
                    continue
                if not any(k not in (i, j) and self.leq[i][k] and self.leq[k][j]
                           for k in range(n)):
                    out.append((i, j))
        return out

    def moebius_to_top(self) -> list[int]:
        """``mu(x, top)`` for every element, with ``mu(top, top) = 1``."""
        n = len(self.elements)
        size = [sum(sum(map(sum, r)) for r in p) for p in self.profiles]
        order = sorted(range(n), key=lambda i: -size[i])
        mu = [0] * n
        for i in order:
            mu[i] = -(1 + sum(mu[j] for j in range(n) if j != i and self.leq[i][j]))
        return mu


def moebius_signs(diagrams: Iterable[LacingDiagram], flip: bool = False) -> dict[LacingDiagram, int]:
    """``-mu(x, top)`` per diagram (``flip`` negates, for mutation testing)."""
    diagrams = list(diagrams)
    poset = FinitePoset.of(diagrams)
    mu = poset.moebius_to_top()
    sign = 1 if flip else -1
    by_profile = {p: sign * m for p, m in zip(poset.profiles, mu)}
    return {w: by_profile[rank_profile(w)] for w in diagrams}


def hasse_dot(diagrams: Sequence[LacingDiagram], signs: dict[LacingDiagram, int] | None = None,
              name: str = "hasse") -> str:
    """Hasse diagram in DOT; larger varieties drawn on top."""
    poset = FinitePoset.of(diagrams)
    signs = signs if signs is not None else moebius_signs(poset.elements)
    lines = [f"digraph {name} {{", "  rankdir=BT;", "  node [shape=circle];"]
    for idx, w in enumerate(poset.elements):
        label = f"|w|={w.length}\\nsign={signs[w]:+d}"
        lines.append(f'  n{idx} [label="{label}", tooltip="{_pairs_text(w)}"];')
    for i, j in poset.covers():
        lines.append(f"  n{i} -> n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _pairs_text(w: LacingDiagram) -> str:
    return "; ".join(",".join(f"({i},{j})" for i, j in pp.pairs) or "-" for pp in w.mats)


# --- diagnostic: the poset of components of intersections --------------------

def _components_of_meet(u: PartialPerm, v: PartialPerm, corner: Corner,
                        pool: list[PartialPerm]) -> list[PartialPerm]:
    bound = tuple(tuple(map(min, ru, rv))
                  for ru, rv in zip(rank_matrix(u, corner), rank_matrix(v, corner)))
    below = [(t, rank_matrix(t, corner)) for t in pool]
    below = [(t, r) for t, r in below
             if all(x <= y for rr, br in zip(r, bound) for x, y in zip(rr, br))]
    maximal = []
    for t, r in below:
        if not any(s is not t and r != rs and
                   all(x <= y for rr, sr in zip(r, rs) for x, y in zip(rr, sr))
                   for s, rs in below):
            maximal.append(t)
    return maximal


def intersection_poset(q: QuiverA, o: OrbitSpec, cap: int = DEFAULT_CAP
                       ) -> dict[LacingDiagram, int]:
    """Close the components ``X_w`` (``w`` minimal) under taking irreducible
    components of pairwise intersections; return ``-mu(x, top)`` for every
    element of the resulting poset.

    Elements with nonzero value are the ones that survive inclusion-exclusion.
    Diagnostic only: it assumes every intersection is reduced.
    """
    mins = minimal_diagrams(q, o, cap)
    if not mins:
        return {}
    d = mins[0].dims
    arrows = q.arrows
    pools = [list(all_partial_perms(*q.shape(d, a))) for a in arrows]
    found = set(mins)
    frontier = list(mins)
    while frontier:
        fresh = []
        current = sorted(found)
        for u in frontier:
            for v in current:
                if u == v:
                    continue
                per_arrow = [_components_of_meet(u.mats[k], v.mats[k], corner_of(a), pools[k])
                             for k, a in enumerate(arrows)]
                for mats in itertools.product(*per_arrow):
                    w = LacingDiagram(q, d, mats)
                    if w not in found:
                        found.add(w)
                        fresh.append(w)
        frontier = fresh
    return moebius_signs(found)
