"""Reference data for the running example: quiver ``<><``, orbit ``1-3,2-4,2-2``.

Diagrams are named by the crossings they contain; arrow 1 is ``2 -> 1``
(3x1), arrow 2 is ``2 -> 3`` (3x2), arrow 3 is ``4 -> 3`` (1x2).
"""

from __future__ import annotations

from .core import OrbitSpec, QuiverA
from .lacing import LacingDiagram
from .perm import PartialPerm

QUIVER = "<><"
ORBIT = "1-3,2-4,2-2"
DIMS = (1, 3, 2, 1)

_PAIRS = {
    "a": ([(1, 1)], [(1, 1), (2, 2)], [(1, 2)]),
    "b": ([(2, 1)], [(1, 2), (2, 1)], [(1, 2)]),
    "c": ([(3, 1)], [(1, 2), (3, 1)], [(1, 2)]),
    "d": ([(2, 1)], [(1, 1), (2, 2)], [(1, 1)]),
    "e": ([(3, 1)], [(1, 1), (3, 2)], [(1, 1)]),
    "ab": ([(1, 1)], [(1, 2), (2, 1)], [(1, 2)]),
    "ad": ([(1, 1)], [(1, 1), (2, 2)], [(1, 1)]),
    "bc": ([(2, 1)], [(1, 2), (3, 1)], [(1, 2)]),
    "bd": ([(2, 1)], [(1, 2), (2, 1)], [(1, 1)]),
    "ce": ([(3, 1)], [(1, 2), (3, 1)], [(1, 1)]),
    "de": ([(2, 1)], [(1, 1), (3, 2)], [(1, 1)]),
    "x": ([(1, 1)], [(1, 2), (2, 1)], [(1, 1)]),
    "y": ([(2, 1)], [(1, 2), (3, 1)], [(1, 1)]),
    "z": ([(1, 1)], [(1, 2), (3, 1)], [(1, 2)]),
    "w": ([(1, 1)], [(1, 2), (3, 1)], [(1, 1)]),
}

# expected lengths and Moebius signs of the reference enumeration
EXPECTED_LENGTH = {**{k: 2 for k in "abcde"},
                   **{k: 3 for k in ("ab", "ad", "bc", "bd", "ce", "de")},
                   "x": 4, "y": 4, "z": 4, "w": 5}
EXPECTED_SIGN = {k: (-1) ** (n - 2) for k, n in EXPECTED_LENGTH.items()}
EXPECTED_HISTOGRAM = {2: 5, 3: 6, 4: 3, 5: 1}

# (smaller variety, larger variety) for each expected cover relation
EXPECTED_COVERS = sorted([
    ("ab", "a"), ("ad", "a"),
    ("ab", "b"), ("bc", "b"), ("bd", "b"),
    ("bc", "c"), ("ce", "c"),
    ("ad", "d"), ("bd", "d"), ("de", "d"),
    ("ce", "e"), ("de", "e"),
    ("x", "ab"), ("z", "ab"), ("x", "ad"),
    ("y", "bc"), ("z", "bc"), ("x", "bd"), ("y", "bd"),
    ("y", "ce"), ("y", "de"),
    ("w", "x"), ("w", "y"), ("w", "z"),
])


def quiver() -> QuiverA:
    return QuiverA.from_string(QUIVER)


def orbit() -> OrbitSpec:
    return OrbitSpec.from_string(ORBIT)


def reference_diagrams() -> dict[str, LacingDiagram]:
    q = quiver()
    out = {}
    for name, per_arrow in _PAIRS.items():
        mats = tuple(PartialPerm(*q.shape(DIMS, a), tuple(p)) for a, p in zip(q.arrows, per_arrow))
        out[name] = LacingDiagram(q, DIMS, mats)
    return out


def name_of(w: LacingDiagram) -> str | None:
    for name, v in reference_diagrams().items():
        if v == w:
            return name
    return None
