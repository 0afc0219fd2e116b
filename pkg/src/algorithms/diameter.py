"""
Diameter of a terrain: the longest segment inside the closed region.

Every maximal segment is supported by two chain vertices, so the
candidates are the prolongations of all mutually visible vertex pairs.
"""

from dataclasses import dataclass
from typing import List, Tuple
import logging

from ..geometry.primitives import Segment, orientation
from ..geometry.terrain import Terrain, prolong_chord, visible
from ..utils.predicates import get_tolerance

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Chord:
    """
    Maximal segment inside the region through two chain vertices.

    ``seg.a`` is the left end (lower end for vertical chords); ``supports``
    holds the extreme pair of chain vertices lying on the chord.
    """
    seg: Segment
    supports: Tuple[int, int]

    @property
    def length(self) -> float:
        return self.seg.length

    @property
    def slope(self) -> float:
        dx = self.seg.b.x - self.seg.a.x
        if abs(dx) <= get_tolerance():
            return float("inf")
        return (self.seg.b.y - self.seg.a.y) / dx

    def touches_base(self) -> bool:
        tol = get_tolerance()
        return self.seg.a.y <= tol or self.seg.b.y <= tol


def _supports_on(T: Terrain, seg: Segment) -> Tuple[int, int]:
    on_line = [
        i for i, v in enumerate(T.chain)
        if orientation(seg.a, seg.b, v) == 0 and seg.contains_point(v)
    ]
    return (min(on_line), max(on_line))


def _same_chord(c: Chord, seg: Segment) -> bool:
    tol = get_tolerance() * 10
    return c.seg.a.close_to(seg.a, tol) and c.seg.b.close_to(seg.b, tol)


def candidate_chords(T: Terrain) -> List[Chord]:
    """
    Maximal prolongations of every visible pair of chain vertices.

    Chords reached from several vertex pairs are reported once.
    """
    chords: List[Chord] = []
    for i in range(T.n):
        for j in range(i + 1, T.n):
            u, v = T.chain[i], T.chain[j]
            if not visible(T, u, v):
                continue
            seg = prolong_chord(T, u, v)
            if seg is None or seg.degenerate:
                continue
            if any(_same_chord(c, seg) for c in chords):
                continue
            chords.append(Chord(seg=seg, supports=_supports_on(T, seg)))

    logger.debug(f"Generated {len(chords)} candidate chords for n={T.n}")
    return chords


def longest_chord(chords: List[Chord]) -> Chord:
    """Longest chord; ties go to the lexicographically smallest left end."""
    tol = get_tolerance()
    best = chords[0]
    for c in chords[1:]:
        if c.length > best.length + tol:
            best = c
        elif abs(c.length - best.length) <= tol and c.seg.a.key() < best.seg.a.key():
            best = c
    return best


def compute_diameter(T: Terrain) -> Chord:
    """
    Longest segment inside the terrain.

    Args:
        T: Validated terrain

    Returns:
        Chord of maximum length
    """
    chords = candidate_chords(T)
    best = longest_chord(chords)
    logger.info(
        f"Diameter {best.length:.9f} from ({best.seg.a.x:g}, {best.seg.a.y:g}) "
        f"to ({best.seg.b.x:g}, {best.seg.b.y:g}) over {len(chords)} chords"
    )
    return best
