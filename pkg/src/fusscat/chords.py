"""Chord diagrams, the arch condition for bundled diagrams, and rotations."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .paths import RDyckPath


def _arches_cross(a, b) -> bool:
    (i, j), (k, l) = sorted([a, b])
    return i < k < j < l


@dataclass(frozen=True)
class ChordDiagram:
    """Planar matching on points ``1..num_points`` with optional decorations.

    ``right_ends``/``left_ends`` are points attached to a wall instead of an
    arch; ``dots`` is a set of decorated arches.
    """

    num_points: int
    arches: tuple
    right_ends: tuple = ()
    left_ends: tuple = ()
    dots: tuple = ()

    def __post_init__(self):
        arches = tuple(sorted(tuple(sorted(a)) for a in self.arches))
        object.__setattr__(self, "arches", arches)
        object.__setattr__(self, "right_ends", tuple(sorted(self.right_ends)))
        object.__setattr__(self, "left_ends", tuple(sorted(self.left_ends)))
        object.__setattr__(self, "dots", tuple(sorted(tuple(sorted(a)) for a in self.dots)))
        used = [p for a in arches for p in a] + list(self.right_ends) + list(self.left_ends)
        if sorted(used) != list(range(1, self.num_points + 1)):
            raise ValueError("every point must lie in exactly one arch or end")
        for a in self.dots:
            if a not in arches:
                raise ValueError(f"dotted arch {a} is not an arch")

    @classmethod
    def from_arches(cls, arches: Iterable, num_points: int | None = None) -> "ChordDiagram":
        arches = list(arches)
        if num_points is None:
            num_points = 2 * len(arches)
        return cls(num_points, tuple(arches))

    def is_planar(self) -> bool:
        arches = self.arches
        for x in range(len(arches)):
            for y in range(x + 1, len(arches)):
                if _arches_cross(arches[x], arches[y]):
                    return False
        # an end point is blocked by any arch covering it
        for p in self.right_ends + self.left_ends:
            if any(i < p < j for i, j in arches):
                return False
        return True

    def partner(self) -> dict:
        out = {}
        for i, j in self.arches:
            out[i], out[j] = j, i
        return out

    def word(self) -> str:
        """U at every arch opener, R at every closer."""
        letters = ["R"] * self.num_points
        for i, _ in self.arches:
            letters[i - 1] = "U"
        return "".join(letters)

    def to_json(self) -> dict:
        return {
            "points": self.num_points,
            "arches": [list(a) for a in self.arches],
            "right_ends": list(self.right_ends),
            "left_ends": list(self.left_ends),
            "dots": [list(a) for a in self.dots],
        }

    @classmethod
    def from_json(cls, data: dict) -> "ChordDiagram":
        return cls(
            data["points"],
            tuple(tuple(a) for a in data["arches"]),
            tuple(data.get("right_ends", ())),
            tuple(data.get("left_ends", ())),
            tuple(tuple(a) for a in data.get("dots", ())),
        )

    def sketch(self) -> str:
        """Small ASCII rendering: one line per arch, nested arches indented."""
        lines = []
        for i, j in self.arches:
            depth = sum(1 for a, b in self.arches if a < i and j < b)
            mark = "*" if (i, j) in self.dots else ""
            lines.append("  " * depth + f"{i}--{j}{mark}")
        for p in self.right_ends:
            lines.append(f"{p}->|")
        for p in self.left_ends:
            lines.append(f"|<-{p}")
        return "\n".join(lines)


def path_to_matching(p: RDyckPath | str) -> ChordDiagram:
    """Dyck path (r = 1) to its planar matching: each U pairs with its R."""
    word = p.word if isinstance(p, RDyckPath) else p
    stack, arches = [], []
    for pos, ch in enumerate(word, start=1):
        if ch == "U":
            stack.append(pos)
        else:
            if not stack:
                raise ValueError(f"{word!r} is not a Dyck word")
            arches.append((stack.pop(), pos))
    if stack:
        raise ValueError(f"{word!r} is not a Dyck word")
    return ChordDiagram(len(word), tuple(arches))


def matching_to_path(c: ChordDiagram) -> RDyckPath:
    if c.right_ends or c.left_ends:
        raise ValueError("decorated diagrams have no plain path")
    return RDyckPath(c.word(), 1)


def check_condA(c: ChordDiagram, r: int) -> bool:
    """True iff every arch (i, j) has i + j - 1 divisible by 2r."""
    return all((i + j - 1) % (2 * r) == 0 for i, j in c.arches)


def rotate_sigma(c: ChordDiagram, k: int = 1) -> ChordDiagram:
    """Shift every point by +k modulo the number of points."""
    m = c.num_points

    def sh(p):
        return (p - 1 + k) % m + 1

    return ChordDiagram(
        m,
        tuple((sh(i), sh(j)) for i, j in c.arches),
        tuple(sh(p) for p in c.right_ends),
        tuple(sh(p) for p in c.left_ends),
        tuple((sh(i), sh(j)) for i, j in c.dots),
    )


def rotate_sigma_r(c: ChordDiagram, r: int) -> ChordDiagram:
    """Rotation by one bundle of r points; input must satisfy the arch condition."""
    if not check_condA(c, r):
        raise ValueError("diagram violates the bundled arch condition")
    return rotate_sigma(c, r)


def enumerate_matchings(num_points: int, r: int | None = None) -> list:
    """All planar perfect matchings on ``num_points`` points (optionally with condA)."""
    out = [ChordDiagram(num_points, tuple(a))
           for a in _sub_matchings(list(range(1, num_points + 1)), r)]
    return sorted(out, key=lambda c: c.arches)


def _sub_matchings(points, r):
    if not points:
        yield []
        return
    first = points[0]
    for k in range(1, len(points), 2):
        partner = points[k]
        if r is not None and (first + partner - 1) % (2 * r):
            continue
        for a in _sub_matchings(points[1:k], r):
            for b in _sub_matchings(points[k + 1:], r):
                yield [(first, partner)] + a + b


@dataclass(frozen=True)
class GenChordDiagram:
    """n non-crossing blocks of r + 1 points covering ``1..(r+1)n``."""

    n: int
    r: int
    blocks: tuple = field(default=())

    def __post_init__(self):
        blocks = tuple(sorted(tuple(sorted(b)) for b in self.blocks))
        object.__setattr__(self, "blocks", blocks)
        if len(blocks) != self.n or any(len(b) != self.r + 1 for b in blocks):
            raise ValueError("need n blocks of size r + 1")
        if sorted(p for b in blocks for p in b) != list(range(1, (self.r + 1) * self.n + 1)):
            raise ValueError("blocks must cover 1..(r+1)n")
        owner = {p: k for k, b in enumerate(blocks) for p in b}
        size = (self.r + 1) * self.n
        for a in range(1, size + 1):
            for b in range(a + 1, size + 1):
                if owner[a] == owner[b]:
                    continue
                for c in range(b + 1, size + 1):
                    if owner[c] != owner[a]:
                        continue
                    for d in range(c + 1, size + 1):
                        if owner[d] == owner[b]:
                            raise ValueError("blocks cross")


def gen_chord_to_path(g: GenChordDiagram) -> RDyckPath:
    letters = ["R"] * ((g.r + 1) * g.n)
    for b in g.blocks:
        letters[b[0] - 1] = "U"
    return RDyckPath("".join(letters), g.r)


def path_to_gen_chord(p: RDyckPath) -> GenChordDiagram:
    """Fill blocks from the last U backwards, each taking the r + 1 smallest free
    positions starting at its U."""
    r, size = p.r, len(p.word)
    free = set(range(1, size + 1))
    blocks = []
    for a in reversed(p.up_positions()):
        avail = sorted(x for x in free if x >= a)[: r + 1]
        if len(avail) < r + 1:
            raise ValueError("not enough room; path is invalid")
        blocks.append(avail)
        free.difference_update(avail)
    return GenChordDiagram(p.n, r, tuple(tuple(b) for b in blocks))


def rotate_tilde(g: GenChordDiagram, k: int = 1) -> GenChordDiagram:
    size = (g.r + 1) * g.n
    return GenChordDiagram(
        g.n, g.r, tuple(tuple((p - 1 + k) % size + 1 for p in b) for b in g.blocks)
    )
