"""Generalized Dyck paths, their two-row tableaux and the sliding rotation."""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import comb
from typing import Iterator


def fuss_catalan(n: int, r: int) -> int:
    """Number of r-Dyck paths of size n."""
    if n < 0 or r < 1:
        raise ValueError("need n >= 0 and r >= 1")
    return comb((r + 1) * n, n) // (r * n + 1)


def expand_word(text: str) -> str:
    """Expand exponent shorthand: ``UR^3`` -> ``URRR``, ``U^2R`` -> ``UUR``."""
    text = text.strip().replace(" ", "")

    def repl(m):
        return m.group(1) * int(m.group(2))

    out = re.sub(r"([UR])\^(\d+)", repl, text)
    if not re.fullmatch(r"[UR]*", out):
        raise ValueError(f"not a U/R word: {text!r}")
    return out


def is_r_dyck(word: str, r: int) -> bool:
    ups = rights = 0
    for ch in word:
        if ch == "U":
            ups += 1
        elif ch == "R":
            rights += 1
            if r * ups < rights:
                return False
        else:
            return False
    return rights == r * ups


@dataclass(frozen=True, order=True)
class RDyckPath:
    """A word over ``U``/``R`` with n ups and rn rights, never below slope 1/r."""

    word: str
    r: int = 1

    def __post_init__(self):
        if not is_r_dyck(self.word, self.r):
            raise ValueError(f"{self.word!r} is not a {self.r}-Dyck path")

    @classmethod
    def parse(cls, text: str, r: int | None = None) -> "RDyckPath":
        word = expand_word(text)
        if r is None:
            ups = word.count("U")
            if ups == 0:
                raise ValueError("cannot infer r from an empty word")
            r = (len(word) - ups) // ups
        return cls(word, r)

    @property
    def n(self) -> int:
        return len(self.word) // (self.r + 1)

    def up_positions(self) -> tuple:
        return tuple(i + 1 for i, ch in enumerate(self.word) if ch == "U")

    def heights(self) -> list:
        """Height after each letter, counted in units where U = +r and R = -1."""
        h, out = 0, []
        for ch in self.word:
            h += self.r if ch == "U" else -1
            out.append(h)
        return out

    def __str__(self):
        return self.word


def enumerate_paths(n: int, r: int) -> list:
    """All r-Dyck paths of size n in lexicographic order (U before R)."""
    out = []

    def rec(prefix, ups, rights):
        if ups == n and rights == r * n:
            out.append(RDyckPath("".join(prefix), r))
            return
        if ups < n:
            prefix.append("U")
            rec(prefix, ups + 1, rights)
            prefix.pop()
        if rights < r * ups:
            prefix.append("R")
            rec(prefix, ups, rights + 1)
            prefix.pop()

    rec([], 0, 0)
    return out


@dataclass(frozen=True)
class RYoungTableau:
    """Two-row tableau: first row holds the U positions, second the R positions.

    Each first-row cell is a 1 x r rectangle sitting above r second-row cells.
    """

    first_row: tuple
    second_row: tuple
    r: int

    def __post_init__(self):
        n = len(self.first_row)
        if len(self.second_row) != self.r * n:
            raise ValueError("second row must have r times as many cells")
        if sorted(self.first_row + self.second_row) != list(range(1, (self.r + 1) * n + 1)):
            raise ValueError("entries must be 1..(r+1)n")
        for row in (self.first_row, self.second_row):
            if any(a >= b for a, b in zip(row, row[1:])):
                raise ValueError("rows must be increasing")
        for j, v in enumerate(self.second_row, start=1):
            if self.first_row[(j - 1) // self.r] > v:
                raise ValueError("columns must be increasing")


def path_to_tableau(p: RDyckPath) -> RYoungTableau:
    ups = tuple(i + 1 for i, ch in enumerate(p.word) if ch == "U")
    rights = tuple(i + 1 for i, ch in enumerate(p.word) if ch == "R")
    return RYoungTableau(ups, rights, p.r)


def tableau_to_path(t: RYoungTableau) -> RDyckPath:
    size = len(t.first_row) + len(t.second_row)
    letters = ["R"] * size
    for i in t.first_row:
        letters[i - 1] = "U"
    return RDyckPath("".join(letters), t.r)


def jdt_rotate(p: RDyckPath) -> RDyckPath:
    """Rotate a path by one step of the modified jeu de taquin.

    The largest entry is deleted and the hole slides towards the top-left
    corner, always pulling in the larger of its left and upper neighbours.
    Then every entry is incremented and 1 fills the corner.
    """
    r, n = p.r, p.n
    if n == 0:
        return p
    t = path_to_tableau(p)
    top = list(t.first_row)
    bottom = list(t.second_row)
    # the largest entry always sits at the end of the second row
    row, col = 1, r * n - 1
    bottom[col] = None
    while not (row == 0 and col == 0):
        if row == 1:
            above = top[col // r]
            left = bottom[col - 1] if col > 0 else None
            if left is not None and left > above:
                bottom[col] = left
                col -= 1
            else:
                bottom[col] = above
                row, col = 0, col // r
                top[col] = None
        else:
            top[col] = top[col - 1]
            col -= 1
            top[col] = None
    top = [1] + [v + 1 for v in top[1:]]
    bottom = [v + 1 for v in bottom]
    return tableau_to_path(RYoungTableau(tuple(top), tuple(bottom), r))


def iter_orbit(p: RDyckPath) -> Iterator[RDyckPath]:
    """Yield p, xi(p), xi^2(p), ... until the orbit closes."""
    cur = p
    while True:
        yield cur
        cur = jdt_rotate(cur)
        if cur == p:
            return
