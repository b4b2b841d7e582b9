"""Increasing chains of non-crossing partitions and their bijections."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .chords import ChordDiagram, path_to_matching, rotate_sigma_r
from .noncrossing import (
    NcPartition,
    enumerate_ncp,
    generator_F_basis,
    kreweras_power,
    leq,
    psi,
    psi_inv,
)
from .paths import RDyckPath
from .rings import FormalSum, LaurentPoly


@dataclass(frozen=True, order=True)
class RChain:
    """Increasing chain pi_1 <= ... <= pi_r of non-crossing partitions."""

    parts: tuple

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        if not parts:
            raise ValueError("a chain needs at least one partition")
        if len({p.n for p in parts}) != 1:
            raise ValueError("partitions in a chain must share n")
        for a, b in zip(parts, parts[1:]):
            if not leq(a, b):
                raise ValueError(f"chain is not increasing at {a} <= {b}")

    @property
    def n(self) -> int:
        return self.parts[0].n

    @property
    def r(self) -> int:
        return len(self.parts)

    @classmethod
    def parse(cls, text: str) -> "RChain":
        body = text.strip()
        if body.startswith("[") and body.endswith("]"):
            body = body[1:-1]
        elif body.startswith("(") and body.endswith(")"):
            body = body[1:-1]
        sep = ";" if ";" in body else ","
        pieces = [x for x in body.split(sep) if x.strip()]
        return cls(tuple(NcPartition.parse(x) for x in pieces))

    def __str__(self):
        return "[" + ";".join(str(p) for p in self.parts) + "]"

    def to_json(self) -> list:
        return [str(p) for p in self.parts]


def _one(x):
    return FormalSum({x: LaurentPoly.constant(1)})


def enumerate_chains(n: int, r: int) -> list:
    """All increasing r-chains in the partitions of 1..n, sorted."""
    if n < 1 or r < 1:
        raise ValueError("need n, r >= 1")
    ncp = enumerate_ncp(n)
    above = {p: [v for v in ncp if leq(p, v)] for p in ncp}
    out = []

    def rec(prefix):
        if len(prefix) == r:
            out.append(RChain(tuple(prefix)))
            return
        for v in (above[prefix[-1]] if prefix else ncp):
            rec(prefix + [v])

    rec([])
    return sorted(out)


# -- kappa -------------------------------------------------------------------

def _block_path(size: int, r: int) -> str:
    return "U" + "R" * (r - 1) + ("U" + "R" * r) * (size - 1) + "R"


def _merge(pieces: list, r: int) -> str:
    """Insert constituent words in order of their minimum element.

    ``pieces`` holds (elements, word) pairs; each element owns r + 1 letters.
    """
    pieces = sorted(pieces, key=lambda t: min(t[0]))
    union = list(pieces[0][0])
    word = pieces[0][1]
    for elems, sub in pieces[1:]:
        cut = sum(1 for q in union if q < min(elems)) * (r + 1)
        word = word[:cut] + sub + word[cut:]
        union += list(elems)
    return word


def _shift_left(word: str) -> str:
    ups = [i for i, ch in enumerate(word) if ch == "U"]
    letters = ["R"] * len(word)
    letters[ups[0]] = "U"
    for i in ups[1:]:
        letters[i - 1] = "U"
    return "".join(letters)


def _shift_right(word: str) -> str:
    ups = [i for i, ch in enumerate(word) if ch == "U"]
    letters = ["R"] * len(word)
    letters[ups[0]] = "U"
    for i in ups[1:]:
        if i + 1 >= len(word):
            raise ValueError("cannot unshift a trailing up step")
        letters[i + 1] = "U"
    return "".join(letters)


def kappa(chain: RChain) -> RDyckPath:
    """Bijection from increasing r-chains of size n to r-Dyck paths of size n."""
    r = chain.r
    words = {b: _block_path(len(b), r) for b in chain.parts[0].blocks}
    for lower, upper in zip(chain.parts, chain.parts[1:]):
        nxt = {}
        for blk in upper.blocks:
            inside = [(c, words[c]) for c in lower.blocks if set(c) <= set(blk)]
            nxt[blk] = _shift_left(_merge(inside, r))
        words = nxt
    top = [(b, words[b]) for b in chain.parts[-1].blocks]
    return RDyckPath(_merge(top, r), r)


def _decompose(word: str, elems: list, r: int) -> list:
    """Split a merged word into its constituents as (elements, word) pairs."""
    size = r + 1
    if len(word) != size * len(elems):
        raise ValueError("word length does not match the element count")
    done, stack = [], []
    for k, q in enumerate(sorted(elems)):
        chunk = word[k * size:(k + 1) * size]
        if chunk[0] == "U":
            stack.append([[], "", 0])
        elif not stack:
            raise ValueError(f"{word!r} does not decompose")
        top = stack[-1]
        top[0].append(q)
        top[1] += chunk
        top[2] += sum(r if ch == "U" else -1 for ch in chunk)
        if top[2] < 0:
            raise ValueError(f"{word!r} does not decompose")
        if top[2] == 0:
            stack.pop()
            done.append((tuple(top[0]), top[1]))
    if stack:
        raise ValueError(f"{word!r} does not decompose")
    return done


def kappa_inv(path: RDyckPath | str, r: int | None = None) -> RChain:
    if isinstance(path, str):
        path = RDyckPath.parse(path, r)
    r, n = path.r, path.n
    levels = [None] * r
    current = _decompose(path.word, list(range(1, n + 1)), r)
    levels[r - 1] = [e for e, _ in current]
    for lvl in range(r - 2, -1, -1):
        nxt = []
        for elems, word in current:
            nxt += _decompose(_shift_right(word), list(elems), r)
        current = nxt
        levels[lvl] = [e for e, _ in current]
    for elems, word in current:
        if word != _block_path(len(elems), r):
            raise ValueError(f"{path.word!r} is not in the image of kappa")
    return RChain(tuple(NcPartition(n, tuple(blks)) for blks in levels))


# -- extended Kreweras ---------------------------------------------------------

def extended_kreweras(chain: RChain, k: int = 1) -> RChain:
    """rho^k on chains; odd powers reverse the order of the coordinates."""
    parts = chain.parts[::-1] if k % 2 else chain.parts
    return RChain(tuple(kreweras_power(p, k) for p in parts))


def extended_kreweras_inv(chain: RChain) -> RChain:
    return extended_kreweras(chain, -1)


# -- chord diagrams ------------------------------------------------------------

def _superpose(diagrams: list, r: int, left_parity: int) -> ChordDiagram:
    """Stack r matchings on 2n points into one on 2rn points.

    Coordinate s uses the s-th point from the left of bundles with parity
    ``left_parity`` and the s-th point from the right of the others.
    """
    num = diagrams[0].num_points
    arches = []
    for s, c in enumerate(diagrams, start=1):
        for pair in c.arches:
            ends = []
            for b in pair:
                off = s if b % 2 == left_parity else r + 1 - s
                ends.append(r * (b - 1) + off)
            arches.append(tuple(ends))
    return ChordDiagram(r * num, tuple(arches))


def psi_r(chain: RChain) -> ChordDiagram:
    return _superpose([psi(p) for p in chain.parts], chain.r, 1)


def psi_r_inv(c: ChordDiagram, r: int) -> RChain:
    if c.num_points % (2 * r):
        raise ValueError("point count is not a multiple of 2r")
    num = c.num_points // r
    per = [[] for _ in range(r)]
    for a, b in c.arches:
        ba, oa = divmod(a - 1, r)
        bb, ob = divmod(b - 1, r)
        ba, bb, oa, ob = ba + 1, bb + 1, oa + 1, ob + 1
        if ba % 2 == bb % 2:
            raise ValueError("arch joins two bundles of the same kind")
        s = oa if ba % 2 else ob
        if (ob if ba % 2 else oa) != r + 1 - s:
            raise ValueError("arch ends sit at inconsistent offsets")
        per[s - 1].append((ba, bb))
    return RChain(tuple(psi_inv(ChordDiagram(num, tuple(a))) for a in per))


def phi(chain: RChain) -> ChordDiagram:
    return rotate_sigma_r(psi_r(chain), chain.r)


def phi_prime(chain: RChain) -> ChordDiagram:
    """Superposition of the size-one kappa paths of each coordinate."""
    mats = [path_to_matching(kappa(RChain((p,))).word) for p in chain.parts]
    return _superpose(mats, chain.r, 0)


# -- cover-exclusive Dyck tilings ------------------------------------------------

@dataclass(frozen=True)
class CoverExclusiveTiling:
    """Tiles over the lowest path (U^r R^r)^n, each stored by its two anchors.

    An anchor pair (d, u) names the d-th down step and the u-th up step of the
    lowest path; the tile spans the columns between them.
    """

    n: int
    r: int
    tiles: tuple

    def down_position(self, d: int) -> int:
        blk, off = divmod(d - 1, self.r)
        return 2 * self.r * blk + self.r + off + 1

    def up_position(self, u: int) -> int:
        blk, off = divmod(u - 1, self.r)
        return 2 * self.r * blk + off + 1

    def heights(self) -> list:
        r = self.r
        base = [0]
        for _ in range(self.n):
            for ch in "U" * r + "R" * r:
                base.append(base[-1] + (1 if ch == "U" else -1))
        for d, u in self.tiles:
            a, b = self.down_position(d), self.up_position(u)
            if a >= b:
                raise ValueError(f"tile ({d}, {u}) has its anchors reversed")
            for x in range(a, b):
                base[x] += 2
        return base


def build_tiling(chain: RChain) -> CoverExclusiveTiling:
    """Add tiles for pi_r, ..., pi_1; the top coordinate yields the innermost."""
    r = chain.r
    tiles = []
    for i in range(r, 0, -1):
        depth = r + 1 - i
        blocks = sorted(chain.parts[i - 1].blocks, key=max)
        for blk in blocks:
            for qs, qn in zip(blk, blk[1:]):
                tiles.append((r * (qs - 1) + r - depth + 1, r * (qn - 1) + depth))
    return CoverExclusiveTiling(chain.n, r, tuple(tiles))


def tiling_top_path(t: CoverExclusiveTiling) -> RDyckPath:
    h = t.heights()
    letters = []
    for a, b in zip(h, h[1:]):
        if abs(b - a) != 1:
            raise ValueError("tiles overlap into an invalid profile")
        letters.append("U" if b > a else "R")
    return RDyckPath("".join(letters), 1)


def tiling_diagram(chain: RChain) -> ChordDiagram:
    return path_to_matching(tiling_top_path(build_tiling(chain)).word)


# -- generators ---------------------------------------------------------------

@lru_cache(maxsize=None)
def _f1s(s: int, chain: RChain) -> FormalSum:
    r = chain.r
    coef = LaurentPoly.constant(1)
    parts = list(chain.parts)
    for j in range(r - s, r):
        (image, c), = generator_F_basis(1, parts[j]).items()
        parts[j] = image
        coef = coef * c
    return FormalSum({RChain(tuple(parts)): coef})


def generator_Fs_basis(i: int, s: int, chain: RChain) -> FormalSum:
    n, r = chain.n, chain.r
    if not 1 <= i <= 2 * n - 1:
        raise IndexError(f"F_{i} undefined for n = {n}")
    if not 1 <= s <= r:
        raise IndexError(f"strand count {s} outside 1..{r}")
    pre = extended_kreweras(chain, -(i - 1))
    return _f1s(s, pre).map_keys(lambda x: extended_kreweras(x, i - 1))


def generator_Fs(i: int, s: int, x) -> FormalSum:
    """F_i^(s) on a chain or on a formal sum of chains."""
    if isinstance(x, RChain):
        x = _one(x)
    return x.apply(lambda c: generator_Fs_basis(i, s, c))
