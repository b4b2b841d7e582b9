"""Non-crossing partitions: lattice, Kreweras map, chord bijection, TL action."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .chords import ChordDiagram
from .rings import FormalSum, LaurentPoly, tau


def _canon(blocks) -> tuple:
    return tuple(sorted((tuple(sorted(b)) for b in blocks if b), key=lambda b: b[0]))


@dataclass(frozen=True)
class NcPartition:
    """Set partition of ``1..n`` with no crossing pair of blocks."""

    n: int
    blocks: tuple

    def __post_init__(self):
        blocks = _canon(self.blocks)
        object.__setattr__(self, "blocks", blocks)
        if sorted(x for b in blocks for x in b) != list(range(1, self.n + 1)):
            raise ValueError(f"blocks {blocks} do not partition 1..{self.n}")
        if not _noncrossing(blocks, self.n):
            raise ValueError(f"{self} is crossing")

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> "NcPartition":
        blocks = []
        for part in text.strip().split("/"):
            if "," in part or (n is not None and n > 9):
                blocks.append([int(x) for x in part.split(",") if x])
            else:
                blocks.append([int(ch) for ch in part])
        size = sum(len(b) for b in blocks)
        if n is not None and n != size:
            raise ValueError(f"{text!r} has {size} elements, expected {n}")
        return cls(size, tuple(tuple(b) for b in blocks))

    @classmethod
    def singletons(cls, n: int) -> "NcPartition":
        return cls(n, tuple((i,) for i in range(1, n + 1)))

    @classmethod
    def full(cls, n: int) -> "NcPartition":
        return cls(n, (tuple(range(1, n + 1)),))

    def __str__(self):
        sep = "," if self.n > 9 else ""
        return "/".join(sep.join(str(x) for x in b) for b in self.blocks)

    def __lt__(self, other):
        return (self.n, self.blocks) < (other.n, other.blocks)

    def block_of(self, x: int) -> tuple:
        return self._owner()[x]

    def _owner(self) -> dict:
        return _owner_map(self.blocks)

    @property
    def rank(self) -> int:
        return self.n - len(self.blocks)

    def merge(self, a: int, b: int) -> "NcPartition":
        """Merge the blocks containing a and b."""
        own = self._owner()
        ba, bb = own[a], own[b]
        if ba == bb:
            return self
        rest = [blk for blk in self.blocks if blk not in (ba, bb)]
        return NcPartition(self.n, tuple(rest) + (ba + bb,))

    def shift(self, k: int) -> "NcPartition":
        """Relabel i -> i + k modulo n."""
        n = self.n
        return NcPartition(n, tuple(tuple((x - 1 + k) % n + 1 for x in b) for b in self.blocks))


@lru_cache(maxsize=None)
def _owner_map(blocks) -> dict:
    return {x: b for b in blocks for x in b}


def _noncrossing(blocks, n) -> bool:
    label = {x: k for k, b in enumerate(blocks) for x in b}
    # a partition is non-crossing iff its arcs between consecutive block
    # elements never interleave
    arcs = [(b[i], b[i + 1]) for b in blocks for i in range(len(b) - 1)]
    for i, j in arcs:
        for k, l in arcs:
            if i < k < j < l and label[i] != label[k]:
                return False
    return True


def enumerate_ncp(n: int) -> list:
    """All non-crossing partitions of ``1..n``, sorted canonically."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    out = []

    def rec(x, blocks):
        if x > n:
            out.append(NcPartition(n, tuple(tuple(b) for b in blocks)))
            return
        # a crossing among processed elements can never be repaired later
        for k in range(len(blocks)):
            trial = [list(c) for c in blocks]
            trial[k].append(x)
            if _noncrossing(_canon(trial), n):
                rec(x + 1, trial)
        rec(x + 1, [list(c) for c in blocks] + [[x]])

    rec(1, [])
    return sorted(set(out))


def covers(p: NcPartition, v: NcPartition) -> bool:
    """True iff v is obtained from p by merging exactly two blocks."""
    _same_size(p, v)
    if v.rank != p.rank + 1:
        return False
    return leq(p, v)


def leq(p: NcPartition, v: NcPartition) -> bool:
    """Refinement order: every block of p lies inside a block of v."""
    _same_size(p, v)
    own = v._owner()
    return all(set(b) <= set(own[b[0]]) for b in p.blocks)


def _same_size(p, v):
    if p.n != v.n:
        raise ValueError("partitions of different sizes")


def kreweras_pairs(p: NcPartition) -> list:
    """The pairs (j, t) whose members share a block of the Kreweras image."""
    n = p.n
    own = p._owner()
    pairs = []
    for j in range(1, n + 1):
        prev = (j - 2) % n + 1
        bj, bk = own[j], own[prev]
        if bj == bk:
            t = j
        else:
            idx = bk.index(prev)
            t = bk[idx + 1] if idx + 1 < len(bk) else bk[0]
        pairs.append((j, t))
    return pairs


def _components(n, pairs) -> tuple:
    parent = list(range(n + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in pairs:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    groups: dict = {}
    for x in range(1, n + 1):
        groups.setdefault(find(x), []).append(x)
    return tuple(tuple(g) for g in groups.values())


@lru_cache(maxsize=None)
def kreweras(p: NcPartition) -> NcPartition:
    """The Kreweras map; its square is the rotation i -> i + 1."""
    return NcPartition(p.n, _components(p.n, kreweras_pairs(p)))


@lru_cache(maxsize=None)
def kreweras_inv(p: NcPartition) -> NcPartition:
    return kreweras(p).shift(-1)


def kreweras_power(p: NcPartition, k: int) -> NcPartition:
    """rho^k for any integer k."""
    k %= 2 * p.n
    # rho^2 is a shift, so only one application of rho is ever needed
    out = p.shift(k // 2)
    return kreweras(out) if k % 2 else out


def arch_pairs(p: NcPartition) -> list:
    """Cyclic successor pairs of every block; a singleton gives (b, b)."""
    out = []
    for b in p.blocks:
        for i in range(len(b)):
            out.append((b[i], b[(i + 1) % len(b)]))
    return out


def psi(p: NcPartition) -> ChordDiagram:
    """Chord diagram on 2n points: pair (i, j) joins point i with (j-1)'.

    Point i sits at position 2i - 1 and i' at position 2i.
    """
    n = p.n
    arches = []
    for i, j in arch_pairs(p):
        k = (j - 2) % n + 1
        arches.append((2 * i - 1, 2 * k))
    return ChordDiagram(2 * n, tuple(arches))


def psi_inv(c: ChordDiagram) -> NcPartition:
    n = c.num_points // 2
    pairs = []
    for a, b in c.arches:
        if a % 2 == b % 2:
            raise ValueError("arch joins two points of the same kind")
        odd, even = (a, b) if a % 2 else (b, a)
        i = (odd + 1) // 2
        j = even // 2 % n + 1
        pairs.append((i, j))
    return NcPartition(n, _components(n, pairs))


def f_local(i: int, p: NcPartition) -> FormalSum:
    """The local generator: tau if i and i+1 share a block, else merge."""
    if not 1 <= i < p.n:
        raise IndexError(f"f_{i} undefined for n = {p.n}")
    own = p._owner()
    if own[i] == own[i + 1]:
        return FormalSum({p: tau()})
    return FormalSum({p.merge(i, i + 1): LaurentPoly.constant(1)})


def generator_F_basis(i: int, p: NcPartition) -> FormalSum:
    """F_i = rho^(i-1) f_1 rho^-(i-1) on a single partition."""
    n = p.n
    if not 1 <= i <= 2 * n - 1:
        raise IndexError(f"F_{i} undefined for n = {n}")
    if n == 1:
        return FormalSum({p: tau()})
    pre = kreweras_power(p, -(i - 1))
    return f_local(1, pre).map_keys(lambda x: kreweras_power(x, i - 1))


def generator_F(i: int, x) -> FormalSum:
    """F_i on a partition or on a formal sum of partitions."""
    if isinstance(x, NcPartition):
        x = FormalSum({x: LaurentPoly.constant(1)})
    return x.apply(lambda p: generator_F_basis(i, p))
