"""Symmetric non-crossing partitions, primed variants, and boundary generators.

Symmetric partitions use epsilon = 0 unless stated, so that ``1`` sits on the
mirror axis and the chord bijection produces mirror-symmetric diagrams.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import comb
from typing import Iterable

from .chains import RChain, psi_r, psi_r_inv
from .chords import ChordDiagram, _sub_matchings, enumerate_matchings
from .diagram_algebra import EVEN, DiagramAlgebra, act_on_chords, left_state_parity
from .noncrossing import NcPartition, arch_pairs, enumerate_ncp, kreweras_power, leq, psi
from .rings import (
    FormalSum,
    LaurentPoly,
    tau,
    tau_left_even,
    tau_left_odd,
    tau_p,
    tau_right_even,
    theta,
)


def _wrap(x: int, n: int) -> int:
    return (x - 1) % n + 1


def mirror_label(i: int, n: int, epsilon: int = 0) -> int:
    """i -> n + 2 - epsilon - i, with n + 1 identified with 1."""
    return _wrap(n + 2 - epsilon - i, n)


def is_symmetric(p: NcPartition, epsilon: int = 0) -> bool:
    blocks = {frozenset(b) for b in p.blocks}
    return all(frozenset(mirror_label(x, p.n, epsilon) for x in b) in blocks for b in blocks)


@dataclass(frozen=True, order=True)
class SymNcPartition:
    base: NcPartition
    epsilon: int = 0

    def __post_init__(self):
        if self.epsilon not in (0, 1):
            raise ValueError("epsilon must be 0 or 1")
        if not is_symmetric(self.base, self.epsilon):
            raise ValueError(f"{self.base} is not symmetric for epsilon={self.epsilon}")

    @classmethod
    def parse(cls, text: str, epsilon: int = 0) -> "SymNcPartition":
        return cls(NcPartition.parse(text), epsilon)

    @property
    def n(self) -> int:
        return self.base.n

    def __str__(self):
        return str(self.base)


def enumerate_snc(n: int, epsilon: int = 0) -> list:
    return [SymNcPartition(p, epsilon) for p in enumerate_ncp(n) if is_symmetric(p, epsilon)]


def count_snc(n: int) -> int:
    return comb(n, n // 2)


def catalan(m: int) -> int:
    return comb(2 * m, m) // (m + 1)


def snc_recurrence(n_max: int) -> list:
    """A(0..n_max) from A(2m) = 2A(2m-1) and A(2m+1) = 2A(2m) - C(m)."""
    out = [1]
    for k in range(1, n_max + 1):
        prev = out[-1]
        out.append(2 * prev if k % 2 == 0 else 2 * prev - catalan((k - 1) // 2))
    return out


def enumerate_snc_chains(n: int, r: int, epsilon: int = 0) -> list:
    """Increasing r-chains of symmetric partitions."""
    sym = [s.base for s in enumerate_snc(n, epsilon)]
    out = []

    def rec(prefix):
        if len(prefix) == r:
            out.append(RChain(tuple(prefix)))
            return
        for v in sym:
            if not prefix or leq(prefix[-1], v):
                rec(prefix + [v])

    rec([])
    return sorted(out)


# -- symmetric chord diagrams ------------------------------------------------

def is_mirror_symmetric(c: ChordDiagram) -> bool:
    size = c.num_points
    arches = set(c.arches)
    return all(tuple(sorted((size + 1 - j, size + 1 - i))) in arches for i, j in arches)


def cut_symmetric(c: ChordDiagram) -> ChordDiagram:
    """Left half of a mirror-symmetric diagram.

    Arches crossing the axis become right ends, or left ends when dotted.
    """
    if not is_mirror_symmetric(c):
        raise ValueError("diagram is not mirror symmetric")
    half = c.num_points // 2
    arches, right, left = [], [], []
    for i, j in c.arches:
        if j <= half:
            arches.append((i, j))
        elif i <= half:
            (left if (i, j) in c.dots else right).append(i)
    out = ChordDiagram(half, tuple(arches), tuple(right), tuple(left))
    if not out.is_planar():
        raise ValueError("dots are not on the outermost crossing arches")
    return out


def uncut(h: ChordDiagram) -> ChordDiagram:
    """Inverse of :func:`cut_symmetric`; left ends come back as dotted arches."""
    size = 2 * h.num_points
    arches = list(h.arches) + [(size + 1 - j, size + 1 - i) for i, j in h.arches]
    dots = []
    for p in h.right_ends + h.left_ends:
        arches.append((p, size + 1 - p))
        if p in h.left_ends:
            dots.append((p, size + 1 - p))
    return ChordDiagram(size, tuple(arches), dots=tuple(dots))


def reduced_diagram(p: SymNcPartition | NcPartition) -> ChordDiagram:
    base = p.base if isinstance(p, SymNcPartition) else p
    if isinstance(p, SymNcPartition) and p.epsilon:
        raise ValueError("only epsilon = 0 partitions give mirror-symmetric diagrams")
    return cut_symmetric(psi(base))


def enumerate_reduced(num_points: int, r: int) -> list:
    """Half diagrams: planar partial matchings with the bundled arch condition
    whose unmatched points are right ends not covered by any arch."""
    out = []

    def rec(pos, arches, ends):
        if pos > num_points:
            out.append(ChordDiagram(num_points, tuple(arches), tuple(ends)))
            return
        rec(pos + 1, arches, ends + [pos])
        for j in range(pos + 1, num_points + 1, 2):
            if (pos + j - 1) % (2 * r):
                continue
            for inner in _sub_matchings(list(range(pos + 1, j)), r):
                rec(j + 1, arches + [(pos, j)] + inner, ends)

    rec(1, [], [])
    return out


def count_B(n: int, r: int) -> int:
    """Number of mirror-symmetric diagrams on 2rn points with the arch condition."""
    return len(enumerate_reduced(r * n, r))


def count_B_full(n: int, r: int) -> int:
    """Same count by filtering every full diagram; slow, for cross-checks."""
    return sum(1 for c in enumerate_matchings(2 * r * n, r) if is_mirror_symmetric(c))


# -- one-boundary generators ---------------------------------------------------

def _block(p: NcPartition, x: int):
    return p.block_of(_wrap(x, p.n))


def _bulk_case(pre: NcPartition, i: int) -> int:
    """1: both pairs already joined; 2: two axis-crossing arches; 3: otherwise."""
    n = pre.n
    b1, b2 = _block(pre, 1), _block(pre, 2)
    c1, c2 = _block(pre, n + 2 - i), _block(pre, n + 1 - i)
    if b1 == b2 and c1 == c2:
        return 1
    if b1 == c1 and b2 == c2 and b1 != b2:
        return 2
    return 3


def _bulk_image(pre: NcPartition, i: int) -> NcPartition:
    n = pre.n
    out = pre.merge(1, _wrap(2, n))
    return out.merge(_wrap(n + 1 - i, n), _wrap(n + 2 - i, n))


def _split(p: NcPartition, x: int) -> NcPartition:
    blk = p.block_of(x)
    rest = [b for b in p.blocks if b != blk]
    return NcPartition(p.n, tuple(rest) + ((x,), tuple(y for y in blk if y != x)))


def _middle_case(p: NcPartition):
    """The right-boundary move: ('split'|'merge', image) or None for a stub."""
    n = p.n
    if n % 2 == 0:
        mid = n // 2 + 1
        if len(p.block_of(mid)) != 1:
            return _split(p, mid)
        return None
    a, b = (n + 1) // 2, _wrap((n + 3) // 2, n)
    if p.block_of(a) != p.block_of(b):
        return p.merge(a, b)
    return None


def _one(x):
    return FormalSum({x: LaurentPoly.constant(1)})


def rho_transport(sp: SymNcPartition) -> SymNcPartition:
    """Switch epsilon: rho sends epsilon = 1 symmetry to epsilon = 0, its
    inverse goes the other way."""
    if sp.epsilon == 0:
        return SymNcPartition(kreweras_power(sp.base, -1), 1)
    return SymNcPartition(kreweras_power(sp.base, 1), 0)


def generator_G_1b_basis(i: int, sp: SymNcPartition) -> FormalSum:
    if sp.epsilon:
        # conjugate through the epsilon = 0 side
        return generator_G_1b_basis(i, rho_transport(sp)).map_keys(rho_transport)
    p = sp.base
    n = p.n
    if not 1 <= i <= n:
        raise IndexError(f"G_{i} undefined for n = {n}")
    if i == n:
        image = _middle_case(p)
        if image is None:
            return FormalSum({sp: tau_right_even()})
        return _one(SymNcPartition(image))
    pre = kreweras_power(p, -(i - 1))
    case = _bulk_case(pre, i)
    if case == 1:
        return FormalSum({sp: tau()})
    image = SymNcPartition(kreweras_power(_bulk_image(pre, i), i - 1))
    return FormalSum({image: tau_p(i, n) if case == 2 else LaurentPoly.constant(1)})


def generator_G_1b(i: int, x) -> FormalSum:
    if isinstance(x, SymNcPartition):
        x = _one(x)
    return x.apply(lambda p: generator_G_1b_basis(i, p))


# -- primed partitions ---------------------------------------------------------

def order_key(b: int, n: int) -> int:
    """Position of b in the order 1 > n > 2 > n-1 > ...; smaller is larger."""
    return min(2 * b - 1, 2 * n + 2 - 2 * b)


def e_sym(p: NcPartition) -> set:
    """Elements b whose chord crosses the mirror axis (pairs (b, c), b + c = n + 2)."""
    n = p.n
    out = set()
    for b, c in arch_pairs(p):
        if b + (n + 1 if c == 1 else c) == n + 2:
            out.add(b)
    return out


def s_sym(p: NcPartition) -> tuple:
    return tuple(sorted(e_sym(p), key=lambda b: order_key(b, p.n)))


@dataclass(frozen=True, order=True)
class PrimedSymNcPartition:
    """Symmetric partition (epsilon = 0) with a prefix of S^sym primed."""

    base: NcPartition
    primed: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "primed", frozenset(self.primed))
        if not is_symmetric(self.base, 0):
            raise ValueError(f"{self.base} is not symmetric")
        seq = s_sym(self.base)
        if self.primed != frozenset(seq[: len(self.primed)]):
            raise ValueError(f"primes {sorted(self.primed)} are not an initial run of {seq}")

    @classmethod
    def with_count(cls, base: NcPartition, k: int) -> "PrimedSymNcPartition":
        seq = s_sym(base)
        if not 0 <= k <= len(seq):
            raise ValueError("prime count out of range")
        return cls(base, frozenset(seq[:k]))

    @classmethod
    def parse(cls, text: str) -> "PrimedSymNcPartition":
        text = text.strip()
        primed = {int(m.group(1)) for m in re.finditer(r"(\d+)'", text)} \
            if "," in text else {int(m.group(1)) for m in re.finditer(r"(\d)'", text)}
        return cls(NcPartition.parse(text.replace("'", "")), frozenset(primed))

    @property
    def n(self) -> int:
        return self.base.n

    @property
    def count(self) -> int:
        return len(self.primed)

    def __str__(self):
        sep = "," if self.n > 9 else ""
        return "/".join(sep.join(f"{x}'" if x in self.primed else str(x) for x in b)
                        for b in self.base.blocks)


def enumerate_primed(n: int) -> list:
    out = []
    for sp in enumerate_snc(n, 0):
        for k in range(len(s_sym(sp.base)) + 1):
            out.append(PrimedSymNcPartition.with_count(sp.base, k))
    return out


def _left_loop(position: int) -> LaurentPoly:
    """Weight of a loop closed on the left wall through the end at ``position``."""
    return tau_left_even() if left_state_parity(position) == EVEN else tau_left_odd()


def _g_core(i: int, p: NcPartition, k: int, s: int = 1, r: int = 1):
    """Coordinate s of G_i: returns (coef, image partition, new prime count).

    Left-wall loops are weighted by where the closing end sits in the
    superposed half diagram, so the coordinate matters when r > 1.
    """
    n = p.n
    seq = s_sym(p)
    if i == 0:
        own = p.block_of(1)
        n1 = own[(own.index(1) + 1) % len(own)]
        if n1 == 1:
            if k >= 1:
                return _left_loop(stub_position(1, s, n, r)), p, k
            return theta(), p, 1
        return LaurentPoly.constant(1), _split(p, 1), k + 2
    if i == n:
        image = _middle_case(p)
        if image is not None:
            return LaurentPoly.constant(1), image, k
        if k == len(seq) and k:
            # the innermost crossing chord is dotted
            return theta(), p, k - 1
        return tau_right_even(), p, k
    pre = kreweras_power(p, -(i - 1))
    case = _bulk_case(pre, i)
    if case == 1:
        return tau(), p, k
    image = kreweras_power(_bulk_image(pre, i), i - 1)
    if case == 3:
        return LaurentPoly.constant(1), image, k
    keys = [order_key(b, n) for b in seq]
    outer = keys.index(i) < k
    inner = keys.index(i + 1) < k
    if inner:
        coef = _left_loop(max(stub_position(seq[keys.index(i)], s, n, r),
                              stub_position(seq[keys.index(i + 1)], s, n, r)))
    elif outer:
        coef = theta()
    else:
        coef = tau_p(i, n)
    return coef, image, k - outer - inner


def generator_G_2b_basis(i: int, pp: PrimedSymNcPartition) -> FormalSum:
    n = pp.n
    if not 0 <= i <= n:
        raise IndexError(f"G_{i} undefined for n = {n}")
    coef, image, k = _g_core(i, pp.base, pp.count)
    return FormalSum({PrimedSymNcPartition.with_count(image, k): coef})


def generator_G_2b(i: int, x) -> FormalSum:
    if isinstance(x, PrimedSymNcPartition):
        x = _one(x)
    return x.apply(lambda p: generator_G_2b_basis(i, p))


def g0_example(text: str) -> str:
    """Convenience: apply g_0 to a partition given as text, return the image text."""
    pp = PrimedSymNcPartition.parse(text)
    (image, _), = generator_G_2b_basis(0, pp).items()
    return str(image)


# -- chains ------------------------------------------------------------------

def stub_position(b: int, s: int, n: int, r: int) -> int:
    """Half-diagram position of the crossing chord of element b in coordinate s."""
    bundle = 2 * b - 1 if 2 * b - 1 <= n else 2 * n + 2 - 2 * b
    off = s if bundle % 2 else r + 1 - s
    return r * (bundle - 1) + off


@dataclass(frozen=True, order=True)
class PrimedChain:
    """Chain of primed symmetric partitions.

    Forgetting primes gives an increasing chain; the dotted chords of the
    superposed diagram are the outermost ones, so no undotted crossing
    chord sits to the left of a dotted one.
    """

    parts: tuple

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        RChain(tuple(p.base for p in parts))
        n, r = self.n, self.r
        dotted, plain = [], []
        for s, p in enumerate(parts, start=1):
            for b in e_sym(p.base):
                (dotted if b in p.primed else plain).append(stub_position(b, s, n, r))
        if dotted and plain and max(dotted) > min(plain):
            raise ValueError(f"{self} puts an undotted chord outside a dotted one")

    @property
    def n(self) -> int:
        return self.parts[0].n

    @property
    def r(self) -> int:
        return len(self.parts)

    @classmethod
    def parse(cls, text: str) -> "PrimedChain":
        body = text.strip().strip("[]()")
        sep = ";" if ";" in body else ","
        return cls(tuple(PrimedSymNcPartition.parse(x) for x in body.split(sep) if x.strip()))

    @classmethod
    def plain(cls, chain: RChain) -> "PrimedChain":
        return cls(tuple(PrimedSymNcPartition(p) for p in chain.parts))

    def bases(self) -> RChain:
        return RChain(tuple(p.base for p in self.parts))

    def __str__(self):
        return "[" + ";".join(str(p) for p in self.parts) + "]"


def enumerate_primed_chains(n: int, r: int) -> list:
    out = []
    for chain in enumerate_snc_chains(n, r):
        seqs = [s_sym(p) for p in chain.parts]
        counts = [range(len(q) + 1) for q in seqs]

        def rec(idx, acc):
            if idx == r:
                try:
                    out.append(PrimedChain(tuple(acc)))
                except ValueError:
                    pass
                return
            for k in counts[idx]:
                rec(idx + 1, acc + [PrimedSymNcPartition.with_count(chain.parts[idx], k)])

        rec(0, [])
    return sorted(out)


def _coordinates(i: int, s: int, r: int) -> range:
    return range(r - s, r) if i % 2 else range(s)


def chain_generators_G(i: int, s: int, x) -> FormalSum:
    """G_i^(s) on chains: odd i acts on the last s coordinates, even i on the first s.

    Accepts a PrimedChain, an RChain of symmetric partitions, or formal sums
    of either; plain chains stay plain.
    """
    if isinstance(x, (PrimedChain, RChain)):
        x = _one(x)
    return x.apply(lambda c: _chain_G_basis(i, s, c))


def _chain_G_basis(i: int, s: int, chain) -> FormalSum:
    plain = isinstance(chain, RChain)
    pc = PrimedChain.plain(chain) if plain else chain
    n, r = pc.n, pc.r
    if not 1 <= s <= r:
        raise IndexError(f"strand count {s} outside 1..{r}")
    if not (0 if not plain else 1) <= i <= n:
        raise IndexError(f"G_{i} undefined for n = {n}")
    parts = list(pc.parts)
    coef = LaurentPoly.constant(1)
    for j in _coordinates(i, s, r):
        c, image, k = _g_core(i, parts[j].base, parts[j].count, j + 1, r)
        coef = coef * c
        parts[j] = PrimedSymNcPartition.with_count(image, k)
    out = PrimedChain(tuple(parts))
    if plain:
        if any(p.primed for p in out.parts):
            raise ValueError("one-boundary action produced primes")
        return FormalSum({out.bases(): coef})
    return FormalSum({out: coef})


# -- states and isomorphism checks -------------------------------------------------

def chain_state(chain) -> ChordDiagram:
    """The half diagram of a chain: right ends for plain crossing chords,
    left ends for dotted ones."""
    if isinstance(chain, (SymNcPartition, PrimedSymNcPartition, NcPartition)):
        base = chain.base if hasattr(chain, "base") else chain
        primed = chain.primed if isinstance(chain, PrimedSymNcPartition) else ()
        chain = PrimedChain((PrimedSymNcPartition(base, frozenset(primed)),))
    if isinstance(chain, RChain):
        chain = PrimedChain.plain(chain)
    n, r = chain.n, chain.r
    full = psi_r(chain.bases())
    owner = {}
    for a in full.arches:
        owner[a[0]] = owner[a[1]] = a
    dots = []
    for s, p in enumerate(chain.parts, start=1):
        for b in p.primed:
            dots.append(owner[r * (2 * b - 2) + s])
    full = ChordDiagram(full.num_points, full.arches, dots=tuple(dots))
    return cut_symmetric(full)


def chain_from_state(h: ChordDiagram, r: int) -> PrimedChain:
    """Inverse of :func:`chain_state`."""
    full = uncut(h)
    bases = psi_r_inv(ChordDiagram(full.num_points, full.arches), r)
    n = bases.n
    primed = [set() for _ in range(r)]
    for i, _ in full.dots:
        bundle, off = divmod(i - 1, r)
        bundle, off = bundle + 1, off + 1
        if bundle % 2:
            s, b = off, (bundle + 1) // 2
        else:
            s, b = r + 1 - off, n + 1 - bundle // 2
        primed[s - 1].add(b)
    return PrimedChain(tuple(PrimedSymNcPartition(p, frozenset(q))
                             for p, q in zip(bases.parts, primed)))


def verify_iso_1b(n: int, r: int = 1) -> dict:
    """G_i^(s) against E_i^(s) on every symmetric chain; returns a report."""
    alg = DiagramAlgebra(n, r, "right")
    checked, failures = 0, []
    for chain in enumerate_snc_chains(n, r):
        for i in range(1, n + 1):
            for s in range(1, r + 1):
                checked += 1
                lhs = chain_generators_G(i, s, chain).map_keys(chain_state)
                rhs = act_on_chords(alg, alg.gen(i, s), chain_state(chain))
                if lhs != rhs:
                    failures.append(f"G{i}^{s} on {chain}")
    return {"n": n, "r": r, "checked": checked, "failures": failures}


def verify_iso_2b(n: int, r: int = 1) -> dict:
    alg = DiagramAlgebra(n, r, "both", theta_mode=True)
    checked, failures = 0, []
    for chain in enumerate_primed_chains(n, r):
        for i in range(0, n + 1):
            for s in range(1, r + 1):
                checked += 1
                lhs = chain_generators_G(i, s, chain).map_keys(chain_state)
                rhs = act_on_chords(alg, alg.gen(i, s), chain_state(chain))
                if lhs != rhs:
                    failures.append(f"G{i}^{s} on {chain}")
    return {"n": n, "r": r, "checked": checked, "failures": failures}


# -- weighted counts -----------------------------------------------------------

def crossing_count(c: ChordDiagram) -> int:
    half = c.num_points // 2
    return sum(1 for i, j in c.arches if i <= half < j)


def symmetric_diagrams(n: int, r: int) -> Iterable[ChordDiagram]:
    return (c for c in enumerate_matchings(2 * r * n, r) if is_mirror_symmetric(c))


def count_V(n: int, r: int) -> int:
    """Sum over symmetric diagrams of one plus the number of crossing arches."""
    return sum(1 + crossing_count(c) for c in symmetric_diagrams(n, r))


def count_two_boundary_states(n: int, r: int) -> int:
    """Direct count of half diagrams whose ends are split into a left run and a
    right run."""
    return sum(len(h.right_ends) + 1 for h in enumerate_reduced(r * n, r))


def count_K(n: int, r: int) -> int:
    """Weighted count of mirror-symmetric folded diagrams on 2n + 2n bundles."""
    size = 2 * r * n
    total = 0
    for c in enumerate_matchings(2 * size, r):
        # fold: point j <= size is bottom slot j, point j > size is top slot 2size+1-j
        def slot(j):
            return ("b", j) if j <= size else ("t", 2 * size + 1 - j)

        chords = [(slot(i), slot(j)) for i, j in c.arches]
        mirrored = {tuple(sorted(((e, size + 1 - k) for e, k in ch))) for ch in chords}
        if mirrored != {tuple(sorted(ch)) for ch in chords}:
            continue
        vertical = sum(1 for a, b in chords if a[0] != b[0])
        if vertical:
            total += vertical // 2
            continue
        up = 1 + sum(1 for a, b in chords if a[0] == b[0] == "t"
                     and min(a[1], b[1]) <= size // 2 < max(a[1], b[1]))
        down = 1 + sum(1 for a, b in chords if a[0] == b[0] == "b"
                       and min(a[1], b[1]) <= size // 2 < max(a[1], b[1]))
        total += up * down
    return total


def count_VK(n: int, r: int) -> dict:
    return {"V": count_V(n, r), "K": count_K(n, r)}


def count_gamma(m: int, r: int) -> int:
    """Flip-symmetric one-boundary diagrams with at most 2r wall ends, each end
    on a bundle whose index has the parity of m."""
    alg = DiagramAlgebra(m, r, "right")
    total = 0

    def shape(d):
        return tuple(tuple((k, 0) if k in "RL" else (k, v) for k, v in codes)
                     for codes in (d.bottom, d.top))

    for d in alg.enumerate_basis():
        # parities follow from positions, so symmetry is a statement about shape
        if shape(d.flip()) != shape(d):
            continue
        ends = [k for k, (kind, _) in enumerate(d.bottom, 1) if kind == "R"] + \
            [k for k, (kind, _) in enumerate(d.top, 1) if kind == "R"]
        if len(ends) > 2 * r:
            continue
        if all(((k - 1) // r + 1) % 2 == m % 2 for k in ends):
            total += 1
    return total
