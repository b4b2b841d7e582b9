"""Planar diagram calculus for bundled Temperley-Lieb type algebras.

A diagram has ``nb`` slots on its bottom edge and ``nt`` on its top edge
(``nb = nt = r*m`` for algebra elements, ``nb = 0`` for states).  Each slot is
joined to another slot or to a stub on the left or right wall.  A stub carries
a parity (1 = odd, 0 = even) which decides the weight of a strand closed
between two stubs of the same wall.  Strands running from wall to wall with no
slot are kept in ``walls`` (bottom to top) unless they are reduced to theta.

Slots are 1-based.  Partner codes are ``("b", k)``, ``("t", k)``,
``("R", parity)`` and ``("L", parity)``.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Any, Callable

from .chords import ChordDiagram
from .rings import (
    FormalSum,
    LaurentPoly,
    tau,
    tau_left_even,
    tau_left_odd,
    tau_right_even,
    tau_right_odd,
    theta,
)

ODD, EVEN = 1, 0
MODES = ("none", "right", "both")


@dataclass(frozen=True)
class Weights:
    """Reduction factors; defaults are the Laurent polynomial weights."""

    loop: Any = field(default_factory=tau)
    right_even: Any = field(default_factory=tau_right_even)
    right_odd: Any = field(default_factory=tau_right_odd)
    left_even: Any = field(default_factory=tau_left_even)
    left_odd: Any = field(default_factory=tau_left_odd)
    theta: Any = field(default_factory=theta)
    one: Any = field(default_factory=lambda: LaurentPoly.constant(1))

    @classmethod
    def numeric(cls, loop, right_even=1, right_odd=1, left_even=1, left_odd=1, theta=1):
        """Rational weights, e.g. for evaluating at sample points."""
        return cls(loop, right_even, right_odd, left_even, left_odd, theta, 1)


DEFAULT_WEIGHTS = Weights()


@dataclass(frozen=True)
class AlgebraDiagram:
    """A reduced planar diagram (see module docstring)."""

    nb: int
    nt: int
    bottom: tuple
    top: tuple
    walls: tuple = ()

    def __post_init__(self):
        if len(self.bottom) != self.nb or len(self.top) != self.nt:
            raise ValueError("slot lists do not match the slot counts")
        for side, codes in (("b", self.bottom), ("t", self.top)):
            for k, code in enumerate(codes, start=1):
                kind, val = code
                if kind in "bt":
                    back = (self.bottom if kind == "b" else self.top)[val - 1]
                    if back != (side, k) or (kind, val) == (side, k):
                        raise ValueError(f"inconsistent pairing at {side}{k}")
                elif kind not in "RL" or val not in (0, 1):
                    raise ValueError(f"bad partner code {code}")

    # ----- constructors -------------------------------------------------
    @classmethod
    def identity(cls, n: int) -> "AlgebraDiagram":
        return cls(n, n, tuple(("t", k) for k in range(1, n + 1)),
                   tuple(("b", k) for k in range(1, n + 1)))

    # ----- wall bookkeeping ---------------------------------------------
    def wall_order(self, wall: str) -> list:
        """Stubs on a wall from bottom to top, as ("b"|"t"|"w", index)."""
        bots = [k for k, c in enumerate(self.bottom, 1) if c[0] == wall]
        tops = [k for k, c in enumerate(self.top, 1) if c[0] == wall]
        if wall == "R":
            bots.reverse()
        else:
            tops.reverse()
        return ([("b", k) for k in bots] + [("w", i) for i in range(len(self.walls))]
                + [("t", k) for k in tops])

    def stubs(self, wall: str) -> int:
        return sum(1 for c in self.bottom + self.top if c[0] == wall) + len(self.walls)

    def through_strands(self) -> int:
        return sum(1 for c in self.bottom if c[0] == "t")

    def is_planar(self) -> bool:
        """Check planarity by embedding the boundary on a circle.

        Going round: bottom slots left to right, right wall bottom to top, top
        slots right to left, left wall top to bottom.  Every connection is a
        chord and must not cross another.
        """
        pos = {}
        c = 0
        for k in range(1, self.nb + 1):
            pos[("b", k)] = c
            c += 1
        right = self.wall_order("R")
        for item in right:
            pos[("R", item)] = c
            c += 1
        for k in range(self.nt, 0, -1):
            pos[("t", k)] = c
            c += 1
        left = self.wall_order("L")
        for item in reversed(left):
            pos[("L", item)] = c
            c += 1
        chords = []
        for side, codes in (("b", self.bottom), ("t", self.top)):
            for k, (kind, val) in enumerate(codes, 1):
                a = pos[(side, k)]
                if kind in "bt":
                    b = pos[(kind, val)]
                else:
                    b = pos[(kind, (side, k))]
                chords.append((min(a, b), max(a, b)))
        for i in range(len(self.walls)):
            a, b = pos[("R", ("w", i))], pos[("L", ("w", i))]
            chords.append((min(a, b), max(a, b)))
        chords = sorted(set(chords))
        for (a, b), (x, y) in itertools.combinations(chords, 2):
            if a < x < b < y or x < a < y < b:
                return False
        return True

    def flip(self) -> "AlgebraDiagram":
        """Mirror top and bottom (stub parities are kept)."""
        swap = {"b": "t", "t": "b", "R": "R", "L": "L"}
        bottom = tuple((swap[k], v) for k, v in self.top)
        top = tuple((swap[k], v) for k, v in self.bottom)
        return AlgebraDiagram(self.nt, self.nb, bottom, top, tuple(reversed(self.walls)))

    def to_json(self) -> dict:
        def enc(codes):
            return [[k, v] for k, v in codes]

        return {"bottom": enc(self.bottom), "top": enc(self.top),
                "walls": [list(w) for w in self.walls]}

    def __str__(self):
        def enc(codes):
            out = []
            for kind, val in codes:
                if kind in "bt":
                    out.append(f"{kind}{val}")
                else:
                    out.append(f"{kind}{'o' if val == ODD else 'e'}")
            return " ".join(out)

        s = f"[{enc(self.bottom)} | {enc(self.top)}]"
        if self.walls:
            s += " walls=" + ",".join(f"{a}{b}" for a, b in self.walls)
        return s


def compose(x: AlgebraDiagram, y: AlgebraDiagram, weights: Weights = DEFAULT_WEIGHTS,
            theta_mode: bool = True):
    """Stack y on top of x.  Returns (coefficient, reduced diagram)."""
    if x.nt != y.nb:
        raise ValueError("incompatible shapes")
    adj: dict = {}

    def link(a, b):
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)

    stub_info = {}  # node -> (wall, parity, vertical key)
    for layer, d in ((0, x), (1, y)):
        rank = {wall: {item: i for i, item in enumerate(d.wall_order(wall))} for wall in "RL"}

        def node(side, k):
            if layer == 0:
                return ("X", k) if side == "b" else ("M", k)
            return ("M", k) if side == "b" else ("Y", k)

        for side, codes in (("b", d.bottom), ("t", d.top)):
            for k, (kind, val) in enumerate(codes, 1):
                a = node(side, k)
                if kind in "bt":
                    b = node(kind, val)
                    if a < b:
                        link(a, b)
                else:
                    s = ("S", layer, kind, rank[kind][(side, k)])
                    stub_info[s] = (kind, val, (layer, rank[kind][(side, k)]))
                    link(a, s)
        for i, (lp, rp) in enumerate(d.walls):
            sl = ("S", layer, "L", rank["L"][("w", i)])
            sr = ("S", layer, "R", rank["R"][("w", i)])
            stub_info[sl] = ("L", lp, (layer, rank["L"][("w", i)]))
            stub_info[sr] = ("R", rp, (layer, rank["R"][("w", i)]))
            link(sl, sr)

    coef = weights.one
    seen = set()
    bottom = [None] * x.nb
    top = [None] * y.nt
    walls = []

    def walk(start):
        path = [start]
        seen.add(start)
        prev, cur = None, start
        while True:
            nxt = [v for v in adj.get(cur, []) if v != prev or adj[cur].count(v) > 1]
            nxt = [v for v in nxt if v not in seen] or []
            if not nxt:
                return path
            prev, cur = cur, nxt[0]
            seen.add(cur)
            path.append(cur)

    def ends():
        for k in range(1, x.nb + 1):
            yield ("X", k)
        for k in range(1, y.nt + 1):
            yield ("Y", k)
        yield from sorted(stub_info)

    for start in ends():
        if start in seen:
            continue
        path = walk(start)
        a, b = path[0], path[-1]
        if a[0] in "XY" and b[0] in "XY":
            ca = ("b", a[1]) if a[0] == "X" else ("t", a[1])
            cb = ("b", b[1]) if b[0] == "X" else ("t", b[1])
            for (side, k), partner in ((ca, cb), (cb, ca)):
                (bottom if side == "b" else top)[k - 1] = partner
        elif a[0] in "XY" or b[0] in "XY":
            slot, stub = (a, b) if a[0] in "XY" else (b, a)
            wall, par, _ = stub_info[stub]
            arr = bottom if slot[0] == "X" else top
            arr[slot[1] - 1] = (wall, par)
        else:
            wa, pa, ka = stub_info[a]
            wb, pb, kb = stub_info[b]
            if wa == wb:
                lower = pa if ka < kb else pb
                if wa == "R":
                    coef = coef * (weights.right_even if lower == EVEN else weights.right_odd)
                else:
                    coef = coef * (weights.left_even if lower == EVEN else weights.left_odd)
            elif theta_mode:
                coef = coef * weights.theta
            else:
                lp, rp = (pa, pb) if wa == "L" else (pb, pa)
                key = ka if wa == "L" else kb
                walls.append((key, (lp, rp)))
    # closed loops through the middle
    for k in range(1, x.nt + 1):
        if ("M", k) not in seen:
            walk(("M", k))
            coef = coef * weights.loop
    walls.sort()
    out = AlgebraDiagram(x.nb, y.nt, tuple(bottom), tuple(top), tuple(w for _, w in walls))
    return coef, out


# ----------------------------------------------------------------------
# algebra elements


class DiagramAlgebra:
    """The algebra on m bundles of r strands with a given boundary mode."""

    def __init__(self, m: int, r: int, boundary: str = "none", weights: Weights = DEFAULT_WEIGHTS,
                 theta_mode: bool = True):
        if boundary not in MODES:
            raise ValueError(f"boundary must be one of {MODES}")
        if m < 1 or r < 1:
            raise ValueError("need m, r >= 1")
        self.m, self.r, self.boundary = m, r, boundary
        self.size = m * r
        self.weights = weights
        self.theta_mode = theta_mode

    # elements are FormalSum over AlgebraDiagram
    def one(self) -> FormalSum:
        return FormalSum({AlgebraDiagram.identity(self.size): self.weights.one})

    def element(self, diagram: AlgebraDiagram, coef=None) -> FormalSum:
        return FormalSum({diagram: self.weights.one if coef is None else coef})

    def generator_diagram(self, i: int, s: int) -> AlgebraDiagram:
        return generator_E(i, s, self.m, self.r, self.boundary)

    def gen(self, i: int, s: int) -> FormalSum:
        return self.element(self.generator_diagram(i, s))

    def multiply(self, a: FormalSum, b: FormalSum) -> FormalSum:
        out: dict = {}
        for da, ca in a.items():
            for db, cb in b.items():
                c, d = compose(da, db, self.weights, self.theta_mode)
                v = ca * cb * c
                out[d] = out[d] + v if d in out else v
        return FormalSum(out)

    def product(self, *elements) -> FormalSum:
        out = self.one()
        for e in elements:
            out = self.multiply(out, e)
        return out

    def word(self, spec) -> FormalSum:
        """Product of generators given as [(i, s), ...] or text ``E2^2,E3^1``."""
        if isinstance(spec, str):
            spec = parse_word(spec)
        return self.product(*[self.gen(i, s) for i, s in spec])

    def act(self, x: FormalSum, state: FormalSum) -> FormalSum:
        """Module action on states (diagrams with nb = 0): state below, x on top."""
        out: dict = {}
        for ds, cs in state.items():
            for dx, cx in x.items():
                c, d = compose(ds, dx, self.weights, self.theta_mode)
                v = cs * cx * c
                out[d] = out[d] + v if d in out else v
        return FormalSum(out)

    def generator_indices(self) -> list:
        lo = 0 if self.boundary == "both" else 1
        hi = self.m if self.boundary != "none" else self.m - 1
        return list(range(lo, hi + 1))

    def enumerate_basis(self) -> list:
        """All diagrams reachable as products of generators (closure search)."""
        if self.boundary == "both" and not self.theta_mode:
            raise ValueError("the two-boundary algebra is infinite without theta reduction")
        gens = [self.generator_diagram(i, s) for i in self.generator_indices()
                for s in range(1, self.r + 1)]
        start = AlgebraDiagram.identity(self.size)
        seen = {start}
        frontier = [start]
        while frontier:
            nxt = []
            for d in frontier:
                for g in gens:
                    _, e = compose(d, g, self.weights, self.theta_mode)
                    if e not in seen:
                        seen.add(e)
                        nxt.append(e)
            frontier = nxt
        return sorted(seen, key=str)

    def dimension(self) -> int:
        return len(self.enumerate_basis())


def parse_word(text: str) -> list:
    """``E2^2,E3^1`` -> [(2, 2), (3, 1)]; a missing ``^s`` means s = 1."""
    out = []
    for tok in text.replace(" ", "").split(","):
        if not tok:
            continue
        if not tok.startswith("E"):
            raise ValueError(f"bad generator {tok!r}")
        body = tok[1:]
        i, _, s = body.partition("^")
        out.append((int(i), int(s) if s else 1))
    return out


def generator_E(i: int, s: int, m: int, r: int, boundary: str = "none") -> AlgebraDiagram:
    """The generator E_i^(s) on m bundles of r strands; s = 0 is the identity."""
    if not 0 <= s <= r:
        raise ValueError(f"s must lie in 0..{r}")
    n = m * r
    bottom = [("t", k) for k in range(1, n + 1)]
    top = [("b", k) for k in range(1, n + 1)]
    if s == 0:
        pass
    elif 1 <= i <= m - 1:
        for k in range(s):
            a, b = r * i - k, r * i + 1 + k
            bottom[a - 1], bottom[b - 1] = ("b", b), ("b", a)
            top[a - 1], top[b - 1] = ("t", b), ("t", a)
    elif i == m:
        if boundary == "none":
            raise ValueError("the right boundary generator needs a boundary")
        for k in range(n - s + 1, n + 1):
            bottom[k - 1] = ("R", ODD)
            top[k - 1] = ("R", EVEN)
    elif i == 0:
        if boundary != "both":
            raise ValueError("the left boundary generator needs boundary='both'")
        for k in range(1, s + 1):
            bottom[k - 1] = ("L", k % 2)
            top[k - 1] = ("L", (k + 1) % 2)
    else:
        raise ValueError(f"generator index {i} out of range")
    return AlgebraDiagram(n, n, tuple(bottom), tuple(top))


# ----------------------------------------------------------------------
# states: chord diagrams seen from below


def right_state_parity(point: int, num_points: int, r: int = 1) -> int:
    """Parity of a right stub at a top point: even iff its bundle has an even
    number of bundles to its right."""
    bundle = (point - 1) // r + 1
    return EVEN if (num_points // r - bundle) % 2 == 0 else ODD


def left_state_parity(point: int) -> int:
    """Parity of a left stub at a top point: even iff the point is odd."""
    return EVEN if point % 2 else ODD


def state_from_chord(c: ChordDiagram, r: int = 1, parity: Callable | None = None) -> AlgebraDiagram:
    """A chord diagram as a diagram with only a top edge.

    ``parity(wall, point)`` assigns stub parities; by default right stubs
    use :func:`right_state_parity` and left stubs :func:`left_state_parity`,
    which agree with every state generated from the empty-stub states.
    """
    n = c.num_points
    if parity is None:
        def parity(wall, p):
            return right_state_parity(p, n, r) if wall == "R" else left_state_parity(p)
    top = [None] * n
    for i, j in c.arches:
        top[i - 1], top[j - 1] = ("t", j), ("t", i)
    for p in c.right_ends:
        top[p - 1] = ("R", parity("R", p))
    for p in c.left_ends:
        top[p - 1] = ("L", parity("L", p))
    return AlgebraDiagram(0, n, (), tuple(top))


def chord_from_state(d: AlgebraDiagram, r: int | None = None) -> ChordDiagram:
    """Forget stub parities; with ``r`` given, insist they are the default ones."""
    if d.nb:
        raise ValueError("not a state")
    if r is not None:
        for k, (kind, v) in enumerate(d.top, 1):
            want = right_state_parity(k, d.nt, r) if kind == "R" else \
                left_state_parity(k) if kind == "L" else v
            if v != want:
                raise ValueError(f"stub at {k} has an unexpected parity")
    arches = {tuple(sorted((k, v))) for k, (kind, v) in enumerate(d.top, 1) if kind == "t"}
    right = [k for k, (kind, _) in enumerate(d.top, 1) if kind == "R"]
    left = [k for k, (kind, _) in enumerate(d.top, 1) if kind == "L"]
    return ChordDiagram(d.nt, tuple(sorted(arches)), tuple(right), tuple(left))


def act_on_chords(alg: DiagramAlgebra, x: FormalSum, state) -> FormalSum:
    """Act on a chord diagram (or formal sum of them); returns chord diagrams."""
    def lift(c):
        return state_from_chord(c, alg.r) if isinstance(c, ChordDiagram) else c

    if isinstance(state, ChordDiagram):
        state = FormalSum({lift(state): alg.weights.one})
    elif isinstance(state, FormalSum):
        state = state.map_keys(lift)
    return alg.act(x, state).map_keys(lambda d: chord_from_state(d, alg.r))


# ----------------------------------------------------------------------
# relation checks


def relation_cases(m: int, r: int):
    """Yield (label, lhs, rhs) with each side a list of ``(coef_power, word)``.

    ``coef_power`` is the power of the loop weight multiplying the word; a
    word is a list of (i, s) with s = 0 meaning the identity.
    """
    gens = range(1, m)
    ss = range(1, r + 1)
    for i in gens:
        for s, t in itertools.product(ss, ss):
            yield (f"E{i}^{s} E{i}^{t} = tau^{min(s, t)} E{i}^{max(s, t)}",
                   [(i, s), (i, t)], min(s, t), [(i, max(s, t))])
    for i, j in itertools.product(gens, gens):
        for s, t in itertools.product(ss, ss):
            if abs(i - j) > 1 or (abs(i - j) == 1 and s + t <= r):
                yield (f"E{i}^{s} E{j}^{t} = E{j}^{t} E{i}^{s}",
                       [(i, s), (j, t)], 0, [(j, t), (i, s)])
    for i in range(1, m - 1):
        for a, b in ((i, i + 1), (i + 1, i)):
            for s, t, u in itertools.product(ss, ss, ss):
                lhs = [(a, s), (b, t), (a, u)]
                head = f"E{a}^{s} E{b}^{t} E{a}^{u}"
                if s == u == r:
                    yield (f"{head} = tau^{r - t} E{a}^{r}", lhs, r - t, [(a, r)])
                if s <= u < r and s + t >= r:
                    yield (f"{head} = tau^{r - t} E{b}^{r - s} E{a}^{u}", lhs, r - t,
                           [(b, r - s), (a, u)])
                if r > s >= u and u + t >= r:
                    yield (f"{head} = tau^{r - t} E{a}^{s} E{b}^{r - u}", lhs, r - t,
                           [(a, s), (b, r - u)])


def verify_relations(m: int, r: int, weights: Weights = DEFAULT_WEIGHTS) -> dict:
    """Check every low-order relation family by multiplication.

    Families: ``E_i^s E_i^t = tau^min E_i^max``; commutation for distant
    indices or adjacent ones with ``s + t <= r``; and the three-term
    reductions of ``E_i^s E_j^t E_i^u`` for adjacent i, j.  Returns a report
    with the number of checks and the labels of failures.
    """
    alg = DiagramAlgebra(m, r, "none", weights)
    cache: dict = {}

    def word(w):
        key = tuple(w)
        if key not in cache:
            cache[key] = alg.product(*[alg.gen(i, s) if s else alg.one() for i, s in w])
        return cache[key]

    checked, failures = 0, []
    for label, lhs, power, rhs in relation_cases(m, r):
        checked += 1
        right = word(rhs)
        if power:
            right = right.scale(weights.loop ** power)
        if word(lhs) != right:
            failures.append(label)
    return {"m": m, "r": r, "checked": checked, "failures": failures}


def random_basis_triples(alg: DiagramAlgebra, count: int, seed: int = 0):
    basis = alg.enumerate_basis()
    rng = random.Random(seed)
    for _ in range(count):
        yield tuple(rng.choice(basis) for _ in range(3))
