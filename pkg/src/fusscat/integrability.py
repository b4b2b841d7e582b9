"""Spectral R and K elements for r = 2 and exact checks of the Yang-Baxter
and reflection equations at random rational points.

Parameters tau, tau_o, tau_e are free rationals.  The square root C1 in the
generic K solution is kept symbolic as the generator of Q(sqrt d).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .diagram_algebra import DiagramAlgebra, Weights
from .rings import FormalSum, QuadExt

BRANCHES = ("generic+", "generic-", "degenerate-e", "degenerate-o", "degenerate-o-reduced")


class PoleError(ValueError):
    """A spectral coefficient has a vanishing denominator at this point."""


@dataclass(frozen=True)
class SpectralElement:
    algebra: DiagramAlgebra
    value: FormalSum

    def __mul__(self, other: "SpectralElement") -> "SpectralElement":
        return SpectralElement(self.algebra, self.algebra.multiply(self.value, other.value))

    def __eq__(self, other):
        return isinstance(other, SpectralElement) and self.value == other.value

    def __sub__(self, other):
        return SpectralElement(self.algebra, self.value - other.value)

    def is_one(self) -> bool:
        return self.value == self.algebra.one()


def _inv(x):
    if not x:
        raise PoleError("division by zero")
    return x.inverse() if isinstance(x, QuadExt) else 1 / Fraction(x)


# -- R ---------------------------------------------------------------------

def r1(w, tau):
    return (w - 1) * _inv(tau)


def r2(w, tau):
    return w * (w - 1) * _inv(tau * tau - 1 - w)


def bulk_algebra(m: int, tau) -> DiagramAlgebra:
    return DiagramAlgebra(m, 2, "none", Weights.numeric(Fraction(tau)))


def build_R(i: int, w, tau, m: int = 3, algebra: DiagramAlgebra | None = None) -> SpectralElement:
    w, tau = Fraction(w), Fraction(tau)
    alg = algebra or bulk_algebra(m, tau)
    value = alg.one() + alg.gen(i, 1).scale(r1(w, tau)) + alg.gen(i, 2).scale(r2(w, tau))
    return SpectralElement(alg, value)


# -- K ---------------------------------------------------------------------

@dataclass(frozen=True)
class BoundaryParams:
    tau: Fraction
    tau_o: Fraction
    tau_e: Fraction
    branch: str

    def discriminant(self) -> Fraction:
        t, to, te = self.tau, self.tau_o, self.tau_e
        return (t * to - te) / ((t * t - 1) * te * to * (t * te - to))

    def constants(self):
        """(C1, C2) for the generic branch, C1 as an element of Q(sqrt d)."""
        d = self.discriminant()
        sign = 1 if self.branch == "generic+" else -1
        c1 = QuadExt(0, sign, d)
        c2 = QuadExt(-(self.tau ** 2 - 1) / (self.tau * self.tau_o - self.tau_e), 0, d)
        return c1, c2


def check_branch(p: BoundaryParams) -> None:
    t, to, te = p.tau, p.tau_o, p.tau_e
    if p.branch not in BRANCHES:
        raise ValueError(f"branch must be one of {BRANCHES}")
    if 0 in (t, to, te):
        raise ValueError("weights must be nonzero")
    if p.branch.startswith("generic"):
        if t * te == to or t * to == te or t * t == 1:
            raise ValueError("generic branch needs tau*tau_e != tau_o, tau*tau_o != tau_e, tau^2 != 1")
    elif p.branch == "degenerate-e" and t * te != to:
        raise ValueError("degenerate-e needs tau*tau_e == tau_o")
    elif p.branch.startswith("degenerate-o") and t * to != te:
        raise ValueError("degenerate-o needs tau*tau_o == tau_e")


def k_coefficients(w, p: BoundaryParams):
    w = Fraction(w)
    t, to, te = p.tau, p.tau_o, p.tau_e
    if p.branch == "degenerate-o-reduced":
        # the branch where C1 vanishes, so the second coefficient is zero
        return -(w * w - 1) * _inv(te * w * w), Fraction(0)
    if p.branch.startswith("degenerate"):
        return -(w * w - 1) * _inv(te * w * w), t * (w * w - 1) * _inv(to * te * w * w)
    c1, c2 = p.constants()
    den = w * (1 - 2 * to * te * c1 * c2 * w + t * te * te * c1 * c2 * w + te * c2 * w * w)
    inv = _inv(den)
    return -(c2 * (w * w - 1) * (w - to * c1)) * inv, -(t * c1 * c2 * (w * w - 1)) * inv


def boundary_algebra(p: BoundaryParams) -> DiagramAlgebra:
    return DiagramAlgebra(2, 2, "right", Weights.numeric(p.tau, right_even=p.tau_e,
                                                         right_odd=p.tau_o))


def build_K(w, tau, tau_o, tau_e, branch: str = "generic+",
            algebra: DiagramAlgebra | None = None) -> SpectralElement:
    p = BoundaryParams(Fraction(tau), Fraction(tau_o), Fraction(tau_e), branch)
    check_branch(p)
    alg = algebra or boundary_algebra(p)
    k1, k2 = k_coefficients(w, p)
    value = alg.one() + alg.gen(2, 1).scale(k1) + alg.gen(2, 2).scale(k2)
    return SpectralElement(alg, value)


# -- sampling --------------------------------------------------------------

def _rational(rng: random.Random, lo=-9, hi=9, den=6) -> Fraction:
    while True:
        x = Fraction(rng.randint(lo, hi), rng.randint(1, den))
        if x:
            return x


def _is_square(x: Fraction) -> bool:
    if x < 0:
        return False
    a, b = x.numerator, x.denominator
    return _isqrt_exact(a) and _isqrt_exact(b)


def _isqrt_exact(k: int) -> bool:
    return isqrt(k) ** 2 == k


def sample_boundary(rng: random.Random, branch: str) -> BoundaryParams:
    """Draw admissible weights; Q(sqrt d) must be a field, so square d is redrawn."""
    while True:
        t, to, te = _rational(rng), _rational(rng), _rational(rng)
        if branch == "degenerate-e":
            to = t * te
        elif branch.startswith("degenerate-o"):
            te = t * to
        p = BoundaryParams(t, to, te, branch)
        try:
            check_branch(p)
        except ValueError:
            continue
        if branch.startswith("generic") and _is_square(p.discriminant()):
            continue
        return p


# -- verifiers -----------------------------------------------------------------

def verify_ybe(samples: int = 100, seed: int = 0) -> dict:
    rng = random.Random(seed)
    rows = []
    while len(rows) < samples:
        tau, w = _rational(rng), _rational(rng)
        # every fifth sample ties z to w
        z = w if len(rows) % 5 == 0 else _rational(rng)
        try:
            alg = bulk_algebra(3, tau)
            R = lambda i, x: build_R(i, x, tau, algebra=alg)  # noqa: E731
            lhs = R(1, w) * R(2, w * z) * R(1, z)
            rhs = R(2, z) * R(1, w * z) * R(2, w)
        except PoleError:
            continue
        rows.append({"w": str(w), "z": str(z), "tau": str(tau), "pass": lhs == rhs})
    return _report("ybe", rows, seed)


def verify_r_normalization(samples: int = 50, seed: int = 0) -> dict:
    rng = random.Random(seed)
    rows = []
    while len(rows) < samples:
        tau, w = _rational(rng), _rational(rng)
        try:
            alg = bulk_algebra(2, tau)
            ok_one = build_R(1, 1, tau, algebra=alg).is_one()
            ok_unit = (build_R(1, w, tau, algebra=alg) * build_R(1, 1 / w, tau, algebra=alg)).is_one()
        except PoleError:
            continue
        rows.append({"w": str(w), "tau": str(tau), "pass": ok_one and ok_unit})
    return _report("r-normalization", rows, seed)


def verify_k_normalization(samples: int = 50, seed: int = 0, branch: str = "generic+") -> dict:
    rng = random.Random(seed)
    rows = []
    while len(rows) < samples:
        p = sample_boundary(rng, branch)
        w = _rational(rng)
        try:
            alg = boundary_algebra(p)
            K = lambda x: build_K(x, p.tau, p.tau_o, p.tau_e, branch, algebra=alg)  # noqa: E731
            ok = K(1).is_one() and (K(w) * K(1 / w)).is_one()
        except (PoleError, ZeroDivisionError):
            continue
        rows.append({**_params(p), "w": str(w), "pass": ok})
    return _report(f"k-normalization[{branch}]", rows, seed)


def verify_re(samples: int = 50, seed: int = 0, branch: str = "generic+") -> dict:
    """Right reflection equation in the two-bundle, one-boundary algebra.

    Both rational parts of LHS - RHS (the C1^0 and C1^1 components) must vanish.
    """
    rng = random.Random(seed)
    rows = []
    while len(rows) < samples:
        p = sample_boundary(rng, branch)
        w, z = _rational(rng), _rational(rng)
        try:
            alg = boundary_algebra(p)
            K = lambda x: build_K(x, p.tau, p.tau_o, p.tau_e, branch, algebra=alg)  # noqa: E731
            R = lambda x: build_R(1, x, p.tau, algebra=alg)  # noqa: E731
            lhs = K(w) * R(1 / (w * z)) * K(z) * R(w / z)
            rhs = R(w / z) * K(z) * R(1 / (w * z)) * K(w)
        except (PoleError, ZeroDivisionError):
            continue
        diff = (lhs - rhs).value
        parts = _components(diff)
        rows.append({**_params(p), "w": str(w), "z": str(z), "pass": not diff,
                     "rational_part_zero": parts[0], "root_part_zero": parts[1]})
    return _report(f"re[{branch}]", rows, seed)


def verify_left_re(k0, samples: int = 20, seed: int = 0, weights: Weights | None = None) -> dict:
    """Check the left reflection equation for a candidate ``k0(w) -> (k1, k2)``.

    The candidate is built as 1 + k1 E_0^(1) + k2 E_0^(2) in the two-bundle,
    two-boundary algebra; ``weights`` default to random rationals per sample.
    """
    rng = random.Random(seed)
    rows = []
    while len(rows) < samples:
        tau = _rational(rng)
        wts = weights or Weights.numeric(tau, left_even=_rational(rng), left_odd=_rational(rng))
        alg = DiagramAlgebra(2, 2, "both", wts)
        w, z = _rational(rng), _rational(rng)
        try:
            def K(x):
                a, b = k0(x, wts)
                return SpectralElement(alg, alg.one() + alg.gen(0, 1).scale(a) + alg.gen(0, 2).scale(b))

            def R(x):
                return build_R(1, x, wts.loop, algebra=alg)

            lhs = K(z) * R(z * w) * K(w) * R(w / z)
            rhs = R(w / z) * K(w) * R(w * z) * K(z)
        except (PoleError, ZeroDivisionError):
            continue
        rows.append({"w": str(w), "z": str(z), "tau": str(wts.loop), "pass": lhs == rhs})
    return _report("left-re", rows, seed)


# -- scalar conditions -----------------------------------------------------

def scalar_conditions(w, z, p: BoundaryParams, literal: bool = False) -> dict:
    """The coefficient identities the K solution must satisfy, evaluated exactly.

    With ``literal`` set, the top-pair identity uses r2(wz) in its eighth term
    instead of r2(w/z).
    """
    w, z = Fraction(w), Fraction(z)
    t, to, te = p.tau, p.tau_o, p.tau_e
    a, b = w / z, 1 / (z * w)
    R1a, R1b, R2a, R2b = r1(a, t), r1(b, t), r2(a, t), r2(b, t)
    k1w, k2w = k_coefficients(w, p)
    k1z, k2z = k_coefficients(z, p)
    k1i, k2i = k_coefficients(1 / w, p)
    odd_r2 = r2(w * z, t) if literal else R2a

    mixed_one_two = (R1a * k2w + R1b * k2w + t * R1a * R1b * k2w + te * R1a * k1z * k2w
                     + te * R1b * k1z * k2w + t * te * R1a * R1b * k1z * k2w + R1a * k2z
                     - R1b * k2z + te * R1a * k1w * k2z - te * R1b * k1w * k2z
                     + te * te * R1a * k2w * k2z + to * te * R1a * R1b * k2w * k2z)
    mixed_two_one = (R2a * k1w + t * R1b * R2a * k1w + R2b * k1w + t * R1a * R2b * k1w
                     + t * t * R2a * R2b * k1w + R2a * k1z + t * R1b * R2a * k1z
                     - R2b * k1z - t * R1a * R2b * k1z + te * R2a * k1w * k1z
                     + t * te * R1b * R2a * k1w * k1z + t * to * R2a * R2b * k1w * k1z
                     + to * R1b * R2a * k2z - to * R1a * R2b * k2z
                     + to * te * R1b * R2a * k1w * k2z + to * to * R2a * R2b * k1w * k2z)
    top_pair = (R2a * k2w + t * R1b * R2a * k2w + R2b * k2w + t * R1a * R2b * k2w
                + t * t * R2a * R2b * k2w + te * R2a * k1z * k2w + t * te * R1b * R2a * k1z * k2w
                + t * to * odd_r2 * R2b * k1z * k2w + R2a * k2z - R2b * k2z
                + te * R2a * k1w * k2z + te * te * R2a * k2w * k2z
                + to * te * R1b * R2a * k2w * k2z + to * to * R2a * R2b * k2w * k2z)
    triple = (R2b * k1z * k2w + t * R1a * R2b * k1z * k2w - R2b * k1w * k2z
              + to * R1a * R2b * k2w * k2z)
    unit_one = k1w + k1i + te * k1w * k1i
    unit_two = k2w + te * k1w * k2i + k2i + te * k1i * k2w + te * te * k2w * k2i
    return {"mixed_one_two": mixed_one_two, "mixed_two_one": mixed_two_one,
            "top_pair": top_pair, "triple": triple,
            "unitarity_first": unit_one, "unitarity_second": unit_two}


def verify_conditions(samples: int = 50, seed: int = 0, branch: str = "generic+",
                      literal: bool = False) -> dict:
    rng = random.Random(seed)
    rows = []
    while len(rows) < samples:
        p = sample_boundary(rng, branch)
        w, z = _rational(rng), _rational(rng)
        try:
            vals = scalar_conditions(w, z, p, literal)
        except (PoleError, ZeroDivisionError):
            continue
        bad = sorted(k for k, v in vals.items() if v)
        rows.append({**_params(p), "w": str(w), "z": str(z), "pass": not bad, "nonzero": bad})
    return _report(f"conditions[{branch}]", rows, seed)


# -- helpers -------------------------------------------------------------------

def _params(p: BoundaryParams) -> dict:
    return {"tau": str(p.tau), "tau_o": str(p.tau_o), "tau_e": str(p.tau_e)}


def _components(diff: FormalSum):
    rational = all((c.a == 0) if isinstance(c, QuadExt) else c == 0 for _, c in diff.items())
    root = all((c.b == 0) if isinstance(c, QuadExt) else True for _, c in diff.items())
    return rational, root


def _report(name: str, rows: list, seed: int) -> dict:
    return {"check": name, "seed": seed, "samples": len(rows),
            "failures": sum(1 for r in rows if not r["pass"]), "rows": rows}
