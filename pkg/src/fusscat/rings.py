"""Exact coefficient rings.

``LaurentPoly`` is a Laurent polynomial with integer coefficients in the four
fixed variables ``q, qn, q0, theta``.  ``QuadExt`` is an element ``a + b*C``
of a quadratic extension of the rationals with ``C**2 = d``.  Rationals are
plain :class:`fractions.Fraction`.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping

VARIABLES = ("q", "qn", "q0", "theta")
_TEXT_NAMES = ("q", "qn", "q0", "t")
_NAME_INDEX = {"q": 0, "qn": 1, "q0": 2, "t": 3, "theta": 3}


def _add_exp(a, b):
    return tuple(x + y for x, y in zip(a, b))


class LaurentPoly:
    """Immutable Laurent polynomial in ``q, qn, q0, theta``.

    Terms are stored as a mapping from a 4-tuple of exponents to a nonzero
    integer.  ``theta`` never carries a negative exponent.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple, int] | None = None):
        clean = {}
        for exp, coef in (terms or {}).items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != 4:
                raise ValueError("exponent vectors have length 4")
            if exp[3] < 0:
                raise ValueError("theta cannot carry a negative exponent")
            coef = int(coef)
            if coef:
                clean[exp] = clean.get(exp, 0) + coef
                if clean[exp] == 0:
                    del clean[exp]
        self._terms = clean
        self._hash = None

    # construction helpers
    @classmethod
    def constant(cls, c: int) -> "LaurentPoly":
        return cls({(0, 0, 0, 0): c})

    @classmethod
    def monomial(cls, coef: int = 1, q=0, qn=0, q0=0, theta=0) -> "LaurentPoly":
        return cls({(q, qn, q0, theta): coef})

    @classmethod
    def var(cls, name: str, power: int = 1) -> "LaurentPoly":
        exp = [0, 0, 0, 0]
        exp[_NAME_INDEX[name]] = power
        return cls({tuple(exp): 1})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    # arithmetic
    @staticmethod
    def _coerce(other):
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for exp, c in other._terms.items():
            out[exp] = out.get(exp, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = _add_exp(e1, e2)
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are only defined for monomials")
        out = LaurentPoly.constant(1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    def evaluate(self, assignment: Mapping[str, Fraction | int]) -> Fraction:
        """Exact value under an assignment of variable names to rationals."""
        values = [None] * 4
        for name, v in assignment.items():
            values[_NAME_INDEX[name]] = Fraction(v)
        total = Fraction(0)
        for exp, coef in self._terms.items():
            term = Fraction(coef)
            for i, e in enumerate(exp):
                if e == 0:
                    continue
                v = values[i]
                if v is None:
                    raise KeyError(f"variable {VARIABLES[i]} is not assigned")
                if e < 0 and v == 0:
                    raise ZeroDivisionError(f"{VARIABLES[i]} = 0 with negative exponent")
                term *= v ** e
            total += term
        return total

    # text / json
    def _sorted_items(self):
        return sorted(self._terms.items(), key=lambda kv: tuple(-e for e in kv[0]))

    def __str__(self):
        if not self._terms:
            return "0"
        pieces = []
        for exp, coef in self._sorted_items():
            factors = []
            for name, e in zip(_TEXT_NAMES, exp):
                if e == 1:
                    factors.append(name)
                elif e:
                    factors.append(f"{name}^{e}")
            mono = "*".join(factors)
            mag = abs(coef)
            if mono:
                body = mono if mag == 1 else f"{mag}*{mono}"
            else:
                body = str(mag)
            pieces.append(("-" if coef < 0 else "+", body))
        sign, body = pieces[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"LaurentPoly({str(self)!r})"

    def to_json(self) -> list:
        return [{"exp": list(e), "coef": str(c)} for e, c in self._sorted_items()]

    @classmethod
    def from_json(cls, data: Iterable[Mapping]) -> "LaurentPoly":
        return cls({tuple(t["exp"]): int(t["coef"]) for t in data})

    @classmethod
    def parse(cls, text: str) -> "LaurentPoly":
        """Parse the text form, e.g. ``-q - q^-1`` or ``2*q*qn^-1 + t``."""
        s = text.replace(" ", "")
        if not s:
            raise ValueError("empty polynomial")
        if s[0] not in "+-":
            s = "+" + s
        total = cls()
        for sign, body in re.findall(r"([+-])([^+-]+)", _protect(s)):
            body = body.replace("~", "-")
            coef = 1
            exp = [0, 0, 0, 0]
            for factor in body.split("*"):
                m = re.fullmatch(r"(\d+)", factor)
                if m:
                    coef *= int(factor)
                    continue
                m = re.fullmatch(r"(qn|q0|q|theta|t)(?:\^(-?\d+))?", factor)
                if not m:
                    raise ValueError(f"bad factor {factor!r} in {text!r}")
                exp[_NAME_INDEX[m.group(1)]] += int(m.group(2) or 1)
            total = total + cls({tuple(exp): -coef if sign == "-" else coef})
        return total


def _protect(s: str) -> str:
    # keep negative exponents out of the sign split
    return s.replace("^-", "^~")


# the weights used throughout
def tau() -> LaurentPoly:
    """Loop weight ``-(q + q^-1)``."""
    return LaurentPoly({(1, 0, 0, 0): -1, (-1, 0, 0, 0): -1})


def tau_right_even() -> LaurentPoly:
    """``-(qn + qn^-1)``."""
    return LaurentPoly({(0, 1, 0, 0): -1, (0, -1, 0, 0): -1})


def tau_right_odd() -> LaurentPoly:
    """``q qn^-1 + q^-1 qn``."""
    return LaurentPoly({(1, -1, 0, 0): 1, (-1, 1, 0, 0): 1})


def tau_left_even() -> LaurentPoly:
    """``-(q0 + q0^-1)``."""
    return LaurentPoly({(0, 0, 1, 0): -1, (0, 0, -1, 0): -1})


def tau_left_odd() -> LaurentPoly:
    """``q q0^-1 + q^-1 q0``."""
    return LaurentPoly({(1, 0, -1, 0): 1, (-1, 0, 1, 0): 1})


def theta() -> LaurentPoly:
    return LaurentPoly({(0, 0, 0, 1): 1})


def tau_p(p: int, n: int) -> LaurentPoly:
    """Right-boundary weight picked by the parity of ``p`` relative to ``n``."""
    return tau_right_even() if (p - n) % 2 == 0 else tau_right_odd()


def tau_prime_p(p: int) -> LaurentPoly:
    """Left-boundary weight picked by the parity of ``p``."""
    return tau_left_even() if p % 2 == 0 else tau_left_odd()


class QuadExt:
    """Element ``a + b*C`` with ``C**2 = d``, all parts rational."""

    __slots__ = ("a", "b", "d")

    def __init__(self, a, b=0, d=0):
        self.a = Fraction(a)
        self.b = Fraction(b)
        self.d = Fraction(d)

    def _lift(self, other):
        if isinstance(other, QuadExt):
            if other.d != self.d:
                raise ValueError("mismatched discriminants")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadExt(other, 0, self.d)
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return QuadExt(self.a + o.a, self.b + o.b, self.d)

    __radd__ = __add__

    def __neg__(self):
        return QuadExt(-self.a, -self.b, self.d)

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return QuadExt(self.a - o.a, self.b - o.b, self.d)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return QuadExt(self.a * o.a + self.d * self.b * o.b,
                       self.a * o.b + self.b * o.a, self.d)

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        return self.a * self.a - self.d * self.b * self.b

    def conjugate(self) -> "QuadExt":
        return QuadExt(self.a, -self.b, self.d)

    def inverse(self) -> "QuadExt":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("element has zero norm")
        return QuadExt(self.a / n, -self.b / n, self.d)

    def __truediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self._lift(other) * self.inverse()

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        if isinstance(other, QuadExt):
            return (self.a, self.b, self.d) == (other.a, other.b, other.d)
        return NotImplemented

    def __hash__(self):
        return hash((self.a, self.b, self.d))

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __repr__(self):
        return f"QuadExt({self.a}, {self.b}, d={self.d})"


class FormalSum:
    """Finite linear combination of hashable basis objects.

    Coefficients may come from any commutative ring whose zero is falsy
    (``int``, ``Fraction``, ``LaurentPoly``, ``QuadExt``).
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        clean = {}
        for key, coef in (terms.items() if isinstance(terms, dict) else (terms or ())):
            if key in clean:
                coef = clean[key] + coef
            clean[key] = coef
        self._terms = {k: c for k, c in clean.items() if c}

    @classmethod
    def basis(cls, key, coef=1) -> "FormalSum":
        return cls({key: coef})

    def items(self):
        return self._terms.items()

    def keys(self):
        return self._terms.keys()

    def coefficient(self, key, default=0):
        return self._terms.get(key, default)

    def __len__(self):
        return len(self._terms)

    def __iter__(self):
        return iter(self._terms)

    def __add__(self, other: "FormalSum") -> "FormalSum":
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out[k] + c if k in out else c
        return FormalSum(out)

    def __neg__(self):
        return FormalSum({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, coef) -> "FormalSum":
        return FormalSum({k: coef * c for k, c in self._terms.items()})

    def apply(self, func) -> "FormalSum":
        """Extend ``func: key -> FormalSum`` linearly."""
        out: dict = {}
        for k, c in self._terms.items():
            for k2, c2 in func(k).items():
                v = c * c2
                out[k2] = out[k2] + v if k2 in out else v
        return FormalSum(out)

    def map_keys(self, func) -> "FormalSum":
        out: dict = {}
        for k, c in self._terms.items():
            k2 = func(k)
            out[k2] = out[k2] + c if k2 in out else c
        return FormalSum(out)

    def __eq__(self, other):
        if not isinstance(other, FormalSum):
            return NotImplemented
        return (self - other)._terms == {}

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __bool__(self):
        return bool(self._terms)

    def __repr__(self):
        if not self._terms:
            return "0"
        return " + ".join(f"({c})*[{k}]" for k, c in self._terms.items())
