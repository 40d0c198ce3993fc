"""Exact arithmetic in the subring of GW(k) spanned by <1> and <-1>.

Elements are a<1> + b<-1> with a, b in Z (characteristic 0) or Z[1/p]
(characteristic p > 0, the characteristic exponent being inverted). The
underlying ring is Z[e]/(e^2 - 1) with e = <-1>; each field model adds its
own quotient relations:

    generic, real-closed   none
    sqrt-minus-one         e = 1
    finite(p), p = 1 mod 4 e = 1
    finite(p), p = 3 mod 4 2(1 - e) = 0

Everything is bit-exact; no floating point is used anywhere.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Union

__all__ = [
    "Coefficient",
    "Exactness",
    "FieldModel",
    "GwElement",
    "GwValue",
    "gw_add",
    "gw_from_json",
    "gw_from_text",
    "gw_inverse",
    "gw_make",
    "gw_mul",
    "gw_pow_twist",
    "is_unit",
    "normal_form",
    "rank",
    "reduce_mod_fundamental",
    "signature",
]


def _is_odd_prime(p: int) -> bool:
    if p < 3 or p % 2 == 0:
        return False
    return all(p % d for d in range(3, int(p**0.5) + 1, 2))


# ---------------------------------------------------------------------------
# coefficients


@dataclass(frozen=True)
class Coefficient:
    """An element numerator / prime**p_exponent of Z[1/prime].

    ``prime`` is the characteristic exponent of the ambient field model; it is
    1 in characteristic zero, where only plain integers are allowed.
    The pair is kept reduced: prime does not divide the numerator whenever
    p_exponent > 0.
    """

    numerator: int
    p_exponent: int = 0
    prime: int = 1

    def __post_init__(self):
        if self.p_exponent < 0:
            raise ValueError("p_exponent must be non-negative")
        if self.prime < 1:
            raise ValueError("prime must be positive")
        if self.prime == 1 and self.p_exponent > 0:
            raise ValueError("p-power denominators need a positive characteristic")
        n, e = self.numerator, self.p_exponent
        while e > 0 and n % self.prime == 0:
            n //= self.prime
            e -= 1
        object.__setattr__(self, "numerator", n)
        object.__setattr__(self, "p_exponent", e)

    @classmethod
    def from_fraction(cls, q, prime: int = 1) -> Coefficient:
        q = Fraction(q)
        den, e = q.denominator, 0
        while den > 1 and prime > 1 and den % prime == 0:
            den //= prime
            e += 1
        if den != 1:
            raise ValueError(f"{q} is not in Z[1/{prime}]")
        return cls(q.numerator, e, prime)

    def to_fraction(self) -> Fraction:
        return Fraction(self.numerator, self.prime**self.p_exponent)

    def _lift(self, other):
        if isinstance(other, int):
            other = Coefficient(other, 0, self.prime)
        elif not isinstance(other, Coefficient):
            return NotImplemented, NotImplemented
        a, b = self, other
        # plain integers (prime 1) promote into Z[1/p]
        if a.prime != b.prime:
            if a.prime == 1:
                a = Coefficient(a.numerator, 0, b.prime)
            elif b.prime == 1:
                b = Coefficient(b.numerator, 0, a.prime)
            else:
                raise ValueError("coefficients over different primes")
        return a, b

    def __add__(self, other):
        a, b = self._lift(other)
        if a is NotImplemented:
            return NotImplemented
        e = max(a.p_exponent, b.p_exponent)
        p = a.prime
        n = a.numerator * p ** (e - a.p_exponent) + b.numerator * p ** (e - b.p_exponent)
        return Coefficient(n, e, p)

    __radd__ = __add__

    def __neg__(self):
        return Coefficient(-self.numerator, self.p_exponent, self.prime)

    def __sub__(self, other):
        if isinstance(other, (int, Coefficient)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        a, b = self._lift(other)
        if a is NotImplemented:
            return NotImplemented
        return Coefficient(a.numerator * b.numerator, a.p_exponent + b.p_exponent, a.prime)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int):
            return self.p_exponent == 0 and self.numerator == other
        if isinstance(other, Coefficient):
            return (self.numerator, self.p_exponent) == (other.numerator, other.p_exponent) and (
                self.prime == other.prime or self.p_exponent == 0
            )
        return NotImplemented

    def __hash__(self):
        return hash((self.numerator, self.p_exponent))

    def is_zero(self) -> bool:
        return self.numerator == 0

    def is_unit(self) -> bool:
        """True iff the value is +-prime**j for some integer j."""
        n = abs(self.numerator)
        if n == 0:
            return False
        while self.prime > 1 and n % self.prime == 0:
            n //= self.prime
        return n == 1

    def inverse(self) -> Coefficient:
        if not self.is_unit():
            raise ZeroDivisionError(f"{self} is not a unit of Z[1/{self.prime}]")
        return Coefficient.from_fraction(1 / self.to_fraction(), self.prime)

    def __str__(self):
        if self.p_exponent == 0:
            return str(self.numerator)
        if self.p_exponent == 1:
            return f"{self.numerator}/{self.prime}"
        return f"{self.numerator}/{self.prime}^{self.p_exponent}"

    def to_json(self) -> dict:
        return {"numerator": self.numerator, "p_exponent": self.p_exponent}


# ---------------------------------------------------------------------------
# field models


class Kind(str, Enum):
    GENERIC = "generic"
    SQRT_MINUS_ONE = "sqrt-minus-one"
    REAL_CLOSED = "real-closed"
    FINITE = "finite"


@dataclass(frozen=True)
class FieldModel:
    """Which GW relations are assumed to hold for the base field.

    ``FieldModel.parse`` accepts the selector strings ``generic``,
    ``sqrt-minus-one``, ``real-closed`` and ``finite:p`` (an optional
    ``:invert-char`` suffix is accepted and is implied anyway).
    """

    kind: Kind
    p: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "kind", Kind(self.kind))
        if self.kind is Kind.FINITE:
            if self.p is None or not _is_odd_prime(self.p):
                raise ValueError(f"finite model needs an odd prime, got {self.p!r}")
        elif self.p is not None:
            raise ValueError(f"{self.kind.value} model takes no prime")

    @classmethod
    def generic(cls):
        return cls(Kind.GENERIC)

    @classmethod
    def sqrt_minus_one(cls):
        return cls(Kind.SQRT_MINUS_ONE)

    @classmethod
    def real_closed(cls):
        return cls(Kind.REAL_CLOSED)

    @classmethod
    def finite(cls, p: int):
        return cls(Kind.FINITE, p)

    @classmethod
    def parse(cls, selector: str) -> FieldModel:
        s = selector.strip().lower()
        if s.startswith("finite"):
            parts = s.split(":")
            if len(parts) not in (2, 3) or (len(parts) == 3 and parts[2] != "invert-char"):
                raise ValueError(f"bad field selector {selector!r}; use finite:p")
            try:
                p = int(parts[1])
            except ValueError:
                raise ValueError(f"bad prime in field selector {selector!r}") from None
            return cls.finite(p)
        try:
            return cls(Kind(s))
        except ValueError:
            raise ValueError(
                f"unknown field model {selector!r}; expected generic, sqrt-minus-one, real-closed or finite:p"
            ) from None

    @property
    def selector(self) -> str:
        return f"finite:{self.p}" if self.kind is Kind.FINITE else self.kind.value

    def __str__(self):
        return self.selector

    @property
    def char_exponent(self) -> int:
        return self.p if self.kind is Kind.FINITE else 1

    @property
    def has_sqrt_minus_one(self) -> bool:
        """<-1> = <1> in this model."""
        return self.kind is Kind.SQRT_MINUS_ONE or (self.kind is Kind.FINITE and self.p % 4 == 1)

    @property
    def nilpotent_fundamental_ideal(self) -> bool:
        # the field is not formally real
        return self.kind in (Kind.SQRT_MINUS_ONE, Kind.FINITE)

    def coefficient(self, value) -> Coefficient:
        if isinstance(value, int):
            return Coefficient(value, 0, self.char_exponent)
        if isinstance(value, Coefficient):
            if value.prime == self.char_exponent:
                return value
            if value.prime not in (1, self.char_exponent):
                raise ValueError(f"coefficient over Z[1/{value.prime}] in model {self}")
            if self.char_exponent == 1 and value.p_exponent > 0:
                raise ValueError("p_exponent > 0 while the characteristic exponent is 1")
            return Coefficient(value.numerator, value.p_exponent, self.char_exponent)
        return Coefficient.from_fraction(value, self.char_exponent)


# ---------------------------------------------------------------------------
# elements

Scalar = Union[int, Fraction, Coefficient]


def normal_form(a: Scalar, b: Scalar, m: FieldModel) -> GwElement:
    """Reduce the raw pair a<1> + b<-1> to the model's normal form."""
    a, b = m.coefficient(a), m.coefficient(b)
    if m.has_sqrt_minus_one:
        a, b = a + b, m.coefficient(0)
    elif m.kind is Kind.FINITE:
        # 2<-1> = 2<1>; p is odd so Z[1/p]/2 = Z/2 and the parity of b is
        # the parity of its numerator
        r = b.numerator % 2
        a, b = a + (b - r), m.coefficient(r)
    return GwElement(a, b, m)


@dataclass(frozen=True)
class GwElement:
    """unit_coeff<1> + twist_coeff<-1>, already in normal form for ``model``.

    Build these through :func:`gw_make` / :func:`normal_form`; the
    constructor only stores what it is given.
    """

    unit_coeff: Coefficient
    twist_coeff: Coefficient
    model: FieldModel

    def _other(self, other) -> GwElement:
        if isinstance(other, GwElement):
            if other.model != self.model:
                raise ValueError(f"mixing models {self.model} and {other.model}")
            return other
        if isinstance(other, (int, Fraction, Coefficient)):
            return normal_form(other, 0, self.model)
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return normal_form(self.unit_coeff + o.unit_coeff, self.twist_coeff + o.twist_coeff, self.model)

    __radd__ = __add__

    def __neg__(self):
        return normal_form(-self.unit_coeff, -self.twist_coeff, self.model)

    def __sub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        a, b, c, d = self.unit_coeff, self.twist_coeff, o.unit_coeff, o.twist_coeff
        # (a + b e)(c + d e) with e^2 = 1
        return normal_form(a * c + b * d, a * d + b * c, self.model)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            return gw_inverse(self) ** -n
        out = normal_form(1, 0, self.model)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def is_zero(self) -> bool:
        return self.unit_coeff.is_zero() and self.twist_coeff.is_zero()

    def __str__(self):
        return to_text(self)

    def to_json(self) -> dict:
        return {
            "unit": self.unit_coeff.to_json(),
            "twist": self.twist_coeff.to_json(),
            "model": self.model.selector,
        }


def gw_make(a: Scalar, b: Scalar, m: FieldModel) -> GwElement:
    """a<1> + b<-1> in normal form for ``m``."""
    return normal_form(a, b, m)


def gw_add(x: GwElement, y: GwElement, m: FieldModel | None = None) -> GwElement:
    _check_model(m, x, y)
    return x + y


def gw_mul(x: GwElement, y: GwElement, m: FieldModel | None = None) -> GwElement:
    _check_model(m, x, y)
    return x * y


def _check_model(m, *xs):
    if m is not None and any(x.model != m for x in xs):
        raise ValueError(f"element not normalized under {m}")


def gw_pow_twist(c: int, m: FieldModel) -> GwElement:
    """<-1>^c, by parity of c."""
    if c < 0:
        raise ValueError("codimension must be non-negative")
    return normal_form(0, 1, m) if c % 2 else normal_form(1, 0, m)


def rank(x: GwElement) -> Coefficient:
    return x.unit_coeff + x.twist_coeff


def signature(x: GwElement, m: FieldModel | None = None) -> Coefficient:
    """Signature of the form; only defined over a real-closed field."""
    m = m or x.model
    if m.kind is not Kind.REAL_CLOSED:
        raise ValueError(f"signature needs the real-closed model, not {m}")
    return x.unit_coeff - x.twist_coeff


def reduce_mod_fundamental(x: GwElement) -> Coefficient:
    """Image of x in GW/(1 - <-1>), which sends <-1> to 1 (so it is the rank)."""
    return x.unit_coeff + x.twist_coeff


def is_unit(x: GwElement, m: FieldModel | None = None) -> bool:
    m = m or x.model
    r = rank(x)
    if m.kind in (Kind.GENERIC, Kind.REAL_CLOSED):
        return r.is_unit() and (x.unit_coeff - x.twist_coeff).is_unit()
    # sqrt-minus-one: the ring is the coefficient ring itself;
    # finite: the fundamental ideal is nilpotent so units are detected by rank
    return r.is_unit()


def gw_inverse(x: GwElement) -> GwElement:
    """Multiplicative inverse, rebuilt from the rank and the image under <-1> -> -1."""
    m = x.model
    if not is_unit(x):
        raise ZeroDivisionError(f"{x} is not a unit in model {m}")
    r_inv = rank(x).inverse()
    if m.kind in (Kind.GENERIC, Kind.REAL_CLOSED):
        s_inv = (x.unit_coeff - x.twist_coeff).inverse()
        half = Fraction(1, 2)
        a = Coefficient.from_fraction((r_inv + s_inv).to_fraction() * half, m.char_exponent)
        b = Coefficient.from_fraction((r_inv - s_inv).to_fraction() * half, m.char_exponent)
        return normal_form(a, b, m)
    if m.has_sqrt_minus_one:
        return normal_form(r_inv, 0, m)
    # finite, p = 3 mod 4: x = r - q with q = b(1 - <-1>) and q^2 = 0
    q = normal_form(x.twist_coeff, -x.twist_coeff, m)
    r_inv_el = normal_form(r_inv, 0, m)
    return r_inv_el + r_inv_el * r_inv_el * q


# ---------------------------------------------------------------------------
# rendering


def to_text(x: GwElement) -> str:
    """Canonical text ``a<1> + b<-1>``; zero terms are dropped, zero is ``0``."""
    a, b = x.unit_coeff, x.twist_coeff
    parts = []
    if not a.is_zero():
        parts.append(f"{a}<1>")
    if not b.is_zero():
        if parts:
            sign = " - " if b.numerator < 0 else " + "
            parts.append(f"{sign}{-b if b.numerator < 0 else b}<-1>")
        else:
            parts.append(f"{b}<-1>")
    return "".join(parts) or "0"


_COEF = r"[+-]?\d+(?:/\d+(?:\^\d+)?)?"
_TERM_RE = re.compile(rf"\s*([+-]?)\s*({_COEF})?\s*<\s*(-?1)\s*>\s*")


def _coef_from_text(s: str, m: FieldModel) -> Coefficient:
    num, _, den = s.partition("/")
    if not den:
        return m.coefficient(int(num))
    base, _, exp = den.partition("^")
    base, exp = int(base), int(exp or 1)
    if base != m.char_exponent or m.char_exponent == 1:
        raise ValueError(f"denominator {den} not a power of the characteristic exponent of {m}")
    return m.coefficient(Coefficient(int(num), exp, base))


def gw_from_text(text: str, m: FieldModel) -> GwElement:
    """Parse the text rendering back into an element of model ``m``."""
    s = text.strip()
    if s == "0":
        return normal_form(0, 0, m)
    pos, a, b = 0, m.coefficient(0), m.coefficient(0)
    first = True
    while pos < len(s):
        mt = _TERM_RE.match(s, pos)
        if not mt or mt.end() == pos or (not first and not mt.group(1)):
            raise ValueError(f"cannot parse GW element {text!r} at offset {pos}")
        sign, coef, which = mt.groups()
        c = _coef_from_text(coef, m) if coef else m.coefficient(1)
        if sign == "-":
            c = -c
        if which == "1":
            a = a + c
        else:
            b = b + c
        pos, first = mt.end(), False
    return normal_form(a, b, m)


def gw_from_json(obj) -> GwElement:
    if isinstance(obj, str):
        obj = json.loads(obj)
    m = FieldModel.parse(obj["model"])
    p = m.char_exponent

    def coef(d):
        return m.coefficient(Coefficient(d["numerator"], d["p_exponent"], p))

    return normal_form(coef(obj["unit"]), coef(obj["twist"]), m)


# ---------------------------------------------------------------------------
# values returned by the evaluator


class Exactness(str, Enum):
    EXACT = "exact"
    MODULO_FUNDAMENTAL_IDEAL = "modulo-fundamental-ideal"


@dataclass(frozen=True)
class GwValue:
    """A computed Euler characteristic.

    When ``exactness`` is modulo-fundamental-ideal only the class of
    ``representative`` modulo (1 - <-1>) is asserted. ``unit_known`` then says
    whether the value is known to be a unit.
    """

    representative: GwElement
    exactness: Exactness = Exactness.EXACT
    unit_known: bool = False

    def __post_init__(self):
        object.__setattr__(self, "exactness", Exactness(self.exactness))
        if self.exactness is Exactness.MODULO_FUNDAMENTAL_IDEAL and self.model.has_sqrt_minus_one:
            raise ValueError("congruence values only arise where <-1> != <1>")
        if self.exactness is Exactness.EXACT:
            object.__setattr__(self, "unit_known", False)

    @property
    def model(self) -> FieldModel:
        return self.representative.model

    @property
    def exact(self) -> bool:
        return self.exactness is Exactness.EXACT

    @classmethod
    def exact_of(cls, x: GwElement) -> GwValue:
        return cls(x)

    @classmethod
    def congruence(cls, x: GwElement, unit_known: bool | None = None) -> GwValue:
        if x.model.has_sqrt_minus_one:
            return cls(x)
        return cls(x, Exactness.MODULO_FUNDAMENTAL_IDEAL, is_unit(x) if unit_known is None else unit_known)

    def _combine(self, other, rep: GwElement) -> GwValue:
        exact = self.exact and (other.exact if isinstance(other, GwValue) else True)
        return GwValue(rep) if exact else GwValue.congruence(rep)

    def _rep(self, other):
        if isinstance(other, GwValue):
            return other.representative
        return other

    def __add__(self, other):
        return self._combine(other, self.representative + self._rep(other))

    __radd__ = __add__

    def __sub__(self, other):
        return self._combine(other, self.representative - self._rep(other))

    def __rsub__(self, other):
        return self._combine(other, self._rep(other) - self.representative)

    def __neg__(self):
        return self._combine(0, -self.representative)

    def __mul__(self, other):
        return self._combine(other, self.representative * self._rep(other))

    __rmul__ = __mul__

    def __str__(self):
        rep = to_text(self.representative)
        if self.exact:
            return f"{rep}  (exact)"
        return f"{rep}  (mod (1-<-1>), {'unit' if self.unit_known else 'unit unknown'})"

    def to_json(self) -> dict:
        d = self.representative.to_json()
        d["exactness"] = self.exactness.value
        if not self.exact:
            d["unit_known"] = self.unit_known
        return d

    @classmethod
    def from_json(cls, obj) -> GwValue:
        rep = gw_from_json(obj)
        if obj.get("exactness", "exact") == "exact":
            return cls(rep)
        return cls(rep, Exactness.MODULO_FUNDAMENTAL_IDEAL, bool(obj.get("unit_known", False)))
