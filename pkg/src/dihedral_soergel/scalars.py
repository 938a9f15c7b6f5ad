"""Coefficient rings (integral domains), their fraction fields, and exact arithmetic.

Each ring is a small immutable descriptor object that knows how to operate on
*payloads*, which are plain canonical Python values:

=====================  =================================  =========================
kind                   payload                            fraction-field payload
=====================  =================================  =========================
``integers``           ``int``                            ``Fraction``
``prime_field``        ``int`` in ``[0, p)``              ``int`` in ``[0, p)``
``quotient``           tuple of ``deg(modulus)`` ints     tuple of ``Fraction``
``bivariate_integers`` :class:`BiPoly`                    ``(num, den)`` BiPoly pair
=====================  =================================  =========================

Because payloads are canonical, payload equality is element equality.  The
polynomial kernels in :mod:`dihedral_soergel.symalg` work on payloads directly;
:class:`CoefElem` and :class:`FracElem` are the wrapped user-facing values.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any

from .bipoly import BiPoly, _join_terms, _monomial


class ModulusNotIrreducible(ArithmeticError):
    """Inversion exposed a zero divisor: the quotient modulus is reducible."""


class CoefDescriptor:
    """Base class of coefficient-ring descriptors."""

    kind: str

    # ring operations on payloads; subclasses override
    add = staticmethod(operator.add)
    sub = staticmethod(operator.sub)
    neg = staticmethod(operator.neg)
    mul = staticmethod(operator.mul)
    is_zero = staticmethod(operator.not_)

    def zero(self):
        return self.from_int(0)

    def one(self):
        return self.from_int(1)

    def from_int(self, n: int):
        raise NotImplementedError

    def canonical(self, payload):
        """Validate and normalize a raw payload."""
        raise NotImplementedError

    def power(self, a, n: int):
        result = self.one()
        for _ in range(n):
            result = self.mul(result, a)
        return result

    def exact_div(self, a, b):
        """``a / b`` when it lies in the ring, else ``None``.  ``b`` must be nonzero."""
        return self.frac_to_coef(self.frac_mul(self.to_frac(a), self.frac_inv(self.to_frac(b))))

    # -- fraction field ------------------------------------------------------

    def to_frac(self, a):
        raise NotImplementedError

    def frac_add(self, a, b):
        raise NotImplementedError

    def frac_neg(self, a):
        raise NotImplementedError

    def frac_mul(self, a, b):
        raise NotImplementedError

    def frac_inv(self, a):
        raise NotImplementedError

    def frac_is_zero(self, a) -> bool:
        raise NotImplementedError

    def frac_eq(self, a, b) -> bool:
        return a == b

    def frac_to_coef(self, a):
        """The ring element equal to ``a``, or ``None`` when ``a`` is not integral."""
        raise NotImplementedError

    # -- serialization -------------------------------------------------------

    def encode(self, a) -> Any:
        return a

    def decode(self, obj: Any):
        return self.canonical(obj)

    def render(self, a) -> str:
        return str(a)

    def to_json(self) -> dict:
        raise NotImplementedError

    def sample(self, rng, bound: int = 3):
        """A random element with small coefficients in ``[-bound, bound]``."""
        return self.from_int(rng.randint(-bound, bound))

    def is_preferred_sign(self, a) -> bool:
        """Whether ``a`` (nonzero) is the chosen representative of ``{a, -a}``."""
        raise NotImplementedError


@dataclass(frozen=True)
class Integers(CoefDescriptor):
    kind = "integers"

    def from_int(self, n: int) -> int:
        return n

    def canonical(self, payload) -> int:
        if isinstance(payload, bool) or not isinstance(payload, int):
            raise TypeError(f"integer expected, got {payload!r}")
        return payload

    def exact_div(self, a: int, b: int) -> int | None:
        q, r = divmod(a, b)
        return None if r else q

    def to_frac(self, a: int) -> Fraction:
        return Fraction(a)

    frac_add = staticmethod(operator.add)
    frac_neg = staticmethod(operator.neg)
    frac_mul = staticmethod(operator.mul)

    def frac_inv(self, a: Fraction) -> Fraction:
        if not a:
            raise ZeroDivisionError("division by zero")
        return 1 / a

    def frac_is_zero(self, a: Fraction) -> bool:
        return not a

    def frac_to_coef(self, a: Fraction) -> int | None:
        return a.numerator if a.denominator == 1 else None

    def render_frac(self, a: Fraction) -> str:
        return str(a)

    def to_json(self) -> dict:
        return {"kind": "integers"}

    def is_preferred_sign(self, a: int) -> bool:
        return a > 0


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    f = 2
    while f * f <= p:
        if p % f == 0:
            return False
        f += 1
    return True


@dataclass(frozen=True)
class PrimeField(CoefDescriptor):
    p: int
    kind = "prime_field"

    def __post_init__(self):
        if not _is_prime(self.p):
            raise ValueError(f"prime_field modulus {self.p} is not prime")

    def from_int(self, n: int) -> int:
        return n % self.p

    def canonical(self, payload) -> int:
        if isinstance(payload, bool) or not isinstance(payload, int):
            raise TypeError(f"integer residue expected, got {payload!r}")
        return payload % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def exact_div(self, a, b):
        return (a * pow(b, -1, self.p)) % self.p

    def to_frac(self, a):
        return a

    def frac_add(self, a, b):
        return (a + b) % self.p

    def frac_neg(self, a):
        return (-a) % self.p

    def frac_mul(self, a, b):
        return (a * b) % self.p

    def frac_inv(self, a):
        if not a:
            raise ZeroDivisionError("division by zero")
        return pow(a, -1, self.p)

    def frac_is_zero(self, a) -> bool:
        return not a

    def frac_to_coef(self, a):
        return a

    def render_frac(self, a) -> str:
        return str(a)

    def to_json(self) -> dict:
        return {"kind": "prime_field", "p": self.p}

    def sample(self, rng, bound: int = 3):
        return rng.randint(0, self.p - 1)

    def is_preferred_sign(self, a) -> bool:
        return a <= self.p - a


# -- univariate helpers for Q[t] (lists of Fractions, ascending) --------------


def _trim(a: list) -> list:
    while a and not a[-1]:
        a.pop()
    return a


def _poly_divmod(a: list, b: list) -> tuple[list, list]:
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lead = b[-1]
    while len(a) >= len(b) and a:
        c = a[-1] / lead
        shift = len(a) - len(b)
        q[shift] = c
        for i, bc in enumerate(b):
            a[shift + i] -= c * bc
        _trim(a)
    return _trim(q), a


def _poly_sub_mul(a: list, b: list, c: list) -> list:
    """``a - b*c``."""
    out = list(a) + [Fraction(0)] * max(0, len(b) + len(c) - 1 - len(a))
    for i, x in enumerate(b):
        for j, y in enumerate(c):
            out[i + j] -= x * y
    return _trim(out)


@dataclass(frozen=True)
class QuotientRing(CoefDescriptor):
    """``Z[t] / (modulus)`` for a monic integer ``modulus`` (ascending coefficients)."""

    modulus: tuple[int, ...]
    kind = "quotient"

    def __post_init__(self):
        mod = tuple(self.modulus)
        object.__setattr__(self, "modulus", mod)
        if len(mod) < 2:
            raise ValueError("quotient modulus must have degree >= 1")
        if mod[-1] != 1:
            raise ValueError("quotient modulus must be monic")

    @property
    def degree(self) -> int:
        return len(self.modulus) - 1

    def _reduce(self, coeffs: list, zero=0) -> tuple:
        d = self.degree
        mod = self.modulus
        for k in range(len(coeffs) - 1, d - 1, -1):
            c = coeffs[k]
            if c:
                base = k - d
                for i in range(d):
                    coeffs[base + i] -= c * mod[i]
        out = coeffs[:d]
        out.extend([zero] * (d - len(out)))
        return tuple(out)

    def from_int(self, n: int) -> tuple:
        return (n,) + (0,) * (self.degree - 1)

    def canonical(self, payload) -> tuple:
        if isinstance(payload, int) and not isinstance(payload, bool):
            return self.from_int(payload)
        coeffs = list(payload)
        if not all(isinstance(c, int) and not isinstance(c, bool) for c in coeffs):
            raise TypeError(f"integer coefficient array expected, got {payload!r}")
        return self._reduce(coeffs)

    def generator(self) -> tuple:
        return self.canonical([0, 1])

    def add(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def sub(self, a, b):
        return tuple(x - y for x, y in zip(a, b))

    def neg(self, a):
        return tuple(-x for x in a)

    def mul(self, a, b):
        if len(a) == 2:
            a0, a1 = a
            b0, b1 = b
            top = a1 * b1
            m0, m1 = self.modulus[0], self.modulus[1]
            return (a0 * b0 - top * m0, a0 * b1 + a1 * b0 - top * m1)
        out = [0] * (2 * self.degree - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return self._reduce(out)

    @staticmethod
    def is_zero(a) -> bool:
        return not any(a)

    def exact_div(self, a, b):
        inv = _quotient_inverse(self.modulus, b)
        unit = self.frac_to_coef(inv)
        if unit is not None:
            # b is a unit of the ring, so multiplying stays integral
            return self.mul(a, unit)
        return self.frac_to_coef(self.frac_mul(tuple(Fraction(x) for x in a), inv))

    def to_frac(self, a):
        return tuple(Fraction(x) for x in a)

    def frac_add(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def frac_neg(self, a):
        return tuple(-x for x in a)

    def frac_mul(self, a, b):
        out = [Fraction(0)] * (2 * self.degree - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return self._reduce(out, Fraction(0))

    def frac_inv(self, a):
        return _quotient_inverse(self.modulus, tuple(a))

    def frac_is_zero(self, a) -> bool:
        return not any(a)

    def frac_to_coef(self, a):
        if all(x.denominator == 1 for x in a):
            return tuple(x.numerator for x in a)
        return None

    def render(self, a) -> str:
        parts = [(c, _monomial((i,), ("t",))) for i, c in reversed(list(enumerate(a))) if c]
        return _join_terms(parts) if parts else "0"

    def render_frac(self, a) -> str:
        parts = [(c, _monomial((i,), ("t",))) for i, c in reversed(list(enumerate(a))) if c]
        return " + ".join(f"({c})*{m}" if m else f"({c})" for c, m in parts) if parts else "0"

    def encode(self, a):
        return list(a)

    def to_json(self) -> dict:
        return {"kind": "quotient", "modulus": list(self.modulus)}

    def sample(self, rng, bound: int = 3):
        return tuple(rng.randint(-bound, bound) for _ in range(self.degree))

    def is_preferred_sign(self, a) -> bool:
        return next(c for c in a if c) > 0


@lru_cache(maxsize=4096)
def _quotient_inverse(modulus: tuple[int, ...], a: tuple) -> tuple:
    """Inverse in ``Q[t]/(modulus)`` by the extended Euclidean algorithm."""
    d = len(modulus) - 1
    r0 = [Fraction(c) for c in modulus]
    r1 = _trim([Fraction(c) for c in a])
    if not r1:
        raise ZeroDivisionError("division by zero")
    s0: list = []
    s1: list = [Fraction(1)]
    while r1:
        q, r = _poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _poly_sub_mul(s0, q, s1)
    # r0 = gcd(modulus, a) up to a unit, and s0 * a == r0 mod modulus
    if len(r0) > 1:
        raise ModulusNotIrreducible("modulus not irreducible")
    lead = r0[0]
    inv = [c / lead for c in s0]
    _, rem = _poly_divmod(inv, [Fraction(c) for c in modulus])
    rem = rem + [Fraction(0)] * (d - len(rem))
    return tuple(rem)


@dataclass(frozen=True)
class BivariateIntegers(CoefDescriptor):
    """``Z[X, Y]`` itself; the coefficient ring of the universal realization."""

    kind = "bivariate_integers"

    def from_int(self, n: int) -> BiPoly:
        return BiPoly.const(n)

    def canonical(self, payload) -> BiPoly:
        if isinstance(payload, BiPoly):
            return payload
        if isinstance(payload, int) and not isinstance(payload, bool):
            return BiPoly.const(payload)
        return BiPoly([tuple(t) for t in payload])

    def exact_div(self, a: BiPoly, b: BiPoly) -> BiPoly | None:
        return a.exact_div(b)

    def to_frac(self, a):
        return (a, BiPoly.const(1))

    def frac_add(self, a, b):
        return (a[0] * b[1] + b[0] * a[1], a[1] * b[1])

    def frac_neg(self, a):
        return (-a[0], a[1])

    def frac_mul(self, a, b):
        return (a[0] * b[0], a[1] * b[1])

    def frac_inv(self, a):
        if not a[0]:
            raise ZeroDivisionError("division by zero")
        return (a[1], a[0])

    def frac_is_zero(self, a) -> bool:
        return not a[0]

    def frac_eq(self, a, b) -> bool:
        return a[0] * b[1] == b[0] * a[1]

    def frac_to_coef(self, a):
        return a[0].exact_div(a[1])

    def render_frac(self, a) -> str:
        if a[1] == 1:
            return a[0].render()
        return f"({a[0].render()})/({a[1].render()})"

    def encode(self, a: BiPoly):
        return [list(t) for t in a.terms]

    def to_json(self) -> dict:
        return {"kind": "bivariate_integers"}

    def sample(self, rng, bound: int = 3):
        return BiPoly({(i, j): rng.randint(-bound, bound) for i in range(2) for j in range(2)})

    def is_preferred_sign(self, a: BiPoly) -> bool:
        return a.terms[-1][2] > 0


def descriptor_from_json(obj: dict) -> CoefDescriptor:
    """Parse the coefficient-ring JSON encoding used in realization configs."""
    if not isinstance(obj, dict) or "kind" not in obj:
        raise ValueError(f"bad coefficient descriptor {obj!r}")
    kind = obj["kind"]
    if kind == "integers":
        return Integers()
    if kind == "prime_field":
        return PrimeField(int(obj["p"]))
    if kind == "quotient":
        return QuotientRing(tuple(int(c) for c in obj["modulus"]))
    if kind == "bivariate_integers":
        return BivariateIntegers()
    raise ValueError(f"unknown coefficient kind {kind!r}")


# -- wrapped elements ---------------------------------------------------------


@dataclass(frozen=True)
class CoefElem:
    """A ring element together with its descriptor."""

    descriptor: CoefDescriptor
    payload: Any

    @classmethod
    def of(cls, descriptor: CoefDescriptor, value) -> CoefElem:
        return cls(descriptor, descriptor.canonical(value))

    def _check(self, other) -> CoefElem:
        if isinstance(other, int) and not isinstance(other, bool):
            return CoefElem(self.descriptor, self.descriptor.from_int(other))
        if not isinstance(other, CoefElem):
            return NotImplemented
        if other.descriptor != self.descriptor:
            raise ValueError("descriptor mismatch")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return CoefElem(self.descriptor, self.descriptor.add(self.payload, other.payload))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return CoefElem(self.descriptor, self.descriptor.sub(self.payload, other.payload))

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return CoefElem(self.descriptor, self.descriptor.mul(self.payload, other.payload))

    __rmul__ = __mul__

    def __neg__(self):
        return CoefElem(self.descriptor, self.descriptor.neg(self.payload))

    def is_zero(self) -> bool:
        return self.descriptor.is_zero(self.payload)

    def __eq__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            return self.payload == self.descriptor.from_int(other)
        if isinstance(other, CoefElem):
            return self.descriptor == other.descriptor and self.payload == other.payload
        return NotImplemented

    def __hash__(self):
        return hash((self.descriptor, self.payload))

    def __str__(self):
        return self.descriptor.render(self.payload)


def coef_arith(op: str, a: CoefElem, b: CoefElem | None = None) -> CoefElem:
    """Apply ``add``, ``mul``, ``sub`` or ``neg`` to canonical elements."""
    if b is not None and a.descriptor != b.descriptor:
        raise ValueError("descriptor mismatch")
    d = a.descriptor
    if op == "neg":
        return CoefElem(d, d.neg(a.payload))
    if b is None:
        raise ValueError(f"{op} needs two operands")
    if op == "add":
        return CoefElem(d, d.add(a.payload, b.payload))
    if op == "sub":
        return CoefElem(d, d.sub(a.payload, b.payload))
    if op == "mul":
        return CoefElem(d, d.mul(a.payload, b.payload))
    raise ValueError(f"unknown operation {op!r}")


class FracElem:
    """An element of the fraction field of a coefficient ring."""

    __slots__ = ("descriptor", "value")

    def __init__(self, descriptor: CoefDescriptor, value):
        self.descriptor = descriptor
        self.value = value

    @classmethod
    def of(cls, num: CoefElem, den: CoefElem | None = None) -> FracElem:
        d = num.descriptor
        value = d.to_frac(num.payload)
        if den is not None:
            if den.descriptor != d:
                raise ValueError("descriptor mismatch")
            value = d.frac_mul(value, d.frac_inv(d.to_frac(den.payload)))
        return cls(d, value)

    def __mul__(self, other: FracElem) -> FracElem:
        return FracElem(self.descriptor, self.descriptor.frac_mul(self.value, other.value))

    def __add__(self, other: FracElem) -> FracElem:
        return FracElem(self.descriptor, self.descriptor.frac_add(self.value, other.value))

    def __neg__(self) -> FracElem:
        return FracElem(self.descriptor, self.descriptor.frac_neg(self.value))

    def is_zero(self) -> bool:
        return self.descriptor.frac_is_zero(self.value)

    def __eq__(self, other):
        if isinstance(other, FracElem):
            return self.descriptor == other.descriptor and self.descriptor.frac_eq(self.value, other.value)
        if isinstance(other, int) and not isinstance(other, bool):
            return self.descriptor.frac_eq(self.value, self.descriptor.to_frac(self.descriptor.from_int(other)))
        return NotImplemented

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self):
        return f"FracElem({self.descriptor.render_frac(self.value)})"


def frac_invert(a: FracElem) -> FracElem:
    """Multiplicative inverse in the fraction field."""
    return FracElem(a.descriptor, a.descriptor.frac_inv(a.value))


def is_integral(a: FracElem) -> CoefElem | None:
    """The ring element equal to ``a``, or ``None`` if ``a`` is not in the ring."""
    payload = a.descriptor.frac_to_coef(a.value)
    return None if payload is None else CoefElem(a.descriptor, payload)
