"""Sparse polynomials in two commuting symbols ``X`` and ``Y`` over the integers.

Monomials ``X^i Y^j`` are packed into a single int ``i << 20 | j`` so that
monomial multiplication is integer addition and lex order (``X > Y``) is
integer order.  Instances are immutable.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping

_SHIFT = 20
_MASK = (1 << _SHIFT) - 1


def _pack(i: int, j: int) -> int:
    return (i << _SHIFT) | j


def _unpack(key: int) -> tuple[int, int]:
    return key >> _SHIFT, key & _MASK


def _graded_key(key: int) -> tuple[int, int, int]:
    i, j = _unpack(key)
    return (i + j, i, j)


class BiPoly:
    """An element of ``Z[X, Y]``.

    >>> x, y = BiPoly.X, BiPoly.Y
    >>> str(x * y - 1)
    'X*Y - 1'
    >>> (x * x * y - 2 * x).exact_div(x) == x * y - 2
    True
    """

    __slots__ = ("_t", "_hash")

    X: BiPoly
    Y: BiPoly

    def __init__(self, terms: Mapping[tuple[int, int], int] | Iterable[tuple[int, int, int]] | int = ()):
        t: dict[int, int] = {}
        if isinstance(terms, int):
            if terms:
                t[0] = terms
        else:
            items = terms.items() if isinstance(terms, Mapping) else (((i, j), c) for i, j, c in terms)
            for (i, j), c in items:
                if i < 0 or j < 0:
                    raise ValueError("negative exponent")
                k = _pack(i, j)
                c = t.get(k, 0) + c
                if c:
                    t[k] = c
                else:
                    t.pop(k, None)
        self._t = t
        self._hash = None

    @classmethod
    def _raw(cls, t: dict[int, int]) -> BiPoly:
        obj = cls.__new__(cls)
        obj._t = t
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c: int) -> BiPoly:
        return cls._raw({0: c} if c else {})

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> list[tuple[int, int, int]]:
        """Canonical sparse term list ``(i, j, c)`` in ascending graded-lex order."""
        return [(*_unpack(k), self._t[k]) for k in sorted(self._t, key=_graded_key)]

    def __iter__(self) -> Iterator[tuple[int, int, int]]:
        return iter(self.terms)

    def __len__(self) -> int:
        return len(self._t)

    def __bool__(self) -> bool:
        return bool(self._t)

    def is_constant(self) -> bool:
        return not self._t or (len(self._t) == 1 and 0 in self._t)

    def constant_term(self) -> int:
        return self._t.get(0, 0)

    def degree(self) -> int:
        if not self._t:
            return -1
        return max(sum(_unpack(k)) for k in self._t)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, BiPoly):
            return self._t == other._t
        if isinstance(other, int):
            return self._t == ({0: other} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._t.items()))
        return self._hash

    # -- arithmetic -------------------------------------------------------

    @staticmethod
    def _coerce(other: BiPoly | int) -> BiPoly:
        if isinstance(other, BiPoly):
            return other
        if isinstance(other, int):
            return BiPoly.const(other)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other: BiPoly | int) -> BiPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        t = dict(self._t)
        for k, c in other._t.items():
            c = t.get(k, 0) + c
            if c:
                t[k] = c
            else:
                del t[k]
        return BiPoly._raw(t)

    __radd__ = __add__

    def __neg__(self) -> BiPoly:
        return BiPoly._raw({k: -c for k, c in self._t.items()})

    def __sub__(self, other: BiPoly | int) -> BiPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        t = dict(self._t)
        for k, c in other._t.items():
            c = t.get(k, 0) - c
            if c:
                t[k] = c
            else:
                del t[k]
        return BiPoly._raw(t)

    def __rsub__(self, other: int) -> BiPoly:
        return (-self) + other

    def __mul__(self, other: BiPoly | int) -> BiPoly:
        if isinstance(other, int):
            if not other:
                return BiPoly._raw({})
            return BiPoly._raw({k: c * other for k, c in self._t.items()})
        if not isinstance(other, BiPoly):
            return NotImplemented
        a, b = self._t, other._t
        if len(a) < len(b):
            a, b = b, a
        out: dict[int, int] = {}
        get = out.get
        for kb, cb in b.items():
            for ka, ca in a.items():
                k = ka + kb
                out[k] = get(k, 0) + ca * cb
        return BiPoly._raw({k: c for k, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> BiPoly:
        if n < 0:
            raise ValueError("negative power")
        result = BiPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def exact_div(self, other: BiPoly | int) -> BiPoly | None:
        """Return ``self / other`` if it lies in ``Z[X, Y]``, else ``None``."""
        other = self._coerce(other)
        if not other._t:
            raise ZeroDivisionError("division by zero")
        if not self._t:
            return self
        lead_b = max(other._t)
        cb = other._t[lead_b]
        bi, bj = _unpack(lead_b)
        rem = dict(self._t)
        quot: dict[int, int] = {}
        while rem:
            lead = max(rem)
            c = rem[lead]
            i, j = _unpack(lead)
            if i < bi or j < bj or c % cb:
                return None
            qk = _pack(i - bi, j - bj)
            qc = c // cb
            quot[qk] = qc
            for k, cc in other._t.items():
                kk = k + qk
                v = rem.get(kk, 0) - qc * cc
                if v:
                    rem[kk] = v
                else:
                    del rem[kk]
        return BiPoly._raw(quot)

    def evaluate(self, ring, x, y):
        """Image under ``X -> x``, ``Y -> y`` in ``ring`` (any object with
        ``add``, ``mul``, ``from_int``)."""
        total = ring.from_int(0)
        xp = [ring.from_int(1)]
        yp = [ring.from_int(1)]
        for k, c in self._t.items():
            i, j = _unpack(k)
            while len(xp) <= i:
                xp.append(ring.mul(xp[-1], x))
            while len(yp) <= j:
                yp.append(ring.mul(yp[-1], y))
            total = ring.add(total, ring.mul(ring.mul(xp[i], yp[j]), ring.from_int(c)))
        return total

    def swap(self) -> BiPoly:
        """Exchange the roles of ``X`` and ``Y``."""
        return BiPoly._raw({_pack(*reversed(_unpack(k))): c for k, c in self._t.items()})

    # -- rendering --------------------------------------------------------

    def render(self, names: tuple[str, str] = ("X", "Y")) -> str:
        if not self._t:
            return "0"
        parts = []
        for k in sorted(self._t, key=_graded_key, reverse=True):
            i, j = _unpack(k)
            parts.append((self._t[k], _monomial((i, j), names)))
        return _join_terms(parts)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"BiPoly({self.render()!r})"


def _monomial(exps: Iterable[int], names: Iterable[str]) -> str:
    factors = []
    for e, name in zip(exps, names):
        if e == 1:
            factors.append(name)
        elif e > 1:
            factors.append(f"{name}^{e}")
    return "*".join(factors)


def _join_terms(parts: list[tuple[object, str]]) -> str:
    """Join ``(coefficient, monomial)`` pairs; integer coefficients get signs pulled out.

    Non-integer coefficients are rendered with ``str``; multi-term ones are
    parenthesized.
    """
    out: list[str] = []
    for idx, (c, mono) in enumerate(parts):
        if isinstance(c, int):
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            body = mono if (mag == 1 and mono) else (f"{mag}*{mono}" if mono else str(mag))
        else:
            text = str(c)
            sign = "+"
            if text.startswith("-") and " " not in text:
                sign, text = "-", text[1:]
            elif " " in text:
                text = f"({text})"
            body = f"{text}*{mono}" if mono else text
        if idx == 0:
            out.append(body if sign == "+" else f"-{body}")
        else:
            out.append(f" {sign} {body}")
    return "".join(out)


BiPoly.X = BiPoly({(1, 0): 1})
BiPoly.Y = BiPoly({(0, 1): 1})
