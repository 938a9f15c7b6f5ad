"""Two-colored quantum numbers, their binomials, and specialization.

``[n]_X`` and ``[n]_Y`` live in ``Z[X, Y]``::

    [0] = 0,  [1] = 1,
    [n+1]_X = X [n]_Y - [n-1]_X,
    [n+1]_Y = Y [n]_X - [n-1]_Y.

The colors alternate in the recursion, which is what makes ``[n]_X = [n]_Y``
for odd ``n``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import lru_cache

from .bipoly import BiPoly
from .scalars import CoefElem

__all__ = [
    "BiPoly",
    "Color",
    "sigma_power",
    "two_color_quantum",
    "two_color_binomial",
    "specialize",
    "specialize_payload",
    "assumption_check",
    "AssumptionReport",
    "BinomialIntegrityError",
]


class Color(enum.Enum):
    X = "X"
    Y = "Y"

    def swap(self) -> Color:
        return Color.Y if self is Color.X else Color.X

    @classmethod
    def parse(cls, text: str | Color) -> Color:
        if isinstance(text, Color):
            return text
        try:
            return cls(text.upper())
        except (ValueError, AttributeError):
            raise ValueError(f"color must be X or Y, got {text!r}") from None


class BinomialIntegrityError(ArithmeticError):
    pass


def sigma_power(c: Color, k: int) -> Color:
    """``σ^k(c)``; ``k`` may be negative."""
    return c if k % 2 == 0 else c.swap()


@lru_cache(maxsize=None)
def _quantum_pair(n: int) -> tuple[BiPoly, BiPoly]:
    # iterative so deep n never hits the recursion limit
    prev = (BiPoly.const(0), BiPoly.const(0))
    cur = (BiPoly.const(1), BiPoly.const(1))
    if n == 0:
        return prev
    for _ in range(n - 1):
        qx, qy = cur
        prev, cur = cur, (BiPoly.X * qy - prev[0], BiPoly.Y * qx - prev[1])
    return cur


def two_color_quantum(n: int, c: Color | str) -> BiPoly:
    """``[n]_c``.

    >>> str(two_color_quantum(4, Color.X))
    'X^2*Y - 2*X'
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    qx, qy = _quantum_pair(n)
    return qx if Color.parse(c) is Color.X else qy


@lru_cache(maxsize=None)
def _binomial(m: int, n: int, c: Color) -> BiPoly:
    result = BiPoly.const(1)
    for j in range(1, n + 1):
        # binom(m, j) = binom(m, j-1) * [m-j+1] / [j], exact at every step
        q = (result * two_color_quantum(m - j + 1, c)).exact_div(two_color_quantum(j, c))
        if q is None:
            raise BinomialIntegrityError("binomial integrality violated")
        result = q
    return result


def two_color_binomial(m: int, n: int, c: Color | str) -> BiPoly:
    """``[m choose n]_c = [m]_c ... [m-n+1]_c / ([n]_c ... [1]_c)``."""
    if not 0 <= n <= m:
        raise ValueError(f"binomial needs 0 <= n <= m, got m={m}, n={n}")
    return _binomial(m, n, Color.parse(c))


def specialize_payload(p: BiPoly, coef, x, y):
    """Image of ``p`` under ``X -> x``, ``Y -> y`` as a payload of ``coef``."""
    return p.evaluate(coef, x, y)


def specialize(p: BiPoly, r) -> CoefElem:
    """Image of ``p`` in the coefficient ring of realization ``r``."""
    return CoefElem(r.coef, specialize_payload(p, r.coef, r.X, r.Y))


@dataclass
class AssumptionReport:
    holds: bool
    witnesses: list[tuple[int, Color, CoefElem]]
    condition_2: bool
    condition_3: bool
    even_balanced: bool
    failures_2: list[tuple[int, Color]] = field(default_factory=list)
    failures_3: list[tuple[int, Color]] = field(default_factory=list)

    @property
    def conditions_agree(self) -> bool:
        return self.holds == self.condition_2 == self.condition_3

    def to_json(self) -> dict:
        return {
            "holds": self.holds,
            "witnesses": [{"k": k, "color": c.value, "value": str(v)} for k, c, v in self.witnesses],
            "condition_2": self.condition_2,
            "condition_3": self.condition_3,
            "even_balanced": self.even_balanced,
        }


def _balance_product(m: int, k: int, c: Color, r):
    """``prod_{i=1..k} [m-1]_{σ^{i-1}(c)}`` specialized."""
    coef = r.coef
    result = coef.one()
    for i in range(1, k + 1):
        result = coef.mul(result, specialize(two_color_quantum(m - 1, sigma_power(c, i - 1)), r).payload)
    return result


def _condition_2_failures(m: int, k_max: int, r) -> list[tuple[int, Color]]:
    failures = []
    for k in range(0, k_max + 1):
        for c in Color:
            lhs = specialize(two_color_binomial(m - 1, k, c), r).payload
            if lhs != _balance_product(m, k, c, r):
                failures.append((k, c))
    return failures


def assumption_check(r) -> AssumptionReport:
    """Check the vanishing of the middle binomials ``[m choose k]`` after
    specialization, together with the two equivalent reformulations.

    Condition 2: ``[m-1 choose k]_Z`` equals ``prod_{i<=k} [m-1]_{σ^{i-1}Z}`` for
    ``0 <= k <= m-1``.  Condition 3: the realization is even-balanced (``ξ = 1``)
    and the same product formula holds for ``k <= (m-1)/2``.
    """
    if r.m is None:
        raise ValueError("assumption undefined for universal realization")
    m = r.m
    witnesses = []
    for k in range(1, m):
        for c in Color:
            value = specialize(two_color_binomial(m, k, c), r)
            if not value.is_zero():
                witnesses.append((k, c, value))
    failures_2 = _condition_2_failures(m, m - 1, r)
    if m % 2 == 0:
        even_balanced = specialize(two_color_quantum(m - 1, Color.X), r) == 1
    else:
        even_balanced = True
    failures_3 = _condition_2_failures(m, (m - 1) // 2, r)
    return AssumptionReport(
        holds=not witnesses,
        witnesses=witnesses,
        condition_2=not failures_2,
        condition_3=even_balanced and not failures_3,
        even_balanced=even_balanced,
        failures_2=failures_2,
        failures_3=failures_3,
    )
