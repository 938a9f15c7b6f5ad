"""Subexpression sums ``a^w(g)``, their closed form ``k_g^w / prod X_g^w``, and
the products ``π_w``, ``ζ_w(e)``, ``ξ`` built from prefix-twisted simple roots.

Words are strings over ``"st"``; group elements for ``a``, ``k`` and ``X`` are
universal.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Sequence

from .bipoly import BiPoly
from .dihedral import (
    GroupElem,
    bit_vectors,
    bruhat_leq,
    evaluate_word,
    is_reduced_word,
    parse_bits,
    parse_word,
    reflections_up_to,
)
from .qnum import Color, sigma_power, specialize, specialize_payload, two_color_binomial, two_color_quantum
from .scalars import CoefElem
from .symalg import QElem, Realization, RootFactor, RPoly

BRUTE_FORCE_MAX_LENGTH = 20

# denominator multiset (sorted tuple of (factor, multiplicity)) -> integer coefficient
Terms = dict[tuple[tuple[RootFactor, int], ...], int]


@dataclass(frozen=True)
class XSet:
    """``X_g^w``: positive roots ``γ`` with ``s_γ g <= w``."""

    g: GroupElem
    w: GroupElem
    reflections: tuple[GroupElem, ...]

    def roots(self, r: Realization) -> list[tuple[int, RootFactor]]:
        return [r.root(refl) for refl in self.reflections]

    def words(self) -> list[str]:
        return [refl.word for refl in self.reflections]

    def __len__(self) -> int:
        return len(self.reflections)


def _check_guard(w: str) -> None:
    if len(w) > BRUTE_FORCE_MAX_LENGTH:
        raise ValueError(f"word length {len(w)} exceeds the brute-force guard {BRUTE_FORCE_MAX_LENGTH}")


def enumerate_matching(w: str, g: GroupElem) -> list[tuple[int, ...]]:
    """All ``e`` with ``w^e = g`` (in ``g``'s group), in index order."""
    w = parse_word(w)
    _check_guard(w)
    return [e for e in bit_vectors(len(w)) if evaluate_word(w, e, g.m) == g]


def _subexpression_terms(w: str, r: Realization) -> dict[GroupElem, Terms]:
    """Brute-force terms of ``a^w(g)`` for every universal ``g`` at once.

    Walks the binary tree of prefixes so each prefix root is looked up once.
    """
    out: dict[GroupElem, Terms] = defaultdict(lambda: defaultdict(int))
    l = len(w)

    def walk(i: int, x: GroupElem, sign: int, den: dict):
        if i == l:
            key = tuple(sorted(den.items(), key=lambda it: it[0].sort_key()))
            out[x][key] += sign
            return
        u = w[i]
        s, rf = r.simple_image(x, u)
        den[rf] = den.get(rf, 0) + 1
        walk(i + 1, x, sign * s, den)
        walk(i + 1, x.mul_letter(u), sign * s, den)
        den[rf] -= 1
        if not den[rf]:
            del den[rf]

    walk(0, GroupElem.identity(), 1, {})
    return {g: {k: v for k, v in terms.items() if v} for g, terms in out.items()}


def terms_to_qelem(terms: Terms, r: Realization) -> QElem:
    total = QElem(r.zero())
    for key, coeff in sorted(terms.items(), key=lambda it: [(rf.sort_key(), n) for rf, n in it[0]]):
        total = total + QElem(r.const_int(coeff), dict(key))
    return total


def a_values_bruteforce(w: str, r: Realization) -> dict[GroupElem, QElem]:
    """``a^w(g)`` for every ``g`` reached by a subexpression of ``w``."""
    w = parse_word(w)
    _check_guard(w)
    return {g: terms_to_qelem(t, r) for g, t in _subexpression_terms(w, r).items()}


def a_value_terms(w: str, r: Realization) -> dict[GroupElem, Terms]:
    w = parse_word(w)
    _check_guard(w)
    return _subexpression_terms(w, r)


def a_value_bruteforce(w: str, g: GroupElem, r: Realization) -> QElem:
    """``a^w(g) = sum over w^e = g of prod_i (prefix_e)(1/α_{s_i})``."""
    if g.m is not None:
        raise ValueError("a-values are indexed by universal group elements")
    w = parse_word(w)
    _check_guard(w)
    return terms_to_qelem(_subexpression_terms(w, r).get(g, {}), r)


def k_coefficient(w: str, g: GroupElem) -> BiPoly:
    """The numerator ``k_g^w`` of the closed form."""
    w = parse_word(w)
    if not is_reduced_word(w):
        return BiPoly.const(0)
    l = len(w)
    wg = GroupElem.from_word(w)
    if not bruhat_leq(g, wg):
        return BiPoly.const(0)
    if l == 0:
        return BiPoly.const(1 if g.is_identity else 0)
    s1 = w[0]
    base = Color.X if s1 == "s" else Color.Y
    color = sigma_power(base, l - 1)
    top = l - g.length - 1 if g.left_longer(s1) else l - g.length
    assert top >= 0, "negative floor argument in k"
    return two_color_binomial(l - 1, top // 2, color)


def x_set(g: GroupElem, w: GroupElem) -> XSet:
    """``X_g^w`` by scanning reflections of length at most ``ℓ(g) + ℓ(w) + 1``."""
    if g.m is not None or w.m is not None:
        raise ValueError("X-sets are computed in the universal group")
    found = tuple(refl for refl in reflections_up_to(g.length + w.length + 1) if bruhat_leq(refl * g, w))
    return XSet(g, w, found)


def a_value_closed(w: str, g: GroupElem, r: Realization) -> QElem:
    """``k_g^w / prod_{γ in X_g^w} γ`` in ``r``."""
    w = parse_word(w)
    k = k_coefficient(w, g)
    num = r.const(specialize_payload(k, r.coef, r.X, r.Y))
    if num.is_zero():
        return QElem(num)
    return QElem.over_roots(num, x_set(g, GroupElem.from_word(w)).roots(r))


def _prefix_product(w: str, e: Sequence[int], r: Realization) -> tuple[RPoly, list[tuple[int, RootFactor]]]:
    """``prod_i prefix_e(α_{s_i})`` as a polynomial and as signed root factors."""
    poly = r.one()
    roots = []
    x = GroupElem.identity()
    for u, bit in zip(w, e):
        roots.append(r.simple_image(x, u))
        poly = poly * r.act(x.word, r.simple_root(u))
        if bit:
            x = x.mul_letter(u)
    return poly, roots


def pi(w: str, r: Realization) -> RPoly:
    """``π_w = prod_i s_1...s_{i-1}(α_{s_i})``."""
    w = parse_word(w)
    return _prefix_product(w, (1,) * len(w), r)[0]


def zeta(w: str, e: Sequence[int] | str, r: Realization) -> RPoly:
    """``ζ_w(e) = prod_i s_1^{e_1}...s_{i-1}^{e_{i-1}}(α_{s_i})``."""
    w = parse_word(w)
    e = parse_bits(e)
    if len(e) != len(w):
        raise ValueError("length mismatch between word and bit vector")
    return _prefix_product(w, e, r)[0]


def zeta_roots(w: str, e: Sequence[int], r: Realization) -> list[tuple[int, RootFactor]]:
    """The factors of ``ζ_w(e)`` as signed roots."""
    return _prefix_product(w, e, r)[1]


def xi(r: Realization) -> CoefElem:
    """``ξ = [m-1]_X`` for even ``m`` and ``1`` for odd ``m``."""
    if r.m is None:
        raise ValueError("ξ is undefined for the universal realization")
    if r.m % 2:
        return CoefElem(r.coef, r.coef.one())
    return specialize(two_color_quantum(r.m - 1, Color.X), r)


def x_word(m: int) -> str:
    return "".join("st"[i % 2] for i in range(m))


def y_word(m: int) -> str:
    return "".join("ts"[i % 2] for i in range(m))


def ratio_rhs(r: Realization, g: GroupElem) -> CoefElem:
    """The predicted value of ``prod X_g^x / π_x`` for universal ``g <= x``."""
    m = r.m
    c = r.coef
    if g.left_longer("s"):
        n = (m - g.length - 1) // 2
        value = xi(r).payload
    else:
        n = (m - g.length) // 2
        value = c.one()
    for i in range(1, n + 1):
        value = c.mul(value, specialize(two_color_quantum(m - 1, sigma_power(Color.X, i - 1)), r).payload)
    return CoefElem(c, value)
