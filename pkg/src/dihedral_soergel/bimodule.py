"""Localized Bott-Samuelson elements and the candidate morphisms between the
two reduced expressions of the longest element.

An element of ``(B_w)_Q`` is a tuple of ``2^l`` fractions.  The component of
bit vector ``e`` sits at index ``int(e, 2)`` (``e_1`` is the most significant
bit) and carries the right action ``q·p = w^e(p) q``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .dihedral import GroupElem, bit_vectors, bits_str, evaluate_word, lift_r, parse_bits, parse_word, subsequence
from .subexpr import a_value_closed, pi, x_word, y_word, zeta_roots
from .symalg import QElem, Realization, RPoly, is_polynomial, require_certificate


@dataclass(frozen=True, eq=False)
class Localized:
    r: Realization
    word: str
    components: tuple[QElem, ...]

    def __post_init__(self):
        if len(self.components) != 1 << len(self.word):
            raise ValueError("a localized element needs 2^l components")

    def __getitem__(self, e) -> QElem:
        if isinstance(e, int):
            return self.components[e]
        return self.components[_index(parse_bits(e))]

    def __add__(self, other: Localized) -> Localized:
        _same_space(self, other)
        return Localized(self.r, self.word, tuple(a + b for a, b in zip(self.components, other.components)))

    def __sub__(self, other: Localized) -> Localized:
        _same_space(self, other)
        return Localized(self.r, self.word, tuple(a - b for a, b in zip(self.components, other.components)))

    def __neg__(self) -> Localized:
        return Localized(self.r, self.word, tuple(-a for a in self.components))

    def scale(self, q: QElem | RPoly) -> Localized:
        return Localized(self.r, self.word, tuple(q * a for a in self.components))

    def equals(self, other: Localized) -> bool:
        """Componentwise semantic equality."""
        _same_space(self, other)
        return all(a == b for a, b in zip(self.components, other.components))

    def is_zero(self) -> bool:
        return all(a.is_zero() for a in self.components)

    def items(self):
        """``(bit string, component)`` pairs in index order."""
        return [(bits_str(e), q) for e, q in zip(bit_vectors(len(self.word)), self.components)]

    def to_json(self) -> dict:
        """Denominators are listed as reflections standing for their positive
        roots; a factor stored with the opposite sign flips the numerator."""
        comps = {}
        for bits, q in self.items():
            q = q.cancel()
            roots = q.denominator_roots()
            num = q.num
            for rf in roots:
                if self.r.root(rf.reflection)[0] < 0:
                    num = -num
            comps[bits] = {"num": num.to_json(), "den": [rf.reflection.word for rf in roots]}
        return {"word": self.word, "components": comps}

    @classmethod
    def from_json(cls, r: Realization, obj: dict) -> Localized:
        word = parse_word(obj["word"])
        comps: list[QElem] = [QElem(r.zero()) for _ in range(1 << len(word))]
        for bits, data in obj.get("components", {}).items():
            e = parse_bits(bits)
            if len(e) != len(word):
                raise ValueError(f"component key {bits!r} does not match word {word!r}")
            num = RPoly.from_json(r, data.get("num", []))
            refls = [GroupElem.from_word(parse_word(refl)) for refl in data.get("den", [])]
            for refl in refls:
                if refl.length % 2 == 0 or refl.word != refl.word[::-1]:
                    raise ValueError(f"denominator {refl} is not a reflection")
            roots = [r.root(refl) for refl in refls]
            comps[_index(e)] = QElem.over_roots(num, roots)
        return cls(r, word, tuple(comps))


def _index(e: Sequence[int]) -> int:
    n = 0
    for b in e:
        n = 2 * n + b
    return n


def _same_space(a: Localized, b: Localized) -> None:
    if a.r is not b.r or a.word != b.word:
        raise ValueError("localized elements live over different words or realizations")


# -- construction ------------------------------------------------------------


def embed_tensor(r: Realization, w: str, ps: Sequence[RPoly]) -> Localized:
    """Coordinates of ``p_0 ⊗ p_1 ⊗ ... ⊗ p_l``.

    Component ``e`` is ``prod_i prefix_e(p_{i-1}/α_{s_i})`` times ``w^e(p_l)``.
    """
    w = parse_word(w)
    if len(ps) != len(w) + 1:
        raise ValueError(f"a tensor over a word of length {len(w)} needs {len(w) + 1} factors")
    comps = []
    for e in bit_vectors(len(w)):
        x = GroupElem.identity()
        num = r.one()
        roots = []
        for i, u in enumerate(w):
            num = num * r.act(x.word, ps[i])
            roots.append(r.simple_image(x, u))
            if e[i]:
                x = x.mul_letter(u)
        num = num * r.act(x.word, ps[-1])
        comps.append(QElem.over_roots(num, roots))
    return Localized(r, w, tuple(comps))


def b_element(r: Realization, w: str) -> Localized:
    """``b_w = (1⊗1)⊗...⊗(1⊗1)``."""
    w = parse_word(w)
    return embed_tensor(r, w, [r.one()] * (len(w) + 1))


def zero_element(r: Realization, w: str) -> Localized:
    w = parse_word(w)
    return Localized(r, w, tuple(QElem(r.zero()) for _ in range(1 << len(w))))


def left_mul(x: Localized, p: RPoly) -> Localized:
    return x.scale(p)


def right_mul(x: Localized, p: RPoly | QElem) -> Localized:
    """Right action: component ``e`` is multiplied by ``w^e(p)``."""
    r = x.r
    comps = []
    for e, q in zip(bit_vectors(len(x.word)), x.components):
        g = evaluate_word(x.word, e)
        comps.append(q * (p.act(g.word) if isinstance(p, QElem) else r.act(g.word, p)))
    return Localized(r, x.word, tuple(comps))


def tensor(a: Localized, b: Localized) -> Localized:
    """``a ⊗ b`` over the concatenated word, via ``Q_x ⊗ Q_y = Q_xy``."""
    if a.r is not b.r:
        raise ValueError("realization mismatch")
    comps = []
    for e, qa in zip(bit_vectors(len(a.word)), a.components):
        g = evaluate_word(a.word, e)
        for qb in b.components:
            comps.append(qa * qb.act(g.word))
    return Localized(a.r, a.word + b.word, tuple(comps))


# -- membership ----------------------------------------------------------------


def membership(x: Localized) -> bool:
    """Whether ``x`` lies in ``B_w``, by recursive splitting on the last letter."""
    require_certificate(x.r)
    return _member(x)


def _member(x: Localized) -> bool:
    if not x.word:
        return is_polynomial(x.components[0]) is not None
    v, u = x.word[:-1], x.word[-1]
    r = x.r
    m1 = Localized(r, v, x.components[0::2])
    m2 = Localized(r, v, x.components[1::2])
    return _member(right_mul(m1, r.simple_root(u))) and _member(m1 - m2)


# -- the morphisms φ and ψ -------------------------------------------------------


def _check_finite(r: Realization) -> int:
    if r.m is None:
        raise ValueError("the morphism needs a finite realization")
    return r.m


def _transfer(r: Realization, x: Localized, source: str, target: str, numerator: RPoly) -> Localized:
    if x.word != source:
        raise ValueError(f"input must live over {source!r}, got {x.word!r}")
    m = r.m
    by_group: dict[GroupElem, QElem] = {}
    for e, q in zip(bit_vectors(m), x.components):
        g = evaluate_word(source, e, m)
        by_group[g] = by_group[g] + q if g in by_group else q
    comps = []
    for f in bit_vectors(m):
        g = evaluate_word(target, f, m)
        total = by_group.get(g)
        if total is None or total.is_zero():
            comps.append(QElem(r.zero()))
            continue
        comps.append(total * QElem.over_roots(numerator, zeta_roots(target, f, r)))
    return Localized(r, target, tuple(comps))


def phi_apply(r: Realization, x: Localized) -> Localized:
    """``φ_Q``: component ``f`` is ``(π_x/ζ_y(f)) sum_{x^e = y^f} q_e``."""
    m = _check_finite(r)
    return _transfer(r, x, x_word(m), y_word(m), pi(x_word(m), r))


def psi_apply(r: Realization, x: Localized) -> Localized:
    """``ψ_Q``: the same construction with the two words exchanged."""
    m = _check_finite(r)
    return _transfer(r, x, y_word(m), x_word(m), pi(y_word(m), r))


@dataclass
class GeneratorCheck:
    phi_ok: bool
    psi_ok: bool
    phi_failures: list[str]
    psi_failures: list[str]

    @property
    def both(self) -> bool:
        return self.phi_ok and self.psi_ok


def phi_on_generator_check(r: Realization) -> GeneratorCheck:
    """Compare ``φ_Q(b_x)`` with ``b_y`` and ``ψ_Q(b_y)`` with ``b_x``."""
    m = _check_finite(r)
    bx, by = b_element(r, x_word(m)), b_element(r, y_word(m))
    phi_bad = [bits for (bits, a), b in zip(phi_apply(r, bx).items(), by.components) if a != b]
    psi_bad = [bits for (bits, a), b in zip(psi_apply(r, by).items(), bx.components) if a != b]
    return GeneratorCheck(not phi_bad, not psi_bad, phi_bad, psi_bad)


# -- D-operator expansion ---------------------------------------------------------


def _d_chains(r: Realization, w: str, ps: Sequence[RPoly]) -> list[tuple[str, RPoly]]:
    """Nonzero ``(w^(c), D^{(c_l)}(p_l ... D^{(c_1)}(p_1)))`` over all ``c``."""
    out = []
    for c in bit_vectors(len(w)):
        chain = r.one()
        for u, p, bit in zip(w, ps, c):
            arg = p * chain
            chain = r.act(u, arg) if bit else r.demazure(u, arg)
            if chain.is_zero():
                break
        if not chain.is_zero():
            out.append((subsequence(w, c), chain))
    return out


def d_expansion_many(r: Realization, w: str, ps: Sequence[RPoly], gs: Sequence[GroupElem]) -> list[QElem]:
    """:func:`d_expansion` at several targets, sharing the D-chains."""
    w = parse_word(w)
    m = _check_finite(r)
    if len(w) > m:
        raise ValueError(f"word length {len(w)} exceeds m={m}")
    if len(ps) != len(w):
        raise ValueError("need one polynomial per letter")
    chains = _d_chains(r, w, ps)
    results = []
    for g in gs:
        lifted = lift_r(g)
        total = QElem(r.zero())
        for sub, chain in chains:
            a = a_value_closed(sub, lifted, r)
            if not a.is_zero():
                total = total + a * r.act(g, chain)
        results.append(total)
    return results


def d_expansion(r: Realization, w: str, ps: Sequence[RPoly], g: GroupElem) -> QElem:
    """``sum_c a^{w^(c)}(r(g)) g(D^{(c_l)}(p_l D^{(c_{l-1})}(... p_2 D^{(c_1)}(p_1))))``
    with ``D^(0) = ∂`` and ``D^(1) = u``; ``g`` is a finite group element."""
    return d_expansion_many(r, w, ps, [g])[0]


# -- generator morphisms ------------------------------------------------------------


def unit_dot(r: Realization, u: str, p: RPoly) -> Localized:
    """Image of ``p`` under ``R -> B_u``, ``p ↦ pδ_u⊗1 - p⊗u(δ_u)``: ``(p, 0)``."""
    if r.delta(u) is None:
        raise ValueError(f"unit_dot needs delta_{u}")
    return Localized(r, u, (QElem(p), QElem(r.zero())))


def counit_dot(x: Localized) -> QElem:
    """``B_u -> R``, ``f⊗g ↦ fg``: ``(q0, q1) ↦ α_u q0``."""
    if len(x.word) != 1:
        raise ValueError("counit_dot acts on a single letter")
    return x.components[0] * x.r.simple_root(x.word)


def split(x: Localized) -> Localized:
    """``B_u -> B_u ⊗ B_u``, ``f⊗g ↦ f⊗1⊗g``."""
    if len(x.word) != 1:
        raise ValueError("split acts on a single letter")
    r, u = x.r, x.word
    sign, rf = r.root(GroupElem.from_word(u))
    q0, q1 = (q.divide_by_root(sign, rf) for q in x.components)
    return Localized(r, u + u, (q0, q1, -q1, -q0))


def merge(x: Localized) -> Localized:
    """``B_u ⊗ B_u -> B_u``, ``f⊗g⊗h ↦ f∂_u(g)⊗h``."""
    if len(x.word) != 2 or x.word[0] != x.word[1]:
        raise ValueError("merge acts on a repeated letter")
    q00, q01, q10, q11 = x.components
    return Localized(x.r, x.word[0], (q00 + q11, q01 + q10))


# -- random tensors -------------------------------------------------------------------


def random_poly(r: Realization, rng, degree: int = 2, bound: int = 3) -> RPoly:
    """A random polynomial of degree at most ``degree`` with small coefficients."""
    total = r.zero()
    d = r.rank
    monos = _monomials(d, degree)
    for exps in monos:
        c = r.coef.sample(rng, bound)
        if r.coef.is_zero(c):
            continue
        term = r.const(c)
        for i, e in enumerate(exps):
            for _ in range(e):
                term = term * r.var(i)
        total = total + term
    return total


def _monomials(d: int, degree: int) -> list[tuple[int, ...]]:
    out = []

    def rec(prefix, left):
        if len(prefix) == d:
            out.append(tuple(prefix))
            return
        for e in range(left + 1):
            rec(prefix + [e], left - e)

    rec([], degree)
    return out


def random_tensor(r: Realization, rng, length: int, degree: int = 2) -> list[RPoly]:
    return [random_poly(r, rng, degree) for _ in range(length + 1)]
