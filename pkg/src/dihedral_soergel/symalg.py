"""Realizations, the symmetric algebra ``R = Sym(V)`` with its ``W``-action and
Demazure operators, and the localized ring with factored root denominators.

Polynomials (:class:`RPoly`) are sparse dicts from packed monomials to
coefficient payloads of the realization's ring.  Fractions (:class:`QElem`)
keep a polynomial numerator over a multiset of positive roots; they are never
reduced by gcd, only compared by cross-multiplication.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from typing import Any, Iterable, Mapping, Sequence

from .bipoly import BiPoly, _join_terms
from .dihedral import GroupElem, lift_r, project, reflection_of, root_coordinates, root_reflection_split
from .qnum import Color, specialize_payload, two_color_quantum
from .scalars import BivariateIntegers, CoefDescriptor, CoefElem, descriptor_from_json

_SHIFT = 16
_MASK = (1 << _SHIFT) - 1


class RealizationError(ValueError):
    """A realization config violates one or more invariants."""

    def __init__(self, violations: Sequence[str]):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


class DemazureCertificateRequired(ValueError):
    def __init__(self, msg: str = "demazure certificate required"):
        super().__init__(msg)


def _exps(key: int, d: int) -> list[int]:
    return [(key >> (_SHIFT * i)) & _MASK for i in range(d)]


def _var_key(i: int) -> int:
    return 1 << (_SHIFT * i)


class Realization:
    """A validated rank-2 realization.  Build with :func:`validate_realization`."""

    def __init__(self, *, name, m, coef, rank, alpha_s, alpha_t, covector_s, covector_t,
                 delta_s=None, delta_t=None):
        self.name = name
        self.m: int | None = m
        self.coef: CoefDescriptor = coef
        self.rank: int = rank
        self._alpha = {"s": tuple(alpha_s), "t": tuple(alpha_t)}
        self._covector = {"s": tuple(covector_s), "t": tuple(covector_t)}
        self._delta = {"s": None if delta_s is None else tuple(delta_s),
                       "t": None if delta_t is None else tuple(delta_t)}
        self.X = coef.neg(self.pairing("s", self._alpha["t"]))
        self.Y = coef.neg(self.pairing("t", self._alpha["s"]))
        self.demazure_certified = False
        self._lock = threading.Lock()
        self._images: dict[str, tuple[RPoly, ...]] = {}
        self._mono_images: dict[tuple[str, int], RPoly] = {}
        self._demazure: dict[tuple[str, int], RPoly] = {}
        self._roots: dict[GroupElem, tuple[int, RootFactor]] = {}
        self._root_by_vec: dict[tuple, RootFactor] = {}
        self._root_act: dict[tuple[str, RootFactor], tuple[int, RootFactor]] = {}
        self._den_products: dict[frozenset, RPoly] = {}
        self._pivots: dict[tuple, int] = {}

    # -- basic data ------------------------------------------------------

    @property
    def is_universal(self) -> bool:
        return self.m is None

    def alpha(self, u: str) -> tuple:
        return self._alpha[u]

    def covector(self, u: str) -> tuple:
        return self._covector[u]

    def delta(self, u: str) -> tuple | None:
        return self._delta[u]

    def pairing(self, u: str, v: Sequence) -> Any:
        """``<α_u^∨, v>``."""
        c = self.coef
        total = c.zero()
        for a, b in zip(self._covector[u], v):
            total = c.add(total, c.mul(a, b))
        return total

    def reflect_vector(self, u: str, v: Sequence) -> tuple:
        """``u(v) = v - <α_u^∨, v> α_u``."""
        c = self.coef
        k = self.pairing(u, v)
        return tuple(c.sub(x, c.mul(k, a)) for x, a in zip(v, self._alpha[u]))

    def act_vector(self, word: str, v: Sequence) -> tuple:
        for u in reversed(word):
            v = self.reflect_vector(u, v)
        return tuple(v)

    @property
    def var_names(self) -> tuple[str, ...]:
        if self.is_universal:
            return ("a_s", "a_t")
        return tuple(f"v{i + 1}" for i in range(self.rank))

    def coef_elem(self, payload) -> CoefElem:
        return CoefElem(self.coef, payload)

    def to_json(self) -> dict:
        enc = self.coef.encode
        out: dict[str, Any] = {"name": self.name, "m": "universal" if self.m is None else self.m,
                               "coef": self.coef.to_json(), "rank": self.rank}
        for u in "st":
            out[f"alpha_{u}"] = [enc(x) for x in self._alpha[u]]
        for u in "st":
            out[f"covector_{u}"] = [enc(x) for x in self._covector[u]]
        for u in "st":
            if self._delta[u] is not None:
                out[f"delta_{u}"] = [enc(x) for x in self._delta[u]]
        return out

    def __repr__(self) -> str:
        return f"Realization({self.name or 'unnamed'}, m={self.m if self.m else 'universal'})"

    # -- polynomial constructors -----------------------------------------

    def zero(self) -> RPoly:
        return RPoly(self, {})

    def one(self) -> RPoly:
        return self.const(self.coef.one())

    def const(self, c) -> RPoly:
        return RPoly(self, {} if self.coef.is_zero(c) else {0: c})

    def const_int(self, n: int) -> RPoly:
        return self.const(self.coef.from_int(n))

    def var(self, i: int) -> RPoly:
        return RPoly(self, {_var_key(i): self.coef.one()})

    def vector(self, v: Sequence) -> RPoly:
        """The linear polynomial attached to a vector of ``V``."""
        return RPoly(self, {_var_key(i): c for i, c in enumerate(v) if not self.coef.is_zero(c)})

    def simple_root(self, u: str) -> RPoly:
        return self.vector(self._alpha[u])

    # -- action ----------------------------------------------------------

    def _word_of(self, g: GroupElem | str) -> str:
        if isinstance(g, str):
            return g
        if g.m is not None and self.m is None:
            raise ValueError("finite group elements do not act on the universal realization")
        if g.m is not None and g.m != self.m:
            raise ValueError("group element belongs to a different finite group")
        return g.word

    def basis_images(self, word: str) -> tuple[RPoly, ...]:
        imgs = self._images.get(word)
        if imgs is None:
            d = self.rank
            imgs = []
            for j in range(d):
                e = [self.coef.zero()] * d
                e[j] = self.coef.one()
                imgs.append(self.vector(self.act_vector(word, e)))
            imgs = tuple(imgs)
            self._images[word] = imgs
        return imgs

    def _monomial_image(self, word: str, key: int) -> RPoly:
        cached = self._mono_images.get((word, key))
        if cached is not None:
            return cached
        exps = _exps(key, self.rank)
        # peel one variable off the highest nonzero slot and recurse on the rest
        j = max(i for i, e in enumerate(exps) if e)
        rest = key - _var_key(j)
        img = self.basis_images(word)[j]
        result = img if rest == 0 else self._monomial_image(word, rest) * img
        self._mono_images[(word, key)] = result
        return result

    def act(self, g: GroupElem | str, p: RPoly) -> RPoly:
        word = self._word_of(g)
        if not word:
            return p
        c = self.coef
        out: dict[int, Any] = {}
        for k, a in p.t.items():
            if k == 0:
                _acc(out, 0, a, c)
                continue
            for kk, b in self._monomial_image(word, k).t.items():
                _acc(out, kk, c.mul(a, b), c)
        return RPoly(self, out)

    # -- Demazure operators ------------------------------------------------

    def _demazure_monomial(self, u: str, key: int) -> RPoly:
        cached = self._demazure.get((u, key))
        if cached is not None:
            return cached
        exps = _exps(key, self.rank)
        factors = [j for j, e in enumerate(exps) for _ in range(e)]
        cov = self._covector[u]
        c = self.coef
        total: dict[int, Any] = {}
        prefix = self.one()  # u(L_1 ... L_{i-1})
        suffix = key
        images = self.basis_images(u)
        for j in factors:
            suffix -= _var_key(j)
            pair = cov[j]
            if not c.is_zero(pair):
                for kk, b in prefix.t.items():
                    _acc(total, kk + suffix, c.mul(b, pair), c)
            prefix = prefix * images[j]
        result = RPoly(self, total)
        self._demazure[(u, key)] = result
        return result

    def demazure(self, u: str, p: RPoly) -> RPoly:
        """``∂_u(p)`` by the twisted Leibniz rule (no division)."""
        c = self.coef
        out: dict[int, Any] = {}
        for k, a in p.t.items():
            if k == 0:
                continue
            for kk, b in self._demazure_monomial(u, k).t.items():
                _acc(out, kk, c.mul(a, b), c)
        return RPoly(self, out)

    # -- roots -------------------------------------------------------------

    def root(self, refl: GroupElem) -> tuple[int, RootFactor]:
        """``(sign, factor)`` with the specialized positive root of ``refl``
        equal to ``sign * factor``."""
        hit = self._roots.get(refl)
        if hit is not None:
            return hit
        with self._lock:
            hit = self._compute_root(refl)
            self._roots[refl] = hit
        return hit

    def _raw_root_vector(self, refl: GroupElem) -> tuple:
        a, b = root_coordinates(refl)
        c = self.coef
        pa = specialize_payload(a, c, self.X, self.Y)
        pb = specialize_payload(b, c, self.X, self.Y)
        return tuple(c.add(c.mul(pa, x), c.mul(pb, y)) for x, y in zip(self._alpha["s"], self._alpha["t"]))

    def _compute_root(self, refl: GroupElem) -> tuple[int, RootFactor]:
        vec = self._raw_root_vector(refl)
        c = self.coef
        if all(c.is_zero(x) for x in vec):
            raise RealizationError([f"root of {refl} vanishes"])
        if self.is_universal:
            return 1, RootFactor(refl, vec)
        sign = 1
        lead = next(x for x in vec if not c.is_zero(x))
        if not c.is_preferred_sign(lead):
            sign, vec = -1, tuple(c.neg(x) for x in vec)
        rf = self._root_by_vec.get(vec)
        if rf is None:
            rep = lift_r(project(refl, self.m))
            if rep != refl and rep.length % 2 == 1 and self._normalized(self._raw_root_vector(rep)) == vec:
                refl = rep
            rf = RootFactor(refl, vec)
            self._root_by_vec[vec] = rf
        return sign, rf

    def _normalized(self, vec: tuple) -> tuple:
        c = self.coef
        lead = next(x for x in vec if not c.is_zero(x))
        return vec if c.is_preferred_sign(lead) else tuple(c.neg(x) for x in vec)

    def simple_image(self, x: GroupElem, u: str) -> tuple[int, RootFactor]:
        """``x(α_u)`` as ``(sign, root factor)`` for universal ``x``."""
        sign = 1 if x.right_longer(u) else -1
        s2, rf = self.root(reflection_of(x, u))
        return sign * s2, rf

    def act_root(self, g: GroupElem | str, rf: RootFactor) -> tuple[int, RootFactor]:
        """``g(γ)`` for the factor ``γ`` as ``(sign, factor)``."""
        word = self._word_of(g)
        if not word:
            return 1, rf
        key = (word, rf)
        hit = self._root_act.get(key)
        if hit is not None:
            return hit
        s0, _ = self.root(rf.reflection)  # raw root of the representative = s0 * rf
        x, u = root_reflection_split(rf.reflection)
        gx = GroupElem.from_word(word) * x
        s1, rf2 = self.simple_image(gx, u)
        hit = (s0 * s1, rf2)
        self._root_act[key] = hit
        return hit

    def root_poly(self, rf: RootFactor) -> RPoly:
        return self.vector(rf.vector)

    def den_product(self, den: Mapping[RootFactor, int]) -> RPoly:
        key = frozenset(den.items())
        hit = self._den_products.get(key)
        if hit is not None:
            return hit
        result = self.one()
        for rf, k in sorted(den.items(), key=lambda item: item[0].sort_key()):
            lin = self.root_poly(rf)
            for _ in range(k):
                result = result * lin
        self._den_products[key] = result
        return result

    # -- exact division by a linear form -----------------------------------

    def _pivot(self, vec: tuple) -> int:
        p = self._pivots.get(vec)
        if p is None:
            c = self.coef
            nonzero = [i for i, x in enumerate(vec) if not c.is_zero(x)]
            units = [i for i in nonzero if c.exact_div(c.one(), vec[i]) is not None]
            p = (units or nonzero)[0]
            self._pivots[vec] = p
        return p

    def divide_linear(self, p: RPoly, vec: Sequence) -> RPoly | None:
        """``p / ℓ`` for the linear form of ``vec``, or ``None`` when it is not in ``R``."""
        vec = tuple(vec)
        c = self.coef
        j = self._pivot(vec)
        shift = _SHIFT * j
        others = [(_var_key(i), x) for i, x in enumerate(vec) if i != j and not c.is_zero(x)]
        rem = dict(p.t)
        quot: dict[int, Any] = {}
        levels: dict[int, list[int]] = {}
        for k in rem:
            levels.setdefault((k >> shift) & _MASK, []).append(k)
        pivot_key = _var_key(j)
        # eliminate the pivot variable level by level from the top degree
        # down; each step only feeds the level below
        for level in range(max(levels, default=0), 0, -1):
            for k in levels.get(level, ()):
                a = rem.pop(k, None)
                if a is None:
                    continue
                qc = c.exact_div(a, vec[j])
                if qc is None:
                    return None
                qk = k - pivot_key
                quot[qk] = qc
                for vk, x in others:
                    nk = qk + vk
                    if nk not in rem:
                        levels.setdefault(level - 1, []).append(nk)
                    _acc(rem, nk, c.neg(c.mul(qc, x)), c)
        if rem:
            return None
        return RPoly(self, quot)


def _acc(d: dict, k: int, v, c: CoefDescriptor) -> None:
    if k in d:
        v = c.add(d[k], v)
        if c.is_zero(v):
            del d[k]
        else:
            d[k] = v
    elif not c.is_zero(v):
        d[k] = v


class RPoly:
    """An element of ``R = Sym(V)``."""

    __slots__ = ("r", "t", "_hash")

    def __init__(self, r: Realization, terms: dict[int, Any]):
        self.r = r
        self.t = terms
        self._hash = None

    def _coerce(self, other) -> RPoly:
        if isinstance(other, RPoly):
            if other.r is not self.r:
                raise ValueError("realization mismatch")
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return self.r.const_int(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.t)
        c = self.r.coef
        for k, v in other.t.items():
            _acc(out, k, v, c)
        return RPoly(self.r, out)

    __radd__ = __add__

    def __neg__(self):
        c = self.r.coef
        return RPoly(self.r, {k: c.neg(v) for k, v in self.t.items()})

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
        c = self.r.coef
        a, b = self.t, other.t
        if len(a) < len(b):
            a, b = b, a
        out: dict[int, Any] = {}
        for kb, vb in b.items():
            for ka, va in a.items():
                _acc(out, ka + kb, c.mul(va, vb), c)
        return RPoly(self.r, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> RPoly:
        result = self.r.one()
        for _ in range(n):
            result = result * self
        return result

    def scale(self, a) -> RPoly:
        """Multiply by a coefficient payload."""
        c = self.r.coef
        if c.is_zero(a):
            return self.r.zero()
        return RPoly(self.r, {k: c.mul(v, a) for k, v in self.t.items() if not c.is_zero(c.mul(v, a))})

    def is_zero(self) -> bool:
        return not self.t

    def __bool__(self) -> bool:
        return bool(self.t)

    def degree(self) -> int:
        if not self.t:
            return -1
        return max(sum(_exps(k, self.r.rank)) for k in self.t)

    def __eq__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            other = self.r.const_int(other)
        if not isinstance(other, RPoly):
            return NotImplemented
        return self.r is other.r and self.t == other.t

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset((k, _hashable(v)) for k, v in self.t.items()))
        return self._hash

    def act(self, g) -> RPoly:
        return self.r.act(g, self)

    def terms(self) -> list[tuple[tuple[int, ...], Any]]:
        """``(exponents, payload)`` pairs in degree-lex descending order."""
        d = self.r.rank
        items = [(_exps(k, d), v) for k, v in self.t.items()]
        items.sort(key=lambda it: (sum(it[0]), it[0]), reverse=True)
        return [(tuple(e), v) for e, v in items]

    def render(self) -> str:
        if not self.t:
            return "0"
        r = self.r
        names = r.var_names
        parts = []
        for exps, v in self.terms():
            coeff = v if isinstance(v, int) else _int_or_text(r.coef.render(v))
            factors = [n if e == 1 else f"{n}^{e}" for n, e in zip(names, exps) if e]
            parts.append((coeff, "*".join(factors)))
        return _join_terms(parts)

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"RPoly({self.render()!r})"

    def to_json(self) -> list:
        """Sparse term list ``[[exponents...], coefficient]``."""
        enc = self.r.coef.encode
        return [[list(e), enc(v)] for e, v in self.terms()]

    @classmethod
    def from_json(cls, r: Realization, obj: list) -> RPoly:
        out: dict[int, Any] = {}
        for exps, v in obj:
            if len(exps) != r.rank:
                raise ValueError("exponent vector has the wrong length")
            key = sum(e << (_SHIFT * i) for i, e in enumerate(exps))
            _acc(out, key, r.coef.decode(v), r.coef)
        return RPoly(r, out)


def _int_or_text(text: str):
    try:
        return int(text)
    except ValueError:
        return text


def _hashable(v):
    return tuple(v) if isinstance(v, list) else v


@dataclass(frozen=True)
class RootFactor:
    """A positive root used as a denominator factor; identified by its vector."""

    reflection: GroupElem = field(compare=False)
    vector: tuple

    def sort_key(self) -> tuple:
        return (self.reflection.length, self.reflection.word, repr(self.vector))

    def __str__(self) -> str:
        return self.reflection.word


def _sub_multiset(a: Mapping, b: Mapping) -> dict:
    out = {}
    for k, n in a.items():
        n -= b.get(k, 0)
        if n > 0:
            out[k] = n
    return out


class QElem:
    """``numerator / prod(denominator)`` in the fraction field of ``R``.

    Equality is semantic; instances are therefore unhashable.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: RPoly, den: Mapping[RootFactor, int] | None = None):
        self.num = num
        self.den: dict[RootFactor, int] = {} if (den is None or not num.t) else {k: v for k, v in den.items() if v}

    @property
    def r(self) -> Realization:
        return self.num.r

    @classmethod
    def over_roots(cls, num: RPoly, roots: Iterable[tuple[int, RootFactor]]) -> QElem:
        """``num / prod(sign * factor)``."""
        den: dict[RootFactor, int] = {}
        sign = 1
        for s, rf in roots:
            sign *= s
            den[rf] = den.get(rf, 0) + 1
        return cls(num if sign == 1 else -num, den)

    @classmethod
    def lift(cls, x, r: Realization | None = None) -> QElem:
        if isinstance(x, QElem):
            return x
        if isinstance(x, RPoly):
            return cls(x)
        if isinstance(x, int) and r is not None:
            return cls(r.const_int(x))
        raise TypeError(f"cannot use {x!r} as a fraction")

    def _other(self, other) -> QElem:
        if isinstance(other, (QElem, RPoly)) or (isinstance(other, int) and not isinstance(other, bool)):
            o = QElem.lift(other, self.r)
            if o.r is not self.r:
                raise ValueError("realization mismatch")
            return o
        return NotImplemented

    def __add__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        if not other.num.t:
            return self
        if not self.num.t:
            return other
        lcm = dict(self.den)
        for k, n in other.den.items():
            if n > lcm.get(k, 0):
                lcm[k] = n
        r = self.r
        num = self.num * r.den_product(_sub_multiset(lcm, self.den)) + other.num * r.den_product(
            _sub_multiset(lcm, other.den)
        )
        return QElem(num, lcm)

    __radd__ = __add__

    def __neg__(self):
        return QElem(-self.num, self.den)

    def __sub__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        den = dict(self.den)
        for k, n in other.den.items():
            den[k] = den.get(k, 0) + n
        return QElem(self.num * other.num, den)

    __rmul__ = __mul__

    def divide_by_root(self, sign: int, rf: RootFactor) -> QElem:
        den = dict(self.den)
        den[rf] = den.get(rf, 0) + 1
        return QElem(self.num if sign == 1 else -self.num, den)

    def is_zero(self) -> bool:
        return not self.num.t

    def act(self, g: GroupElem | str) -> QElem:
        r = self.r
        num = r.act(g, self.num)
        den: dict[RootFactor, int] = {}
        sign = 1
        for rf, k in self.den.items():
            s, rf2 = r.act_root(g, rf)
            if s == -1 and k % 2:
                sign = -sign
            den[rf2] = den.get(rf2, 0) + k
        return QElem(num if sign == 1 else -num, den)

    def __eq__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return q_equal(self, other)

    __hash__ = None  # type: ignore[assignment]

    def cancel(self) -> QElem:
        """Divide out every denominator factor that divides the numerator."""
        r = self.r
        num = self.num
        den = {}
        for rf in sorted(self.den, key=RootFactor.sort_key):
            k = self.den[rf]
            while k:
                q = r.divide_linear(num, rf.vector)
                if q is None:
                    break
                num, k = q, k - 1
            if k:
                den[rf] = k
        return QElem(num, den)

    def denominator_roots(self) -> list[RootFactor]:
        out = []
        for rf in sorted(self.den, key=RootFactor.sort_key):
            out += [rf] * self.den[rf]
        return out

    def render(self) -> str:
        roots = self.denominator_roots()
        if not roots:
            return self.num.render()
        names = self.r.var_names
        dens = []
        for rf in roots:
            text = self.r.root_poly(rf).render()
            dens.append(text if text in names else f"({text})")
        return f"({self.num.render()})/({'*'.join(dens)})"

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"QElem({self.render()!r})"


# -- module-level operations ---------------------------------------------------


def act(g: GroupElem | str, p: RPoly) -> RPoly:
    """Apply ``g`` (a group element or a letter word) to ``p``."""
    return p.r.act(g, p)


def demazure(u: str, p: RPoly) -> RPoly:
    return p.r.demazure(u, p)


def q_arith(op: str, a: QElem, b: QElem | None = None) -> QElem:
    if op == "neg":
        return -a
    if b is None:
        raise ValueError(f"{op} needs two operands")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


def q_equal(a: QElem, b: QElem) -> bool:
    """Cross-multiply after cancelling common denominator factors."""
    if a.r is not b.r:
        raise ValueError("realization mismatch")
    r = a.r
    if not a.num.t or not b.num.t:
        return not a.num.t and not b.num.t
    lhs = a.num * r.den_product(_sub_multiset(b.den, a.den))
    rhs = b.num * r.den_product(_sub_multiset(a.den, b.den))
    return lhs == rhs


def is_polynomial(a: QElem) -> RPoly | None:
    """The polynomial equal to ``a``, or ``None`` if ``a`` is not in ``R``."""
    r = a.r
    num = a.num
    for rf, k in a.den.items():
        for _ in range(k):
            if not num.t:
                return num
            num = r.divide_linear(num, rf.vector)
            if num is None:
                return None
    return num


# -- validation ------------------------------------------------------------------


def _universal(name: str | None) -> Realization:
    c = BivariateIntegers()
    one, zero = BiPoly.const(1), BiPoly.const(0)
    r = Realization(
        name=name or "universal", m=None, coef=c, rank=2,
        alpha_s=(one, zero), alpha_t=(zero, one),
        covector_s=(BiPoly.const(2), -BiPoly.X), covector_t=(-BiPoly.Y, BiPoly.const(2)),
    )
    return r


def validate_realization(config: Mapping[str, Any]) -> Realization:
    """Check a realization config (JSON-shaped dict) and build the realization."""
    if not isinstance(config, Mapping):
        raise RealizationError(["config must be a mapping"])
    name = config.get("name")
    m = config.get("m")
    if m == "universal":
        coef = config.get("coef")
        if coef is not None and descriptor_from_json(coef).kind != "bivariate_integers":
            raise RealizationError(["universal realization requires bivariate_integers"])
        return _universal(name)
    if isinstance(m, bool) or not isinstance(m, int) or m < 2:
        raise RealizationError([f"m must be 'universal' or an integer >= 2, got {m!r}"])
    try:
        coef = descriptor_from_json(config["coef"])
        rank = int(config["rank"])
        vecs = {}
        for key in ("alpha_s", "alpha_t", "covector_s", "covector_t", "delta_s", "delta_t"):
            raw = config.get(key)
            if raw is None:
                if key.startswith("delta"):
                    vecs[key] = None
                    continue
                raise RealizationError([f"missing field {key}"])
            if len(raw) != rank:
                raise RealizationError([f"{key} has length {len(raw)}, expected rank {rank}"])
            vecs[key] = tuple(coef.decode(x) for x in raw)
    except KeyError as exc:
        raise RealizationError([f"missing field {exc.args[0]}"]) from None
    except (TypeError, ValueError) as exc:
        if isinstance(exc, RealizationError):
            raise
        raise RealizationError([f"malformed config: {exc}"]) from None

    r = Realization(name=name, m=m, coef=coef, rank=rank, **vecs)
    c = coef
    violations = []
    for u in "st":
        if all(c.is_zero(x) for x in r.alpha(u)):
            violations.append(f"alpha zero: alpha_{u} = 0")
        val = r.pairing(u, r.alpha(u))
        if val != c.from_int(2):
            violations.append(f"pairing not 2: <covector_{u}, alpha_{u}> = {c.render(val)}")
    for color in Color:
        val = specialize_payload(two_color_quantum(m, color), c, r.X, r.Y)
        if not c.is_zero(val):
            violations.append(f"quantum m not zero: [{m}]_{color.value} = {c.render(val)}")
    for u in "st":
        d = r.delta(u)
        if d is not None:
            val = r.pairing(u, d)
            if val != c.one():
                violations.append(f"delta pairing not 1: <covector_{u}, delta_{u}> = {c.render(val)}")
    if violations:
        raise RealizationError(violations)
    r.demazure_certified = r.delta("s") is not None and r.delta("t") is not None
    return r


def require_certificate(r: Realization) -> None:
    if not r.demazure_certified:
        raise DemazureCertificateRequired()
