"""Rank-2 Coxeter groups: the universal (infinite dihedral) group and its finite
quotients of order ``2m``.

Every element is an alternating word, so it is stored as ``(first letter,
length)``.  Words are plain strings over ``"st"`` and bit vectors are tuples of
0/1 (``"0101"`` strings are accepted wherever a bit vector is expected).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterable, Iterator, Sequence

from .bipoly import BiPoly
from .qnum import Color, two_color_quantum

LETTERS = ("s", "t")

BitVector = tuple[int, ...]


def other(u: str) -> str:
    return "t" if u == "s" else "s"


def parse_word(text: str | Iterable[str]) -> str:
    """Validate a letter word; ``"e"`` and ``""`` both denote the empty word."""
    word = "".join(text)
    if word == "e":
        return ""
    for ch in word:
        if ch not in LETTERS:
            raise ValueError(f"bad letter {ch!r} in word {word!r}")
    return word


def parse_bits(bits: str | Sequence[int]) -> BitVector:
    out = tuple(int(b) for b in bits)
    if any(b not in (0, 1) for b in out):
        raise ValueError(f"bad bit vector {bits!r}")
    return out


def bits_str(e: BitVector) -> str:
    return "".join(map(str, e))


def bit_vectors(n: int) -> Iterator[BitVector]:
    """All vectors of length ``n`` in index order (``e_1`` most significant)."""
    return product((0, 1), repeat=n)


def is_reduced_word(word: str) -> bool:
    return all(a != b for a, b in zip(word, word[1:]))


@dataclass(frozen=True)
class GroupElem:
    """An element of the universal group (``m is None``) or of ``W(m)``."""

    m: int | None
    first: str | None
    length: int

    def __post_init__(self):
        if self.m is not None and self.m < 2:
            raise ValueError("finite dihedral groups need m >= 2")
        if self.length == 0:
            if self.first is not None:
                raise ValueError("identity has no first letter")
            return
        if self.first not in LETTERS or self.length < 0:
            raise ValueError(f"bad group element ({self.first!r}, {self.length})")
        if self.m is not None:
            if self.length > self.m:
                raise ValueError(f"length {self.length} exceeds m={self.m}")
            if self.length == self.m and self.first != "s":
                object.__setattr__(self, "first", "s")

    # -- constructors ----------------------------------------------------

    @classmethod
    def identity(cls, m: int | None = None) -> GroupElem:
        return cls(m, None, 0)

    @classmethod
    def letter(cls, u: str, m: int | None = None) -> GroupElem:
        return cls(m, u, 1)

    @classmethod
    def from_word(cls, word: str | Iterable[str], m: int | None = None) -> GroupElem:
        g = cls.identity(m)
        for u in parse_word(word):
            g = g.mul_letter(u)
        return g

    @classmethod
    def longest(cls, m: int) -> GroupElem:
        return cls(m, "s", m)

    # -- structure -------------------------------------------------------

    @property
    def is_universal(self) -> bool:
        return self.m is None

    @property
    def is_identity(self) -> bool:
        return self.length == 0

    @property
    def is_longest(self) -> bool:
        return self.m is not None and self.length == self.m

    @property
    def word(self) -> str:
        """The canonical reduced word."""
        if not self.length:
            return ""
        return "".join(self.first if i % 2 == 0 else other(self.first) for i in range(self.length))

    @property
    def last(self) -> str | None:
        if not self.length:
            return None
        return self.first if self.length % 2 else other(self.first)

    def left_longer(self, u: str) -> bool:
        """``u·g > g``."""
        if self.is_longest:
            return False
        return self.length == 0 or self.first != u

    def right_longer(self, u: str) -> bool:
        """``g·u > g``."""
        if self.is_longest:
            return False
        return self.length == 0 or self.last != u

    def mul_letter(self, u: str) -> GroupElem:
        """``g·u``."""
        m = self.m
        if self.length == 0:
            return GroupElem(m, u, 1)
        if self.is_longest:
            # choose the reduced word that ends in u and drop it
            first = u if m % 2 else other(u)
            return GroupElem(m, first, m - 1)
        if self.last == u:
            n = self.length - 1
            return GroupElem(m, self.first if n else None, n)
        return GroupElem(m, self.first, self.length + 1)

    def letter_mul(self, u: str) -> GroupElem:
        """``u·g``."""
        return self.inverse().mul_letter(u).inverse()

    def inverse(self) -> GroupElem:
        if self.length == 0 or self.is_longest:
            return self
        return GroupElem(self.m, self.last, self.length)

    def __mul__(self, other_elem: GroupElem) -> GroupElem:
        return multiply(self, other_elem)

    def __str__(self) -> str:
        return self.word or "e"

    def __repr__(self) -> str:
        tag = "universal" if self.m is None else f"W({self.m})"
        return f"GroupElem({self}, {tag})"

    def sort_key(self) -> tuple[int, str]:
        return (self.length, self.word)


def _check_same_group(a: GroupElem, b: GroupElem) -> None:
    if a.m != b.m:
        raise ValueError("group mismatch")


def multiply(a: GroupElem, b: GroupElem) -> GroupElem:
    """Canonical product ``a·b``."""
    _check_same_group(a, b)
    return _multiply(a, b)


@lru_cache(maxsize=1 << 16)
def _multiply(a: GroupElem, b: GroupElem) -> GroupElem:
    g = a
    for u in b.word:
        g = g.mul_letter(u)
    return g


def evaluate_word(w: str, e: Sequence[int] | str, m: int | None = None) -> GroupElem:
    """``w^e``, the product of the letters selected by ``e``."""
    e = parse_bits(e)
    if len(e) != len(w):
        raise ValueError("length mismatch between word and bit vector")
    g = GroupElem.identity(m)
    for u, bit in zip(w, e):
        if bit:
            g = g.mul_letter(u)
    return g


def bruhat_leq(g: GroupElem, w: GroupElem) -> bool:
    """Rank-2 Bruhat order: ``g == w`` or ``ℓ(g) < ℓ(w)``."""
    _check_same_group(g, w)
    return g == w or g.length < w.length


def reflections_up_to(L: int) -> list[GroupElem]:
    """Universal reflections (odd-length elements) of length at most ``L``."""
    return [GroupElem(None, u, n) for n in range(1, L + 1, 2) for u in LETTERS]


@lru_cache(maxsize=None)
def root_coordinates(refl: GroupElem) -> tuple[BiPoly, BiPoly]:
    """Coordinates ``(a, b)`` of the positive root ``a α_s + b α_t`` whose
    reflection is ``refl`` (universal, odd length)."""
    if refl.m is not None:
        raise ValueError("root coordinates are defined for universal reflections")
    n = refl.length
    if n % 2 == 0:
        raise ValueError(f"{refl} has even length and is not a reflection")
    lo, hi = (n - 1) // 2, (n + 1) // 2
    if refl.left_longer("s"):
        return two_color_quantum(lo, Color.X), two_color_quantum(hi, Color.Y)
    return two_color_quantum(hi, Color.X), two_color_quantum(lo, Color.Y)


def reflection_of(x: GroupElem, u: str) -> GroupElem:
    """The reflection ``x u x^{-1}``."""
    return x * GroupElem.letter(u, x.m) * x.inverse()


def root_reflection_split(refl: GroupElem) -> tuple[GroupElem, str]:
    """Write an odd-length reflection as ``x u x^{-1}`` with ``x u > x``."""
    word = refl.word
    half = len(word) // 2
    return GroupElem.from_word(word[:half], refl.m), word[half]


def project(g: GroupElem, m: int) -> GroupElem:
    """Image of a universal element in ``W(m)``."""
    return GroupElem.from_word(g.word, m)


def lift_r(g: GroupElem) -> GroupElem:
    """The section ``r``: same reduced word below the longest element, and the
    alternating word starting with ``s`` for the longest element."""
    if g.m is None:
        raise ValueError("lift_r expects a finite-group element")
    # the canonical longest element already starts with s
    return GroupElem(None, g.first, g.length)


def subsequence(w: str, c: Sequence[int] | str) -> str:
    """``w^{(c)}``: keep the letters where ``c_i = 1``."""
    c = parse_bits(c)
    if len(c) != len(w):
        raise ValueError("length mismatch between word and bit vector")
    return "".join(u for u, bit in zip(w, c) if bit)


def elements(m: int) -> list[GroupElem]:
    """All ``2m`` elements of ``W(m)``."""
    out = [GroupElem.identity(m)]
    for n in range(1, m):
        out += [GroupElem(m, "s", n), GroupElem(m, "t", n)]
    out.append(GroupElem.longest(m))
    return out


def universal_elements(max_len: int) -> list[GroupElem]:
    out = [GroupElem.identity()]
    for n in range(1, max_len + 1):
        out += [GroupElem(None, "s", n), GroupElem(None, "t", n)]
    return out


def alternating_word(first: str, n: int) -> str:
    return GroupElem(None, first, n).word if n else ""
