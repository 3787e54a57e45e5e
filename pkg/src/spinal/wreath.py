"""Tree automorphisms given by wreath recursions over X = {0, ..., p-1}.

Elements are words in the generators of a self-similar group. A word is a
tuple of :class:`Letter` (generator base plus exponent mod p); the empty
tuple is the identity.

Products act left to right: in ``g*h`` the automorphism ``g`` acts first, so
``(gh)|_x = g|_x h|_{g(x)}`` and ``apply(g*h, v) == apply(h, apply(g, v))``.
"""

from __future__ import annotations

import os
from collections.abc import Iterable, Mapping, Sequence
from itertools import product
from typing import NamedTuple, Optional

from .errors import DepthBoundExceeded, UnknownGenerator

A = (0, 0)
DEFAULT_MAX_MEMO = 10**6

Base = tuple[int, int]
Perm = tuple[int, ...]


class Letter(NamedTuple):
    """``a^exp`` when ``l == 0``, otherwise ``b(l,i)^exp``."""

    l: int
    i: int
    exp: int

    @property
    def base(self) -> Base:
        return (self.l, self.i)

    @property
    def is_rooted(self) -> bool:
        return self.l == 0


Word = tuple[Letter, ...]
IDENTITY: Word = ()


def letter(base: Base, exp: int = 1) -> Letter:
    return Letter(base[0], base[1], exp)


def gen(base: Base, exp: int = 1) -> Word:
    return (Letter(base[0], base[1], exp),)


# -- permutations ----------------------------------------------------------

def identity_perm(p: int) -> Perm:
    return tuple(range(p))


def shift_perm(p: int, k: int = 1) -> Perm:
    """Power of the long cycle x -> x+1."""
    return tuple((x + k) % p for x in range(p))


def compose(s: Perm, t: Perm) -> Perm:
    """``s`` first, then ``t``."""
    return tuple(t[y] for y in s)


def perm_inverse(s: Perm) -> Perm:
    inv = [0] * len(s)
    for x, y in enumerate(s):
        inv[y] = x
    return tuple(inv)


def is_perm(s: Sequence[int], p: int) -> bool:
    return len(s) == p and sorted(s) == list(range(p))


# -- free word operations ---------------------------------------------------

def reduce(w: Iterable[Letter], p: int) -> Word:
    """Merge adjacent letters with the same base, exponents mod p."""
    out: list[Letter] = []
    for x in w:
        if out and out[-1].l == x.l and out[-1].i == x.i:
            e = (out.pop().exp + x.exp) % p
        else:
            e = x.exp % p
        if e:
            out.append(Letter(x.l, x.i, e))
    return tuple(out)


def is_reduced(w: Sequence[Letter], p: int) -> bool:
    return all(0 < x.exp < p for x in w) and all(
        u.base != v.base for u, v in zip(w, w[1:]))


def invert(w: Sequence[Letter], p: int) -> Word:
    return reduce((Letter(x.l, x.i, -x.exp) for x in reversed(w)), p)


def multiply(u: Sequence[Letter], v: Sequence[Letter], p: int) -> Word:
    return reduce((*u, *v), p)


def power(w: Sequence[Letter], n: int, p: int) -> Word:
    if n < 0:
        return power(invert(w, p), -n, p)
    return reduce(tuple(w) * n, p)


def word_key(w: Word) -> tuple:
    """Sort key for canonical representatives: shorter first, then lexicographic."""
    return (len(w), w)


def max_memo_from_env() -> int:
    raw = os.environ.get("SPINAL_MAX_MEMO")
    return int(raw) if raw else DEFAULT_MAX_MEMO


# -- wreath tables -----------------------------------------------------------

class WreathTable:
    """First-level decomposition ``g = (g|_0, ..., g|_{p-1}) sigma_g`` of each generator.

    ``recursion`` maps a base to ``(root_perm, sections)`` for the exponent-1
    letter; the sections of higher powers are derived from it. Every generator
    is assumed to have order dividing ``p`` (exponents are stored mod p).
    """

    _CACHE_LIMIT = 500_000

    def __init__(self, p: int, recursion: Mapping[Base, tuple[Sequence[int], Sequence[Sequence[Letter]]]]):
        self.p = p
        self.bases: tuple[Base, ...] = tuple(recursion)
        self.recursion: dict[Base, tuple[Perm, tuple[Word, ...]]] = {}
        known = set(self.bases)
        for base, (perm, secs) in recursion.items():
            if not is_perm(perm, p):
                raise ValueError(f"root permutation of {base} is not a permutation of X")
            if len(secs) != p:
                raise ValueError(f"generator {base} needs {p} sections, got {len(secs)}")
            words = tuple(reduce(s, p) for s in secs)
            for s in words:
                for x in s:
                    if x.base not in known:
                        raise UnknownGenerator(f"section of {base} uses unknown generator {x.base}")
            self.recursion[base] = (tuple(perm), words)

        self._letters: dict[Letter, tuple[Perm, tuple[Word, ...]]] = {}
        for base, (perm, secs) in self.recursion.items():
            cur_perm, cur_secs = perm, secs
            self._letters[letter(base, 1)] = (cur_perm, cur_secs)
            for e in range(2, p):
                cur_secs = tuple(reduce((*cur_secs[x], *secs[cur_perm[x]]), p) for x in range(p))
                cur_perm = compose(cur_perm, perm)
                self._letters[letter(base, e)] = (cur_perm, cur_secs)
        self._split_cache: dict[tuple[Word, int], tuple[Word, int]] = {}

    def __repr__(self):
        return f"WreathTable(p={self.p}, bases={list(self.bases)})"

    def generators(self) -> list[Word]:
        return [gen(b) for b in self.bases]

    def validate(self, w: Iterable[Letter]) -> None:
        for x in w:
            if x.base not in self.recursion:
                raise UnknownGenerator(f"generator {x.base} is not in the table")

    def letter_data(self, x: Letter) -> tuple[Perm, tuple[Word, ...]]:
        try:
            return self._letters[x]
        except KeyError:
            if x.base not in self.recursion:
                raise UnknownGenerator(f"generator {x.base} is not in the table") from None
            e = x.exp % self.p
            if e == 0:
                return identity_perm(self.p), (IDENTITY,) * self.p
            return self._letters[Letter(x.l, x.i, e)]

    def root_perm(self, w: Sequence[Letter]) -> Perm:
        s = identity_perm(self.p)
        for x in w:
            s = compose(s, self.letter_data(x)[0])
        return s

    def split(self, w: Word, x: int) -> tuple[Word, int]:
        """Return ``(w|_x, w(x))``."""
        key = (w, x)
        hit = self._split_cache.get(key)
        if hit is not None:
            return hit
        cur = x
        out: list[Letter] = []
        for y in w:
            perm, secs = self.letter_data(y)
            out.extend(secs[cur])
            cur = perm[cur]
        res = (reduce(out, self.p), cur)
        if len(self._split_cache) >= self._CACHE_LIMIT:
            self._split_cache.clear()
        self._split_cache[key] = res
        return res

    def section(self, w: Word, x: int) -> Word:
        return self.split(tuple(w), x)[0]

    def sections(self, w: Word) -> tuple[Word, ...]:
        w = tuple(w)
        return tuple(self.split(w, x)[0] for x in range(self.p))

    def section_at(self, w: Word, v: Iterable[int]) -> Word:
        w = tuple(w)
        for x in v:
            w = self.split(w, x)[0]
        return w

    def apply(self, w: Word, v: Iterable[int]) -> tuple[int, ...]:
        w = tuple(w)
        out = []
        for x in v:
            w, y = self.split(w, x)
            out.append(y)
        return tuple(out)

    def is_trivial(self, w: Word, max_memo: Optional[int] = None) -> bool:
        """Decide whether ``w`` fixes every vertex of the tree.

        Explores the finite set of distinct sections of ``w``; the element is
        trivial iff none of them moves a first-level vertex.
        """
        bound = max_memo_from_env() if max_memo is None else max_memo
        w = reduce(w, self.p)
        ident = identity_perm(self.p)
        seen = {w}
        stack = [w]
        while stack:
            u = stack.pop()
            if not u:
                continue
            if self.root_perm(u) != ident:
                return False
            for x in range(self.p):
                s = self.split(u, x)[0]
                if s not in seen:
                    seen.add(s)
                    if len(seen) > bound:
                        raise DepthBoundExceeded(
                            f"more than {bound} distinct sections explored")
                    stack.append(s)
        return True

    def are_equal(self, u: Word, v: Word, max_memo: Optional[int] = None) -> bool:
        u, v = reduce(u, self.p), reduce(v, self.p)
        if u == v:
            return True
        if self.root_perm(u) != self.root_perm(v):
            return False
        return self.is_trivial(multiply(u, invert(v, self.p), self.p), max_memo)

    def order_of(self, w: Word, max_order: int) -> Optional[int]:
        """Least ``n <= max_order`` with ``w^n`` trivial, or None if unknown."""
        cur = IDENTITY
        w = reduce(w, self.p)
        for n in range(1, max_order + 1):
            cur = multiply(cur, w, self.p)
            if self.is_trivial(cur):
                return n
        return None

    def fingerprint(self, w: Word, depth: int = 2) -> tuple:
        """Root permutations of all sections at levels below ``depth``.

        Equal elements have equal fingerprints.
        """
        level = [reduce(w, self.p)]
        out = []
        for _ in range(depth):
            nxt = []
            for u in level:
                out.append(self.root_perm(u))
                nxt.extend(self.split(u, x)[0] for x in range(self.p))
            level = nxt
        return tuple(out)

    def level_action(self, w: Word, n: int) -> tuple[tuple[int, ...], ...]:
        """Images of all vertices of level ``n`` in lexicographic order."""
        return tuple(self.apply(w, v) for v in product(range(self.p), repeat=n))
