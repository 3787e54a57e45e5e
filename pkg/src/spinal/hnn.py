"""Action of the ascending HNN extension ``<G, t | t g t^-1 = sigma(g)>`` on the
unrooted (p+1)-regular tree.

The tree is the increasing union of copies ``T_0 ⊂ T_1 ⊂ ...`` of the rooted
p-ary tree, where copy ``k-1`` sits in copy ``k`` as the subtree at vertex 0.
A vertex is a pair ``(k, w)`` with ``(k, 0u) ≡ (k-1, u)``; the canonical form
has ``k == 0`` or ``w`` not starting with 0. The distinguished end is the ray
``(k, "")`` with ``k -> ∞``.

Letters act left to right, as in :mod:`spinal.wreath`:

* ``g`` sends ``(k, w)`` to ``(k, sigma^k(g)(w))``;
* ``t`` sends ``(k, w)`` to ``(k+1, w)``;
* ``t^-1`` sends ``(k, w)`` to ``(k-1, w)``, after rewriting ``(0, w)`` as ``(1, 0w)``.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from itertools import product
from typing import NamedTuple, Optional, Union

from .errors import IterationBoundExceeded
from .families import Endomorphism, apply_sigma
from .notation import format_vertex
from .wreath import Base, Letter, WreathTable, Word, gen, power

T_LETTER = "t"
T_INV = "t^-1"

HnnLetter = Union[Letter, str]

DEFAULT_MAX_ITER = 8


class HnnVertex(NamedTuple):
    k: int
    w: tuple[int, ...]

    def __str__(self):
        return f"{self.k}:{format_vertex(self.w)}"


def canonicalize(k: int, w: Sequence[int]) -> HnnVertex:
    if k < 0:
        raise ValueError("copy index must be non-negative")
    w = tuple(w)
    strip = 0
    while strip < k and strip < len(w) and w[strip] == 0:
        strip += 1
    return HnnVertex(k - strip, w[strip:])


def ball_vertices(p: int, K: int, L: int) -> list[HnnVertex]:
    """Canonical vertices with ``k <= K`` and ``|w| <= L``, by direct enumeration."""
    out = []
    for k in range(K + 1):
        for n in range(L + 1):
            for w in product(range(p), repeat=n):
                if k == 0 or not w or w[0] != 0:
                    out.append(HnnVertex(k, w))
    return out


def distance(u: HnnVertex, v: HnnVertex) -> int:
    """Tree distance, computed inside the copy containing both vertices."""
    K = max(u.k, v.k)
    wu = (0,) * (K - u.k) + tuple(u.w)
    wv = (0,) * (K - v.k) + tuple(v.w)
    common = 0
    for x, y in zip(wu, wv):
        if x != y:
            break
        common += 1
    return len(wu) + len(wv) - 2 * common


def on_spine(v: HnnVertex) -> bool:
    """Whether ``v`` lies on the ray to the distinguished end through ``(0, "")``."""
    return not v.w or (v.k == 0 and not any(v.w))


@dataclass
class OrbitReport:
    K: int
    L: int
    reached: int
    total: int
    missed: list[HnnVertex] = field(default_factory=list)

    @property
    def transitive_on_ball(self) -> bool:
        return self.reached == self.total

    def to_json(self) -> dict:
        return {"ball": {"K": self.K, "L": self.L}, "reached": self.reached,
                "total": self.total, "transitive_on_ball": self.transitive_on_ball,
                "missed": [str(v) for v in self.missed]}


class HnnAction:
    def __init__(self, table: WreathTable, sigma: Endomorphism, max_iter: int = DEFAULT_MAX_ITER):
        self.table = table
        self.sigma = sigma
        self.max_iter = max_iter
        self._powers: dict[tuple[Base, int], Word] = {}

    def sigma_power(self, base: Base, k: int) -> Word:
        if k > self.max_iter:
            raise IterationBoundExceeded(f"sigma^{k} exceeds the iteration bound {self.max_iter}")
        key = (base, k)
        hit = self._powers.get(key)
        if hit is None:
            hit = gen(base) if k == 0 else apply_sigma(self.sigma, self.sigma_power(base, k - 1))
            self._powers[key] = hit
        return hit

    def act(self, x: HnnLetter, v: Sequence) -> HnnVertex:
        k, w = v
        if x == T_LETTER:
            return canonicalize(k + 1, w)
        if x == T_INV:
            if k == 0:
                return canonicalize(0, (0, *w))
            return canonicalize(k - 1, w)
        g = power(self.sigma_power(x.base, k), x.exp, self.table.p)
        return canonicalize(k, self.table.apply(g, w))

    def act_word(self, hw: Iterable[HnnLetter], v: Sequence) -> HnnVertex:
        v = canonicalize(*v)
        for x in hw:
            v = self.act(x, v)
        return v

    def relation_counterexample(self, base: Base, vertices: Iterable[Sequence]) -> Optional[HnnVertex]:
        """First vertex on which ``t g t^-1`` and ``sigma(g)`` disagree."""
        lhs = (T_LETTER, gen(base)[0], T_INV)
        rhs = apply_sigma(self.sigma, gen(base))
        for v in vertices:
            if self.act_word(lhs, v) != self.act_word(rhs, v):
                return canonicalize(*v)
        return None

    def verify_relation(self, base: Base, vertices: Iterable[Sequence]) -> bool:
        return self.relation_counterexample(base, vertices) is None

    def default_letters(self) -> list[HnnLetter]:
        return [gen(b)[0] for b in self.table.bases] + [T_LETTER, T_INV]

    def orbit_ball(self, K: int = 2, L: int = 3, letters: Optional[Sequence[HnnLetter]] = None,
                   start: Sequence = (0, ())) -> OrbitReport:
        """Breadth-first orbit of ``start`` restricted to the ball ``k <= K, |w| <= L``."""
        letters = self.default_letters() if letters is None else list(letters)
        ball = ball_vertices(self.table.p, K, L)
        inside = set(ball)
        start = canonicalize(*start)
        seen = {start}
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for x in letters:
                u = self.act(x, v)
                if u in inside and u not in seen:
                    seen.add(u)
                    queue.append(u)
        missed = [v for v in ball if v not in seen]
        return OrbitReport(K, L, len(seen & inside), len(ball), missed)
