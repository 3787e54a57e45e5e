"""Contracting nucleus: self-similar closure, cycle extraction and checks."""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from itertools import product
from typing import Optional, Union

import networkx as nx

from .errors import ClosureBoundExceeded
from .families import Datum, build_recursion
from .wreath import (A, IDENTITY, Letter, WreathTable, Word, gen, invert,
                     multiply, reduce, word_key)

DEFAULT_MAX_SIZE = 10**4


class ElementSet:
    """Group elements deduplicated by element equality.

    Words are bucketed by a fingerprint (action near the root) and compared
    with ``are_equal`` only inside a bucket. Each element keeps the shortest,
    then lexicographically least, word seen for it.
    """

    def __init__(self, table: WreathTable, words: Iterable[Word] = (), fp_depth: int = 2):
        self.table = table
        self.fp_depth = fp_depth
        self.reps: list[Word] = []
        self._buckets: dict[tuple, list[int]] = {}
        self._known: dict[Word, int] = {}
        for w in words:
            self.add(w)

    def __len__(self):
        return len(self.reps)

    def __iter__(self) -> Iterator[Word]:
        return iter(self.reps)

    def __contains__(self, w) -> bool:
        return self.index(w) is not None

    def index(self, w: Word) -> Optional[int]:
        w = reduce(w, self.table.p)
        hit = self._known.get(w)
        if hit is not None:
            return hit
        fp = self.table.fingerprint(w, self.fp_depth)
        for n in self._buckets.get(fp, ()):
            if self.table.are_equal(self.reps[n], w):
                self._known[w] = n
                return n
        return None

    def find(self, w: Word) -> Optional[Word]:
        n = self.index(w)
        return None if n is None else self.reps[n]

    def add(self, w: Word) -> tuple[int, bool]:
        """Insert ``w``; return its index and whether the element is new."""
        w = reduce(w, self.table.p)
        n = self.index(w)
        if n is not None:
            if word_key(w) < word_key(self.reps[n]):
                self.reps[n] = w
            return n, False
        n = len(self.reps)
        self.reps.append(w)
        self._known[w] = n
        self._buckets.setdefault(self.table.fingerprint(w, self.fp_depth), []).append(n)
        return n, True


def sections_at_depth(T: WreathTable, w: Word, k: int) -> set[Word]:
    """Distinct sections of ``w`` at the vertices of level ``k``."""
    level = {w}
    for _ in range(k):
        level = {T.split(u, x)[0] for u in level for x in range(T.p)}
    return level


def self_similar_closure(T: WreathTable, max_size: int = DEFAULT_MAX_SIZE,
                         depth: int = 2) -> ElementSet:
    """Least set holding 1, the generators and their inverses, closed under
    first-level sections of its elements and under level-``depth`` sections
    of products of two of its elements.
    """
    S = ElementSet(T)

    def add(w):
        S.add(w)
        if len(S) > max_size:
            raise ClosureBoundExceeded(
                f"closure exceeded {max_size} elements; the recursion may not be contracting")

    add(IDENTITY)
    for g in T.generators():
        add(g)
        add(invert(g, T.p))
    j = 0
    while j < len(S):
        wj = S.reps[j]
        for x in range(T.p):
            add(T.split(wj, x)[0])
        for i in range(j + 1):
            wi = S.reps[i]
            pairs = {(wi, wj), (wj, wi)}
            for u, v in sorted(pairs):
                for s in sorted(sections_at_depth(T, multiply(u, v, T.p), depth)):
                    add(s)
        j += 1
    return S


class Nucleus:
    """Finite set of elements closed under sections, with its section graph.

    ``graph[n][x]`` is the index of the section of element ``n`` at ``x``.
    """

    def __init__(self, table: WreathTable, elements: list[Word], graph: list[tuple[int, ...]]):
        self.table = table
        self.elements = elements
        self.graph = graph
        self._index = ElementSet(table, elements)

    def __len__(self):
        return len(self.elements)

    def __iter__(self) -> Iterator[Word]:
        return iter(self.elements)

    def __contains__(self, w) -> bool:
        return self._index.index(w) is not None

    def find(self, w: Word) -> Optional[Word]:
        return self._index.find(w)

    def edges(self) -> Iterator[tuple[int, int, int]]:
        for n, row in enumerate(self.graph):
            for x, m in enumerate(row):
                yield n, x, m

    def to_text(self, d: Optional[Datum] = None) -> str:
        from .notation import format_word
        return "".join(format_word(w, d) + "\n" for w in self.elements)

    def to_dot(self, d: Optional[Datum] = None) -> str:
        from .notation import format_word
        lines = ["digraph nucleus {"]
        for n, w in enumerate(self.elements):
            lines.append(f'  n{n} [label="{format_word(w, d)}"];')
        for n, x, m in self.edges():
            lines.append(f'  n{n} -> n{m} [label="{x}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def minimal_nucleus(S: Union[ElementSet, Iterable[Word]], T: WreathTable) -> Nucleus:
    """Keep the elements lying on, or reachable from, a cycle of the section graph."""
    if not isinstance(S, ElementSet):
        S = ElementSet(T, S)
    G = nx.DiGraph()
    G.add_nodes_from(range(len(S)))
    for n, w in enumerate(list(S.reps)):
        for x in range(T.p):
            m = S.index(T.split(w, x)[0])
            if m is None:
                raise ValueError(f"set is not closed under sections: element {n} at {x}")
            G.add_edge(n, m)
    seeds = set()
    for comp in nx.strongly_connected_components(G):
        if len(comp) > 1 or any(G.has_edge(n, n) for n in comp):
            seeds |= comp
    keep = set(seeds)
    for n in seeds:
        keep |= nx.descendants(G, n)
    elements = sorted((S.reps[n] for n in keep), key=word_key)
    index = ElementSet(T, elements)
    graph = [tuple(index.index(T.split(w, x)[0]) for x in range(T.p)) for w in elements]
    return Nucleus(T, elements, graph)


def nucleus_size(d: Datum) -> int:
    return sum(d.p ** r for r in d.r)


def theoretical_nucleus(d: Datum) -> list[Word]:
    """Powers of ``a`` together with every element of each ``B_l``."""
    p = d.p
    out = [IDENTITY] + [gen(A, e) for e in range(1, p)]
    for l in range(1, p + 1):
        r = d.r[l - 1]
        for t in product(range(p), repeat=r):
            if any(t):
                out.append(tuple(Letter(l, i + 1, e) for i, e in enumerate(t) if e))
    return out


def quasinucleus_violations(N: Union[Nucleus, ElementSet, Iterable[Word]], k: int, T: WreathTable,
                            first_only: bool = True) -> list[tuple[Word, Word, tuple[int, ...], Word]]:
    """Triples ``(n1, n2, v, (n1 n2)|_v)`` with the section outside ``N``."""
    if isinstance(N, ElementSet):
        index = N
    else:
        index = ElementSet(T, N)
    elems = list(index.reps)
    bad = []
    for n1 in elems:
        for n2 in elems:
            w = multiply(n1, n2, T.p)
            for v in product(range(T.p), repeat=k):
                s = T.section_at(w, v)
                if index.index(s) is None:
                    bad.append((n1, n2, v, s))
                    if first_only:
                        return bad
    return bad


def verify_quasinucleus(N, k: int, T: WreathTable) -> bool:
    return not quasinucleus_violations(N, k, T, first_only=True)


def compute_nucleus(d: Datum, table: Optional[WreathTable] = None,
                    max_size: Optional[int] = None) -> Nucleus:
    T = table or build_recursion(d)
    bound = max_size if max_size is not None else 4 * nucleus_size(d)
    return minimal_nucleus(self_similar_closure(T, bound), T)
