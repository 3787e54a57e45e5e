"""Nucleus portraits: finite trees whose leaves are nucleus elements."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .errors import DepthBoundExceeded
from .families import Datum
from .notation import format_perm, format_word
from .wreath import Perm, WreathTable, Word


@dataclass(frozen=True)
class Leaf:
    word: Word


@dataclass(frozen=True)
class Node:
    perm: Perm
    children: tuple[Portrait, ...]


Portrait = Union[Leaf, Node]


def portrait(w: Word, nucleus, T: WreathTable, max_depth: int = 64) -> Portrait:
    """Descend until every section is (equal to) a nucleus element.

    ``nucleus`` is anything with a ``find(word)`` method returning the stored
    representative or None.
    """
    def build(u, depth):
        hit = nucleus.find(u)
        if hit is not None:
            return Leaf(hit)
        if depth >= max_depth:
            raise DepthBoundExceeded(f"portrait deeper than {max_depth} levels")
        return Node(T.root_perm(u), tuple(build(T.split(u, x)[0], depth + 1) for x in range(T.p)))

    return build(tuple(w), 0)


def portrait_depth(P: Portrait) -> int:
    if isinstance(P, Leaf):
        return 0
    return 1 + max(portrait_depth(c) for c in P.children)


def format_portrait(P: Portrait, d: Optional[Datum] = None) -> str:
    if isinstance(P, Leaf):
        return format_word(P.word, d)
    return f"{format_perm(P.perm)}[" + ", ".join(format_portrait(c, d) for c in P.children) + "]"


def portrait_to_dot(P: Portrait, d: Optional[Datum] = None) -> str:
    lines = ["digraph portrait {"]
    counter = 0

    def walk(node):
        nonlocal counter
        me = counter
        counter += 1
        if isinstance(node, Leaf):
            lines.append(f'  v{me} [shape=box, label="{format_word(node.word, d)}"];')
        else:
            lines.append(f'  v{me} [label="{format_perm(node.perm)}"];')
            for x, child in enumerate(node.children):
                c = walk(child)
                lines.append(f'  v{me} -> v{c} [label="{x}"];')
        return me

    walk(P)
    lines.append("}")
    return "\n".join(lines) + "\n"
