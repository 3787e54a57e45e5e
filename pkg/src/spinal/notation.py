"""Text forms of words, vertices and permutations.

Word grammar (whitespace-separated terms)::

    word := "1" | term (SP term)*
    term := base ("^" int)?
    base := "a" | "b[" l "," i "]"

For EGS data ``b`` abbreviates ``b[p,1]`` and ``c`` abbreviates ``b[1,1]``.
"""

from __future__ import annotations

import re
import warnings
from collections.abc import Sequence
from typing import Optional

from .errors import ExponentZeroElided, UnknownGenerator, WordSyntaxError
from .families import Datum
from .wreath import A, Letter, Word, reduce

_TERM = re.compile(r"(?:(a)|b\[\s*(\d+)\s*,\s*(\d+)\s*\]|(b)|(c))(?:\^(-?\d+))?$")


def parse_word(text: str, d: Datum) -> Word:
    stripped = text.strip()
    if stripped == "1":
        return ()
    if not stripped:
        raise WordSyntaxError("empty word (use '1' for the identity)", text, 0)
    bases = set(d.bases)
    letters = []
    for tok in re.finditer(r"\S+", text):
        m = _TERM.match(tok.group())
        if m is None:
            raise WordSyntaxError(f"cannot parse term {tok.group()!r}", text, tok.start())
        a, l, i, b, c, exp = m.groups()
        if a:
            base = A
        elif l is not None:
            base = (int(l), int(i))
        else:
            if not d.is_egs:
                raise UnknownGenerator(f"'{b or c}' is only defined for EGS data (position {tok.start()})")
            base = (d.p, 1) if b else (1, 1)
        if base not in bases:
            raise UnknownGenerator(f"generator b[{base[0]},{base[1]}] is not defined by the datum (position {tok.start()})")
        e = int(exp) if exp is not None else 1
        if e % d.p == 0:
            warnings.warn(f"term {tok.group()!r} has exponent 0 mod {d.p} and is dropped",
                          ExponentZeroElided, stacklevel=2)
            continue
        letters.append(Letter(base[0], base[1], e))
    return reduce(letters, d.p)


def format_base(base, d: Optional[Datum] = None) -> str:
    if base == A:
        return "a"
    if d is not None and d.is_egs:
        if base == (d.p, 1):
            return "b"
        if base == (1, 1):
            return "c"
    return f"b[{base[0]},{base[1]}]"


def format_word(w: Sequence[Letter], d: Optional[Datum] = None) -> str:
    """Canonical text; passing an EGS datum switches on the ``b``/``c`` sugar."""
    if not w:
        return "1"
    return " ".join(format_base(x.base, d) + (f"^{x.exp}" if x.exp != 1 else "") for x in w)


def format_perm(s: Sequence[int]) -> str:
    """Cycle notation over 0-based letters, ``()`` for the identity."""
    seen = set()
    cycles = []
    for x in range(len(s)):
        if x in seen or s[x] == x:
            continue
        cyc = [x]
        seen.add(x)
        y = s[x]
        while y != x:
            cyc.append(y)
            seen.add(y)
            y = s[y]
        cycles.append("(" + ",".join(map(str, cyc)) + ")")
    return "".join(cycles) or "()"


def parse_vertex(text: str, p: int) -> tuple[int, ...]:
    """Digit string (``-`` or empty for the root); comma-separated letters also accepted."""
    t = text.strip()
    if t in ("", "-"):
        return ()
    parts = t.split(",") if "," in t else list(t)
    try:
        v = tuple(int(x) for x in parts)
    except ValueError:
        raise WordSyntaxError("vertex letters must be integers", text, 0) from None
    for n, x in enumerate(v):
        if not 0 <= x < p:
            raise WordSyntaxError(f"vertex letter {x} is outside 0..{p - 1}", text, n)
    return v


def format_vertex(v: Sequence[int]) -> str:
    if not v:
        return "-"
    if all(x < 10 for x in v):
        return "".join(map(str, v))
    return ",".join(map(str, v))
