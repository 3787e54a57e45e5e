"""Datum JSON documents and AutomGrp-style recursion export."""

from __future__ import annotations

import json
import re
from typing import Union

from .errors import MalformedDatum, WordSyntaxError
from .families import Datum, validate_datum
from .wreath import A, IDENTITY, Base, Letter, WreathTable, reduce


def parse_datum(data: Union[bytes, str]) -> Datum:
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise MalformedDatum(f"datum is not UTF-8: {exc}") from None
    try:
        raw = json.loads(data)
    except json.JSONDecodeError as exc:
        raise MalformedDatum(f"datum is not valid JSON: {exc}") from None
    if not isinstance(raw, dict):
        raise MalformedDatum("datum must be a JSON object")
    return validate_datum(raw)


def format_datum(d: Datum) -> str:
    return json.dumps(d.to_json(), separators=(", ", ": ")) + "\n"


def load_datum(path) -> Datum:
    with open(path, "rb") as fh:
        return parse_datum(fh.read())


def gap_name(base: Base) -> str:
    return "a" if base == A else f"b{base[0]}_{base[1]}"


def _gap_word(w) -> str:
    if not w:
        return "1"
    return "*".join(gap_name(x.base) + (f"^{x.exp}" if x.exp != 1 else "") for x in w)


def _gap_perm(s) -> str:
    seen, cycles = set(), []
    for x in range(len(s)):
        if x in seen or s[x] == x:
            continue
        cyc, y = [x], s[x]
        seen.add(x)
        while y != x:
            cyc.append(y)
            seen.add(y)
            y = s[y]
        cycles.append("(" + ",".join(str(c + 1) for c in cyc) + ")")
    return "".join(cycles)


def export_order(d: Datum) -> list[Base]:
    """``a``, then the spinal generators with ``l`` from p down to 1."""
    return [A] + sorted(d.spinal_bases(), key=lambda b: (-b[0], b[1]))


def export_gap(d: Datum, table: WreathTable) -> str:
    """GAP ``SelfSimilarGroup`` declaration, one generator per line, 1-based letters."""
    defs = []
    for base in export_order(d):
        perm, secs = table.recursion[base]
        defs.append(f"{gap_name(base)} = ({', '.join(_gap_word(s) for s in secs)}){_gap_perm(perm)}")
    body = ", \\\n".join(defs)
    return f"# multi-EGS group, p = {d.p}, r = {list(d.r)}\nG := SelfSimilarGroup(\"{body}\");\n"


_DEF = re.compile(r"^\s*([A-Za-z][A-Za-z0-9_]*)\s*=\s*\(([^()]*)\)((?:\([0-9,\s]+\))*)\s*$")


def _parse_gap_name(name: str) -> Base:
    if name == "a":
        return A
    m = re.fullmatch(r"b(\d+)_(\d+)", name)
    if not m:
        raise WordSyntaxError(f"unknown generator name {name!r}", name, 0)
    return (int(m.group(1)), int(m.group(2)))


def parse_gap(text: str, p: int) -> WreathTable:
    """Read back the output of :func:`export_gap`."""
    m = re.search(r'SelfSimilarGroup\("(.*)"\)', text, re.S)
    if not m:
        raise WordSyntaxError("no SelfSimilarGroup declaration found", text, 0)
    body = m.group(1).replace("\\\n", "")
    rec = {}
    for part in re.split(r",\s*(?=[A-Za-z][A-Za-z0-9_]*\s*=)", body):
        dm = _DEF.match(part)
        if not dm:
            raise WordSyntaxError("cannot parse generator definition", part, 0)
        base = _parse_gap_name(dm.group(1))
        secs = []
        for s in dm.group(2).split(","):
            s = s.strip()
            if s == "1":
                secs.append(IDENTITY)
                continue
            letters = []
            for term in s.split("*"):
                name, _, exp = term.partition("^")
                b = _parse_gap_name(name.strip())
                letters.append(Letter(b[0], b[1], int(exp) if exp else 1))
            secs.append(reduce(letters, p))
        perm = list(range(p))
        for cyc in re.findall(r"\(([0-9,\s]+)\)", dm.group(3)):
            pts = [int(x) - 1 for x in cyc.split(",")]
            for x, y in zip(pts, pts[1:] + pts[:1]):
                perm[x] = y
        rec[base] = (tuple(perm), tuple(secs))
    return WreathTable(p, rec)


def same_table(T1: WreathTable, T2: WreathTable) -> bool:
    return T1.p == T2.p and T1.recursion == T2.recursion

