"""Multi-EGS data, their wreath recursions and lifting endomorphisms.

A datum over an odd prime p is a list of p collections E^(1..p) of linearly
independent vectors in (Z/pZ)^(p-1). The generator ``b(l,i)`` has its spine
(the vertex where it has itself as section) at ``l-1`` and the section
``a^(e_n)`` at vertex ``(l-1+n) mod p``, where ``e`` is the i-th vector of
E^(l).
"""

from __future__ import annotations

import random
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from typing import Optional

from .errors import (AllEmpty, BadEntry, BadVectorLength, DependentVectors,
                     MalformedDatum, NoValidConjugator)
from .fp import DEFAULT_PRIME_LIMIT, check_prime, mod_inverse, rank_mod_p
from .wreath import (A, IDENTITY, Base, Letter, WreathTable, Word, gen,
                     identity_perm, power, reduce, shift_perm)

Vector = tuple[int, ...]

GGS = "GGS"
EGS = "EGS"
MULTI_EDGE = "MULTI_EDGE"


@dataclass(frozen=True)
class Datum:
    p: int
    E: tuple[tuple[Vector, ...], ...]

    @property
    def r(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.E)

    def vector(self, l: int, i: int) -> Vector:
        return self.E[l - 1][i - 1]

    def spinal_bases(self) -> list[Base]:
        return [(l, i) for l in range(1, self.p + 1) for i in range(1, self.r[l - 1] + 1)]

    @property
    def bases(self) -> list[Base]:
        """``a`` first, then ``b(l,i)`` in lexicographic order."""
        return [A] + self.spinal_bases()

    @property
    def is_egs(self) -> bool:
        first, last = self.E[0], self.E[-1]
        return (len(first) == 1 and first == last
                and all(len(c) == 0 for c in self.E[1:-1]))

    def to_json(self) -> dict:
        return {"p": self.p, "E": [[list(v) for v in c] for c in self.E]}


def validate_datum(raw, prime_limit: int = DEFAULT_PRIME_LIMIT) -> Datum:
    """Check a datum given as a ``Datum`` or a ``{"p": ..., "E": ...}`` mapping."""
    if isinstance(raw, Datum):
        p, E = raw.p, raw.E
    elif isinstance(raw, Mapping):
        if "p" not in raw or "E" not in raw:
            raise MalformedDatum('datum needs keys "p" and "E"')
        p, E = raw["p"], raw["E"]
    else:
        raise MalformedDatum(f"cannot read a datum from {type(raw).__name__}")
    p = check_prime(p, prime_limit)
    if not isinstance(E, Sequence) or isinstance(E, (str, bytes)) or len(E) != p:
        raise MalformedDatum(f"E must be a list of exactly p = {p} collections")
    collections = []
    for l, coll in enumerate(E, start=1):
        if not isinstance(coll, Sequence) or isinstance(coll, (str, bytes)):
            raise MalformedDatum(f"E^({l}) must be a list of vectors")
        vecs = []
        for v in coll:
            if not isinstance(v, Sequence) or isinstance(v, (str, bytes)):
                raise MalformedDatum(f"E^({l}) contains a non-vector {v!r}")
            if len(v) != p - 1:
                raise BadVectorLength(f"E^({l}) has a vector of length {len(v)}, expected {p - 1}")
            for x in v:
                if isinstance(x, bool) or not isinstance(x, int) or not 0 <= x < p:
                    raise BadEntry(f"E^({l}) entry {x!r} is not an integer in [0, {p - 1}]")
            vecs.append(tuple(v))
        if rank_mod_p(vecs, p) != len(vecs):
            raise DependentVectors(l)
        collections.append(tuple(vecs))
    if all(len(c) == 0 for c in collections):
        raise AllEmpty("at least one collection E^(l) must be nonempty")
    return Datum(p, tuple(collections))


def make_special_datum(kind: str, p: int, vectors) -> Datum:
    """GGS / multi-edge spinal data populate only E^(p); EGS sets E^(1) = E^(p) = {e}."""
    vectors = list(vectors)
    if vectors and isinstance(vectors[0], int):
        vectors = [vectors]
    vecs = [list(v) for v in vectors]
    empty: list[list] = [[] for _ in range(p)]
    if kind in (GGS, EGS) and len(vecs) != 1:
        raise ValueError(f"{kind} data take exactly one vector")
    if kind in (GGS, MULTI_EDGE):
        empty[p - 1] = vecs
    elif kind == EGS:
        empty[0] = vecs
        empty[p - 1] = vecs
    else:
        raise ValueError(f"unknown family {kind!r}")
    return validate_datum({"p": p, "E": empty})


def build_recursion(d: Datum) -> WreathTable:
    p = d.p
    rec = {A: (shift_perm(p, 1), (IDENTITY,) * p)}
    for (l, i) in d.spinal_bases():
        e = d.vector(l, i)
        secs: list[Word] = [IDENTITY] * p
        secs[l - 1] = gen((l, i))
        for n in range(1, p):
            secs[(l - 1 + n) % p] = gen(A, e[n - 1]) if e[n - 1] else IDENTITY
        rec[(l, i)] = (identity_perm(p), tuple(secs))
    return WreathTable(p, rec)


def abelianize(w: Iterable[Letter], d: Datum) -> tuple[int, ...]:
    """Total exponents mod p, coordinates ordered as ``d.bases``."""
    index = {b: n for n, b in enumerate(d.bases)}
    out = [0] * len(index)
    for x in w:
        out[index[x.base]] = (out[index[x.base]] + x.exp) % d.p
    return tuple(out)


# -- lifting -----------------------------------------------------------------

@dataclass(frozen=True)
class LiftWitness:
    m: int
    k: int
    j: int
    f: int
    s: Optional[int] = None

    def to_json(self) -> dict:
        return {"m": self.m, "k": self.k, "j": self.j, "f": self.f, "s": self.s}


@dataclass
class Endomorphism:
    """Substitution ``base -> word``, extended homomorphically."""

    p: int
    images: dict[Base, Word]
    witness: Optional[LiftWitness] = None

    def __call__(self, w: Iterable[Letter]) -> Word:
        return apply_sigma(self, w)


def apply_sigma(sigma: Endomorphism, w: Iterable[Letter]) -> Word:
    out: list[Letter] = []
    for x in w:
        out.extend(power(sigma.images[x.base], x.exp, sigma.p))
    return reduce(out, sigma.p)


def conjugate_by_a(w: Word, s: int, p: int) -> Word:
    """``a^-s w a^s``."""
    return reduce((Letter(0, 0, -s), *w, Letter(0, 0, s)), p)


def witness_triples(d: Datum):
    """All (m, k, j) meeting the two conditions, in search order m = p..1, then k, j ascending."""
    p = d.p
    zero_cols = {j for j in range(1, p)
                 if all(v[p - j - 1] == 0 for c in d.E for v in c)}
    for m in range(p, 0, -1):
        for k in range(1, d.r[m - 1] + 1):
            e = d.vector(m, k)
            for j in range(1, p):
                if e[j - 1] != 0 and j in zero_cols:
                    yield m, k, j


def solve_conjugator(d: Datum, m: int, k: int, j: int,
                     table: Optional[WreathTable] = None) -> tuple[int, Word]:
    """Find s with ``a^-s b(m,k)^f a^s`` fixing 0 with section ``a`` there.

    Candidates are tried starting from ``s = 1-j-m``; the first that passes wins.
    """
    p = d.p
    T = table or build_recursion(d)
    f = mod_inverse(d.vector(m, k)[j - 1], p)
    target = gen(A)
    s0 = (1 - j - m) % p
    for t in range(p):
        s = (s0 + t) % p
        w = conjugate_by_a(gen((m, k), f), s, p)
        if T.root_perm(w)[0] == 0 and T.are_equal(T.section(w, 0), target):
            return s, w
    raise NoValidConjugator(f"no conjugator exponent works for (m, k, j) = ({m}, {k}, {j})")


def find_lifting_witness(d: Datum, table: Optional[WreathTable] = None) -> Optional[LiftWitness]:
    for m, k, j in witness_triples(d):
        s, _ = solve_conjugator(d, m, k, j, table)
        return LiftWitness(m, k, j, mod_inverse(d.vector(m, k)[j - 1], d.p), s)
    return None


def build_sigma(d: Datum, w: LiftWitness, table: Optional[WreathTable] = None) -> Endomorphism:
    p = d.p
    s, img_a = solve_conjugator(d, w.m, w.k, w.j, table)
    images = {A: img_a}
    for (l, i) in d.spinal_bases():
        images[(l, i)] = conjugate_by_a(gen((l, i)), p - l + 1, p)
    f = mod_inverse(d.vector(w.m, w.k)[w.j - 1], p)
    return Endomorphism(p, images, LiftWitness(w.m, w.k, w.j, f, s))


def relators(d: Datum) -> list[Word]:
    """``g^p`` for each generator and ``[b(l,i), b(l,i')]`` for ``i < i'``."""
    p = d.p
    out = [tuple(Letter(b[0], b[1], 1) for _ in range(p)) for b in d.bases]
    for l in range(1, p + 1):
        for i in range(1, d.r[l - 1] + 1):
            for i2 in range(i + 1, d.r[l - 1] + 1):
                out.append((Letter(l, i, 1), Letter(l, i2, 1), Letter(l, i, p - 1), Letter(l, i2, p - 1)))
    return out


def random_word(rng: random.Random, bases: Sequence[Base], p: int, length: int) -> Word:
    """``length`` uniform letters with uniform nonzero exponents, then reduced."""
    return reduce((Letter(*rng.choice(bases), rng.randrange(1, p)) for _ in range(length)), p)


@dataclass
class LiftReport:
    seed: int
    samples: int
    max_len: int
    fixes_vertex0: bool = True
    right_inverse: bool = True
    relators_trivial: bool = True
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.fixes_vertex0 and self.right_inverse and self.relators_trivial

    def to_json(self) -> dict:
        return {"seed": self.seed, "samples": self.samples, "max_len": self.max_len,
                "fixes_vertex0": self.fixes_vertex0, "right_inverse": self.right_inverse,
                "relators_trivial": self.relators_trivial, "passed": self.passed,
                "failures": list(self.failures)}


def verify_lifting(d: Datum, sigma: Endomorphism, sample_size: int = 50, max_len: int = 20,
                   seed: int = 0, table: Optional[WreathTable] = None) -> LiftReport:
    """Check that sigma lands in the stabilizer of 0 and is a right inverse of the projection there."""
    T = table or build_recursion(d)
    rng = random.Random(seed)
    rep = LiftReport(seed, sample_size, max_len)
    words = [gen(b) for b in d.bases]
    words += [random_word(rng, d.bases, d.p, rng.randint(0, max_len)) for _ in range(sample_size)]
    for w in words:
        img = apply_sigma(sigma, w)
        if T.root_perm(img)[0] != 0:
            rep.fixes_vertex0 = False
            rep.failures.append(f"sigma(w) moves vertex 0 for w = {w}")
            continue
        if not T.are_equal(T.section(img, 0), w):
            rep.right_inverse = False
            rep.failures.append(f"sigma(w)|_0 != w for w = {w}")
    for r in relators(d):
        img = apply_sigma(sigma, r)
        if not T.is_trivial(img):
            rep.relators_trivial = False
            rep.failures.append(f"sigma maps relator {r} to a nontrivial element")
    return rep


def random_datum(rng: random.Random, p: int, max_r: int = 2, density: float = 0.5) -> Datum:
    """Each collection is nonempty with probability ``density`` and then has
    ``1..max_r`` uniformly random independent vectors."""
    max_r = min(max_r, p - 1)
    while True:
        E = []
        for _ in range(p):
            r = rng.randint(1, max_r) if rng.random() < density else 0
            E.append(random_independent(rng, p, r))
        if any(E):
            return validate_datum({"p": p, "E": E})


def random_independent(rng: random.Random, p: int, r: int) -> list[list[int]]:
    while True:
        vecs = [[rng.randrange(p) for _ in range(p - 1)] for _ in range(r)]
        if rank_mod_p(vecs, p) == r:
            return vecs


def random_nonzero_vector(rng: random.Random, p: int) -> list[int]:
    return random_independent(rng, p, 1)[0]
