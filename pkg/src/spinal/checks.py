"""Randomized property suites, as run by ``spinal selftest``."""

from __future__ import annotations

import random
from collections.abc import Callable
from itertools import product

from .families import (Datum, abelianize, build_recursion, build_sigma,
                       find_lifting_witness, random_word, verify_lifting)
from .hnn import HnnAction, ball_vertices
from .nucleus import compute_nucleus, nucleus_size, theoretical_nucleus, verify_quasinucleus
from .wreath import WreathTable, invert, multiply, perm_inverse


def check_product_sections(T: WreathTable, bases, rng: random.Random, n: int, max_len: int = 8) -> bool:
    """``(uv)|_x = u|_x v|_{u(x)}`` on random words."""
    p = T.p
    for _ in range(n):
        u = random_word(rng, bases, p, rng.randint(0, max_len))
        v = random_word(rng, bases, p, rng.randint(0, max_len))
        x = rng.randrange(p)
        lhs = T.section(multiply(u, v, p), x)
        rhs = multiply(T.section(u, x), T.section(v, T.root_perm(u)[x]), p)
        if not T.are_equal(lhs, rhs):
            return False
    return True


def check_inverse_sections(T: WreathTable, bases, rng: random.Random, n: int, max_len: int = 8) -> bool:
    """``(u^-1)|_x = (u|_{u^-1(x)})^-1``."""
    p = T.p
    for _ in range(n):
        u = random_word(rng, bases, p, rng.randint(0, max_len))
        x = rng.randrange(p)
        lhs = T.section(invert(u, p), x)
        rhs = invert(T.section(u, perm_inverse(T.root_perm(u))[x]), p)
        if not T.are_equal(lhs, rhs):
            return False
    return True


def check_cocycle(T: WreathTable, bases, rng: random.Random, n: int, max_len: int = 8) -> bool:
    p = T.p
    for _ in range(n):
        w = random_word(rng, bases, p, rng.randint(0, max_len))
        v1 = tuple(rng.randrange(p) for _ in range(rng.randint(0, 3)))
        v2 = tuple(rng.randrange(p) for _ in range(rng.randint(0, 3)))
        if not T.are_equal(T.section_at(w, v1 + v2), T.section_at(T.section_at(w, v1), v2)):
            return False
    return True


def check_equality_oracle(T: WreathTable, bases, rng: random.Random, n: int,
                          max_len: int = 6, level: int = 8) -> bool:
    """``are_equal`` against comparing the action on a whole level."""
    p = T.p
    verts = list(product(range(p), repeat=level))
    for _ in range(n):
        u = random_word(rng, bases, p, rng.randint(0, max_len))
        v = random_word(rng, bases, p, rng.randint(0, max_len))
        brute = all(T.apply(u, x) == T.apply(v, x) for x in verts)
        if T.are_equal(u, v) != brute:
            return False
    return True


def check_generator_orders(T: WreathTable) -> bool:
    return all(T.order_of(g, T.p) == T.p for g in T.generators())


def check_abelianization(d: Datum, T: WreathTable, rng: random.Random, n: int, max_len: int = 8) -> bool:
    p = d.p
    for _ in range(n):
        u = random_word(rng, d.bases, p, rng.randint(0, max_len))
        v = random_word(rng, d.bases, p, rng.randint(0, max_len))
        su = abelianize(multiply(u, v, p), d)
        if su != tuple((x + y) % p for x, y in zip(abelianize(u, d), abelianize(v, d))):
            return False
        if T.is_trivial(u) and any(abelianize(u, d)):
            return False
    return True


def check_nucleus(d: Datum, T: WreathTable) -> bool:
    N = compute_nucleus(d, T)
    if len(N) != nucleus_size(d):
        return False
    if any(N.find(w) is None for w in theoretical_nucleus(d)):
        return False
    return verify_quasinucleus(N, 2, T)


def check_lifting(d: Datum, T: WreathTable, seed: int, n: int) -> bool:
    """Vacuously true when no witness exists."""
    w = find_lifting_witness(d, T)
    if w is None:
        return True
    return verify_lifting(d, build_sigma(d, w, T), n, 20, seed, T).passed


def check_hnn(d: Datum, T: WreathTable, K: int = 2, L: int = 3) -> bool:
    w = find_lifting_witness(d, T)
    if w is None:
        return True
    H = HnnAction(T, build_sigma(d, w, T))
    ball = ball_vertices(d.p, K, L)
    if not all(H.verify_relation(b, ball) for b in T.bases):
        return False
    return H.orbit_ball(K, L).transitive_on_ball


def run_selftest(d: Datum, seed: int = 0, samples: int = 100) -> list[tuple[str, bool]]:
    T = build_recursion(d)
    rng = random.Random(seed)
    suites: list[tuple[str, Callable[[], bool]]] = [
        ("product sections", lambda: check_product_sections(T, d.bases, rng, samples)),
        ("inverse sections", lambda: check_inverse_sections(T, d.bases, rng, samples)),
        ("section cocycle", lambda: check_cocycle(T, d.bases, rng, samples)),
        ("equality vs level action", lambda: check_equality_oracle(
            T, d.bases, rng, max(1, samples // 10), level=4 if d.p > 3 else 6)),
        ("generator orders", lambda: check_generator_orders(T)),
        ("abelianization", lambda: check_abelianization(d, T, rng, samples)),
        ("nucleus", lambda: check_nucleus(d, T)),
        ("lifting", lambda: check_lifting(d, T, seed, samples)),
        ("hnn action", lambda: check_hnn(d, T)),
    ]
    return [(name, bool(fn())) for name, fn in suites]
