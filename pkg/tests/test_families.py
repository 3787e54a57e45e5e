import random

import pytest

from spinal.errors import (AllEmpty, BadEntry, BadVectorLength, DependentVectors,
                           MalformedDatum, NotOdd, NotPrime, ZeroInverse)
from spinal.families import (EGS, GGS, MULTI_EDGE, Endomorphism, LiftWitness, abelianize,
                             apply_sigma, build_recursion, build_sigma, conjugate_by_a,
                             find_lifting_witness, make_special_datum, random_datum,
                             random_nonzero_vector, random_word, relators, validate_datum,
                             verify_lifting, witness_triples)
from spinal.fp import mod_inverse
from spinal.notation import parse_word
from spinal.wreath import A, IDENTITY, Letter, gen, invert, multiply

from test_wreath import D3_RELATOR


def W(text, d):
    return parse_word(text, d)


def test_validate_d3(d3):
    d = validate_datum({"p": 3, "E": [[(1, 0)], [], [(1, 0)]]})
    assert d == d3
    assert d.r == (1, 0, 1)
    assert d.is_egs
    assert d.bases == [A, (1, 1), (3, 1)]


@pytest.mark.parametrize("raw,exc", [
    ({"p": 3, "E": [[], [], []]}, AllEmpty),
    ({"p": 5, "E": [[], [], [], [], [(1, 2, 0, 0), (2, 4, 0, 0)]]}, DependentVectors),
    ({"p": 4, "E": [[], [], [], []]}, NotPrime),
    ({"p": 2, "E": [[], [(1,)]]}, NotOdd),
    ({"p": 3, "E": [[(1, 0, 0)], [], []]}, BadVectorLength),
    ({"p": 3, "E": [[(1, 3)], [], []]}, BadEntry),
    ({"p": 3, "E": [[(1, 0)], []]}, MalformedDatum),
    ({"p": 3}, MalformedDatum),
    ({"p": 3, "E": [[(0, 0)], [], []]}, DependentVectors),
])
def test_validate_errors(raw, exc):
    with pytest.raises(exc):
        validate_datum(raw)


def test_dependent_vectors_reports_collection():
    with pytest.raises(DependentVectors) as info:
        validate_datum({"p": 5, "E": [[], [], [], [], [(1, 2, 0, 0), (2, 4, 0, 0)]]})
    assert info.value.l == 5


def test_build_recursion_examples(d3):
    T = build_recursion(d3)
    a, b, c = W("a", d3), W("b", d3), W("c", d3)
    assert T.recursion[(3, 1)] == ((0, 1, 2), (a, IDENTITY, b))
    assert T.recursion[(1, 1)] == ((0, 1, 2), (c, a, IDENTITY))
    assert T.recursion[A] == ((1, 2, 0), (IDENTITY,) * 3)


def test_build_recursion_positions():
    # b(l,i) carries a^(e_n) at vertex l-1+n
    d = validate_datum({"p": 5, "E": [[], [], [(1, 2, 3, 4)], [], []]})
    T = build_recursion(d)
    secs = T.recursion[(3, 1)][1]
    assert secs[2] == gen((3, 1))
    assert [secs[(2 + n) % 5] for n in range(1, 5)] == [gen(A, e) for e in (1, 2, 3, 4)]


def test_special_data(d3, gs3):
    assert make_special_datum(EGS, 3, (1, 0)) == d3
    assert gs3.r == (0, 0, 1) and gs3.E[2] == ((1, 2),)
    me = make_special_datum(MULTI_EDGE, 5, [(1, 0, 0, 0), (0, 1, 0, 0)])
    assert me.r == (0, 0, 0, 0, 2)
    with pytest.raises(ValueError):
        make_special_datum(EGS, 3, [(1, 0), (0, 1)])
    with pytest.raises(DependentVectors):
        make_special_datum(GGS, 3, (0, 0))


def test_witness_examples(d3, gs3):
    assert find_lifting_witness(d3) == LiftWitness(3, 1, 1, 1, 0)
    assert find_lifting_witness(gs3) is None
    assert find_lifting_witness(make_special_datum(EGS, 3, (1, 2))) is None
    w = find_lifting_witness(validate_datum({"p": 5, "E": [[], [], [], [], [(1, 0, 0, 0)]]}))
    assert (w.m, w.k, w.j) == (5, 1, 1)


def test_sigma_d3(d3):
    sigma = build_sigma(d3, find_lifting_witness(d3))
    assert sigma.images[A] == W("b", d3)
    assert sigma.images[(3, 1)] == W("a^-1 b a", d3)
    assert sigma.images[(1, 1)] == W("c", d3)
    T = build_recursion(d3)
    assert T.sections(sigma.images[(3, 1)]) == (W("b", d3), W("a", d3), IDENTITY)


def test_sigma_forced_c_spine(d3):
    T = build_recursion(d3)
    sigma = build_sigma(d3, LiftWitness(1, 1, 1, 1))
    assert sigma.witness.s == 2
    assert sigma.images[A] == W("a^-2 c a^2", d3)
    assert T.sections(sigma.images[A]) == (W("a", d3), IDENTITY, W("c", d3))
    assert verify_lifting(d3, sigma, 30, 12).passed
    # the literal conjugator a^(1-j) = a^0 does not give a at vertex 0 here
    literal = conjugate_by_a(W("c", d3), 0, 3)
    assert T.section(literal, 0) != W("a", d3)


def test_sigma_multi_edge_p3():
    d = make_special_datum(MULTI_EDGE, 3, [(1, 0)])
    sigma = build_sigma(d, find_lifting_witness(d))
    assert sigma.images[A] == gen((3, 1))
    assert sigma.images[(3, 1)] == conjugate_by_a(gen((3, 1)), 1, 3)


def test_zero_entry_cannot_be_inverted(d3):
    with pytest.raises(ZeroInverse):
        build_sigma(d3, LiftWitness(3, 1, 2, 1))


def test_apply_sigma_examples(d3):
    sigma = build_sigma(d3, find_lifting_witness(d3))
    assert apply_sigma(sigma, W("a", d3)) == W("b", d3)
    assert apply_sigma(sigma, W("a b", d3)) == W("b a^-1 b a", d3)
    assert apply_sigma(sigma, IDENTITY) == IDENTITY
    assert sigma(W("a^2", d3)) == W("b^2", d3)


def test_verify_lifting_examples(d3):
    T = build_recursion(d3)
    sigma = build_sigma(d3, find_lifting_witness(d3))
    rep = verify_lifting(d3, sigma, 20, 10, seed=4)
    assert rep.passed and rep.seed == 4 and not rep.failures
    bad = Endomorphism(3, {**sigma.images, A: W("a", d3)})
    rep = verify_lifting(d3, bad, 5, 5)
    assert not rep.fixes_vertex0
    assert not rep.passed
    assert T.is_trivial(apply_sigma(sigma, (Letter(0, 0, 1),) * 3))


def test_verify_lifting_catches_wrong_section(d3):
    sigma = build_sigma(d3, find_lifting_witness(d3))
    bad = Endomorphism(3, {**sigma.images, A: W("c", d3)})
    rep = verify_lifting(d3, bad, 5, 5)
    assert rep.fixes_vertex0 and not rep.right_inverse


def test_relators_list(d3):
    d = make_special_datum(MULTI_EDGE, 5, [(1, 0, 0, 0), (0, 1, 0, 0)])
    rs = relators(d)
    assert len(rs) == len(d.bases) + 1
    assert len(relators(d3)) == 3


def test_abelianize_examples(d3):
    assert abelianize(W("a^2", d3), d3) == (2, 0, 0)
    assert abelianize(W("b c b^-1 c^-1", d3), d3) == (0, 0, 0)
    assert abelianize(W("a b a b^2", d3), d3) == (2, 0, 0)
    assert abelianize(W(D3_RELATOR, d3), d3) == (0, 0, 0)


def _liftable_data(n, seed, primes=(3, 5, 7)):
    rng = random.Random(seed)
    out = []
    while len(out) < n:
        d = random_datum(rng, rng.choice(primes))
        if next(witness_triples(d), None) is not None:
            out.append(d)
    return out


@pytest.mark.parametrize("d", _liftable_data(12, 1))
def test_witness_soundness(d):
    T = build_recursion(d)
    w = find_lifting_witness(d, T)
    assert w is not None
    assert w.s == (1 - w.j - w.m) % d.p
    assert d.vector(w.m, w.k)[w.j - 1] * w.f % d.p == 1
    sigma = build_sigma(d, w, T)
    assert verify_lifting(d, sigma, 25, 12, seed=3, table=T).passed
    for g in T.generators():
        assert T.order_of(apply_sigma(sigma, g), d.p) == d.p


@pytest.mark.parametrize("d", _liftable_data(6, 2, primes=(3, 5)))
def test_sigma_right_inverse_and_relations(d):
    T = build_recursion(d)
    sigma = build_sigma(d, find_lifting_witness(d, T), T)
    rng = random.Random(5)
    rels = relators(d)
    for _ in range(100):
        w = random_word(rng, d.bases, d.p, rng.randint(0, 10))
        img = apply_sigma(sigma, w)
        assert T.root_perm(img)[0] == 0
        assert T.are_equal(T.section(img, 0), w)
    for _ in range(20):
        w = random_word(rng, d.bases, d.p, rng.randint(0, 6))
        r = rng.choice(rels)
        conj = multiply(multiply(w, r, d.p), invert(w, d.p), d.p)
        assert T.is_trivial(apply_sigma(sigma, conj))


@pytest.mark.parametrize("p", [3, 5, 7])
def test_egs_sigma_matches_closed_form(p):
    rng = random.Random(p)
    seen = 0
    for _ in range(60):
        e = random_nonzero_vector(rng, p)
        js = [j for j in range(1, p) if e[j - 1] and not e[p - j - 1]]
        d = make_special_datum(EGS, p, e)
        w = find_lifting_witness(d)
        if not js:
            assert w is None
            continue
        seen += 1
        j = js[0]
        assert (w.m, w.k, w.j) == (p, 1, j)
        sigma = build_sigma(d, w)
        f = mod_inverse(e[j - 1], p)
        b, c = (p, 1), (1, 1)
        assert sigma.images[A] == conjugate_by_a(gen(b, f), 1 - j, p)
        assert sigma.images[b] == conjugate_by_a(gen(b), 1, p)
        assert sigma.images[c] == gen(c)
    assert seen > 0


def test_multi_edge_sigma_matches_closed_form():
    rng = random.Random(9)
    p = 5
    checked = 0
    while checked < 10:
        d = random_datum(rng, p, max_r=3, density=1.0)
        d = make_special_datum(MULTI_EDGE, p, d.E[4])
        w = find_lifting_witness(d)
        if w is None:
            continue
        checked += 1
        sigma = build_sigma(d, w)
        f = mod_inverse(d.vector(p, w.k)[w.j - 1], p)
        assert sigma.images[A] == conjugate_by_a(gen((p, w.k), f), 1 - w.j, p)
        for i in range(1, d.r[p - 1] + 1):
            assert sigma.images[(p, i)] == conjugate_by_a(gen((p, i)), 1, p)


def test_abelianization_homomorphism_and_soundness(d3):
    T = build_recursion(d3)
    rng = random.Random(8)
    for _ in range(300):
        u = random_word(rng, d3.bases, 3, rng.randint(0, 8))
        v = random_word(rng, d3.bases, 3, rng.randint(0, 8))
        s = abelianize(multiply(u, v, 3), d3)
        assert s == tuple((x + y) % 3 for x, y in zip(abelianize(u, d3), abelianize(v, d3)))
        if T.is_trivial(u):
            assert abelianize(u, d3) == (0, 0, 0)
