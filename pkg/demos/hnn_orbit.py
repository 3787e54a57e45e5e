"""
The ascending HNN extension on the unrooted tree
================================================

Vertices are pairs (k, w); t raises k and a group letter g acts on copy k
through sigma^k(g).
"""

from spinal import (HnnAction, build_recursion, build_sigma, find_lifting_witness,
                    make_special_datum)
from spinal.hnn import T_INV, T_LETTER, ball_vertices
from spinal.wreath import gen

d = make_special_datum("EGS", 3, (1, 0))
T = build_recursion(d)
H = HnnAction(T, build_sigma(d, find_lifting_witness(d, T), T))

a = gen((0, 0))[0]
print("t . (0, 12) =", H.act(T_LETTER, (0, (1, 2))))
print("t^-1 . (0, 12) =", H.act(T_INV, (0, (1, 2))))
print("a . (1, 0) =", H.act(a, (1, (0,))))

ball = ball_vertices(3, 2, 3)
for base in T.bases:
    print("relation t g t^-1 = sigma(g) for", base, ":", H.verify_relation(base, ball))

rep = H.orbit_ball(2, 3)
print(rep.to_json())
