"""
Words, sections and the word problem
====================================

The EGS group over p = 3 with defining vector e = (1, 0). Its generators
are a, b = b[3,1] and c = b[1,1].
"""

from spinal import build_recursion, make_special_datum, parse_word, format_word
from spinal.notation import format_perm

d = make_special_datum("EGS", 3, (1, 0))
T = build_recursion(d)

def W(text):
    return parse_word(text, d)

# wreath recursions of the generators: root permutation and level-1 sections
for g in ("a", "b", "c"):
    w = W(g)
    secs = ", ".join(format_word(s, d) for s in T.sections(w))
    print(f"{g} = ({secs}){format_perm(T.root_perm(w))}")

# sections of a product follow (gh)|_x = g|_x h|_{g(x)}
print("sections of a b:", [format_word(s, d) for s in T.sections(W("a b"))])

# acting on vertices, letters applied left to right
print("b sends 012 to", T.apply(W("b"), (0, 1, 2)))

# a short relator, found by exhaustive search over words of length 10
r = W("a c a^2 c a c^2 a^2 b c^2 b^2")
print("relator trivial:", T.is_trivial(r))
print("b c trivial:", T.is_trivial(W("b c")))
print("b c = c b:", T.are_equal(W("b c"), W("c b")))
# order_of gives None when no power up to the bound is trivial
print("order of b c up to 50:", T.order_of(W("b c"), 50))
