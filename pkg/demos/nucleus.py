"""
Contracting nucleus
===================

Self-similar closure, cycle extraction and the size formula sum p^r_l.
"""

import random

from spinal import (build_recursion, compute_nucleus, format_word, make_special_datum,
                    nucleus_size, parse_word, verify_quasinucleus)
from spinal.families import random_datum
from spinal.portrait import format_portrait, portrait

d = make_special_datum("EGS", 3, (1, 0))
T = build_recursion(d)
N = compute_nucleus(d, T)
print("nucleus:", [format_word(w, d) for w in N])
print("expected size", nucleus_size(d), "computed", len(N))
print("quasinucleus at depth 2:", verify_quasinucleus(N, 2, T))
print("quasinucleus at depth 1:", verify_quasinucleus(N, 1, T))

# portraits: descend until every section lies in the nucleus
for text in ("a b", "b c a c^2", "b c b c b"):
    print(text, "->", format_portrait(portrait(parse_word(text, d), N, T), d))

# sizes for random data
rng = random.Random(0)
for _ in range(5):
    d = random_datum(rng, rng.choice([3, 5]))
    print(f"p = {d.p}, r = {list(d.r)}: size {len(compute_nucleus(d))}, formula {nucleus_size(d)}")
