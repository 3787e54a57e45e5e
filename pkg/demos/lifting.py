"""
Lifting endomorphisms
=====================

Search for a witness of the lifting condition and build sigma from it.
"""

import random

from spinal import (build_recursion, build_sigma, find_lifting_witness, format_word,
                    make_special_datum, verify_lifting)
from spinal.families import random_datum
from spinal.notation import format_base

d = make_special_datum("EGS", 3, (1, 0))
w = find_lifting_witness(d)
print("witness:", w)
sigma = build_sigma(d, w)
for base, img in sigma.images.items():
    print(f"sigma({format_base(base, d)}) = {format_word(img, d)}")
print(verify_lifting(d, sigma).to_json())

# the Gupta-Sidki type vector (1, 2) admits no witness
print("e = (1, 2):", find_lifting_witness(make_special_datum("EGS", 3, (1, 2))))

# a random datum with several spines
rng = random.Random(3)
while True:
    d = random_datum(rng, 5)
    T = build_recursion(d)
    w = find_lifting_witness(d, T)
    if w is not None:
        break
print("random datum:", d.to_json())
rep = verify_lifting(d, build_sigma(d, w, T), sample_size=50, max_len=20, table=T)
print("witness", w, "checks passed:", rep.passed)
