"""Exact computations in multi-EGS groups acting on p-ary rooted trees."""

from .errors import *  # noqa: F401,F403
from .families import (EGS, GGS, MULTI_EDGE, Datum, Endomorphism, LiftWitness,
                       abelianize, apply_sigma, build_recursion, build_sigma,
                       find_lifting_witness, make_special_datum, validate_datum,
                       verify_lifting)
from .fp import mod_inverse, rank_mod_p
from .hnn import HnnAction, HnnVertex, canonicalize
from .notation import format_word, parse_word
from .nucleus import (Nucleus, compute_nucleus, minimal_nucleus, nucleus_size,
                      self_similar_closure, theoretical_nucleus, verify_quasinucleus)
from .portrait import Leaf, Node, portrait
from .wreath import IDENTITY, Letter, WreathTable, invert, multiply, reduce

__version__ = "0.1.0"
