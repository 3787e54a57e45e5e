"""
Export for GAP
==============

Emit the wreath recursion as a SelfSimilarGroup declaration and read it back.
"""

from spinal import build_recursion, make_special_datum
from spinal.formats import export_gap, format_datum, parse_gap, same_table

d = make_special_datum("EGS", 5, (1, 0, 3, 0))
T = build_recursion(d)
text = export_gap(d, T)
print(format_datum(d), end="")
print(text, end="")
print("round trip reproduces the table:", same_table(parse_gap(text, d.p), T))
