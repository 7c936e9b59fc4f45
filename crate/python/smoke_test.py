"""Smoke test for the nokwidth_py extension module."""
from fractions import Fraction

import nokwidth_py as nw

b3 = nw.RootSystem("B3")
assert b3.rank == 3
assert len(b3.positive_roots) == 9
assert b3.weyl_dim([1, 0, 0]) == 7
assert b3.pairing([0, 0, 1], [0, 0, 1]) == 1

assert nw.width("A2", [1, 1]) == 1
assert nw.width("A2", ["1/2", "1/2"]) == Fraction(1, 2)

tuples = nw.essential_set_tuples("A2", [1, 0])
assert tuples == [[0, 0], [1, 0], [0, 1]], tuples
assert len(nw.essential_set_tuples("A2", [1, 1], ordering="word", word=[1, 2, 1])) == 8

doc = nw.verify("A2", [1, 1])
assert doc["schema"] == nw.SCHEMA
assert doc["output"]["passed"] is True

code, doc = nw.run_cli(["roots", "--type", "G2"])
assert code == 0 and doc["output"]["num_positive_roots"] == 6

try:
    nw.RootSystem("D3")
except ValueError:
    pass
else:
    raise AssertionError("D3 should be rejected")

print("smoke test ok")
