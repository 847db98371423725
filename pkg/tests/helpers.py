"""Shared cached builders for the test suite."""

from fractions import Fraction
from functools import lru_cache

import frobcode as fc

# every ring exercised by the cross-checking suites
SUITE_SPECS = (
    ["Z%d" % m for m in range(2, 13)]
    + ["GF(%d)" % q for q in (2, 3, 4, 5, 7, 8, 9)]
    + ["M2(GF(2))", "Z2xZ3", "CHAIN(2)", "CHAIN(3)"]
)


@lru_cache(maxsize=None)
def ring(spec_text: str) -> fc.Ring:
    return fc.build_ring(fc.parse_ring_spec(spec_text))


@lru_cache(maxsize=None)
def table(spec_text: str, gamma=Fraction(1)) -> fc.HomWeightTable:
    return fc.hom_weight_table(ring(spec_text), Fraction(gamma))
