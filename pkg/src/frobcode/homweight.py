"""Homogeneous weights computed exactly via generating characters.

The weight of an element x is gamma * (1 - avg over units u of chi(xu)),
where chi is the ring's distinguished generating character.  Character
sums are multisets of N-th roots of unity and are reduced modulo the
N-th cyclotomic polynomial, so every weight comes out as an exact
rational; no floating point is involved anywhere.

Storage is normalised: tables keep w(x)/gamma, which is independent of
gamma, and gamma is carried alongside for display.  A brute-force
linear-system solver over the rationals is provided as an independent
oracle for the same table.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .rings import CharacterError, Ring, principal_ideal, radical, socle_local


class NonRationalSumError(ValueError):
    """A character sum did not reduce to a rational number."""


# ---------------------------------------------------------------------------
# Cyclotomic arithmetic
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of the n-th cyclotomic polynomial, constant term first.

    Computed by dividing x^n - 1 by the cyclotomic polynomials of the
    proper divisors of n; all divisions are exact over the integers.
    """
    if n < 1:
        raise ValueError("cyclotomic order must be >= 1")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _exact_div(poly, cyclotomic_polynomial(d))
    return tuple(poly)


def _exact_div(num: Sequence[int], den: Sequence[int]) -> list[int]:
    # den is monic; remainder must vanish
    r = list(num)
    q = [0] * (len(r) - len(den) + 1)
    while len(r) >= len(den) and any(r):
        coef = r[-1]
        shift = len(r) - len(den)
        q[shift] = coef
        for i, cd in enumerate(den):
            r[shift + i] -= coef * cd
        while r and r[-1] == 0:
            r.pop()
    if any(r):
        raise ArithmeticError("polynomial division left a remainder")
    return q


@dataclass(frozen=True, eq=False)
class CyclotomicSum:
    """A multiset of N-th roots of unity: sum of counts[j] * zeta_N^j."""

    order: int
    counts: Mapping[int, int]

    @classmethod
    def from_exponents(cls, order: int, exponents: Iterable[int]) -> "CyclotomicSum":
        return cls(order, Counter(e % order for e in exponents))


def cyclotomic_residue(s: CyclotomicSum) -> tuple[int, ...]:
    """Canonical representative modulo the order-N cyclotomic polynomial."""
    if s.order < 1:
        raise ValueError("cyclotomic order must be >= 1")
    dense = [0] * s.order
    for e, c in s.counts.items():
        dense[e % s.order] += c
    phi = cyclotomic_polynomial(s.order)
    r = dense
    dm = len(phi) - 1
    while len(r) > dm:
        coef = r[-1]
        if coef:
            shift = len(r) - 1 - dm
            for i, cp in enumerate(phi):
                r[shift + i] -= coef * cp
        r.pop()
    while r and r[-1] == 0:
        r.pop()
    return tuple(r)


def cyclotomic_reduce(s: CyclotomicSum) -> Fraction:
    """The value of the sum, provided it is rational.

    Raises ``NonRationalSumError`` when the reduced representative is not a
    constant, which signals a malformed character upstream.
    """
    residue = cyclotomic_residue(s)
    if len(residue) > 1:
        raise NonRationalSumError(f"sum reduces to degree {len(residue) - 1}, not a constant")
    return Fraction(residue[0] if residue else 0)


# ---------------------------------------------------------------------------
# Weight tables
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class HomWeightTable:
    """Exact homogeneous weight table of a ring.

    ``norm_weight[x]`` is w(x)/gamma; multiply by ``gamma`` for the weight
    itself.  Immutable and safe for shared reads.
    """

    ring: Ring
    gamma: Fraction
    norm_weight: tuple[Fraction, ...]

    def weight(self, x: int) -> Fraction:
        return self.gamma * self.norm_weight[x]


def hom_weight_table(ring: Ring, gamma: Fraction | int = 1) -> HomWeightTable:
    """Weight table from the character formula, verified against the axioms."""
    gamma = Fraction(gamma)
    if gamma <= 0:
        raise ValueError("gamma must be positive")
    mul = ring.mul_table
    nunits = len(ring.units)
    norm = []
    for x in range(ring.size):
        s = CyclotomicSum.from_exponents(
            ring.add_exponent, (ring.char_exp[mul[x][u]] for u in ring.units)
        )
        norm.append(1 - cyclotomic_reduce(s) / nunits)
    table = HomWeightTable(ring=ring, gamma=gamma, norm_weight=tuple(norm))
    if not verify_axioms(table):
        raise CharacterError(f"character formula on {ring.name} violates the weight axioms")
    return table


def verify_axioms(table: HomWeightTable) -> bool:
    """Exhaustively check the two homogeneity axioms.

    Elements generating the same principal left ideal must share a weight,
    and the normalised weight must sum to |Rx| over every nonzero Rx.
    """
    ring, w = table.ring, table.norm_weight
    if w[0] != 0:
        return False
    ideals: dict[frozenset[int], list[int]] = {}
    for x in range(1, ring.size):
        members = principal_ideal(ring, x, "left").members
        ideals.setdefault(members, []).append(x)
    for members, gens in ideals.items():
        if any(w[x] != w[gens[0]] for x in gens[1:]):
            return False
        if sum(w[y] for y in members) != len(members):
            return False
    return True


def local_socle_weight_table(ring: Ring, gamma: Fraction | int = 1) -> HomWeightTable:
    """Weight table of a local ring from its socle, bypassing characters.

    Nonzero socle elements weigh q/(q-1) (normalised) for q the residue
    field size, everything else nonzero weighs 1.
    """
    gamma = Fraction(gamma)
    if gamma <= 0:
        raise ValueError("gamma must be positive")
    soc = socle_local(ring)  # raises NotLocalError on non-local input
    q = ring.size // len(radical(ring))
    heavy = Fraction(q, q - 1)
    norm = tuple(
        Fraction(0) if x == 0 else heavy if x in soc else Fraction(1)
        for x in range(ring.size)
    )
    return HomWeightTable(ring=ring, gamma=gamma, norm_weight=norm)


def extend_weight(table: HomWeightTable, word: Sequence[int]) -> Fraction:
    """Coordinatewise sum of normalised weights over a word."""
    w = table.norm_weight
    return sum((w[c] for c in word), Fraction(0))


# ---------------------------------------------------------------------------
# Independent oracle: the axioms as a linear system
# ---------------------------------------------------------------------------

def solve_weight_axioms(ring: Ring) -> tuple[Fraction, ...]:
    """Solve w(0)=0 plus both homogeneity axioms (normalised) directly.

    Sets up the defining equations as a rational linear system and runs
    Gaussian elimination.  The solution is unique for the rings handled
    here; a rank defect raises ``ArithmeticError``.  This is deliberately
    independent of the character formula so the two can cross-check.
    """
    size = ring.size
    rows: list[list[Fraction]] = []
    rhs: list[Fraction] = []

    def equation(coeffs: dict[int, int], value: int) -> None:
        row = [Fraction(0)] * size
        for idx, c in coeffs.items():
            row[idx] += c
        rows.append(row)
        rhs.append(Fraction(value))

    equation({0: 1}, 0)
    classes: dict[frozenset[int], list[int]] = {}
    for x in range(1, size):
        members = principal_ideal(ring, x, "left").members
        classes.setdefault(members, []).append(x)
    for members, gens in classes.items():
        rep = gens[0]
        for x in gens[1:]:
            equation({x: 1, rep: -1}, 0)
        equation({y: 1 for y in members}, len(members))

    # Gaussian elimination
    pivots = []
    row_at = 0
    m = len(rows)
    for col in range(size):
        pivot = next((r for r in range(row_at, m) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[row_at], rows[pivot] = rows[pivot], rows[row_at]
        rhs[row_at], rhs[pivot] = rhs[pivot], rhs[row_at]
        inv = 1 / rows[row_at][col]
        rows[row_at] = [v * inv for v in rows[row_at]]
        rhs[row_at] = rhs[row_at] * inv
        for r in range(m):
            if r != row_at and rows[r][col] != 0:
                factor = rows[r][col]
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[row_at])]
                rhs[r] = rhs[r] - factor * rhs[row_at]
        pivots.append(col)
        row_at += 1
    if len(pivots) != size:
        raise ArithmeticError(f"weight axioms on {ring.name} do not pin a unique table")
    for r in range(row_at, m):
        if rhs[r] != 0:
            raise ArithmeticError(f"weight axioms on {ring.name} are inconsistent")

    solution = [Fraction(0)] * size
    for r, col in enumerate(pivots):
        solution[col] = rhs[r]
    return tuple(solution)
