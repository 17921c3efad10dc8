"""Partition combinatorics and Schur-module dimensions.

Dimensions come from the hook content formula, which counts semistandard
tableaux and is characteristic-free; symmetric and exterior powers are the
two extreme partition shapes.  The length-(rank) resolution of the Frobenius
twist of a vector space inside its p-th symmetric power is represented at
the dimension level only: its terms are the hook shapes (p-k, 1^k) and
exactness is certified by the vanishing alternating sum.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .polynomials import is_prime


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing tuple of positive integers (possibly empty)."""

    parts: tuple

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        if any(not isinstance(x, int) or x <= 0 for x in parts):
            raise ValueError(f"parts must be positive integers: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts must be weakly decreasing: {parts}")

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def cells(self):
        for r, row_len in enumerate(self.parts):
            for c in range(row_len):
                yield r, c

    def arm(self, r, c) -> int:
        return self.parts[r] - c - 1

    def leg(self, r, c) -> int:
        return sum(1 for rr in range(r + 1, len(self.parts))
                   if self.parts[rr] > c)

    def hook(self, r, c) -> int:
        return self.arm(r, c) + self.leg(r, c) + 1

    def __str__(self):
        return "(" + ",".join(map(str, self.parts)) + ")"


def parse_partition(text: str) -> Partition:
    s = text.strip().strip("()").strip()
    if not s:
        return Partition(())
    return Partition(tuple(int(x) for x in s.split(",")))


def schur_dimension(lam: Partition, r: int) -> int:
    """Dimension of the Schur power of a rank-r space, via hook content.

    Zero exactly when the partition has more than r rows.
    """
    if r < 1:
        raise ValueError("rank must be at least 1")
    if lam.length > r:
        return 0
    value = Fraction(1)
    for (i, j) in lam.cells():
        value *= Fraction(r + j - i, lam.hook(i, j))
    if value.denominator != 1:
        raise AssertionError("hook content product is not integral")
    return int(value)


def standard_tableaux_count(lam: Partition) -> int:
    """Number of standard Young tableaux, by the hook length formula."""
    if lam.weight == 0:
        return 1
    hooks = 1
    for (i, j) in lam.cells():
        hooks *= lam.hook(i, j)
    count, rem = divmod(factorial(lam.weight), hooks)
    if rem:
        raise AssertionError("hook length formula gave a non-integer")
    return count


def partitions_of(m: int):
    """All partitions of m, largest part first, in lexicographic-ish order."""
    def rec(remaining, cap):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, cap), 0, -1):
            for rest in rec(remaining - first, first):
                yield (first,) + rest
    for parts in rec(m, m):
        yield Partition(parts)


def schur_weyl_sum(m: int, r: int) -> int:
    """sum over partitions of m of (Schur dimension) * (standard tableaux).

    Decomposing the m-th tensor power of a rank-r space makes this r^m.
    """
    return sum(schur_dimension(lam, r) * standard_tableaux_count(lam)
               for lam in partitions_of(m))


@dataclass(frozen=True)
class CarterLusztigComplex:
    """Dimension data of the hook-shape resolution of the Frobenius twist.

    The complex 0 -> E^(p) -> S^(p)(E) -> S^(p-1,1)(E) -> ... runs over the
    hook partitions (p - k, 1^k) for k = 0..min(p-1, r-1); exactness forces
    the alternating dimension sum to vanish, which is asserted on
    construction.
    """

    rank: int
    prime: int
    partitions: tuple
    dimensions: tuple

    @property
    def alternating_sum(self) -> int:
        total = self.rank
        for k, dim in enumerate(self.dimensions):
            total += dim if k % 2 else -dim
        return total


def carter_lusztig_complex(r: int, p: int) -> CarterLusztigComplex:
    if r < 1:
        raise ValueError("rank must be at least 1")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    k_max = min(p - 1, r - 1)
    partitions = tuple(Partition((p - k,) + (1,) * k)
                       for k in range(k_max + 1))
    dims = tuple(schur_dimension(lam, r) for lam in partitions)
    complex_ = CarterLusztigComplex(r, p, partitions, dims)
    if complex_.alternating_sum != 0:
        raise AssertionError(
            f"alternating dimension sum is {complex_.alternating_sum}, "
            "expected 0")
    return complex_


@dataclass(frozen=True)
class HookFamilyReport:
    """The hook shapes (N - k, 1^k), k < rank, with their dimensions.

    This is the bookkeeping an amplitude bound for ample bundles of rank r
    consumes: the family interpolating between the N-th symmetric power and
    the longest admissible hook.
    """

    rank: int
    prime: int
    n_value: int
    partitions: tuple
    dimensions: tuple


def hook_family_bookkeeping(r: int, p: int, n_value: int) -> HookFamilyReport:
    if r < 1:
        raise ValueError("rank must be at least 1")
    if n_value < 1:
        raise ValueError("N must be at least 1")
    partitions = tuple(Partition((n_value - k,) + (1,) * k)
                       for k in range(min(r, n_value)))
    dims = tuple(schur_dimension(lam, r) for lam in partitions)
    return HookFamilyReport(r, p, n_value, partitions, dims)
