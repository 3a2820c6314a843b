"""Free-product shape of guaranteed finite-index subgroups.

Free products, HNN extensions and amalgams over finite groups each contain a
finite-index subgroup that is a free product of copies of chosen base
subgroups and a free group.  These functions only do the arithmetic.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Optional


@dataclass(frozen=True)
class Factor:
    label: str
    multiplicity: int
    order: Optional[int] = None  # None: a symbolic base subgroup; else a finite group of this order

    def __post_init__(self) -> None:
        if self.multiplicity < 1:
            raise ValueError("factor multiplicity must be >= 1")


@dataclass(frozen=True)
class FreeProductDecomposition:
    factors: tuple[Factor, ...]
    free_rank: int
    index: int
    printed_d: Optional[int] = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "factors", tuple(self.factors))
        if self.free_rank < 0 or self.index < 1:
            raise ValueError("free rank must be >= 0 and index >= 1")
        if self.total_kurosh_count < 1:
            raise ValueError("decomposition has no factors")

    @property
    def total_kurosh_count(self) -> int:
        return sum(f.multiplicity for f in self.factors) + self.free_rank

    def format(self) -> str:
        factors = ",".join(f"{f.label}x{f.multiplicity}" for f in self.factors)
        return f"index={self.index} factors={factors} free_rank={self.free_rank}"


def _check_divides(a: int, b: int, what: str) -> None:
    if a < 1 or b < 1 or b % a:
        raise ValueError(what)


def free_product_finite_index(m: int, n: int, s: int) -> FreeProductDecomposition:
    """Index-``s`` subgroup of ``G1 * G2`` built from ``s/m`` copies of ``H1`` and ``s/n`` of ``H2``.

    The free rank is the Euler-consistent ``s + 1 - s/m - s/n``.  The value
    ``(s/m - 1)(s/n - 1)``, which agrees only when ``s = mn``, is kept in
    ``printed_d`` for comparison.
    """
    if m < 1 or n < 1 or s < 1 or s % m or s % n:
        raise ValueError("index must be common multiple of m and n")
    a, b = s // m, s // n
    if s + 1 - a - b < 0:
        # more vertex spaces than a connected graph on s arcs can join
        raise ValueError("no connected covering: s + 1 - s/m - s/n is negative")
    return FreeProductDecomposition(
        factors=(Factor("H1", a), Factor("H2", b)),
        free_rank=s + 1 - a - b,
        index=s,
        printed_d=(a - 1) * (b - 1),
    )


def hnn_finite_index(k: int, c: int) -> FreeProductDecomposition:
    """Index-``k`` subgroup ``K * F_{k/c}`` of an HNN extension over a group of order ``c``."""
    _check_divides(c, k, "edge group order must divide the index")
    return FreeProductDecomposition(factors=(Factor("K", 1),), free_rank=k // c, index=k)


def amalgam_finite_index(n1: int, n2: int, c: int) -> FreeProductDecomposition:
    _check_divides(c, n1, "edge group order must divide n1")
    _check_divides(c, n2, "edge group order must divide n2")
    a, b = n1 // c, n2 // c
    return FreeProductDecomposition(
        factors=(Factor("N1", b), Factor("N2", a)),
        free_rank=(a - 1) * (b - 1),
        index=n1 * n2 // c,
    )


def kurosh_rank_finite_index(n_factors: int, index: int) -> int:
    if n_factors < 1 or index < 1:
        raise ValueError("need n_factors >= 1 and index >= 1")
    return 1 + index * (n_factors - 1)


def chi_of_decomposition(d: FreeProductDecomposition, factor_chi: Mapping[str, Fraction]) -> Fraction:
    """Euler characteristic of the free product: factor values, plus ``-1`` per extra Kurosh factor."""
    total = Fraction(0)
    for f in d.factors:
        if f.label not in factor_chi:
            raise KeyError(f"no Euler characteristic for factor {f.label}")
        total += f.multiplicity * Fraction(factor_chi[f.label])
    return total - (d.total_kurosh_count - 1)
