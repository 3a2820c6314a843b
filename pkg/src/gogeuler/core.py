"""Exact rationals, vertex-group descriptors and their cataloged invariant values.

Every invariant in the package is a :class:`fractions.Fraction`.  ``None``
stands for "undefined" (omega of an undeclared custom group) or "unbounded"
(the largest finite subgroup of a nilpotent/polycyclic group of unknown torsion).
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

Rational = Fraction

_RATIONAL_RE = re.compile(r"^([+-]?\d+)(?:/(\d+))?$")


def parse_rational(text: str) -> Fraction:
    """Parse ``p/q`` or an integer; ``q`` must be positive."""
    m = _RATIONAL_RE.match(text.strip())
    if m is None:
        raise ValueError(f"not a rational: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator: {text!r}")
    return Fraction(num, den)


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class InvariantRecord:
    omega: Optional[Fraction]
    rank_gradient: Fraction
    l2_betti: Fraction
    betti_volume: Fraction
    vc_equals_rg: bool
    finite_order: Optional[int] = None
    max_finite_subgroup: Optional[int] = None  # None means unbounded/unknown
    hypothesis_ok: bool = True

    def __post_init__(self) -> None:
        if self.betti_volume > self.rank_gradient:
            raise ValueError("betti volume exceeds rank gradient")
        n = self.finite_order
        if n is not None:
            if n < 1:
                raise ValueError("finite order must be positive")
            inv = Fraction(1, n)
            expected = (inv, -inv, Fraction(0), -inv, n)
            actual = (self.omega, self.rank_gradient, self.l2_betti,
                      self.betti_volume, self.max_finite_subgroup)
            if actual != expected:
                raise ValueError(f"record inconsistent with a finite group of order {n}")
        if self.max_finite_subgroup is not None and self.max_finite_subgroup < 1:
            raise ValueError("max finite subgroup order must be positive")

    @property
    def is_finite(self) -> bool:
        return self.finite_order is not None


@dataclass(frozen=True)
class Finite:
    order: int
    catalog_name: Optional[str] = None

    def __post_init__(self) -> None:
        if self.order < 1:
            raise ValueError("finite group order must be >= 1")


@dataclass(frozen=True)
class SurfaceGenus:
    g: int

    def __post_init__(self) -> None:
        if self.g < 1:
            raise ValueError("surface genus must be >= 1")


@dataclass(frozen=True)
class FreeOfRank:
    r: int

    def __post_init__(self) -> None:
        if self.r < 0:
            raise ValueError("free rank must be >= 0")


@dataclass(frozen=True)
class NilpotentInfinite:
    pass


@dataclass(frozen=True)
class PolycyclicInfinite:
    pass


@dataclass(frozen=True)
class Custom:
    name: str
    record: InvariantRecord


GroupDescriptor = Union[Finite, SurfaceGenus, FreeOfRank, NilpotentInfinite, PolycyclicInfinite, Custom]


def finite_record(n: int) -> InvariantRecord:
    inv = Fraction(1, n)
    return InvariantRecord(
        omega=inv,
        rank_gradient=-inv,
        l2_betti=Fraction(0),
        betti_volume=-inv,
        vc_equals_rg=True,
        finite_order=n,
        max_finite_subgroup=n,
    )


def base_invariants(d: GroupDescriptor) -> InvariantRecord:
    """Cataloged invariant values of a single vertex group."""
    if isinstance(d, Finite):
        return finite_record(d.order)
    if isinstance(d, SurfaceGenus):
        v = Fraction(2 * (d.g - 1))
        return InvariantRecord(Fraction(0), v, v, v, True, None, 1)
    if isinstance(d, FreeOfRank):
        if d.r == 0:
            # the trivial group is finite of order 1; b1^(2) vanishes there
            return finite_record(1)
        v = Fraction(d.r - 1)
        return InvariantRecord(1 - Fraction(d.r), v, v, v, True, None, 1)
    if isinstance(d, (NilpotentInfinite, PolycyclicInfinite)):
        zero = Fraction(0)
        return InvariantRecord(zero, zero, zero, zero, True, None, None)
    if isinstance(d, Custom):
        return d.record
    raise TypeError(f"not a group descriptor: {d!r}")


def describe(d: GroupDescriptor) -> str:
    """Text form used by the graph file format."""
    if isinstance(d, Finite):
        return f"finite:{d.catalog_name}" if d.catalog_name else f"finite:{d.order}"
    if isinstance(d, SurfaceGenus):
        return f"surface:{d.g}"
    if isinstance(d, FreeOfRank):
        return f"free:{d.r}"
    if isinstance(d, NilpotentInfinite):
        return "nilpotent"
    if isinstance(d, PolycyclicInfinite):
        return "polycyclic"
    if isinstance(d, Custom):
        return f"custom:{d.name}"
    raise TypeError(f"not a group descriptor: {d!r}")
