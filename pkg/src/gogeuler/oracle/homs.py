"""Homomorphism counts into finite groups: character-degree formula versus exhaustion."""
from __future__ import annotations

from fractions import Fraction
from typing import Optional

from . import kernels
from .groups import FiniteGroupTable, IrrepDimensions, hom_count, irrep_dimensions

DEFAULT_BUDGET = 10**8


class BudgetExceeded(RuntimeError):
    pass


class InconsistentCount(ArithmeticError):
    pass


def mednykh_eval(g: int, t: FiniteGroupTable, dims: Optional[IrrepDimensions] = None) -> int:
    """``|C|^(2g-1) * sum over irreps V of dim(V)^(2-2g)``, evaluated exactly."""
    if g < 0:
        raise ValueError("genus must be >= 0")
    if dims is None:
        dims = irrep_dimensions(t)
    n = Fraction(t.order)
    total = sum((Fraction(1, d) ** (2 * g - 2) for d in dims), Fraction(0))
    value = n ** (2 * g - 1) * total
    if value.denominator != 1:
        raise InconsistentCount(f"non-integral homomorphism count {value}")
    return int(value)


def hom_count_surface(g: int, t: FiniteGroupTable, budget: int = DEFAULT_BUDGET, backend: Optional[str] = None) -> int:
    """Brute-force ``|Hom(pi_1(S_g), C)|``: all 2g-tuples whose commutator product is trivial."""
    if g < 0:
        raise ValueError("genus must be >= 0")
    if t.order ** (2 * g) > budget:
        raise BudgetExceeded(f"{t.order}^{2 * g} tuples exceed budget {budget}")
    return kernels.surface_hom_count(t.mul, t.inv, g, backend=backend)


def hom_count_free_product(
    ta: FiniteGroupTable, tb: FiniteGroupTable, tc: FiniteGroupTable, budget: int = DEFAULT_BUDGET
) -> int:
    for t in (ta, tb):
        if tc.order ** len(t.generators) > budget:
            raise BudgetExceeded(f"{tc.order}^{len(t.generators)} assignments exceed budget {budget}")
    return hom_count(ta, tc) * hom_count(tb, tc)
