"""Exact arithmetic on monomials and monomial ideals.

Monomials are plain tuples of nonnegative exponents of a fixed arity n
(the ambient ring has variables x1..xn).  Ideals are stored by their
unique minimal generating antichain, canonically ordered, so two equal
ideals compare equal and serialize identically.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

Monomial = tuple[int, ...]

# Per-coordinate exponent cap for validated inputs.  Boxes beyond this are
# unsearchable anyway; the cap keeps parsed data sane.
DEFAULT_EXPONENT_CAP = 2**15 - 1


class ArityMismatch(ValueError):
    """Raised when operands live in polynomial rings of different arity."""


def as_monomial(exponents, arity: int | None = None,
                cap: int = DEFAULT_EXPONENT_CAP) -> Monomial:
    """Validate and normalize an exponent sequence into a Monomial."""
    m = tuple(int(e) for e in exponents)
    if arity is not None and len(m) != arity:
        raise ArityMismatch(f"expected arity {arity}, got {len(m)}")
    for e in m:
        if e < 0:
            raise ValueError(f"negative exponent in {m}")
        if e > cap:
            raise ValueError(f"exponent {e} exceeds cap {cap}")
    return m


def _check_same_arity(u: Monomial, v: Monomial) -> None:
    if len(u) != len(v):
        raise ArityMismatch(f"arity mismatch: {len(u)} vs {len(v)}")


def divides(u: Monomial, v: Monomial) -> bool:
    """True iff u | v, i.e. u_j <= v_j for every coordinate."""
    _check_same_arity(u, v)
    return all(a <= b for a, b in zip(u, v))


def lcm(u: Monomial, v: Monomial) -> Monomial:
    _check_same_arity(u, v)
    return tuple(max(a, b) for a, b in zip(u, v))


def gcd(u: Monomial, v: Monomial) -> Monomial:
    _check_same_arity(u, v)
    return tuple(min(a, b) for a, b in zip(u, v))


def mul(u: Monomial, v: Monomial) -> Monomial:
    _check_same_arity(u, v)
    return tuple(a + b for a, b in zip(u, v))


def total_degree(u: Monomial) -> int:
    return sum(u)


def degrevlex_key(u: Monomial):
    """Sort key giving ascending degrevlex order (x2^2 < x1x2 < x1^2)."""
    return (sum(u), tuple(-e for e in reversed(u)))


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal, stored by its minimal generating antichain.

    The zero ideal has no generators; the unit ideal is generated by the
    unit monomial (0,...,0).  Generators are kept in ascending degrevlex
    order so all derived output is reproducible byte for byte.
    """

    arity: int
    generators: tuple[Monomial, ...] = field(default=())

    def __post_init__(self):
        if self.arity < 1:
            raise ValueError(f"arity must be >= 1, got {self.arity}")
        gens = minimal_antichain(self.generators, self.arity)
        object.__setattr__(self, "generators", gens)

    @property
    def is_zero(self) -> bool:
        return not self.generators

    @property
    def is_unit(self) -> bool:
        return len(self.generators) == 1 and sum(self.generators[0]) == 0

    def __iter__(self):
        return iter(self.generators)


def minimal_antichain(gens, arity: int) -> tuple[Monomial, ...]:
    """Reduce a generator collection to its divisibility-minimal antichain."""
    pool = sorted({as_monomial(g, arity) for g in gens}, key=degrevlex_key)
    kept: list[Monomial] = []
    for g in pool:
        if not any(divides(h, g) for h in kept):
            kept.append(g)
    return tuple(kept)


def minimalize(gens, arity: int) -> MonomialIdeal:
    """The ideal generated by `gens`, with redundant generators dropped."""
    return MonomialIdeal(arity, tuple(tuple(g) for g in gens))


def zero_ideal(arity: int) -> MonomialIdeal:
    return MonomialIdeal(arity, ())


def unit_ideal(arity: int) -> MonomialIdeal:
    return MonomialIdeal(arity, ((0,) * arity,))


def contains(ideal: MonomialIdeal, u: Monomial) -> bool:
    """Membership test: true iff some generator divides u."""
    if len(u) != ideal.arity:
        raise ArityMismatch(f"arity mismatch: {len(u)} vs {ideal.arity}")
    return any(divides(g, u) for g in ideal.generators)


def _check_ideal_arity(i: MonomialIdeal, j: MonomialIdeal) -> None:
    if i.arity != j.arity:
        raise ArityMismatch(f"arity mismatch: {i.arity} vs {j.arity}")


def ideal_sum(i: MonomialIdeal, j: MonomialIdeal) -> MonomialIdeal:
    _check_ideal_arity(i, j)
    return minimalize(i.generators + j.generators, i.arity)


def ideal_product(i: MonomialIdeal, j: MonomialIdeal) -> MonomialIdeal:
    _check_ideal_arity(i, j)
    gens = [mul(f, g) for f in i.generators for g in j.generators]
    return minimalize(gens, i.arity)


def ideal_intersection(i: MonomialIdeal, j: MonomialIdeal) -> MonomialIdeal:
    _check_ideal_arity(i, j)
    gens = [lcm(f, g) for f in i.generators for g in j.generators]
    return minimalize(gens, i.arity)


def colon(ideal: MonomialIdeal, u: Monomial) -> MonomialIdeal:
    """The colon ideal (I : u) = {w : w*u in I}."""
    if len(u) != ideal.arity:
        raise ArityMismatch(f"arity mismatch: {len(u)} vs {ideal.arity}")
    gens = [tuple(max(a - b, 0) for a, b in zip(g, u)) for g in ideal.generators]
    return minimalize(gens, ideal.arity)


def colon_ideal(i: MonomialIdeal, j: MonomialIdeal) -> MonomialIdeal:
    """(I : J) = intersection of (I : v) over the generators v of J.

    (I : 0) is the whole ring by convention.
    """
    _check_ideal_arity(i, j)
    if j.is_zero:
        return unit_ideal(i.arity)
    result = colon(i, j.generators[0])
    for v in j.generators[1:]:
        result = ideal_intersection(result, colon(i, v))
    return result


def saturate_variable(ideal: MonomialIdeal, j: int) -> MonomialIdeal:
    """(I : x_j^infinity): delete the j-th exponent of every generator.

    `j` is 1-based, matching the variable names x1..xn.
    """
    if not 1 <= j <= ideal.arity:
        raise IndexError(f"variable index {j} out of range 1..{ideal.arity}")
    pos = j - 1
    gens = [g[:pos] + (0,) + g[pos + 1:] for g in ideal.generators]
    return minimalize(gens, ideal.arity)


def saturate(ideal: MonomialIdeal) -> MonomialIdeal:
    """Total saturation (I : m^infinity) as the intersection of the
    per-variable saturations.  Zero saturates to zero, the unit ideal to
    itself."""
    if ideal.is_zero:
        return ideal
    result = saturate_variable(ideal, 1)
    for j in range(2, ideal.arity + 1):
        result = ideal_intersection(result, saturate_variable(ideal, j))
    return result


def maximal_power(arity: int, k: int) -> MonomialIdeal:
    """The k-th power of the maximal ideal (x1,...,xn): generated by all
    monomials of total degree exactly k."""
    if arity < 1:
        raise ValueError(f"arity must be >= 1, got {arity}")
    if k < 1:
        raise ValueError(f"power must be >= 1, got {k}")
    gens = [g for g in itertools.product(range(k + 1), repeat=arity)
            if sum(g) == k]
    ideal = minimalize(gens, arity)
    assert len(ideal.generators) == math.comb(arity + k - 1, arity - 1)
    return ideal


def num_min_gens(ideal: MonomialIdeal) -> int:
    """Cardinality of the minimal generating antichain."""
    return len(ideal.generators)


@dataclass(frozen=True)
class QuotientPresentation:
    """A quotient module I/J of two monomial ideals with J contained in I.

    S/I is presented with the unit ideal as numerator and I as denominator.
    """

    numerator: MonomialIdeal
    denominator: MonomialIdeal

    def __post_init__(self):
        _check_ideal_arity(self.numerator, self.denominator)
        for v in self.denominator.generators:
            if not contains(self.numerator, v):
                raise ValueError(
                    f"denominator generator {v} is not in the numerator ideal")

    @property
    def arity(self) -> int:
        return self.numerator.arity


def quotient_ring_presentation(ideal: MonomialIdeal) -> QuotientPresentation:
    """S/I as a quotient presentation (unit ideal over I)."""
    return QuotientPresentation(unit_ideal(ideal.arity), ideal)
