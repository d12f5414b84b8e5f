"""Structural Stanley depth results that bypass the partition search.

* the depth-zero criterion: for a quotient of monomial ideals, Stanley
  depth zero is equivalent to a nonzero saturation submodule, which is a
  pure ideal computation;
* the Janet decomposition of S/I: a constructive Stanley decomposition
  obtained by peeling powers of the last variable;
* a counting certificate bounding the Stanley depth of powers of the
  maximal ideal from above, plus sweep harnesses that gather exact values
  next to the conjectured ceiling(n / (k+1)) without asserting equality.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .monomials import (
    Monomial,
    MonomialIdeal,
    QuotientPresentation,
    contains,
    ideal_intersection,
    ideal_product,
    maximal_power,
    minimal_antichain,
    num_min_gens,
    saturate,
    unit_ideal,
)
from .partitions import (
    SdepthCertificate,
    SearchTimeout,
    StanleyDecomposition,
    sdepth_ideal,
    sdepth_quotient,
)
from .posets import alpha_formula


@dataclass(frozen=True)
class SaturationReport:
    """Outcome of the saturation comparison behind the depth-zero test."""

    ideal: MonomialIdeal
    saturation: MonomialIdeal
    is_saturated: bool
    witness: Monomial | None

    def __post_init__(self):
        assert self.is_saturated == (self.witness is None)


def _witness(saturation: MonomialIdeal, ideal: MonomialIdeal) -> Monomial | None:
    for g in saturation.generators:
        if not contains(ideal, g):
            return g
    return None


def ideal_saturation_report(ideal: MonomialIdeal) -> SaturationReport:
    """Compare an ideal with its total saturation."""
    sat = saturate(ideal)
    witness = _witness(sat, ideal)
    return SaturationReport(ideal, sat, witness is None, witness)


def sdepth_zero_quotient(numerator: MonomialIdeal,
                         denominator: MonomialIdeal) -> tuple[bool, SaturationReport]:
    """Decide sdepth(I/J) = 0 without any search.

    A quotient of monomial ideals has one-dimensional graded pieces, so its
    Stanley depth vanishes exactly when its depth does, i.e. when the
    saturation submodule ((J : m^infinity) cap I) / J is nonzero.  For S/I
    (unit numerator) this is the classical test I^sat != I.
    """
    QuotientPresentation(numerator, denominator)
    relevant = ideal_intersection(saturate(denominator), numerator)
    witness = _witness(relevant, denominator)
    report = SaturationReport(denominator, relevant, witness is None, witness)
    return not report.is_saturated, report


def _janet(n: int, gens: tuple[Monomial, ...]) -> list[tuple[Monomial, frozenset[int]]]:
    if any(sum(g) == 0 for g in gens):
        return []  # unit ideal: the quotient is zero
    if n == 0:
        return [((), frozenset())]
    q = max((g[n - 1] for g in gens), default=0)
    spaces: list[tuple[Monomial, frozenset[int]]] = []
    for j in range(q + 1):
        # the j-th layer is S'/I_j, with I_j generated by the x_n-free parts
        # of the generators whose x_n exponent is at most j
        sub_gens = minimal_antichain(
            [g[:-1] for g in gens if g[n - 1] <= j], n - 1)
        stabilized = j == q
        for m, z in _janet(n - 1, sub_gens):
            spaces.append((m + (j,), z | {n} if stabilized else z))
    return spaces


def janet_decomposition(ideal: MonomialIdeal) -> StanleyDecomposition:
    """Stanley decomposition of S/I built by recursive splitting along the
    last variable: layers 1, x_n, ..., x_n^(q-1) of quotients in one fewer
    variable, and a final layer x_n^q with x_n adjoined to every space."""
    if ideal.is_unit:
        raise ValueError("S/I is the zero module for the unit ideal")
    return StanleyDecomposition(
        ideal.arity, tuple(_janet(ideal.arity, ideal.generators)))


def conjecture_bound(n: int, k: int) -> int:
    """ceil(n / (k+1)), the conjectured value of sdepth(m^k)."""
    if n < 1 or k < 1:
        raise ValueError(f"need n >= 1 and k >= 1, got n={n}, k={k}")
    return -(-n // (k + 1))


def _alpha_or_zero(n: int, k: int, d: int) -> int:
    return alpha_formula(n, k, d) if k <= d <= k * n else 0


def check_counting_inequality(n: int, k: int, a: int) -> bool:
    """True iff the degree-(k+1) level of the m^k poset is too small to
    host a partition with all top ranks >= a+1, i.e. iff

        alpha_{k+1} >= n*a + (alpha_k - n)*(a + 1)

    FAILS.  A failure certifies sdepth(m^k) <= a."""
    if n < 1 or k < 1 or a < 1:
        raise ValueError("need n, k, a >= 1")
    alpha_k = _alpha_or_zero(n, k, k)
    alpha_next = _alpha_or_zero(n, k, k + 1)
    return alpha_next < n * a + (alpha_k - n) * (a + 1)


@dataclass(frozen=True)
class SweepRow:
    """One cell of the maximal-power sweep.  `bound` is the conjectured
    value; equality with the computed sdepth is reported, never asserted."""

    n: int
    k: int
    alpha_k: int
    sdepth: int | None
    bound: int
    conjecture_match: bool | None
    status: str
    ms: int
    nodes: int

    @property
    def bound_satisfied(self) -> bool | None:
        if self.sdepth is None:
            return None
        return 1 <= self.sdepth <= self.bound


def conjecture_sweep(n_values, k_values, *, timeout_s: float = 60.0,
                     use_prune: bool = True, threads: int = 1) -> list[SweepRow]:
    """Exact sdepth(m^k) across a grid, next to the conjectured value.
    Cells that exhaust their budget are reported with status 'timeout' and
    the sweep continues."""
    rows = []
    for n in sorted(set(n_values)):
        for k in sorted(set(k_values)):
            rows.append(_sweep_cell(n, k, timeout_s, use_prune, threads))
    return rows


def _sweep_cell(n: int, k: int, timeout_s: float, use_prune: bool,
                threads: int) -> SweepRow:
    bound = conjecture_bound(n, k)
    start = time.perf_counter()
    try:
        cert = sdepth_ideal(maximal_power(n, k), timeout_s=timeout_s,
                            use_prune=use_prune, threads=threads)
        sdepth, nodes, status = cert.s, cert.stats.nodes, "ok"
    except SearchTimeout as exc:
        sdepth, nodes, status = None, exc.stats.nodes, "timeout"
    ms = int((time.perf_counter() - start) * 1000)
    match = (sdepth == bound) if sdepth is not None else None
    return SweepRow(n, k, alpha_formula(n, k, k), sdepth, bound, match,
                    status, ms, nodes)


SWEEP_CSV_HEADER = "n,k,alpha_k,sdepth,bound,conjecture_match,status,ms,nodes"


def sweep_rows_to_csv(rows: list[SweepRow]) -> str:
    lines = [SWEEP_CSV_HEADER]
    for r in rows:
        sdepth = "" if r.sdepth is None else str(r.sdepth)
        match = "" if r.conjecture_match is None else str(r.conjecture_match).lower()
        lines.append(f"{r.n},{r.k},{r.alpha_k},{sdepth},{r.bound},"
                     f"{match},{r.status},{r.ms},{r.nodes}")
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class MkiRow:
    """One cell of the sweep over m^k * I: the minimal generator count (the
    Hilbert function of the associated fiber algebra) and the exact sdepth."""

    k: int
    num_gens: int
    sdepth: int | None
    status: str
    ms: int
    nodes: int


def mki_sweep(ideal: MonomialIdeal, k_values, *, timeout_s: float = 60.0,
              use_prune: bool = True, threads: int = 1) -> list[MkiRow]:
    """For each k, build m^k * I and record |G(m^k I)| plus sdepth(m^k I).
    k = 0 contributes the row of I itself."""
    if ideal.is_zero:
        raise ValueError("need a nonzero ideal")
    rows = []
    for k in sorted(set(k_values)):
        if k < 0:
            raise ValueError(f"negative power {k}")
        scaled = ideal if k == 0 else ideal_product(
            maximal_power(ideal.arity, k), ideal)
        start = time.perf_counter()
        try:
            cert = sdepth_ideal(scaled, timeout_s=timeout_s,
                                use_prune=use_prune, threads=threads)
            sdepth, nodes, status = cert.s, cert.stats.nodes, "ok"
        except SearchTimeout as exc:
            sdepth, nodes, status = None, exc.stats.nodes, "timeout"
        ms = int((time.perf_counter() - start) * 1000)
        rows.append(MkiRow(k, num_min_gens(scaled), sdepth, status, ms, nodes))
    return rows


MKI_CSV_HEADER = "k,num_gens,sdepth,status,ms,nodes"


def mki_rows_to_csv(rows: list[MkiRow]) -> str:
    lines = [MKI_CSV_HEADER]
    for r in rows:
        sdepth = "" if r.sdepth is None else str(r.sdepth)
        lines.append(f"{r.k},{r.num_gens},{sdepth},{r.status},{r.ms},{r.nodes}")
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class ComparisonReport:
    """Exploratory comparison of sdepth(I) against sdepth(S/I) + 1.  The
    inequality is an open question; this reports, it does not assert."""

    sdepth_ideal: int
    sdepth_quotient: int
    inequality_holds: bool
    ideal_certificate: SdepthCertificate
    quotient_certificate: SdepthCertificate


def ideal_vs_quotient_report(ideal: MonomialIdeal, *, timeout_s: float = 60.0,
                             use_prune: bool = True,
                             threads: int = 1) -> ComparisonReport:
    """Compute sdepth(I) and sdepth(S/I) exactly and report whether
    sdepth(I) >= sdepth(S/I) + 1 held for this ideal."""
    if ideal.is_zero or ideal.is_unit:
        raise ValueError("need a proper nonzero ideal")
    cert_i = sdepth_ideal(ideal, timeout_s=timeout_s, use_prune=use_prune,
                          threads=threads)
    cert_q = sdepth_quotient(unit_ideal(ideal.arity), ideal,
                             timeout_s=timeout_s, use_prune=use_prune,
                             threads=threads)
    return ComparisonReport(cert_i.s, cert_q.s, cert_i.s >= cert_q.s + 1,
                            cert_i, cert_q)
