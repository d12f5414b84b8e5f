"""Input/output formats for monomial ideals.

Two interchangeable representations:

* text, one monomial per line: ``x1^2*x3`` style tokens built from
  variables ``x1..xn``, ``*`` separation and ``^`` exponents, with ``1``
  for the unit monomial;
* structured (JSON), an object ``{"n": <int>, "generators": [[..], ..]}``
  with exponent arrays of length ``n``.

Both reject negative exponents and wrong-length arrays.
"""

from __future__ import annotations

import json
import re

from .monomials import DEFAULT_EXPONENT_CAP, MonomialIdeal, minimalize

_FACTOR_RE = re.compile(r"x(\d+)(?:\^(-?\d+))?$")


class IdealParseError(ValueError):
    """Parse failure with a line/column position for diagnostics."""

    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


def parse_monomial_token(token: str, line: int, column: int,
                         cap: int = DEFAULT_EXPONENT_CAP) -> dict[int, int]:
    """Parse one monomial token into a {variable index: exponent} map."""
    if token == "1":
        return {}
    exponents: dict[int, int] = {}
    col = column
    for factor in token.split("*"):
        if not factor:
            raise IdealParseError("empty factor", line, col)
        m = _FACTOR_RE.match(factor)
        if m is None:
            raise IdealParseError(f"malformed factor {factor!r}", line, col)
        index = int(m.group(1))
        if index < 1:
            raise IdealParseError(
                f"variables start at x1, got {factor!r}", line, col)
        exponent = int(m.group(2)) if m.group(2) is not None else 1
        if exponent < 0:
            raise IdealParseError(
                f"negative exponent in {factor!r}", line, col)
        if exponent > cap:
            raise IdealParseError(
                f"exponent {exponent} exceeds cap {cap}", line, col)
        exponents[index] = exponents.get(index, 0) + exponent
        col += len(factor) + 1
    return exponents


def parse_ideal_text(text: str, arity: int | None = None,
                     cap: int = DEFAULT_EXPONENT_CAP) -> MonomialIdeal:
    """Parse the one-monomial-per-line format.

    When `arity` is omitted, the ambient arity is the largest variable
    index appearing in the input (1 for a file containing only ``1``).
    """
    parsed: list[tuple[int, dict[int, int]]] = []
    max_index = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        column = raw.index(stripped[0]) + 1
        exps = parse_monomial_token(stripped, lineno, column, cap=cap)
        if exps:
            max_index = max(max_index, max(exps))
        parsed.append((lineno, exps))
    n = arity if arity is not None else max(max_index, 1)
    gens = []
    for lineno, exps in parsed:
        if exps and max(exps) > n:
            raise IdealParseError(
                f"variable x{max(exps)} exceeds arity {n}", lineno)
        gens.append(tuple(exps.get(j, 0) for j in range(1, n + 1)))
    return minimalize(gens, n)


def parse_ideal_structured(data, cap: int = DEFAULT_EXPONENT_CAP) -> MonomialIdeal:
    """Parse the structured format from a JSON string or decoded object."""
    if isinstance(data, (str, bytes)):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as exc:
            raise IdealParseError(exc.msg, exc.lineno, exc.colno) from exc
    if not isinstance(data, dict) or "n" not in data or "generators" not in data:
        raise IdealParseError("expected an object with fields 'n' and 'generators'", 1)
    n = data["n"]
    if not isinstance(n, int) or n < 1:
        raise IdealParseError(f"'n' must be a positive integer, got {n!r}", 1)
    gens = []
    for i, row in enumerate(data["generators"]):
        if not isinstance(row, (list, tuple)) or len(row) != n:
            raise IdealParseError(
                f"generator {i} must be an integer array of length {n}", 1)
        for e in row:
            if not isinstance(e, int) or e < 0:
                raise IdealParseError(
                    f"generator {i} has invalid exponent {e!r}", 1)
            if e > cap:
                raise IdealParseError(
                    f"generator {i} exponent {e} exceeds cap {cap}", 1)
        gens.append(tuple(row))
    return minimalize(gens, n)


def parse_ideal(text: str, arity: int | None = None,
                cap: int = DEFAULT_EXPONENT_CAP) -> MonomialIdeal:
    """Dispatch on content: structured if it looks like JSON, text otherwise."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return parse_ideal_structured(text, cap=cap)
    return parse_ideal_text(text, arity=arity, cap=cap)


def monomial_str(u) -> str:
    """Render an exponent tuple back into x1^2*x3 notation."""
    factors = []
    for j, e in enumerate(u, start=1):
        if e == 1:
            factors.append(f"x{j}")
        elif e > 1:
            factors.append(f"x{j}^{e}")
    return "*".join(factors) if factors else "1"


def ideal_to_text(ideal: MonomialIdeal) -> str:
    return "\n".join(monomial_str(g) for g in ideal.generators) + "\n"


def ideal_to_structured(ideal: MonomialIdeal) -> dict:
    return {"n": ideal.arity,
            "generators": [list(g) for g in ideal.generators]}


def ideal_str(ideal: MonomialIdeal) -> str:
    """Compact one-line rendering, e.g. ``(x1^2, x1*x2)``."""
    if ideal.is_zero:
        return "(0)"
    return "(" + ", ".join(monomial_str(g) for g in ideal.generators) + ")"
