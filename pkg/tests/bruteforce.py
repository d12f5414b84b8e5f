"""Independent brute-force oracles used by the test suite.

Everything here is deliberately naive and shares no code with the solver:
plain tuples, sets and recursion.  These implementations define expected
values; they are never imported by the package itself.
"""

from itertools import product


def box_interval(bottom, top):
    return list(product(*(range(a, b + 1) for a, b in zip(bottom, top))))


def brute_force_sdepth(elements, g) -> int:
    """Maximize min rho(top) over ALL partitions of `elements` into
    divisibility intervals fully contained in `elements`.

    Exhaustive recursion with an admissible cut (a branch whose running
    minimum cannot beat the incumbent is abandoned), so the returned
    maximum is exact.
    """
    elements = frozenset(tuple(u) for u in elements)
    if not elements:
        raise ValueError("empty poset")
    n = len(g)

    def rho(u):
        return sum(1 for a, b in zip(u, g) if a == b)

    best = -1

    def rec(uncovered, running_min):
        nonlocal best
        if running_min <= best:
            return
        if not uncovered:
            best = running_min
            return
        w = min(uncovered)  # lex-least element: forced interval bottom
        for top in sorted(uncovered):
            if all(a <= b for a, b in zip(w, top)):
                cell = box_interval(w, top)
                if all(u in uncovered for u in cell):
                    rec(uncovered - set(cell), min(running_min, rho(top)))

    rec(elements, n)
    return best


def enumerate_interval_partitions(elements):
    """Yield every partition of `elements` into valid intervals, as lists
    of (bottom, top) pairs."""
    elements = frozenset(tuple(u) for u in elements)

    def rec(uncovered):
        if not uncovered:
            yield []
            return
        w = min(uncovered)
        for top in sorted(uncovered):
            if all(a <= b for a, b in zip(w, top)):
                cell = box_interval(w, top)
                if all(u in uncovered for u in cell):
                    for rest in rec(uncovered - set(cell)):
                        yield [(w, top)] + rest

    yield from rec(elements)


def divides_raw(u, v) -> bool:
    return all(a <= b for a, b in zip(u, v))


def member_of_ideal(gens, u) -> bool:
    """Raw membership oracle: some generator divides u."""
    return any(divides_raw(g, u) for g in gens)


def member_of_scaled_ideal(gens, k, u) -> bool:
    """Membership in m^k * I: u = w * g with deg(w) >= k for a generator g."""
    return any(divides_raw(g, u) and sum(u) - sum(g) >= k for g in gens)


def brute_force_min_gens(member, n, coordinate_cap) -> list:
    """Minimal generators of an arbitrary monomial-membership predicate:
    members none of whose immediate divisors are members, enumerated over
    the cap box."""
    gens = []
    for u in product(range(coordinate_cap + 1), repeat=n):
        if not member(u):
            continue
        is_minimal = True
        for j in range(n):
            if u[j] > 0:
                below = u[:j] + (u[j] - 1,) + u[j + 1:]
                if member(below):
                    is_minimal = False
                    break
        if is_minimal:
            gens.append(u)
    return gens


def brute_force_saturation_members(gens, n, coordinate_cap, power) -> set:
    """Monomials u (within the cap box) with u * x_j^power in the ideal for
    every j: a finite stand-in for membership in (I : m^infinity)."""
    out = set()
    for u in product(range(coordinate_cap + 1), repeat=n):
        pushed = []
        for j in range(n):
            v = list(u)
            v[j] += power
            pushed.append(member_of_ideal(gens, tuple(v)))
        if all(pushed):
            out.add(u)
    return out
