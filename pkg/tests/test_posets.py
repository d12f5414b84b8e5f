import itertools
import math
import random

import pytest

from sdepthlab import (
    alpha_enumerate,
    alpha_formula,
    build_poset,
    default_box,
    maximal_power,
    maximal_power_poset,
    minimalize,
    unit_ideal,
    zero_ideal,
)


def test_build_poset_maximal_ideal():
    p = maximal_power_poset(2, 1)
    assert set(p.elements) == {(1, 0), (0, 1), (1, 1)}
    assert p.g == (1, 1)


def test_build_poset_square_power():
    p = maximal_power_poset(2, 2)
    counts = p.level_counts().counts
    assert counts == {2: 3, 3: 2, 4: 1}
    assert len(p) == 6


def test_build_poset_quotient_exclusion():
    p = build_poset(minimalize([(1, 0)], 2), minimalize([(1, 1)], 2),
                    g=(1, 1))
    assert p.elements == ((1, 0),)


def test_build_poset_default_box():
    ideal = minimalize([(2, 0), (0, 3)], 2)
    assert default_box(ideal, zero_ideal(2)) == (2, 3)
    p = build_poset(ideal)
    assert p.g == (2, 3)
    assert all(e in p for e in ideal.generators)


def test_build_poset_invalid_box():
    with pytest.raises(ValueError):
        build_poset(minimalize([(2, 0)], 2), g=(1, 1))
    with pytest.raises(ValueError):
        build_poset(minimalize([(1, 0)], 2), g=(1,))


def test_rho():
    p = maximal_power_poset(2, 1)
    assert p.rho((1, 1)) == 2
    p2 = maximal_power_poset(2, 2)
    assert p2.rho((2, 1)) == 1
    assert p2.rho((1, 1)) == 0
    with pytest.raises(KeyError):
        p2.rho((0, 1))


def test_rho_ceiling_characterization():
    p = maximal_power_poset(3, 2)
    for u in p.elements:
        assert (p.rho(u) == 3) == (u == (2, 2, 2))
    # degree-k generators: rank 0 except the pure powers which have rank 1
    for u in p.level(2):
        expected = 1 if u in {(2, 0, 0), (0, 2, 0), (0, 0, 2)} else 0
        assert p.rho(u) == expected


def test_levels():
    p = maximal_power_poset(2, 2)
    assert set(p.level(3)) == {(2, 1), (1, 2)}
    assert p.level(1) == ()
    assert p.level_counts().total == len(p)


def test_alpha_formula_boundary_values():
    for n in range(1, 6):
        for k in range(1, 5):
            assert alpha_formula(n, k, k) == math.comb(n + k - 1, n - 1)
            if k + 1 <= k * n:
                assert alpha_formula(n, k, k + 1) == \
                    math.comb(n + k, n - 1) - n
    assert alpha_formula(2, 1, 1) == 2
    assert alpha_formula(2, 1, 2) == 1


def test_alpha_formula_domain():
    with pytest.raises(ValueError):
        alpha_formula(2, 1, 0)
    with pytest.raises(ValueError):
        alpha_formula(2, 1, 3)
    with pytest.raises(ValueError):
        alpha_formula(0, 1, 1)


def test_alpha_enumerate():
    assert alpha_enumerate(3, 2, 6) == 1
    assert alpha_enumerate(3, 1, 2) == 3
    assert alpha_enumerate(3, 2, 7) == 0


def test_alpha_formula_equals_enumeration_small():
    for n in range(1, 5):
        for k in range(1, 4):
            for d in range(k, k * n + 1):
                assert alpha_formula(n, k, d) == alpha_enumerate(n, k, d)


def test_alpha_sum_identity():
    for n in range(1, 5):
        for k in range(1, 4):
            total = sum(alpha_formula(n, k, d) for d in range(k, k * n + 1))
            below = sum(math.comb(n + d - 1, n - 1) for d in range(k))
            assert total == (k + 1) ** n - below
            assert total == len(maximal_power_poset(n, k))


def test_poset_permutation_equivariance():
    rng = random.Random(13)
    for _ in range(20):
        n = rng.randint(2, 4)
        gens = [tuple(rng.randint(0, 2) for _ in range(n))
                for _ in range(rng.randint(1, 4))]
        gens = [g for g in gens if any(g)]
        if not gens:
            continue
        ideal = minimalize(gens, n)
        perm = list(range(n))
        rng.shuffle(perm)
        permuted = minimalize([tuple(g[perm[j]] for j in range(n))
                               for g in ideal.generators], n)
        p = build_poset(ideal)
        q = build_poset(permuted)
        mapped = {tuple(u[perm[j]] for j in range(n)) for u in p.elements}
        assert mapped == set(q.elements)
        for u in p.elements:
            image = tuple(u[perm[j]] for j in range(n))
            assert p.rho(u) == q.rho(image)


def test_code_order_is_lex_and_bijective():
    p = maximal_power_poset(2, 2)
    codes = [p.code(u) for u in p.elements]
    assert codes == sorted(codes)
    assert len(set(codes)) == len(p)
    assert list(p.elements) == sorted(p.elements)
    for i, u in enumerate(p.elements):
        assert p.position(u) == i


def test_is_up_closed():
    assert maximal_power_poset(3, 2).is_up_closed()
    quotient = build_poset(unit_ideal(2), maximal_power(2, 1))
    assert not quotient.is_up_closed()


def test_dump_format():
    p = maximal_power_poset(2, 1)
    lines = p.dump().splitlines()
    assert lines[0] == "n=2 g=1,1 size=3"
    assert lines[1:] == ["0,1 deg=1 rho=1", "1,0 deg=1 rho=1",
                         "1,1 deg=2 rho=2"]


def test_empty_and_degenerate_posets():
    # S/S is the zero module: empty poset
    p = build_poset(maximal_power(2, 1), maximal_power(2, 1))
    assert len(p) == 0
    # S/0 has the single box monomial 1, with full rank
    q = build_poset(unit_ideal(2), zero_ideal(2))
    assert q.elements == ((0, 0),)
    assert q.rho((0, 0)) == 2
