import random
from fractions import Fraction

import pytest

from soclekit.apolarity import (
    Socle,
    annihilates,
    hilbert_function,
    random_socle,
    synth_power_sum,
)
from soclekit.errors import EnvelopeError
from soclekit.linalg import binomial_nonneg, monomial_basis
from soclekit.resolution import (
    BettiTable,
    check_duality,
    check_euler,
    hf_from_betti,
    interior_square,
    koszul_betti,
    quotient_bases,
)


def nondegenerate_quadric(n):
    return synth_power_sum(
        [[1 if i == j else 0 for i in range(n + 1)] for j in range(n + 1)],
        [1] * (n + 1),
        2,
    )


# ---------------------------------------------------------------------------
# quotient bases


def test_quotient_dimensions_match_hilbert_function():
    g = Socle.parse("y0^3+y1^3")
    qb = quotient_bases(g)
    assert qb.dims() == hilbert_function(g) == (1, 2, 2, 1)
    assert qb.standard[2] == [(2, 0), (0, 2)]
    assert len(qb.standard[3]) == 1


def test_projector_kills_exactly_the_annihilator():
    rng = random.Random(9)
    g = random_socle(rng, 2, 3)
    qb = quotient_bases(g)
    for e in range(4):
        basis = monomial_basis(2, e)
        for _ in range(10):
            coeffs = {m: rng.randint(-4, 4) for m in basis}
            if not any(coeffs.values()):
                continue
            image = qb.project(e, coeffs)
            assert (all(v == 0 for v in image)) == annihilates(coeffs, g)
        # projector restricted to standard monomials is the identity
        for k, mono in enumerate(qb.standard[e]):
            image = qb.project(e, {mono: 1})
            assert [v for v in image] == [
                1 if i == k else 0 for i in range(len(qb.standard[e]))
            ]


def test_single_power_has_one_dimensional_pieces():
    qb = quotient_bases(synth_power_sum([[1, 2]], [1], 4))
    assert qb.dims() == (1, 1, 1, 1, 1)


# ---------------------------------------------------------------------------
# betti tables


def test_quadric_tables_n123():
    expected = {
        1: [[1, 0, 0], [0, 2, 0], [0, 0, 1]],
        2: [[1, 0, 0, 0], [0, 5, 5, 0], [0, 0, 0, 1]],
        3: [[1, 0, 0, 0, 0], [0, 9, 16, 9, 0], [0, 0, 0, 0, 1]],
    }
    for n, grid in expected.items():
        assert koszul_betti(nondegenerate_quadric(n)).grid() == grid


def test_binary_cubic_complete_intersection():
    expected = [[1, 0, 0], [0, 1, 0], [0, 1, 0], [0, 0, 1]]
    for g in [Socle.parse("y0^3+y1^3"), Socle.parse("y0^2*y1")]:
        assert koszul_betti(g).grid() == expected


def test_degree_zero_is_the_full_koszul_row():
    for n in range(4):
        g = Socle(n, 0, {(0,) * (n + 1): Fraction(1)})
        t = koszul_betti(g)
        assert t.grid() == [[binomial_nonneg(n + 1, i) for i in range(n + 2)]]


def test_rank_one_socle_is_two_koszul_rows():
    for n, d in [(1, 3), (2, 3), (2, 5), (3, 4)]:
        g = synth_power_sum([[1, 2, -1, 3][: n + 1]], [1], d)
        t = koszul_betti(g)
        grid = t.grid()
        assert grid[0] == [binomial_nonneg(n, i) for i in range(n + 1)] + [0]
        assert grid[d] == [0] + [binomial_nonneg(n, i - 1) for i in range(1, n + 2)]
        for r in range(1, d):
            assert grid[r] == [0] * (n + 2)


def test_ternary_cubic_tables():
    fermat = koszul_betti(Socle.parse("y0^3+y1^3+y2^3"))
    assert fermat.grid() == [[1, 0, 0, 0], [0, 3, 2, 0], [0, 2, 3, 0], [0, 0, 0, 1]]
    rng = random.Random(12)
    g = random_socle(rng, 2, 3)
    assert hilbert_function(g) == (1, 3, 3, 1)
    assert koszul_betti(g).grid() == [
        [1, 0, 0, 0],
        [0, 3, 0, 0],
        [0, 0, 3, 0],
        [0, 0, 0, 1],
    ]


def test_ternary_cubic_parity_battery():
    rng = random.Random(1234)
    seen = 0
    while seen < 100:
        g = random_socle(rng, 2, 3)
        if hilbert_function(g) != (1, 3, 3, 1):
            continue
        t = koszul_betti(g)
        b = t.b(1, 3)
        assert b % 2 == 0
        assert b == t.b(2, 3)
        seen += 1


def test_four_coordinate_points_in_space():
    t = koszul_betti(Socle.parse("y0^3+y1^3+y2^3+y3^3"))
    assert t.grid() == [
        [1, 0, 0, 0, 0],
        [0, 6, 8, 3, 0],
        [0, 3, 8, 6, 0],
        [0, 0, 0, 0, 1],
    ]


def test_envelope_errors():
    with pytest.raises(EnvelopeError):
        koszul_betti(random_socle(random.Random(0), 2, 7))


# ---------------------------------------------------------------------------
# structural checks


def test_check_euler_koszul_row_arithmetic():
    t = BettiTable(1, 0, ((0, 0, 1), (1, 1, 2), (2, 2, 1)))
    # 1 - 2 + 1 = 0 and 0*1 - 1*2 + 2*1 = 0
    assert check_euler(t)
    assert check_duality(t)


def test_checks_reject_corrupted_tables():
    t = koszul_betti(nondegenerate_quadric(2))
    broken = BettiTable(t.n, t.d, t.entries + ((1, 2, 1),))
    assert not check_duality(broken)
    assert not check_euler(broken)


def test_structural_battery():
    rng = random.Random(77)
    for n, d in [(1, 4), (2, 2), (2, 4), (3, 3)]:
        for _ in range(5):
            g = random_socle(rng, n, d)
            t = koszul_betti(g)
            assert check_duality(t)
            assert check_euler(t)
            assert hf_from_betti(t) == hilbert_function(g)
            assert t.b(n + 1, n + 1 + d) == 1
            assert all(t.b(n + 1, n + 1 + e) == 0 for e in range(d))


def test_hf_from_betti_reference_values():
    assert hf_from_betti(koszul_betti(nondegenerate_quadric(2))) == (1, 3, 1)
    assert hf_from_betti(koszul_betti(Socle.parse("y0^3+y1^3"))) == (1, 2, 2, 1)
    koszul_row = BettiTable(
        2, 0, ((0, 0, 1), (1, 1, 3), (2, 2, 3), (3, 3, 1))
    )
    assert hf_from_betti(koszul_row) == (1,)


def test_homology_is_transpose_invariant():
    # the same betti numbers arise from the matrices or their transposes:
    # dim ker A - rank B = (cols A - rank A) - rank B in either reading
    rng = random.Random(5)
    g = random_socle(rng, 2, 3)
    t1 = koszul_betti(g)
    t2 = koszul_betti(g.scaled(Fraction(3, 7)))
    assert t1.entries == t2.entries


# ---------------------------------------------------------------------------
# interior squares and serialization


def test_interior_squares():
    triple = synth_power_sum([(1, 0, 0), (0, 1, 0), (0, 0, 1)], [1, 1, 1], 3)
    assert interior_square(koszul_betti(triple)) == ((0, 0), (3, 2), (2, 3), (0, 0))
    rng = random.Random(12)
    generic = random_socle(rng, 2, 3)
    assert interior_square(koszul_betti(generic)) == ((0, 0), (3, 0), (0, 3), (0, 0))
    with pytest.raises(ValueError):
        interior_square(koszul_betti(Socle.parse("y0^3+y1^3")))


def test_json_round_trip_and_text_grid():
    t = koszul_betti(nondegenerate_quadric(2))
    assert BettiTable.from_json(t.to_json()) == t
    text = t.to_text()
    assert text.splitlines() == ["1 0 0 0", "0 5 5 0", "0 0 0 1"]
