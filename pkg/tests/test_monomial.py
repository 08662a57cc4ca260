import itertools
from fractions import Fraction
from math import floor

import pytest

from hkcert.monomial import (
    MonomialIdeal,
    ehk_estimate,
    frobenius_colength,
    load_ideal,
    mixed_colength,
    parse_generators,
)
from hkcert.slab import vol_slab


def brute_colength(ideal: MonomialIdeal, q: int) -> int:
    """Reference count: full box scan with a direct dominance test."""
    box = [q * c for c in ideal.pure_power_exponents()]
    outside = 0
    for point in itertools.product(*(range(b) for b in box)):
        if not any(all(a >= q * g for a, g in zip(point, gen)) for gen in ideal.generators):
            outside += 1
    return outside


def compositions(total, parts):
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for rest in compositions(total - head, parts - 1):
            yield (head, *rest)


def brute_mixed_colength(ideal: MonomialIdeal, s: Fraction, q: int) -> int:
    """Reference count for the mixed colength, via explicit ordinary-power
    generators: a point lies in J^k exactly when some product of k pure
    powers divides it, i.e. some exponent split alpha with sum k fits
    under the point coordinatewise."""
    cs = ideal.pure_power_exponents()
    cut = floor(s * q)
    if cut <= 0:
        return 0
    outside = 0
    for point in itertools.product(*(range(q * c) for c in cs)):
        in_power = any(
            all(a >= c * al for a, c, al in zip(point, cs, alpha))
            for alpha in compositions(cut, len(cs))
        )
        if not in_power:
            outside += 1
    return outside


SQUARE = MonomialIdeal(2, ((2, 0), (1, 1), (0, 2)))


class TestMonomialIdeal:
    def test_requires_pure_power_witness(self):
        with pytest.raises(ValueError):
            MonomialIdeal(2, ((1, 0), (1, 1)))

    def test_rejects_unit_and_negative(self):
        with pytest.raises(ValueError):
            MonomialIdeal(1, ((0,),))
        with pytest.raises(ValueError):
            MonomialIdeal(2, ((1, -1), (0, 1)))
        with pytest.raises(ValueError):
            MonomialIdeal(2, ((1, 0, 0), (0, 1)))
        with pytest.raises(ValueError):
            MonomialIdeal(2, ())

    def test_minimalizes_generators(self):
        ideal = MonomialIdeal(2, ((3, 0), (1, 0), (0, 2), (2, 2), (0, 2)))
        assert ideal.generators == ((0, 2), (1, 0))
        assert ideal.pure_power_exponents() == (1, 2)

    def test_parameter_ideal_detection(self):
        assert MonomialIdeal(2, ((3, 0), (0, 2))).is_parameter_ideal()
        assert not SQUARE.is_parameter_ideal()


class TestFrobeniusColength:
    def test_plane_box(self):
        assert frobenius_colength(MonomialIdeal(2, ((1, 0), (0, 1))), 5) == 25

    def test_staircase_square(self):
        assert frobenius_colength(SQUARE, 3) == 27
        for q in (1, 2, 3, 4, 8):
            assert frobenius_colength(SQUARE, q) == 3 * q * q

    def test_pure_power_box(self):
        assert frobenius_colength(MonomialIdeal(2, ((3, 0), (0, 2))), 2) == 24

    def test_matches_brute_force(self):
        ideals = [
            SQUARE,
            MonomialIdeal(2, ((3, 0), (1, 2), (0, 3))),
            MonomialIdeal(3, ((2, 0, 0), (0, 2, 0), (0, 0, 2), (1, 1, 1))),
            MonomialIdeal(1, ((4,),)),
        ]
        for ideal in ideals:
            for q in (1, 2, 3):
                assert frobenius_colength(ideal, q) == brute_colength(ideal, q)

    def test_scaling_identity_for_pure_powers(self):
        base = MonomialIdeal(2, ((2, 0), (0, 3)))
        for m in (2, 3):
            scaled = MonomialIdeal(2, tuple(tuple(m * c for c in g) for g in base.generators))
            for q in (1, 2, 4):
                assert frobenius_colength(scaled, q) == frobenius_colength(base, q * m)

    def test_containment_monotonicity(self):
        smaller = MonomialIdeal(2, ((2, 0), (1, 1), (0, 3)))  # contained in (x, y)
        larger = MonomialIdeal(2, ((1, 0), (0, 1)))
        for q in (1, 2, 4):
            assert frobenius_colength(smaller, q) >= frobenius_colength(larger, q)

    def test_rejects_bad_q(self):
        with pytest.raises(ValueError):
            frobenius_colength(SQUARE, 0)


class TestMixedColength:
    def test_triangle(self):
        plane = MonomialIdeal(2, ((1, 0), (0, 1)))
        assert mixed_colength(plane, 1, 4) == 10

    def test_bracket_power_dominates_at_s_2(self):
        plane = MonomialIdeal(2, ((1, 0), (0, 1)))
        for q in (2, 5, 9):
            assert mixed_colength(plane, 2, q) == q * q

    def test_zero_slice(self):
        plane = MonomialIdeal(2, ((1, 0), (0, 1)))
        assert mixed_colength(plane, 0, 7) == 0
        assert mixed_colength(plane, Fraction(1, 8), 7) == 0

    def test_cube_at_half(self):
        space = MonomialIdeal(3, ((1, 0, 0), (0, 1, 0), (0, 0, 1)))
        assert mixed_colength(space, Fraction(3, 2), 8) == 304

    def test_converges_to_slab_volume(self):
        q = 32
        for d in (1, 2, 3):
            ideal = MonomialIdeal(d, tuple(tuple(int(i == j) for j in range(d)) for i in range(d)))
            for s in (Fraction(1, 2), Fraction(1), Fraction(3, 2)):
                estimate = Fraction(mixed_colength(ideal, s, q), q**d)
                assert abs(estimate - vol_slab(d, s)) <= Fraction(3 * d, q)

    def test_matches_ordinary_power_enumeration(self):
        shapes = [(2, 3), (1, 2), (3,), (2, 1, 2)]
        for cs in shapes:
            gens = tuple(
                tuple(c if i == j else 0 for j in range(len(cs))) for i, c in enumerate(cs)
            )
            ideal = MonomialIdeal(len(cs), gens)
            for q in (1, 2, 3):
                for s in (Fraction(1, 2), Fraction(1), Fraction(3, 2), Fraction(5, 2)):
                    assert mixed_colength(ideal, s, q) == brute_mixed_colength(ideal, s, q)

    def test_converges_to_multiplicity_times_volume(self):
        # For J = (x^2, y^3) the normalization approaches e(J) v_s = 6 v_s.
        ideal = MonomialIdeal(2, ((2, 0), (0, 3)))
        q = 16
        for s in (Fraction(1, 2), Fraction(1), Fraction(3, 2)):
            estimate = Fraction(mixed_colength(ideal, s, q), q**2)
            assert abs(estimate - 6 * vol_slab(2, s)) <= Fraction(6 * 3 * 2, q)

    def test_requires_parameter_ideal(self):
        with pytest.raises(ValueError):
            mixed_colength(SQUARE, 1, 2)

    def test_rejects_negative_slice(self):
        plane = MonomialIdeal(2, ((1, 0), (0, 1)))
        with pytest.raises(ValueError):
            mixed_colength(plane, -1, 2)

    def test_floor_convention(self):
        # floor(s*q) jumps only at multiples of 1/q.
        plane = MonomialIdeal(2, ((1, 0), (0, 1)))
        assert mixed_colength(plane, Fraction(7, 8), 4) == mixed_colength(plane, Fraction(3, 4), 4)
        assert mixed_colength(plane, Fraction(7, 8), 8) > mixed_colength(plane, Fraction(3, 4), 8)


class TestEhkEstimate:
    def test_staircase_sequence(self):
        seq = ehk_estimate(SQUARE, [2, 3, 4, 8])
        assert [entry.normalized for entry in seq.entries] == [Fraction(3)] * 4

    def test_regular_parameter_sequence(self):
        space = MonomialIdeal(3, ((1, 0, 0), (0, 1, 0), (0, 0, 1)))
        seq = ehk_estimate(space, [2, 4])
        assert [entry.normalized for entry in seq.entries] == [Fraction(1)] * 2

    def test_box_sequence(self):
        seq = ehk_estimate(MonomialIdeal(2, ((3, 0), (0, 2))), [2, 5])
        assert [entry.normalized for entry in seq.entries] == [Fraction(6)] * 2

    def test_rejects_non_increasing(self):
        with pytest.raises(ValueError):
            ehk_estimate(SQUARE, [])
        with pytest.raises(ValueError):
            ehk_estimate(SQUARE, [2, 2])
        with pytest.raises(ValueError):
            ehk_estimate(SQUARE, [0, 2])


class TestParsing:
    def test_parse_generators(self):
        ideal = parse_generators("# squares\n2 0\n1 1\n0 2\n\n")
        assert ideal == SQUARE

    def test_load_ideal(self, tmp_path):
        path = tmp_path / "sq.ideal"
        path.write_text("2 0\n1 1\n0 2\n")
        assert load_ideal(path) == SQUARE

    def test_parse_rejects_bad_tokens(self):
        with pytest.raises(ValueError):
            parse_generators("2 x\n")
        with pytest.raises(ValueError):
            parse_generators("# nothing\n")
