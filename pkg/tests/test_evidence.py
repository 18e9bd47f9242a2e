import math
from fractions import Fraction

import pytest

from evfuse.errors import (
    EmptyFocalSet,
    FrameMismatch,
    MassSumViolation,
    TotalConflict,
    UnknownLabel,
    WeightSumViolation,
)
from evfuse.evidence import (
    Bpa,
    FocalSet,
    Frame,
    bpa_new,
    combine_dempster,
    combine_sequential,
    conflict,
    self_combine,
    vacuous,
    weighted_average,
)

from oracle import naive_conflict


def masses_close(m1: Bpa, m2: Bpa, tol=1e-12):
    keys = set(m1.masses) | set(m2.masses)
    return all(abs(m1.masses.get(k, 0.0) - m2.masses.get(k, 0.0)) <= tol for k in keys)


class TestFrame:
    def test_basic(self, frame_abc):
        assert frame_abc.size == 3
        assert frame_abc.theta == 0b111
        assert frame_abc.mask_of(("A", "C")) == 0b101
        assert frame_abc.mask_of("B") == 0b010
        assert frame_abc.labels_of(0b110) == ("B", "C")

    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            Frame(())

    def test_rejects_duplicates(self):
        with pytest.raises(ValueError):
            Frame(("A", "A"))

    def test_rejects_blank_label(self):
        with pytest.raises(ValueError):
            Frame(("A", ""))

    def test_rejects_oversize(self):
        with pytest.raises(ValueError):
            Frame(tuple(f"h{i}" for i in range(65)))

    def test_sixty_four_labels_ok(self):
        frame = Frame(tuple(f"h{i}" for i in range(64)))
        assert frame.theta == (1 << 64) - 1

    def test_unknown_label(self, frame_abc):
        with pytest.raises(UnknownLabel):
            frame_abc.mask_of(("A", "Z"))


class TestFocalSet:
    def test_labels(self, frame_abc):
        assert FocalSet(frame_abc, 0b101).labels == ("A", "C")

    def test_rejects_empty(self, frame_abc):
        with pytest.raises(EmptyFocalSet):
            FocalSet(frame_abc, 0)

    def test_rejects_out_of_range(self, frame_abc):
        with pytest.raises(ValueError):
            FocalSet(frame_abc, 0b1000)


class TestBpaConstruction:
    def test_valid(self, frame_abc):
        m = bpa_new(frame_abc, [("A", 0.6), ("B", 0.15), (("A", "C"), 0.25)])
        assert m.mass("A") == 0.6
        assert m.mass(("A", "C")) == 0.25
        assert m.mass("C") == 0.0
        assert m.by_labels() == {("A",): 0.6, ("B",): 0.15, ("A", "C"): 0.25}

    def test_vacuous_is_valid(self, frame_abc):
        m = bpa_new(frame_abc, [(("A", "B", "C"), 1.0)])
        assert m.masses == {0b111: 1.0}

    def test_mass_sum_violation(self, frame_abc):
        with pytest.raises(MassSumViolation):
            bpa_new(frame_abc, [("A", 0.5), ("B", 0.4)])

    def test_zero_masses_dropped(self, frame_abc):
        m = bpa_new(frame_abc, [("A", 1.0), ("B", 0.0)])
        assert set(m.masses) == {0b001}

    def test_duplicate_subsets_accumulate(self, frame_abc):
        m = bpa_new(frame_abc, [("A", 0.4), ("A", 0.2), ("B", 0.4)])
        assert m.mass("A") == pytest.approx(0.6, abs=1e-15)

    def test_empty_subset_rejected(self, frame_abc):
        with pytest.raises(EmptyFocalSet):
            bpa_new(frame_abc, [((), 1.0)])

    def test_negative_mass_rejected(self, frame_abc):
        with pytest.raises(ValueError):
            bpa_new(frame_abc, [("A", 1.5), ("B", -0.5)])

    def test_unknown_label(self, frame_abc):
        with pytest.raises(UnknownLabel):
            bpa_new(frame_abc, [("Z", 1.0)])

    def test_masses_are_immutable(self, frame_abc):
        m = vacuous(frame_abc)
        with pytest.raises(TypeError):
            m.masses[1] = 0.5


class TestVacuous:
    def test_three_labels(self, frame_abc):
        assert vacuous(frame_abc).masses == {0b111: 1.0}

    def test_single_label(self):
        frame = Frame(("A",))
        assert vacuous(frame).masses == {0b1: 1.0}

    def test_neutral_element(self, five_bpas):
        for m in five_bpas:
            assert masses_close(combine_dempster(m, vacuous(m.frame)), m)


class TestConflict:
    def test_reference_pair(self, five_bpas):
        # K(m1, m3) enumerates to exactly 169/200.
        assert conflict(five_bpas[0], five_bpas[2]) == pytest.approx(0.845, abs=1e-12)

    def test_vacuous_never_conflicts(self, five_bpas):
        for m in five_bpas:
            assert conflict(m, vacuous(m.frame)) == 0.0

    def test_total_conflict(self, frame_abc):
        m1 = bpa_new(frame_abc, [("A", 1.0)])
        m2 = bpa_new(frame_abc, [("B", 1.0)])
        assert conflict(m1, m2) == 1.0

    def test_symmetry_and_range(self, five_bpas):
        for m1 in five_bpas:
            for m2 in five_bpas:
                k12 = conflict(m1, m2)
                assert k12 == pytest.approx(conflict(m2, m1), abs=1e-15)
                assert 0.0 <= k12 <= 1.0
                assert k12 == pytest.approx(naive_conflict(m1, m2), abs=1e-12)

    def test_frame_mismatch(self, frame_abc):
        other = Frame(("A", "B"))
        with pytest.raises(FrameMismatch):
            conflict(vacuous(frame_abc), vacuous(other))


class TestCombineDempster:
    def test_half_half_fixed_point(self, frame_abc):
        # Hand enumeration: K = 0.5, each surviving product 0.25/0.5.
        m = bpa_new(frame_abc, [("A", 0.5), ("B", 0.5)])
        out = combine_dempster(m, m)
        assert out.mass("A") == pytest.approx(0.5, abs=1e-12)
        assert out.mass("B") == pytest.approx(0.5, abs=1e-12)

    def test_total_conflict_raises(self, frame_abc):
        m1 = bpa_new(frame_abc, [("A", 1.0)])
        m2 = bpa_new(frame_abc, [("B", 1.0)])
        with pytest.raises(TotalConflict):
            combine_dempster(m1, m2)

    def test_frame_mismatch(self, frame_abc):
        other = Frame(("A", "B"))
        with pytest.raises(FrameMismatch):
            combine_dempster(vacuous(frame_abc), vacuous(other))

    def test_output_is_valid_bpa(self, five_bpas):
        out = combine_dempster(five_bpas[0], five_bpas[1])
        assert math.fsum(out.masses.values()) == pytest.approx(1.0, abs=1e-12)
        assert 0 not in out.masses


class TestCombineSequential:
    def test_singleton(self, five_bpas):
        assert combine_sequential([five_bpas[0]]) is five_bpas[0]

    def test_five_report_fold(self, five_bpas):
        # Exact rational enumeration of the full fold gives
        # m(B) = 171/173 and m(C) = 2/173.
        out = combine_sequential(five_bpas)
        assert out.mass("B") == pytest.approx(float(Fraction(171, 173)), abs=1e-9)
        assert out.mass("C") == pytest.approx(float(Fraction(2, 173)), abs=1e-9)
        assert out.mass("A") == 0.0
        assert set(out.by_labels()) == {("B",), ("C",)}

    def test_vacuous_padding(self, five_bpas):
        m = five_bpas[0]
        out = combine_sequential([m, vacuous(m.frame), vacuous(m.frame)])
        assert masses_close(out, m)

    def test_conflict_step_index(self, frame_abc):
        m_a = bpa_new(frame_abc, [("A", 1.0)])
        m_b = bpa_new(frame_abc, [("B", 1.0)])
        with pytest.raises(TotalConflict) as excinfo:
            combine_sequential([m_a, vacuous(frame_abc), m_b])
        assert excinfo.value.step == 2
        assert "step 2" in str(excinfo.value)

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            combine_sequential([])


class TestWeightedAverage:
    def test_reference_weights(self, five_bpas):
        # Credibilities 11/47, 12/47, 5/47, 9/47, 10/47 give a mixture with
        # hand-derived fractional masses.
        weights = [11 / 47, 12 / 47, 5 / 47, 9 / 47, 10 / 47]
        out = weighted_average(five_bpas, weights)
        expected = {
            ("A",): Fraction(471, 940),
            ("B",): Fraction(61, 188),
            ("C",): Fraction(53, 940),
            ("A", "C"): Fraction(91, 940),
            ("B", "C"): Fraction(1, 47),
        }
        got = out.by_labels()
        assert set(got) == set(expected)
        for labels, frac in expected.items():
            assert got[labels] == pytest.approx(float(frac), abs=1e-12)
        assert math.fsum(out.masses.values()) == pytest.approx(1.0, abs=1e-12)

    def test_single_weight_one(self, five_bpas):
        assert masses_close(weighted_average([five_bpas[0]], [1.0]), five_bpas[0])

    def test_two_copies(self, five_bpas):
        m = five_bpas[1]
        assert masses_close(weighted_average([m, m], [0.5, 0.5]), m)

    def test_weight_sum_violation(self, five_bpas):
        with pytest.raises(WeightSumViolation):
            weighted_average(five_bpas[:2], [0.5, 0.4])

    def test_negative_weight(self, five_bpas):
        with pytest.raises(ValueError):
            weighted_average(five_bpas[:2], [1.5, -0.5])

    def test_length_mismatch(self, five_bpas):
        with pytest.raises(ValueError):
            weighted_average(five_bpas[:2], [1.0])

    def test_frame_mismatch(self, frame_abc):
        other = Frame(("A", "B"))
        with pytest.raises(FrameMismatch):
            weighted_average([vacuous(frame_abc), vacuous(other)], [0.5, 0.5])


class TestSelfCombine:
    def test_identity(self, five_bpas):
        assert self_combine(five_bpas[0], 1) is five_bpas[0]

    def test_vacuous_power(self, frame_abc):
        assert masses_close(self_combine(vacuous(frame_abc), 5), vacuous(frame_abc))

    def test_five_fold_average(self, five_bpas):
        # Equal-weight mixture of the five reports, combined with itself four
        # times; golden values from exact rational enumeration.
        averaged = weighted_average(five_bpas, [0.2] * 5)
        out = self_combine(averaged, 5)
        assert out.mass("A") == pytest.approx(0.7970441504977547, abs=1e-9)
        assert out.mass("B") == pytest.approx(0.20113543893766422, abs=1e-9)
        assert out.mass("C") == pytest.approx(0.0017178412929537146, abs=1e-9)
        assert out.mass(("A", "C")) == pytest.approx(1.0251371710582052e-4, abs=1e-9)
        assert out.mass(("B", "C")) == pytest.approx(5.555452162418088e-8, abs=1e-9)

    def test_k_must_be_positive(self, five_bpas):
        with pytest.raises(ValueError):
            self_combine(five_bpas[0], 0)
