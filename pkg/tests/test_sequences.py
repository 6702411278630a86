import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cpnot.exceptions import UnsupportedSequenceError
from cpnot.families import PSI, make
from cpnot.sequences import (
    Pulse,
    PulseSequence,
    classify_symmetry,
    ideal_propagator,
    is_time_antisymmetric,
    is_time_symmetric,
    load_sequence,
    net_axis_matches,
    net_phase,
    phases_from_toggling,
    save_sequence,
    sequence_from_dict,
    sequence_to_dict,
    toggling_phases_ore,
    toggling_phases_pse,
    transform,
)
from cpnot.su2 import equal_up_to_global_phase, pulse_gate, z_gate

TWO_PI = 2.0 * math.pi

phase_lists = st.lists(
    st.floats(min_value=0.0, max_value=TWO_PI - 1e-9), min_size=3, max_size=9
)


def seq_of(*phis, name="t"):
    return PulseSequence.from_phases(name, phis)


def angles_equal(a, b, tol=1e-9):
    d = (np.asarray(a) - np.asarray(b)) % TWO_PI
    return np.all(np.minimum(d, TWO_PI - d) <= tol)


class TestPulseValidation:
    def test_phase_canonicalized(self):
        assert Pulse(math.pi, -0.5).phi == pytest.approx(TWO_PI - 0.5)

    def test_theta_bounds(self):
        with pytest.raises(ValueError):
            Pulse(0.0, 0.0)
        with pytest.raises(ValueError):
            Pulse(4.0 * math.pi + 0.1, 0.0)
        Pulse(4.0 * math.pi, 0.0)  # boundary allowed

    def test_empty_sequence_rejected(self):
        with pytest.raises(ValueError):
            PulseSequence("x", ())


class TestNetPhase:
    def test_triangle_solution_sums_to_zero(self):
        assert net_phase(seq_of(2 * math.pi / 3, 4 * math.pi / 3, 2 * math.pi / 3)) == pytest.approx(0.0, abs=1e-12)

    def test_single_pulse(self):
        assert net_phase(seq_of(0.0)) == 0.0

    def test_off_resonance_triangle(self):
        assert net_phase(seq_of(math.pi / 3, 2 * math.pi / 3, math.pi / 3)) == pytest.approx(0.0, abs=1e-12)

    def test_rejects_even_length_and_non_pi(self):
        with pytest.raises(UnsupportedSequenceError):
            net_phase(seq_of(0.0, 1.0))
        with pytest.raises(UnsupportedSequenceError):
            net_phase(PulseSequence("x", (Pulse(math.pi / 2, 0.0),)))


class TestTogglingPhases:
    def test_f1_anchor(self):
        # known toggling list of the F1 pulse: (3psi, 5psi, 4psi, 5psi, 3psi)
        got = toggling_phases_pse(make("f1").sequence)
        want = np.array([3 * PSI, 5 * PSI, 4 * PSI, 5 * PSI, 3 * PSI])
        assert angles_equal(got, want, 1e-12)

    def test_constant_phases_fixed_point(self):
        c = 1.234
        got = toggling_phases_pse(seq_of(c, c, c))
        assert angles_equal(got, [c, c, c], 1e-12)

    @given(
        alpha=st.floats(min_value=0.0, max_value=TWO_PI - 1e-9),
        beta=st.floats(min_value=0.0, max_value=TWO_PI - 1e-9),
    )
    @settings(max_examples=100, deadline=None)
    def test_direct_sum_oracle(self, alpha, beta):
        # oracle: evaluate the alternating prefix-sum formula directly
        phis = [alpha, beta, beta - alpha]
        want = []
        for j in range(3):
            sign_j = 1.0 if j % 2 == 0 else -1.0
            val = sign_j * phis[j]
            for k in range(j):
                sign_k = 1.0 if k % 2 == 0 else -1.0
                val += 2.0 * sign_k * phis[k]
            want.append(val)
        # for this pattern the formula collapses to (alpha, 2a-b, a-b)
        assert angles_equal(want, [alpha, 2 * alpha - beta, alpha - beta], 1e-9)
        got = toggling_phases_pse(seq_of(*phis))
        assert angles_equal(got, want, 1e-9)

    def test_ore_offsets(self):
        got = toggling_phases_ore(seq_of(0.0, 0.0, 0.0))
        assert angles_equal(got, [math.pi / 2, 3 * math.pi / 2, math.pi / 2], 1e-12)

    @given(phase_lists)
    @settings(max_examples=100, deadline=None)
    def test_ore_differs_by_quarter_turns(self, phis):
        seq = seq_of(*phis)
        d = (toggling_phases_ore(seq) - toggling_phases_pse(seq)) % TWO_PI
        assert np.all(
            (np.abs(d - math.pi / 2) < 1e-9) | (np.abs(d - 3 * math.pi / 2) < 1e-9)
        )

    def test_f1_ore_list_elementwise_oracle(self):
        seq = make("f1").sequence
        primed = toggling_phases_pse(seq)
        signs = np.array([1.0, -1.0, 1.0, -1.0, 1.0])
        assert angles_equal(toggling_phases_ore(seq), primed + signs * math.pi / 2, 1e-12)

    @given(phase_lists)
    @settings(max_examples=100, deadline=None)
    def test_inverse_roundtrip(self, phis):
        seq = seq_of(*phis)
        back = phases_from_toggling(toggling_phases_pse(seq))
        assert angles_equal(back, phis, 1e-9)


class TestSymmetryClassification:
    def test_knill_symmetric(self):
        assert classify_symmetry(make("knill").sequence).kind == "symmetric"

    def test_f1_antisymmetric(self):
        assert classify_symmetry(make("f1").sequence).kind == "antisymmetric"

    def test_neither(self):
        assert classify_symmetry(seq_of(0.0, 1.0, 2.0)).kind == "neither"

    def test_phi_sum_zero_flag(self):
        assert classify_symmetry(make("f1").sequence).phi_sum_zero is True
        assert classify_symmetry(make("scrofulous3-pse-pi").sequence).phi_sum_zero is False
        assert classify_symmetry(make("bb1-symmetric").sequence).phi_sum_zero is None

    @given(phase_lists)
    @settings(max_examples=100, deadline=None)
    def test_antisymmetric_construction_has_zero_net_phase(self, phis):
        head = phis[: len(phis) // 2]
        phases = list(head) + [0.0] + [-p for p in reversed(head)]
        seq = seq_of(*phases)
        assert is_time_antisymmetric(seq)
        assert min(net_phase(seq), TWO_PI - net_phase(seq)) < 1e-9

    @given(phase_lists)
    @settings(max_examples=150, deadline=None)
    def test_toggling_symmetry_theorems(self, phis):
        head = phis[: len(phis) // 2]
        # antisymmetric sequence -> symmetric toggling phases
        anti = seq_of(*(list(head) + [0.0] + [-p for p in reversed(head)]))
        primed = toggling_phases_pse(anti)
        assert angles_equal(primed, primed[::-1], 1e-9)
        # symmetric sequence with zero net phase -> antisymmetric toggling phases
        centre = -2.0 * sum(
            (1.0 if j % 2 == 0 else -1.0) * p for j, p in enumerate(head)
        ) * (1.0 if len(head) % 2 == 0 else -1.0)
        sym = seq_of(*(list(head) + [centre] + list(reversed(head))))
        assert is_time_symmetric(sym)
        assert min(net_phase(sym), TWO_PI - net_phase(sym)) < 1e-8
        primed_s = toggling_phases_pse(sym)
        assert angles_equal(primed_s, -primed_s[::-1], 1e-8)


class TestIdealPropagator:
    def test_catalog_five_pulse_rows_give_not_gate(self):
        for name in ("f1", "sym5-pse", "knill", "tycko5-pse-opt", "tycko5-ore-opt"):
            g = ideal_propagator(make(name).sequence)
            assert equal_up_to_global_phase(g, pulse_gate(math.pi, 0.0), 1e-10)

    def test_single_pulse(self):
        g = ideal_propagator(seq_of(0.0))
        assert np.max(np.abs(g - pulse_gate(math.pi, 0.0))) < 1e-15

    def test_even_pair_is_z_rotation(self):
        a, b = 0.37, 1.91
        g = ideal_propagator(seq_of(a, b))
        assert equal_up_to_global_phase(g, z_gate(2.0 * (b - a)), 1e-10)

    @given(phase_lists)
    @settings(max_examples=100, deadline=None)
    def test_net_phase_matches_axis(self, phis):
        if len(phis) % 2 == 0:
            phis = phis[:-1]
        assert net_axis_matches(seq_of(*phis), 1e-8)


class TestTransforms:
    def test_reverse_equals_negate_for_antisymmetric(self):
        f1 = make("f1").sequence
        r = transform(f1, "reverse-order")
        n = transform(f1, "negate-phases")
        assert angles_equal(r.phis, n.phis, 1e-12)

    def test_phase_offset_by_pi_keeps_pse_fidelity(self):
        from cpnot._backend import sequence_fidelities

        seq = make("scrofulous3-pse").sequence
        shifted = transform(seq, "phase-offset", offset=math.pi)
        eps = np.linspace(-0.9, 0.9, 41)
        f0 = sequence_fidelities(seq, eps, 0.0 * eps)
        f1_ = sequence_fidelities(shifted, eps, 0.0 * eps)
        assert np.max(np.abs(f0 - f1_)) < 1e-12

    def test_cyclic_shift_of_f1_gives_bb1_core(self):
        f1 = make("f1").sequence
        shifted = transform(transform(f1, "cyclic-shift", k=2), "negate-phases")
        want = make("bb1-pi-core").sequence
        assert angles_equal(shifted.phis, want.phis, 1e-12)

    def test_cyclic_shift_requires_pi_pulses(self):
        with pytest.raises(UnsupportedSequenceError):
            transform(make("bb1-symmetric").sequence, "cyclic-shift", k=1)

    def test_metadata_records_transformation(self):
        t = transform(make("f1").sequence, "reverse-order")
        assert "reverse-order" in t.meta["transform"]

    def test_unknown_transform(self):
        with pytest.raises(ValueError):
            transform(make("f1").sequence, "swirl")


class TestSequenceFiles:
    def test_roundtrip(self, tmp_path):
        seq = make("bb1-symmetric").sequence
        path = tmp_path / "bb1.json"
        save_sequence(seq, path)
        back = load_sequence(path)
        assert back.name == seq.name
        assert angles_equal(back.phis, seq.phis, 1e-12)
        assert np.max(np.abs(back.thetas - seq.thetas)) < 1e-12
        assert back.meta == {k: str(v) for k, v in seq.meta.items()}

    def test_dict_schema(self):
        d = sequence_to_dict(make("ore3").sequence)
        assert set(d) == {"name", "pulses", "meta"}
        assert all(set(p) == {"theta_deg", "phi_deg"} for p in d["pulses"])
        assert d["pulses"][0]["theta_deg"] == pytest.approx(180.0)
        back = sequence_from_dict(d)
        assert back.name == "ore3"
