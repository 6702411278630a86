import math

import numpy as np
import pytest

from cpnot.exceptions import UnknownSequenceError
from cpnot.families import (
    PSI,
    catalog,
    catalog_names,
    make,
    save_catalog,
    sym9_phases,
    tycko5_phases,
)
from cpnot.sequences import (
    is_time_antisymmetric,
    is_time_symmetric,
    load_sequence,
    net_phase,
)
from cpnot.series import bch_summary, certify

TWO_PI = 2.0 * math.pi

# printed reference rows (degrees, execution order); the five-pulse table,
# the seven-pulse table and the nine-pulse table of the standard catalog
TABLE5 = {
    "f1": (313.4, 104.5, 0.0, 255.5, 46.6),
    "sym5-pse": (77.9, 20.6, 245.4, 20.6, 77.9),
    "knill": (240.0, 210.0, 300.0, 210.0, 240.0),
    "tycko5-pse-opt": (8.7, 94.3, 300.0, 325.7, 111.3),
    "tycko5-ore-opt": (111.3, 145.7, 300.0, 274.3, 8.7),
}
TABLE7 = {
    "rhombus7-opt": (192.8, 145.7, 72.8, 240.0, 252.8, 145.7, 12.8),
    "sym7-pse-opt": (252.5, 265.0, 97.5, 170.0, 97.5, 265.0, 252.5),
    "sym7-ore-opt": (72.5, 265.0, 277.5, 170.0, 277.5, 265.0, 72.5),
}
TABLE9 = {
    "asbo9-7a": (162.4, 162.4, 313.4, 284.5, 0.0),   # antisymmetric tail
    "asbo9-7b": (46.6, 255.5, 255.5, 75.5, 0.0),
    # the printed phi_2 of this row (339.5) contradicts the closed form,
    # which forces phi_2 = phi_3 exactly; see test_sym9_printed_row_typo
    "sym9": (282.1, 339.4, 339.4, 159.4, 114.6),
}


def deg_phases(name):
    return [math.degrees(p.phi) % 360.0 for p in make(name).sequence.pulses]


def assert_row(got, want, tol):
    assert len(got) == len(want)
    for g, w in zip(got, want):
        d = abs((g - w + 180.0) % 360.0 - 180.0)
        assert d <= tol, (got, want)


@pytest.mark.parametrize("name,row", sorted(TABLE5.items()))
def test_five_pulse_table(name, row):
    assert_row(deg_phases(name), row, 0.05)


@pytest.mark.parametrize("name,row", sorted(TABLE7.items()))
def test_seven_pulse_table(name, row):
    assert_row(deg_phases(name), row, 0.05)


@pytest.mark.parametrize("name,row", sorted(TABLE9.items()))
def test_nine_pulse_table_leading_half(name, row):
    assert_row(deg_phases(name)[:5], row, 0.05)


def test_nine_pulse_rows_have_declared_tail_symmetry():
    assert is_time_antisymmetric(make("asbo9-7a").sequence)
    assert is_time_antisymmetric(make("asbo9-7b").sequence)
    assert is_time_symmetric(make("sym9").sequence)


def test_sym9_printed_row_typo():
    # the closed form fixes phi_2 = phi_3 exactly, so the usual printed pair
    # (339.5, 339.4) cannot both be right; the solution value is 339.37 and
    # it satisfies all four design constraints to machine precision
    seq = make("sym9").sequence
    assert seq.pulses[1].phi == seq.pulses[2].phi
    assert math.degrees(seq.pulses[1].phi) == pytest.approx(339.37, abs=0.01)
    b = bch_summary(seq)
    assert math.hypot(*b.delta1_pse) < 1e-12
    assert math.hypot(*b.delta1_ore) < 1e-12
    assert abs(b.delta2_pse) < 1e-12
    assert abs(b.delta2_ore_z) < 1e-12


class TestCatalog:
    def test_size(self):
        assert len(catalog()) >= 18

    def test_names_unique_and_ordered(self):
        names = [e.name for e in catalog()]
        assert names == list(catalog_names())
        assert len(set(names)) == len(names)

    def test_net_phase_zero_or_pi_for_pi_entries(self):
        for entry in catalog():
            if not entry.sequence.all_pi:
                continue
            phi = net_phase(entry.sequence)
            gap = min(phi, TWO_PI - phi, abs(phi - math.pi))
            assert gap < 1e-9, entry.name

    def test_claimed_orders_certified(self):
        for entry in catalog():
            rep = certify(entry.sequence)
            oe, of = entry.claimed_orders
            assert rep.eps_series.leading_order >= oe, entry.name
            assert rep.f_series.leading_order >= of, entry.name

    def test_symmetry_classes(self):
        assert is_time_symmetric(make("knill").sequence)
        assert is_time_antisymmetric(make("f1").sequence)
        for name in ("sym5-pse", "sym7-pse-opt", "sym7-ore-opt", "sym9", "bb1-symmetric"):
            assert is_time_symmetric(make(name).sequence), name
        for name in ("ore5-antisym", "asbo9-7a", "asbo9-7b", "asbo9-b1", "asbo9-omega"):
            assert is_time_antisymmetric(make(name).sequence), name

    def test_alway_jones_orders(self):
        rep = certify(make("alway-jones9").sequence)
        assert rep.eps_series.leading_order == 6
        assert rep.f_series.leading_order >= 4

    def test_export_roundtrip(self, tmp_path):
        paths = save_catalog(tmp_path)
        assert len(paths) == len(catalog())
        back = load_sequence(tmp_path / "knill.json")
        assert back.name == "knill"
        assert np.allclose(back.phis, make("knill").sequence.phis, atol=1e-9)


class TestMake:
    def test_unknown_name(self):
        with pytest.raises(UnknownSequenceError):
            make("bb2")

    def test_parametric_requires_params(self):
        with pytest.raises(ValueError):
            make("tycko5")

    def test_wrong_param_count(self):
        with pytest.raises(ValueError):
            make("rhombus7", [1.0])

    def test_balanced_alpha_restricted(self):
        with pytest.raises(ValueError):
            make("tycko5-balanced", [1.0])
        make("tycko5-balanced", [5 * math.pi / 3])

    def test_knill_is_family_member(self):
        knill = make("knill").sequence.phis
        member = make("tycko5", [-5 * math.pi / 6]).sequence.phis
        assert np.allclose(knill, member, atol=1e-12)

    def test_s1_phases(self):
        want = np.array([0.0, 0.0, 2 * math.pi / 3, math.pi / 3, 2 * math.pi / 3])
        assert np.allclose(make("s1").sequence.phis, want, atol=1e-12)

    def test_asbo9_first_phase_is_five_psi(self):
        entry = make("asbo9", [PSI])
        assert entry.sequence.pulses[0].phi == pytest.approx((5 * PSI) % TWO_PI, abs=1e-12)
        assert math.degrees(entry.sequence.pulses[0].phi) == pytest.approx(162.4, abs=0.05)

    def test_bb1_symmetric_angles(self):
        seq = make("bb1-symmetric").sequence
        assert np.allclose(
            seq.thetas, [math.pi / 2, math.pi, 2 * math.pi, math.pi, math.pi / 2]
        )
        assert not seq.all_pi

    def test_corpse_angles(self):
        seq = make("corpse").sequence
        assert np.allclose(seq.thetas, [math.pi / 3, 5 * math.pi / 3, 7 * math.pi / 3])
        assert np.allclose(seq.phis, [0.0, math.pi, 0.0])


class TestFamilyConstructors:
    def test_tycko5_odd_toggling_triangle_everywhere(self):
        rng = np.random.default_rng(5)
        from cpnot.sequences import PulseSequence, toggling_phases_pse

        for a in rng.uniform(0, TWO_PI, 10):
            seq = PulseSequence.from_phases("t", tycko5_phases(a))
            tp = toggling_phases_pse(seq)
            odd, even = tp[::2], tp[1::2]
            assert abs(np.exp(1j * odd).sum()) < 1e-12
            assert abs(np.exp(1j * even).sum()) < 1e-12

    def test_sym9_family_closes_first_order(self):
        from cpnot.sequences import PulseSequence, toggling_phases_pse

        for a in (1.2, 2.0, 4.0):
            seq = PulseSequence.from_phases("t", sym9_phases(a))
            tp = toggling_phases_pse(seq)
            assert abs(np.exp(1j * tp[::2]).sum()) < 1e-9
            assert abs(np.exp(1j * tp[1::2]).sum()) < 1e-9

    def test_sym9_domain(self):
        with pytest.raises(ValueError):
            sym9_phases(0.1)
