import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cpnot._backend import sequence_fidelities
from cpnot.errors import (
    ErrorPoint,
    errored_gate,
    first_order_ore_factor,
    second_order_ore_factors,
    sequence_propagator,
)
from cpnot.exceptions import UnsupportedSequenceError
from cpnot.families import make
from cpnot.sequences import Pulse, PulseSequence, transform
from cpnot.su2 import compose, equal_up_to_global_phase, fidelity, is_unitary, pulse_gate

small = st.floats(min_value=-1.5, max_value=1.5, allow_nan=False)


def test_error_point_validation():
    with pytest.raises(ValueError):
        ErrorPoint(math.nan, 0.0)
    with pytest.raises(ValueError):
        ErrorPoint(0.0, math.inf)


def test_error_free_gate_matches_ideal():
    p = Pulse(math.pi, 0.7)
    g = errored_gate(p, ErrorPoint(0.0, 0.0))
    assert np.max(np.abs(g - pulse_gate(math.pi, 0.7))) < 1e-15


def test_pure_strength_error_scales_angle():
    p = Pulse(math.pi, 0.3)
    g = errored_gate(p, ErrorPoint(0.25, 0.0))
    assert np.max(np.abs(g - pulse_gate(1.25 * math.pi, 0.3))) < 1e-14


def test_offset_sqrt3_kills_fidelity():
    for phi in (0.0, 1.0, 4.5):
        p = Pulse(math.pi, phi)
        g = errored_gate(p, ErrorPoint(0.0, math.sqrt(3.0)))
        assert fidelity(pulse_gate(math.pi, phi), g) < 1e-12


def test_strength_error_fidelity_anchor():
    p = Pulse(math.pi, 0.0)
    g = errored_gate(p, ErrorPoint(0.2, 0.0))
    assert fidelity(pulse_gate(math.pi, 0.0), g) == pytest.approx(
        math.cos(0.1 * math.pi), abs=1e-12
    )


@given(theta=st.floats(min_value=0.1, max_value=4 * math.pi), phi=small, eps=small, f=small)
@settings(max_examples=200, deadline=None)
def test_errored_gate_always_unitary(theta, phi, eps, f):
    g = errored_gate(Pulse(theta, phi), ErrorPoint(eps, f))
    assert is_unitary(g, 1e-12)


def test_single_pulse_strength_error_factorizes_exactly():
    # V = pi_phi . (eps*pi)_phi with the error rotation acting first
    p = Pulse(math.pi, 1.1)
    for eps in (-0.4, 0.05, 0.8):
        v = errored_gate(p, ErrorPoint(eps, 0.0))
        factored = compose(pulse_gate(math.pi, 1.1), pulse_gate(eps * math.pi, 1.1))
        assert np.max(np.abs(v - factored)) < 1e-13


def test_sequence_propagator_no_error_is_ideal():
    from cpnot.sequences import ideal_propagator

    seq = make("knill").sequence
    got = sequence_propagator(seq, ErrorPoint(0.0, 0.0))
    assert np.max(np.abs(got - ideal_propagator(seq))) < 1e-13


def test_f1_suppresses_strength_errors():
    # a 30% amplitude miscalibration still leaves per-mille infidelity;
    # the sextic series 5*pi^6/1024 * 0.3^6 predicts 3.4e-3
    seq = make("f1").sequence
    f = sequence_fidelities(seq, [0.3], [0.0])[0]
    assert f == pytest.approx(0.9970218489, abs=1e-9)
    predicted = 5 * math.pi**6 / 1024 * 0.3**6
    assert 1.0 - f == pytest.approx(predicted, rel=0.15)


class TestOreFactorization:
    def test_first_order_residual_scales_quadratically(self):
        p = Pulse(math.pi, 0.9)

        def residual(f):
            ideal, lam = first_order_ore_factor(p, f)
            return np.max(np.abs(errored_gate(p, ErrorPoint(0.0, f)) - compose(ideal, lam)))

        r1, r2 = residual(0.01), residual(0.02)
        assert r1 < 5e-4
        assert r2 / r1 == pytest.approx(4.0, rel=0.15)

    def test_lambda_is_identity_on_resonance(self):
        _, lam = first_order_ore_factor(Pulse(math.pi, 0.2), 0.0)
        assert np.max(np.abs(lam - np.eye(2))) < 1e-15

    def test_second_order_residual_scales_cubically(self):
        p = Pulse(math.pi, 2.2)

        def residual(f):
            ideal, lam, mu = second_order_ore_factors(p, f)
            approx = compose(ideal, compose(lam, mu))
            return np.max(np.abs(errored_gate(p, ErrorPoint(0.0, f)) - approx))

        r1, r2 = residual(0.01), residual(0.02)
        assert r1 < 5e-6
        assert r2 / r1 == pytest.approx(8.0, rel=0.2)

    def test_requires_pi_pulse(self):
        with pytest.raises(UnsupportedSequenceError):
            first_order_ore_factor(Pulse(math.pi / 2, 0.0), 0.1)


class TestFidelitySymmetries:
    def test_even_in_strength_error_at_zero_offset(self):
        rng = np.random.default_rng(7)
        eps = np.linspace(-1.0, 1.0, 101)
        for _ in range(10):
            n = rng.choice([3, 5, 7])
            seq = PulseSequence.from_phases("r", rng.uniform(0, 2 * math.pi, n))
            up = sequence_fidelities(seq, eps, 0.0 * eps)
            dn = sequence_fidelities(seq, -eps, 0.0 * eps)
            assert np.max(np.abs(up - dn)) < 1e-12

    def test_time_symmetric_even_in_offset(self):
        eps = np.linspace(-0.8, 0.8, 21)
        fs = np.linspace(-1.5, 1.5, 21)
        ee, ff = np.meshgrid(eps, fs, indexing="ij")
        for name in ("knill", "sym5-pse", "bb1-symmetric", "sym9"):
            seq = make(name).sequence
            up = sequence_fidelities(seq, ee.ravel(), ff.ravel())
            dn = sequence_fidelities(seq, ee.ravel(), -ff.ravel())
            assert np.max(np.abs(up - dn)) < 1e-12

    def test_reverse_and_negate_mirror_offset_response(self):
        fs = np.linspace(-1.2, 1.2, 41)
        eps = 0.13 * np.ones_like(fs)
        for name in ("f1", "tycko5-pse-opt", "alway-jones9"):
            seq = make(name).sequence
            base = sequence_fidelities(seq, eps, fs)
            for which in ("reverse-order", "negate-phases"):
                mirrored = sequence_fidelities(transform(seq, which), eps, -fs)
                assert np.max(np.abs(base - mirrored)) < 1e-12

    def test_zero_fidelity_limits_for_odd_pi_sequences(self):
        rng = np.random.default_rng(11)
        for _ in range(10):
            n = rng.choice([3, 5, 7, 9])
            seq = PulseSequence.from_phases("r", rng.uniform(0, 2 * math.pi, n))
            vals = sequence_fidelities(
                seq, [1.0, -1.0, 0.0, 0.0], [0.0, 0.0, math.sqrt(3), -math.sqrt(3)]
            )
            assert np.max(vals) < 1e-12
