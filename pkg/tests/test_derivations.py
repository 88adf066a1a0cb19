"""Derivation operator, pre-adjoint, point-mass images, identity residual."""

import math

import numpy as np
import pytest

import derivlab as dl
from derivlab.errors import (
    DomainError,
    GridMismatchError,
    SupportOverflowError,
    TailError,
)

W1 = dl.Weight.constant_one()


def grid(h=1 / 256, t_max=8.0, **kw):
    return dl.Grid.uniform(h, t_max, **kw)


def const_one(g):
    return dl.LInfElement(g, np.ones(g.size), W1, dl.Tail.proportional(1.0),
                          extension=lambda pts: np.ones(np.shape(pts)))


def t_exp_decay(g):
    fn = lambda t: np.asarray(t, float) * np.exp(-np.asarray(t, float))
    return dl.LInfElement.from_function(g, fn, W1, dl.Tail.zero())


class TestDerivDelta:
    def test_constant_symbol_closed_form(self):
        g = grid()
        img = dl.deriv_delta(const_one(g), 1.0)
        expected = 1.0 / (1.0 + g.nodes)
        assert np.max(np.abs(img.samples - expected)) <= 1e-13

    def test_zero_location_gives_zero(self):
        g = grid()
        img = dl.deriv_delta(const_one(g), 0.0)
        assert np.all(img.samples == 0)

    def test_power_weight_closed_form(self):
        # ((2+t)^2 - 1)/(t+1) = t + 3
        g = grid(h=1 / 64)
        w = dl.Weight.power(2.0)
        img = dl.deriv_delta(dl.build("omega-minus-one", w, g), 1.0)
        assert np.max(np.abs(img.samples - (g.nodes + 3.0))) <= 1e-12

    def test_negative_location_rejected(self):
        with pytest.raises(DomainError):
            dl.deriv_delta(const_one(grid()), -0.5)


class TestApplyOperators:
    def test_derivation_closed_form(self):
        # integral of s/(t+s) over [0,1] = 1 - t log(1 + 1/t)
        g = grid()
        f = dl.indicator_l1(g, 0.0, 1.0)
        img = dl.apply_D(const_one(g), f)
        t = g.nodes[1:]
        closed = 1.0 - t * np.log1p(1.0 / t)
        budget = dl.slack(g.uniform_h, dl.l1_norm(f, W1), 1.0)
        assert np.max(np.abs(img.samples[1:] - closed)) <= budget
        assert abs(img.samples[0] - 1.0) <= budget

    def test_adjoint_closed_form_and_zero_at_origin(self):
        g = grid()
        f = dl.indicator_l1(g, 0.0, 1.0)
        img = dl.apply_T(const_one(g), f)
        assert img.samples[0] == 0.0
        t = g.nodes[1:]
        closed = t * np.log1p(1.0 / t)
        assert np.max(np.abs(img.samples[1:] - closed)) <= dl.slack(
            g.uniform_h, dl.l1_norm(f, W1), 1.0)

    def test_zero_input(self):
        g = grid()
        z = dl.L1Element(g, np.zeros(g.size))
        assert np.all(dl.apply_D(const_one(g), z).samples == 0)
        assert np.all(dl.apply_T(const_one(g), z).samples == 0)

    def test_non_compact_input_rejected(self):
        g = grid()
        f = dl.L1Element(g, np.exp(-g.nodes), tail="none")
        with pytest.raises(TailError):
            dl.apply_D(const_one(g), f)
        with pytest.raises(TailError):
            dl.apply_T(const_one(g), f)

    def test_leibniz_split_is_nodewise_exact(self):
        g = grid()
        f = dl.bump_l1(g, 0.5, 3.0)
        for w, phi in [
            (W1, const_one(g)),
            (W1, t_exp_decay(g)),
            (dl.Weight.power(1.0), dl.build("omega-minus-one", dl.Weight.power(1.0), g)),
        ]:
            d = dl.apply_D(phi, f).samples
            a = dl.apply_T(phi, f).samples
            m = dl.module_action(f, phi).samples
            scale = max(np.max(np.abs(d) + np.abs(a)), 1e-300)
            assert np.max(np.abs(d + a - m)) <= 1e-12 * scale

    def test_leibniz_split_origin_term_is_the_documented_exception(self):
        # when f(0) phi(0) != 0 the module action keeps the origin node term
        # that both kernel factors drop; everywhere else stays exact
        g = grid()
        f = dl.indicator_l1(g, 0.0, 1.0)
        phi = const_one(g)
        d = dl.apply_D(phi, f).samples
        a = dl.apply_T(phi, f).samples
        m = dl.module_action(f, phi).samples
        dev = np.abs(d + a - m)
        assert dev[0] == pytest.approx(
            abs(g.weights[0] * f.samples[0] * phi.samples[0]), rel=1e-12)
        assert np.max(dev[1:]) <= 1e-14

    def test_duality_pairing(self):
        g = grid()
        w = dl.Weight.power(1.0)
        phi = dl.build("omega-minus-one", w, g)
        f = dl.bump_l1(g, 0.3, 2.0)
        k = dl.bump_l1(g, 0.6, 2.5)
        lhs = dl.pairing_l1_linf(k, dl.apply_D(phi, f))
        rhs = dl.pairing_l1_linf(f, dl.apply_T(phi, k))
        budget = 10 * dl.slack(g.uniform_h, dl.l1_norm(f, w), dl.l1_norm(k, w),
                               dl.linf_norm(phi))
        assert abs(lhs - rhs) <= budget

    def test_norm_bound(self):
        g = grid()
        phi = t_exp_decay(g)
        f = dl.bump_l1(g, 0.5, 3.0)
        assert dl.linf_norm(dl.apply_D(phi, f)) <= (
            dl.linf_norm(phi) * dl.l1_norm(f, W1) * (1 + 10 * g.uniform_h))

    def test_range_lands_in_c0(self):
        g = grid(t_max=32.0, h=1 / 64)
        f = dl.bump_l1(g, 0.5, 3.0)
        for w, phi in [
            (W1, t_exp_decay(g)),
            (W1, dl.indicator_linf(g, 0.0, 1.0, W1)),
            (dl.Weight.power(1.0),
             dl.indicator_linf(g, 0.0, 1.0, dl.Weight.power(1.0))),
        ]:
            rep = dl.is_c0_membership(dl.apply_D(phi, f))
            assert rep.verdict == "holds"


class TestMeasureExtension:
    def test_point_mass_matches_deriv_delta(self):
        g = grid()
        phi = t_exp_decay(g)
        out = dl.apply_Dbar_measure(phi, dl.MeasureElement.point_mass(1.5))
        assert np.max(np.abs(out.samples - dl.deriv_delta(phi, 1.5).samples)) <= 1e-13

    def test_density_matches_apply_D(self):
        g = grid()
        phi = t_exp_decay(g)
        f = dl.bump_l1(g, 0.5, 2.0)
        out = dl.apply_Dbar_measure(phi, dl.MeasureElement.from_density(f))
        assert np.max(np.abs(out.samples - dl.apply_D(phi, f).samples)) <= 1e-13

    def test_linearity_over_atoms(self):
        g = grid()
        phi = t_exp_decay(g)
        mu = 2.0 * dl.MeasureElement.point_mass(1.0) + dl.MeasureElement.point_mass(2.0)
        out = dl.apply_Dbar_measure(phi, mu)
        expected = (2.0 * dl.deriv_delta(phi, 1.0).samples
                    + dl.deriv_delta(phi, 2.0).samples)
        assert np.max(np.abs(out.samples - expected)) <= 1e-13

    def test_atom_beyond_grid_rejected(self):
        g = grid()
        with pytest.raises(TailError):
            dl.apply_Dbar_measure(t_exp_decay(g), dl.MeasureElement.point_mass(9.0))


class TestIdentityResidual:
    def test_residual_within_slack_across_weights(self):
        g = grid(h=1 / 128, t_max=16.0)
        f = dl.bump_l1(g, 0.4, 2.4)
        k = dl.bump_l1(g, 0.5, 3.0)
        for w, phi_id in [(W1, "step"), (dl.Weight.power(1.0), "omega-minus-one"),
                          (dl.Weight.exponential(-1.0), "omega-minus-one")]:
            phi = dl.build(phi_id, w, g) if phi_id != "step" \
                else dl.indicator_linf(g, 0.0, 1.0, w)
            res = dl.derivation_identity_residual(phi, f, k)
            budget = dl.slack(g.uniform_h, dl.l1_norm(f, w), dl.l1_norm(k, w),
                              max(dl.linf_norm(phi), 1e-300))
            assert res <= budget

    def test_support_overflow_rejected(self):
        g = grid(t_max=4.0)
        f = dl.bump_l1(g, 0.5, 3.0)
        with pytest.raises(SupportOverflowError):
            dl.derivation_identity_residual(const_one(g), f, f)

    def test_grid_mismatch_rejected(self):
        f = dl.bump_l1(grid(), 0.5, 2.0)
        k = dl.bump_l1(grid(t_max=4.0), 0.5, 2.0)
        with pytest.raises(GridMismatchError):
            dl.derivation_identity_residual(const_one(grid()), f, k)

    def test_refined_grid_path(self):
        g = grid(h=1 / 64, t_max=6.0, refine_zero=True)
        f = dl.bump_l1(g, 0.4, 2.0)
        phi = dl.LInfElement.from_function(
            g, lambda t: np.exp(-np.asarray(t, float)), W1, dl.Tail.zero())
        res = dl.derivation_identity_residual(phi, f, f)
        assert res <= dl.slack(1 / 64, dl.l1_norm(f, W1), dl.l1_norm(f, W1), 1.0)


class TestNormProfile:
    def test_upper_bound_everywhere(self):
        g = grid(t_max=16.0, h=1 / 64)
        w = dl.Weight.power(1.0)
        phi = dl.build("omega-minus-one", w, g)
        prof = dl.deriv_delta_norm_profile(phi, [0.25, 0.5, 1.0, 2.0, 4.0, 8.0])
        bound = dl.linf_norm(phi)
        for p in prof:
            assert p.norm <= bound * float(w(p.s)) * (1 + 1e-9)

    def test_decays_to_zero_at_origin(self):
        # sup_t s e^-(t+s) = s e^-s, attained at t = 0
        g = grid(t_max=16.0, h=1 / 64)
        phi = t_exp_decay(g)
        s_vals = [2.0 ** -k for k in range(6)]
        prof = dl.deriv_delta_norm_profile(phi, s_vals)
        norms = [p.norm for p in prof]
        closed = [s * math.exp(-s) for s in s_vals]
        assert np.max(np.abs(np.array(norms) - closed)) <= 1e-10
        assert all(a > b for a, b in zip(norms, norms[1:]))

    def test_step_symbol_grid_sup_near_origin(self):
        g = grid()
        phi = dl.indicator_linf(g, 0.0, 1.0, W1)
        (point,) = dl.deriv_delta_norm_profile(phi, [0.5])
        assert point.norm == pytest.approx(1.0, abs=2 * g.uniform_h)
        assert not point.attained_by_tail

    def test_scaled_profile_decays_for_l0inf_symbol(self):
        # forward direction of the norm characterization: an l0inf symbol
        # sends the scaled point-mass norms to zero along dyadic windows
        g = grid(t_max=64.0, h=1 / 32)
        phi = t_exp_decay(g)
        s_vals = np.array([2.0 ** k for k in range(-2, 5)])
        prof = dl.deriv_delta_norm_profile(phi, s_vals)
        scaled = np.array([p.scaled for p in prof])
        _, maxima = dl.dyadic_window_maxima(s_vals, scaled)
        assert dl.report.decay_verdict(maxima, 1e-2) == "holds"


class TestContinuityInParameter:
    def test_point_mass_images_continuous_for_smooth_symbol(self):
        # shrinking the offset shrinks the sup distance, at three base points
        g = grid(h=1 / 512)
        phi = t_exp_decay(g)
        for s0 in (0.5, 1.0, 2.0):
            base = dl.deriv_delta(phi, s0)
            gaps = []
            for dh in (0.2, 0.1, 0.05, 0.025):
                gaps.append(dl.linf_norm(dl.deriv_delta(phi, s0 + dh) - base))
            assert all(a > b for a, b in zip(gaps, gaps[1:]))
            assert gaps[-1] <= 0.05


class TestKernelFamily:
    def test_member_norm_bound(self):
        g = grid(t_max=16.0, h=1 / 64)
        w = dl.Weight.power(1.0)
        phi = dl.build("omega-minus-one", w, g)
        fam = dl.kernel_family(phi, np.arange(0.0, 16.5, 1.0))
        bound = dl.linf_norm(phi)
        for p, member in zip(fam.params, fam.members):
            assert dl.linf_norm(member) <= bound * float(w(p)) * (1 + 1e-9)

    def test_kernel_object_bound_and_conventions(self):
        g = grid()
        w = dl.Weight.power(1.0)
        phi = dl.build("omega", w, g)
        kern = dl.DerivationKernel(phi)
        assert kern(0.0, 0.0) == 0.0
        assert kern(3.0, 0.0) == 0.0
        assert float(kern(0.0, 2.0)) == pytest.approx(float(phi.eval_at(2.0)[0]))
        t, s = np.meshgrid(g.nodes[::64], g.nodes[::64])
        vals = np.abs(kern(t, s))
        assert np.all(vals <= dl.linf_norm(phi) * w(t) * w(s) * (1 + 1e-9))

    def test_empty_family_rejected(self):
        with pytest.raises(DomainError):
            dl.kernel_family(const_one(grid()), [])
