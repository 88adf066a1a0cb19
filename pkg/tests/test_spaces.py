"""Weights, grids, elements, norms, pairings, membership verdicts."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import derivlab as dl
from derivlab.errors import (
    DomainError,
    ExtrapolationError,
    GridMismatchError,
    TailError,
)

W1 = dl.Weight.constant_one()


def grid(h=1 / 256, t_max=8.0, **kw):
    return dl.Grid.uniform(h, t_max, **kw)


class TestWeight:
    def test_constant_one(self):
        assert dl.weight_eval(W1, 7.3) == 1.0

    def test_power_value(self):
        # (1+1)^2 by definition
        assert dl.weight_eval(dl.Weight.power(2.0), 1.0) == 4.0

    def test_exponential_closed_form(self):
        assert dl.weight_eval(dl.Weight.exponential(-1.0), math.log(2)) == pytest.approx(0.5, rel=1e-14)

    def test_value_at_zero_is_one(self):
        for w in (W1, dl.Weight.power(0.5), dl.Weight.exponential(2.0),
                  dl.Weight.gaussian_decay(1.0)):
            assert w(0.0) == 1.0

    def test_negative_argument_rejected(self):
        with pytest.raises(DomainError):
            W1(-0.1)

    def test_tabulated_interpolates_and_refuses_extrapolation(self):
        w = dl.Weight.tabulated([0.0, 1.0, 2.0], [1.0, 0.5, 0.4])
        assert w(0.5) == pytest.approx(0.75)
        with pytest.raises(ExtrapolationError):
            w(2.5)

    def test_tabulated_must_start_at_one(self):
        with pytest.raises(DomainError):
            dl.Weight.tabulated([0.0, 1.0], [0.9, 0.5])

    def test_unknown_kind_rejected(self):
        with pytest.raises(DomainError):
            dl.Weight("parabolic")


class TestSubmultiplicative:
    @pytest.mark.parametrize("w", [
        W1,
        dl.Weight.power(1.0),
        dl.Weight.power(2.0),
        dl.Weight.exponential(0.5),
        dl.Weight.exponential(-1.0),
        dl.Weight.gaussian_decay(1.0),
    ], ids=["one", "power1", "power2", "exp+", "exp-", "gauss"])
    def test_thousand_random_pairs(self, w):
        rep = dl.check_submultiplicative(w, 1000, seed=3)
        assert rep.verdict == "holds"
        assert rep.parameters["max_ratio"] <= 1.0 + 1e-10

    def test_exponential_is_exactly_multiplicative(self):
        rep = dl.check_submultiplicative(dl.Weight.exponential(0.5), 200, seed=1)
        assert rep.parameters["max_ratio"] == pytest.approx(1.0, abs=1e-12)

    def test_sample_count_validated(self):
        with pytest.raises(DomainError):
            dl.check_submultiplicative(W1, 0)


class TestLowerIntegralConstant:
    def test_constant_weight_gives_one(self):
        assert dl.lower_integral_constant(W1, grid()) == pytest.approx(1.0, abs=1e-12)

    def test_decaying_exponential_closed_form(self):
        w = dl.Weight.exponential(-1.0)
        c = dl.lower_integral_constant(w, grid(h=1 / 64))
        assert c == pytest.approx(1.0 - math.exp(-1.0), abs=1e-4)

    def test_increasing_weight_at_least_one(self):
        assert dl.lower_integral_constant(dl.Weight.power(1.0), grid(h=1 / 64)) >= 1.0

    def test_short_grid_rejected(self):
        with pytest.raises(DomainError):
            dl.lower_integral_constant(W1, grid(h=1 / 64, t_max=1.0))


class TestGrid:
    def test_weights_sum_to_t_max(self):
        for scheme in ("trapezoid", "simpson"):
            g = grid(h=1 / 64, scheme=scheme)
            assert np.sum(g.weights) == pytest.approx(g.t_max, rel=1e-13)

    def test_refined_grid_sums_and_is_not_uniform(self):
        g = grid(h=1 / 64, refine_zero=True)
        assert g.uniform_h is None
        assert np.sum(g.weights) == pytest.approx(g.t_max, rel=1e-13)
        assert np.all(np.diff(g.nodes) > 0)

    def test_misaligned_t_max_rejected(self):
        with pytest.raises(DomainError):
            dl.Grid.uniform(0.3, 1.0)

    def test_simpson_needs_even_intervals(self):
        with pytest.raises(DomainError):
            dl.Grid.uniform(1.0, 3.0, scheme="simpson")

    def test_index_of(self):
        g = grid()
        assert g.index_of(1.0) == 256
        with pytest.raises(DomainError):
            g.index_of(1.0 + 1e-4)


class TestNorms:
    def test_l1_norm_indicator_exact(self):
        # midpoint convention at the jump makes the trapezoid value exact
        g = grid()
        f = dl.indicator_l1(g, 0.0, 1.0)
        assert dl.l1_norm(f, W1) == pytest.approx(1.0, abs=1e-14)

    def test_linf_norm_of_weight_profile(self):
        g = grid()
        phi = dl.build("omega", W1, g)
        assert dl.linf_norm(phi) == pytest.approx(1.0, abs=1e-14)

    def test_measure_norm_atoms(self):
        w = dl.Weight.power(1.0)
        mu = 2.0 * dl.MeasureElement.point_mass(1.0) + dl.MeasureElement.point_mass(2.0)
        assert dl.measure_norm(mu, w) == pytest.approx(7.0)

    def test_proportional_tail_contributes_coefficient(self):
        g = grid()
        w = dl.Weight.power(1.0)
        phi = dl.LInfElement(g, 2.0 * w(g.nodes), w, dl.Tail.proportional(2.0))
        assert dl.linf_norm(phi) == pytest.approx(2.0)

    def test_inconsistent_proportional_tail_rejected(self):
        g = grid()
        with pytest.raises(DomainError):
            dl.LInfElement(g, np.exp(-g.nodes), W1, dl.Tail.proportional(1.0))


class TestPairings:
    def test_indicator_against_one(self):
        g = grid()
        f = dl.indicator_l1(g, 0.0, 1.0)
        one = dl.LInfElement(g, np.ones(g.size), W1, dl.Tail.proportional(1.0))
        assert dl.pairing_l1_linf(f, one) == pytest.approx(1.0, abs=1e-14)

    def test_zero_function(self):
        g = grid()
        z = dl.L1Element(g, np.zeros(g.size))
        phi = dl.LInfElement(g, g.nodes.copy(), W1)
        assert dl.pairing_l1_linf(z, phi) == 0.0

    def test_linear_integrand_closed_form(self):
        # integral of t over [0,1] = 1/2; trapezoid is exact for degree 1
        g = grid()
        f = dl.indicator_l1(g, 0.0, 1.0)
        phi = dl.LInfElement(g, g.nodes.copy(), W1)
        assert complex(dl.pairing_l1_linf(f, phi)).real == pytest.approx(0.5, abs=1e-4)

    def test_grid_mismatch(self):
        f = dl.indicator_l1(grid(), 0.0, 1.0)
        phi = dl.LInfElement(grid(t_max=4.0), np.ones(grid(t_max=4.0).size), W1)
        with pytest.raises(GridMismatchError):
            dl.pairing_l1_linf(f, phi)

    def test_measure_pairing_point_mass(self):
        g = grid()
        h = dl.LInfElement.from_function(g, lambda t: np.cos(np.asarray(t, float)), W1,
                                         dl.Tail.bound())
        mu = dl.MeasureElement.point_mass(1.25)
        assert complex(dl.pairing_c0_measure(h, mu)).real == pytest.approx(
            math.cos(1.25), abs=1e-6)

    def test_measure_pairing_zero_measure(self):
        g = grid()
        h = dl.LInfElement(g, np.ones(g.size), W1, dl.Tail.proportional(1.0))
        assert dl.pairing_c0_measure(h, dl.MeasureElement()) == 0.0

    def test_measure_pairing_atom_plus_density_closed_form(self):
        g = grid()
        h = dl.LInfElement.from_function(g, lambda t: np.exp(-np.asarray(t, float)),
                                         W1, dl.Tail.zero())
        mu = dl.MeasureElement.point_mass(1.0) + dl.MeasureElement.from_density(
            dl.indicator_l1(g, 0.0, 1.0))
        expected = math.exp(-1.0) + (1.0 - math.exp(-1.0))
        assert complex(dl.pairing_c0_measure(h, mu)).real == pytest.approx(
            expected, abs=1e-4)

    def test_atom_beyond_grid_needs_zero_tail(self):
        g = grid()
        mu = dl.MeasureElement.point_mass(9.0)
        zero_tail = dl.LInfElement(g, np.exp(-g.nodes), W1, dl.Tail.zero())
        assert dl.pairing_c0_measure(zero_tail, mu) == 0.0
        bounded = dl.LInfElement(g, np.exp(-g.nodes), W1, dl.Tail.bound())
        with pytest.raises(TailError):
            dl.pairing_c0_measure(bounded, mu)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.floats(-3, 3), min_size=5, max_size=30),
       st.lists(st.floats(-3, 3), min_size=5, max_size=30))
def test_pairing_holder_bound(fvals, gvals):
    g = dl.Grid.uniform(1 / 8, 4.0)
    fv = np.zeros(g.size)
    fv[1:1 + len(fvals)] = fvals
    pv = np.zeros(g.size)
    pv[1:1 + len(gvals)] = gvals
    f = dl.L1Element(g, fv)
    phi = dl.LInfElement(g, pv, W1)
    lhs = abs(dl.pairing_l1_linf(f, phi))
    assert lhs <= dl.l1_norm(f, W1) * dl.linf_norm(phi) * (1 + 1e-10) + 1e-12


@settings(max_examples=40, deadline=None)
@given(st.lists(st.tuples(st.floats(0, 8), st.floats(-2, 2), st.floats(-2, 2)),
                min_size=1, max_size=6),
       st.lists(st.tuples(st.floats(0, 8), st.floats(-2, 2), st.floats(-2, 2)),
                min_size=1, max_size=6),
       st.floats(-4, 4), st.floats(-4, 4))
def test_measure_norm_homogeneous_and_subadditive(atoms_a, atoms_b, cre, cim):
    w = dl.Weight.power(1.0)
    mu = dl.MeasureElement(tuple((s, complex(re, im)) for s, re, im in atoms_a))
    nu = dl.MeasureElement(tuple((s, complex(re, im)) for s, re, im in atoms_b))
    c = complex(cre, cim)
    assert dl.measure_norm(c * mu, w) == pytest.approx(
        abs(c) * dl.measure_norm(mu, w), rel=1e-12, abs=1e-12)
    assert dl.measure_norm(mu + nu, w) <= (
        dl.measure_norm(mu, w) + dl.measure_norm(nu, w)) * (1 + 1e-12) + 1e-12


def test_trapezoid_order_for_smooth_integrands():
    # refining by 2x shrinks the quadrature error about fourfold;
    # oracle: int_0^8 (1+t) e^-t dt = 2 - 10 e^-8 in closed form
    w = dl.Weight.power(1.0)
    errs = []
    exact = 2.0 - 10.0 * math.exp(-8.0)
    for h in (1 / 32, 1 / 64):
        g = dl.Grid.uniform(h, 8.0)
        f = dl.L1Element(g, np.exp(-g.nodes))
        errs.append(abs(dl.l1_norm(f, w) - exact))
    assert errs[0] / errs[1] == pytest.approx(4.0, rel=0.15)


class TestMembership:
    def test_weight_itself_fails(self):
        g = grid(t_max=16.0)
        phi = dl.build("omega", W1, g)
        assert dl.is_l0inf(phi).verdict == "fails"
        assert dl.is_c0_membership(phi).verdict == "fails"

    def test_decaying_exponential_holds(self):
        g = grid(t_max=32.0, h=1 / 64)
        phi = dl.LInfElement.from_function(
            g, lambda t: np.exp(-np.asarray(t, float)), W1, dl.Tail.zero())
        assert dl.is_l0inf(phi).verdict == "holds"
        assert dl.is_c0_membership(phi).verdict == "holds"

    def test_indicator_is_l0inf_but_not_c0(self):
        g = grid(t_max=16.0)
        phi = dl.indicator_linf(g, 0.0, 1.0, W1)
        assert dl.is_l0inf(phi).verdict == "holds"
        rep = dl.is_c0_membership(phi)
        assert rep.verdict == "fails"

    def test_proportional_tail_blocks_l0inf(self):
        g = grid(t_max=16.0)
        phi = dl.LInfElement(g, np.asarray(W1(g.nodes)), W1, dl.Tail.proportional(1.0))
        assert dl.is_l0inf(phi).verdict == "fails"

    def test_vanishes_at_zero(self):
        g = grid(h=1 / 512, t_max=8.0)
        w = dl.Weight.power(2.0)
        ok, _ = dl.spaces.vanishes_at_zero(dl.build("omega-minus-one", w, g))
        assert ok
        bad, _ = dl.spaces.vanishes_at_zero(dl.indicator_linf(g, 0.0, 1.0, W1))
        assert not bad
        const, _ = dl.spaces.vanishes_at_zero(
            dl.LInfElement(g, np.full(g.size, 0.5), W1))
        assert not const


class TestApproxIdentity:
    def test_unit_mass(self):
        g = grid()
        for n in (1, 4, 16):
            en = dl.approx_identity(g, n)
            assert dl.l1_norm(en, W1) == pytest.approx(1.0, abs=1e-12)
            assert en.support_end() <= 1.0 / n + 1e-12

    def test_too_coarse_grid_rejected(self):
        with pytest.raises(DomainError):
            dl.approx_identity(dl.Grid.uniform(1 / 8, 4.0), 16)
