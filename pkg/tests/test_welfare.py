import numpy as np
import pytest

import taxsalience as ts
from taxsalience.errors import NonPositiveConsumption, NonPositiveParameter

import oracles


class TestOuterUtility:
    def test_log_at_unit_curvature(self):
        assert ts.outer_utility(np.e, 1.0) == pytest.approx(1.0)

    @pytest.mark.parametrize("rho", [0.1, 0.5, 1.0, 2.0, 3.0])
    def test_inverse_roundtrip(self, rho):
        for c in (0.5, 1.0, 7.3):
            assert ts.outer_utility_inverse(ts.outer_utility(c, rho), rho) == pytest.approx(c)

    def test_rejects_nonpositive(self):
        with pytest.raises(NonPositiveConsumption):
            ts.outer_utility(0.0, 2.0)
        with pytest.raises(NonPositiveParameter):
            ts.outer_utility(1.0, 0.0)


class TestDecomposition:
    @pytest.mark.parametrize("rho", [0.1, 1.0, 3.0])
    def test_matches_textbook_atkinson(self, small_economy, rho):
        economy = ts.economy_from_wages(small_economy.wages, small_economy.epsilon, rho)
        policy = ts.Policy(tau=0.3, s=0.7)
        dec = ts.decompose(economy, policy)
        c_hat = ts.allocation(economy, policy).c_hat
        assert dec.mu == pytest.approx(c_hat.mean(), rel=1e-12)
        assert dec.E == pytest.approx(oracles.atkinson_equality(c_hat, rho), rel=1e-12)
        assert dec.xi == pytest.approx(dec.E * dec.mu, rel=1e-12)
        assert 0.0 < dec.E <= 1.0

    def test_log_curvature_is_the_limit(self, small_economy):
        policy = ts.Policy(tau=0.3, s=0.7)
        at_one = ts.decompose(small_economy, policy).E
        near = [
            ts.decompose(
                ts.economy_from_wages(small_economy.wages, small_economy.epsilon, rho), policy
            ).E
            for rho in (1.0 - 1e-7, 1.0 + 1e-7)
        ]
        assert at_one == pytest.approx(np.mean(near), rel=1e-9)

    def test_welfare_is_transformed_ede(self, small_economy):
        dec = ts.decompose(small_economy, ts.Policy(tau=0.2, s=0.9))
        assert ts.outer_utility(dec.xi, small_economy.rho) == pytest.approx(dec.W)


class TestMeanConsumptionPartials:
    @pytest.mark.parametrize("tau,s,eps", [
        (0.3, 0.8, 0.25), (0.5, 1.0, 1.0), (0.2, 0.4, 0.5), (0.6, 0.5, 0.3),
    ])
    def test_first_order_match_fd(self, tau, s, eps):
        economy = ts.economy_from_wages(np.linspace(1, 3, 20), eps, 1.0)
        p = ts.mean_consumption_partials(economy, ts.Policy(tau=tau, s=s))

        def mu(t, sv):
            return ts.decompose(economy, ts.Policy(tau=t, s=sv)).mu

        ht, hs = 1e-6 * tau, 1e-6 * s
        assert p.dmu_dtau == pytest.approx(
            oracles.central_diff(lambda t: mu(t, s), tau, ht), rel=1e-6)
        s_hi = min(s + hs, 1.0)
        fd_s = (mu(tau, s_hi) - mu(tau, s_hi - 2 * hs)) / (2 * hs)
        assert p.dmu_ds == pytest.approx(fd_s, rel=1e-5)

    def test_second_order_match_fd(self):
        economy = ts.economy_from_wages(np.linspace(1, 3, 20), 0.25, 1.0)
        tau, s = 0.5, 0.8
        p = ts.mean_consumption_partials(economy, ts.Policy(tau=tau, s=s))

        def mu(t, sv):
            return ts.decompose(economy, ts.Policy(tau=t, s=sv)).mu

        h = 1e-4
        assert p.dmu_dtaudtau == pytest.approx(
            oracles.second_diff(lambda t: mu(t, s), tau, h * tau), rel=1e-5)
        assert p.dmu_dsdtau == pytest.approx(
            oracles.cross_diff(mu, tau, s, h * tau, h * s), rel=1e-5)

    def test_known_point(self):
        # at full salience, eps = 1, tau = 1/2: mixed partial equals -2 zbar-free scale
        economy = ts.economy_from_wages([0.9, 1.0, 1.1], 1.0, 1.0)
        p = ts.mean_consumption_partials(economy, ts.Policy(tau=0.5, s=1.0))
        zbar = np.mean(np.asarray(economy.wages) ** 2) * 0.5
        assert p.dmu_dsdtau == pytest.approx(-2.0 * zbar)


class TestWelfareSalienceDerivative:
    @pytest.mark.parametrize("rho", [0.1, 1.0, 3.0])
    def test_matches_fd(self, rho):
        economy = ts.economy_from_wages(np.linspace(1, 3, 20), 0.25, rho)
        tau, s = 0.4, 0.7
        closed = ts.welfare_salience_derivative(economy, ts.Policy(tau=tau, s=s))

        def w(sv):
            return ts.decompose(economy, ts.Policy(tau=tau, s=sv)).W

        assert closed == pytest.approx(oracles.central_diff(w, s, 1e-6 * s), rel=1e-6)


class TestEqualityPartials:
    def test_signs_on_admissible_policies(self, small_economy):
        # more tax means more equality; more salience means less
        dE_ds, dE_dtau = ts.equality_partials(small_economy, ts.Policy(tau=0.4, s=0.7))
        assert dE_dtau > 0
        assert dE_ds < 0


class TestLorenz:
    def test_endpoints_and_convexity(self, small_economy):
        alloc = ts.allocation(small_economy, ts.Policy(tau=0.3, s=0.8))
        curve = ts.lorenz(alloc.c_hat)
        assert curve.shares[0] == 0.0
        assert curve.shares[-1] == pytest.approx(1.0)
        assert np.all(np.diff(curve.shares, 2) >= -1e-15)
        assert np.all(curve.shares <= curve.quantiles + 1e-12)

    def test_uniform_sample_on_diagonal(self):
        curve = ts.lorenz(np.full(10, 3.5))
        assert np.allclose(curve.shares, curve.quantiles)

    def test_rejects_nonpositive(self):
        with pytest.raises(NonPositiveConsumption):
            ts.lorenz([1.0, -2.0])
