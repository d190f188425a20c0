import time
import unittest
from unittest import mock

import numpy as np

from src.models import (
    FusionGraph,
    InvalidConfigError,
    InvalidInputError,
    NumericalFailureError,
    ProblemSpec,
    ResidualRecord,
    SolverConfig,
    SolverKind,
)
from src.solvers import (
    SOLVERS,
    CartesianBlockADMM,
    ProximalGradientADMM,
    SplitAMA,
    augmented_lambda_max,
    cb_admm_solve,
    check_linear_rate,
    factorization_cache,
    fit_linear_rate,
    gram_lambda_max,
    objective,
    pg_admm_solve,
    s_admm_solve,
    s_ama_solve,
    solve,
)
from tests import TestCase
from tests.helpers import cp, cvxpy_oracle, random_instance, subgradient_oracle, tree_graph


def tight(kind=SolverKind.CB_ADMM, tol=1e-10, **changes) -> SolverConfig:
    return SolverConfig(solver=kind, tol_primal=tol, tol_dual=tol, max_iters=200_000, **changes)


def two_point_spec(lam=1.0, gamma=0.0) -> ProblemSpec:
    graph = FusionGraph.from_edges(2, [(0, 1, 1.0)])
    return ProblemSpec.from_graph(np.array([[0.0], [2.0]]), graph, lam, gamma)


class TestObjective(TestCase):

    def test_zero_at_data_without_penalties(self):
        spec = random_instance(self.rng, lam=0.0, gamma=0.0)
        self.assertEqual(objective(spec, spec.X), 0.0)

    def test_zero_centroids(self):
        spec = random_instance(self.rng)
        self.assertAlmostEqual(objective(spec, np.zeros_like(spec.X)), 0.5 * np.sum(spec.X**2), delta=1e-12)

    def test_hand_evaluation(self):
        self.assertAlmostEqual(objective(two_point_spec(), np.array([[1.0], [1.0]])), 1.0, delta=1e-15)
        self.assertAlmostEqual(objective(two_point_spec(), np.array([[0.0], [2.0]])), 2.0, delta=1e-15)

    def test_shape_mismatch(self):
        with self.assertRaises(InvalidInputError):
            objective(two_point_spec(), np.zeros((3, 1)))


class TestSpectralEstimates(TestCase):

    def test_single_edge(self):
        D = two_point_spec().D
        self.assertAlmostEqual(gram_lambda_max(D), 2.0, delta=1e-8)
        self.assertAlmostEqual(augmented_lambda_max(D, 1.0), 3.0, delta=1e-8)

    def test_matches_dense_eigenvalue(self):
        spec = random_instance(self.rng)
        expected = float(np.linalg.eigvalsh(spec.D.gram())[-1])
        self.assertAlmostEqual(gram_lambda_max(spec.D), expected, delta=1e-6 * expected)


class TestStepBounds(TestCase):

    def test_s_ama_bound(self):
        spec = two_point_spec()
        with self.assertRaises(InvalidConfigError):
            SplitAMA(spec, SolverConfig(solver=SolverKind.S_AMA, rho=1.0))
        solver = SplitAMA(spec, SolverConfig(solver=SolverKind.S_AMA))
        self.assertAlmostEqual(solver.rho, 0.99, delta=1e-8)
        self.assertAlmostEqual(SplitAMA(spec, SolverConfig(solver=SolverKind.S_AMA, rho=0.5)).rho, 0.5)

    def test_pg_admm_step(self):
        solver = ProximalGradientADMM(two_point_spec(), SolverConfig(solver=SolverKind.PG_ADMM, rho=1.0))
        self.assertAlmostEqual(solver.step_size, 1.0 / 3.0, delta=1e-8)

    def test_config_for_other_solver(self):
        with self.assertRaises(InvalidConfigError):
            CartesianBlockADMM(two_point_spec(), SolverConfig(solver=SolverKind.S_AMA))

    def test_invalid_config_values(self):
        with self.assertRaises(InvalidConfigError):
            SolverConfig(rho=0.0)
        with self.assertRaises(InvalidConfigError):
            SolverConfig(solver="newton")
        with self.assertRaises(InvalidConfigError):
            SolverConfig(q=1)


class TestUnpenalized(TestCase):

    def test_every_solver_returns_data(self):
        spec = random_instance(self.rng, lam=0.0, gamma=0.0)
        for kind in SOLVERS:
            with self.subTest(solver=kind.value):
                report = solve(spec, SolverConfig(solver=kind))
                self.assertTrue(report.converged)
                self.assertAllClose(report.U_hat, spec.X, atol=1e-8)


class TestCartesianBlockADMM(TestCase):

    def test_large_lambda_collapses_to_mean(self):
        rng = self.rng
        X = rng.standard_normal((6, 4))
        spec = ProblemSpec.from_graph(X, tree_graph(6, rng), lam=1e6, gamma=0.0)
        report = cb_admm_solve(spec, tight())
        self.assertTrue(report.converged)
        self.assertAllClose(report.U_hat, np.tile(X.mean(axis=0), (6, 1)), atol=1e-6)

    def test_subgradient_oracle_bounds_objective(self):
        spec = random_instance(self.rng, n=6, t=8)
        report = cb_admm_solve(spec, tight())
        upper = subgradient_oracle(spec)
        self.assertLessEqual(report.objective, upper + 1e-9 * upper)

    @unittest.skipIf(cp is None, "cvxpy not installed")
    def test_conic_oracle(self):
        spec = random_instance(self.rng, n=6, t=8)
        report = cb_admm_solve(spec, tight())
        reference = cvxpy_oracle(spec)
        self.assertLess(abs(report.objective - reference) / reference, 1e-5)

    def test_report_objective_is_recomputable(self):
        spec = random_instance(self.rng)
        report = cb_admm_solve(spec)
        self.assertAlmostEqual(report.objective, objective(spec, report.U_hat), delta=1e-12 * max(1.0, report.objective))

    def test_u_update_solves_stationarity_system(self):
        spec = random_instance(self.rng)
        solver = CartesianBlockADMM(spec, SolverConfig(rho=1.7))
        state = solver.initial_state()
        system = (1.0 + solver.rho) * np.eye(spec.n) + solver.rho * spec.D.gram()
        for _ in range(25):
            U, rhs = solver.u_update(state)
            self.assertLess(np.linalg.norm(system @ U - rhs), 1e-10)
            solver.step(state)

    def test_factorization_reuse_matches_cold_solve(self):
        spec = random_instance(self.rng)
        cb_admm_solve(spec)
        self.assertEqual(factorization_cache.misses, 1)

        other = spec.with_penalties(0.6, spec.gamma)
        warm = cb_admm_solve(other)
        self.assertGreaterEqual(factorization_cache.hits, 1)
        self.assertEqual(factorization_cache.misses, 1)

        factorization_cache.clear()
        cold = cb_admm_solve(other)
        self.assertEqual(factorization_cache.misses, 1)
        self.assertTrue(np.array_equal(warm.U_hat, cold.U_hat))
        self.assertEqual(warm.iterations, cold.iterations)

    def test_support_shrinks_with_gamma(self):
        X = self.rng.standard_normal((8, 10)) * np.geomspace(0.2, 3.0, 10)
        X[:4] += np.linspace(0.0, 2.0, 10)
        base = ProblemSpec.from_graph(X, tree_graph(8, self.rng), 0.2, 0.0)
        counts = []
        for gamma in (0.0, 0.5, 1.0, 2.0, 4.0, 8.0, 16.0):
            report = cb_admm_solve(base.with_penalties(0.2, gamma), tight())
            counts.append(int(np.count_nonzero(np.any(report.V2 != 0, axis=0))))
        self.assertEqual(counts, sorted(counts, reverse=True))
        self.assertEqual(counts[0], 10)

    def test_positive_homogeneity(self):
        spec = random_instance(self.rng, n=8, t=6)
        scaled = ProblemSpec(4.0 * spec.X, spec.D, 4.0 * spec.lam, 4.0 * spec.gamma,
                             spec.fusion_weights, spec.sparsity_weights)
        config = tight(tol=1e-12)
        base = cb_admm_solve(spec, config)
        big = cb_admm_solve(scaled, config)
        self.assertAllClose(big.U_hat, 4.0 * base.U_hat, atol=1e-8)

    def test_windowed_residual_decreases(self):
        spec = random_instance(self.rng)
        report = cb_admm_solve(spec, tight(record_trace=True))
        combined = np.array([entry.combined for entry in report.trace])
        combined = combined[: int(np.argmax(combined < 1e-9)) or combined.size]
        burn = combined.size // 10
        windows = [combined[i:i + 50].max() for i in range(burn, combined.size - 50, 50)]
        for earlier, later in zip(windows, windows[1:]):
            self.assertLessEqual(later, earlier * (1 + 1e-9))

    def test_linear_rate_on_tree(self):
        X = self.rng.standard_normal((10, 6))
        spec = ProblemSpec.from_graph(X, tree_graph(10, self.rng), 0.05, 0.0)
        report = cb_admm_solve(spec, tight(tol=1e-11, record_trace=True))
        rate, is_linear = check_linear_rate(report.trace, burn_in=0.3)
        self.assertTrue(is_linear)
        self.assertLess(rate, 1.0)

    def test_max_iters_is_reported_not_raised(self):
        spec = random_instance(self.rng)
        report = cb_admm_solve(spec, SolverConfig(max_iters=3))
        self.assertFalse(report.converged)
        self.assertEqual(report.iterations, 3)
        self.assertTrue(any("max_iters" in message for message in report.warnings))

    def test_non_finite_iterate_raises(self):
        class Exploding(CartesianBlockADMM):
            def step(self, state):
                residuals = super().step(state)
                state.U[0, 0] = np.nan
                return residuals

        with self.assertRaises(NumericalFailureError):
            Exploding(random_instance(self.rng)).solve()

    def test_trace_is_ordered(self):
        report = cb_admm_solve(random_instance(self.rng), SolverConfig(max_iters=40, record_trace=True))
        self.assertEqual([entry.iteration for entry in report.trace], list(range(1, 41)))
        self.assertTrue(all(np.isfinite(entry.objective) for entry in report.trace))

    def test_objective_monitoring_is_not_timed(self):
        spec = random_instance(self.rng)

        def slow_objective(*args):
            time.sleep(0.01)
            return objective(*args)

        with mock.patch("src.solvers.base.objective", side_effect=slow_objective):
            report = cb_admm_solve(spec, SolverConfig(max_iters=20, tol_primal=1e-14, tol_dual=1e-14, record_trace=True))
        self.assertEqual(report.iterations, 20)
        self.assertLess(report.wall_time, 0.1)
        elapsed = [entry.elapsed for entry in report.trace]
        self.assertEqual(elapsed, sorted(elapsed))
        self.assertEqual(elapsed[-1], report.wall_time)

    def test_target_objective_stops_early(self):
        spec = random_instance(self.rng)
        reference = cb_admm_solve(spec, tight()).objective
        report = cb_admm_solve(spec, SolverConfig(target_objective=reference, objective_tol=1e-3))
        self.assertTrue(report.converged)
        self.assertLessEqual((report.objective - reference) / reference, 1e-3)


class TestCrossSolverAgreement(TestCase):

    def test_optimal_values_agree(self):
        for case in range(3):
            spec = random_instance(self.rng, n=8, t=6, lam=0.2 + 0.2 * case, gamma=0.3 + 0.3 * case)
            reference = cb_admm_solve(spec, tight()).objective
            for kind, solve_fn, tolerance in (
                (SolverKind.S_ADMM, s_admm_solve, 1e-5),
                (SolverKind.S_AMA, s_ama_solve, 1e-4),
                (SolverKind.PG_ADMM, pg_admm_solve, 1e-4),
            ):
                with self.subTest(case=case, solver=kind.value):
                    report = solve_fn(spec, tight(kind, tol=1e-9))
                    self.assertTrue(report.converged)
                    self.assertLess(abs(report.objective - reference) / reference, tolerance)

    def test_s_admm_without_sparsity(self):
        spec = random_instance(self.rng, gamma=0.0)
        reference = cb_admm_solve(spec, tight()).objective
        report = s_admm_solve(spec, tight(SolverKind.S_ADMM, tol=1e-9))
        self.assertLess(abs(report.objective - reference) / reference, 1e-5)

    def test_inner_failures_become_warnings(self):
        spec = random_instance(self.rng)
        report = s_admm_solve(spec, SolverConfig(solver=SolverKind.S_ADMM, inner_max_iters=1, max_iters=5))
        self.assertTrue(any("inner" in message for message in report.warnings))


class TestLinearRateCheck(TestCase):

    def test_geometric_sequence(self):
        rate, is_linear = check_linear_rate([2.0**-k for k in range(40)])
        self.assertAlmostEqual(rate, 0.5, delta=1e-10)
        self.assertTrue(is_linear)

    def test_constant_sequence(self):
        fit = fit_linear_rate([0.3] * 40)
        self.assertEqual(fit.slope, 0.0)
        self.assertFalse(fit.is_linear)

    def test_accepts_residual_records(self):
        trace = [ResidualRecord(k, 0.9**k, 0.0, float("nan"), 0.0) for k in range(1, 60)]
        rate, is_linear = check_linear_rate(trace)
        self.assertAlmostEqual(rate, 0.9, delta=1e-10)
        self.assertTrue(is_linear)

    def test_short_trace(self):
        with self.assertRaises(InvalidInputError):
            check_linear_rate([1.0] * 10)
        with self.assertRaises(InvalidInputError):
            check_linear_rate([1e-20] * 100)
