import contextlib
import importlib.util
import io
import logging
import os
import sys
import unittest
from pathlib import Path
from unittest import mock

from src.config import Settings, configure_logging
from src.factory import ServiceFactory
from src.models import InvalidConfigError, InvalidInputError, RunConfig
from src.repositories import RunRepository
from src.services import BenchService, ClusteringService, DenoiseService, MetricsService, SynthService


class SettingsTestCase(unittest.TestCase):

    def setUp(self):
        Settings.reset()
        self.addCleanup(Settings.reset)

    def settings_with(self, **env) -> Settings:
        with mock.patch.dict(os.environ, env, clear=False):
            Settings.reset()
            return Settings()


class TestSettings(SettingsTestCase):

    def test_singleton(self):
        self.assertIs(Settings(), Settings())

    def test_reads_environment(self):
        settings = self.settings_with(
            WAVECLUST_LOG="DEBUG", WAVECLUST_JOBS="3", WAVECLUST_OUTPUT_DIR="/tmp/wc", WAVECLUST_TOL="1e-8"
        )
        self.assertEqual(settings.log_level, "debug")
        self.assertEqual(settings.jobs, 3)
        self.assertEqual(settings.output_dir, Path("/tmp/wc"))
        self.assertEqual(settings.tol, 1e-8)
        self.assertEqual(settings.validate(), (True, []))

    def test_invalid_values_are_reported(self):
        settings = self.settings_with(WAVECLUST_LOG="loud", WAVECLUST_JOBS="0", WAVECLUST_MAX_ITERS="lots")
        valid, invalid = settings.validate()
        self.assertFalse(valid)
        self.assertEqual(sorted(invalid), ["WAVECLUST_JOBS", "WAVECLUST_LOG", "WAVECLUST_MAX_ITERS"])
        self.assertEqual(settings.max_iters, 100_000)


class TestServiceFactory(SettingsTestCase):

    def test_services_get_repository_and_settings(self):
        factory = ServiceFactory()
        expected = {
            "cluster": ClusteringService,
            "denoise": DenoiseService,
            "synth": SynthService,
            "metrics": MetricsService,
            "bench": BenchService,
        }
        for command, service_class in expected.items():
            service = factory.get_service(command, "out")
            self.assertIsInstance(service, service_class)
            self.assertIsInstance(service.repository, RunRepository)
            self.assertIs(service.settings, factory.settings)
        self.assertIs(factory.get_run_repository("out"), factory.get_run_repository(Path("out")))

    def test_unknown_command(self):
        with self.assertRaises(InvalidConfigError):
            ServiceFactory().get_service("plot")

    def test_validate_configuration(self):
        self.settings_with(WAVECLUST_JOBS="-2")
        with self.assertRaises(InvalidConfigError):
            ServiceFactory().validate_configuration()


def load_script(name: str):
    path = Path(__file__).resolve().parents[1] / "scripts" / f"{name}.py"
    spec = importlib.util.spec_from_file_location(f"waveclust_script_{name}", path)
    module = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(module)
    return module


class TestScripts(SettingsTestCase):

    def test_timing_script_rereads_environment(self):
        script = load_script("timing_comparison")
        self.settings_with(WAVECLUST_LOG="off")
        factory = mock.Mock()
        factory.return_value.get_service.return_value.run.return_value = {
            "instance": {"lambda": 120.0, "gamma": 5.0, "rho": 3.0},
            "solvers": {"cb_admm": {"wall_seconds": 0.1, "converged": True, "iterations": 3}},
        }
        with mock.patch.dict(os.environ, {"WAVECLUST_LOG": "debug"}), \
                mock.patch.object(script, "ServiceFactory", factory), \
                mock.patch.object(script, "configure_logging") as configure, \
                mock.patch.object(script, "load_dotenv"), \
                mock.patch.object(sys, "argv", ["timing_comparison.py", "--solvers", "cb_admm"]), \
                contextlib.redirect_stdout(io.StringIO()) as out:
            self.assertEqual(script.main(), 0)
        configure.assert_called_once_with("debug")
        config = factory.return_value.get_service.return_value.run.call_args.args[0]
        self.assertEqual((config.lambdas, config.gammas, config.rho), ((), (), None))
        self.assertIn("rho=3", out.getvalue())


class TestRunConfig(unittest.TestCase):

    def test_defaults_need_only_input(self):
        with self.assertRaises(InvalidInputError):
            RunConfig(command="cluster").validate()
        RunConfig(command="synth").validate()

    def test_rejects_bad_values(self):
        for changes in ({"solver": "lbfgs"}, {"tol": 0.0}, {"rho": -1.0}, {"gammas": ()}, {"normalize_power": -5.0}):
            with self.subTest(**{k: str(v) for k, v in changes.items()}):
                with self.assertRaises(InvalidConfigError):
                    RunConfig(command="synth", **changes).validate()

    def test_rejects_non_finite_values(self):
        nan, inf = float("nan"), float("inf")
        for changes in (
            {"tol": nan}, {"tol": inf}, {"lambdas": (nan,)}, {"gammas": (1.0, inf)}, {"rho": nan},
            {"phi": inf}, {"normalize_power": nan}, {"fixed_sigma": inf}, {"objective_tol": nan},
        ):
            with self.subTest(**{k: str(v) for k, v in changes.items()}):
                with self.assertRaises(InvalidConfigError):
                    RunConfig(command="synth", **changes).validate()

    def test_bench_may_leave_penalties_unset(self):
        RunConfig(command="bench", lambdas=(), gammas=()).validate()
        with self.assertRaises(InvalidConfigError):
            RunConfig(command="synth", lambdas=()).validate()

    def test_to_dict_is_plain(self):
        data = RunConfig(command="synth", output_dir=Path("x")).to_dict()
        self.assertEqual(data["output_dir"], "x")
        self.assertEqual(data["lambdas"], [1.0])


class TestLogging(unittest.TestCase):

    def tearDown(self):
        configure_logging("off")

    def test_levels(self):
        logger = logging.getLogger("src")
        configure_logging("debug")
        self.assertEqual(logger.level, logging.DEBUG)
        configure_logging("info")
        self.assertEqual(logger.level, logging.INFO)
        self.assertEqual(len(logger.handlers), 1)
        configure_logging("off")
        self.assertFalse(logger.isEnabledFor(logging.CRITICAL))
        self.assertFalse(logger.propagate)
