from fractions import Fraction

import pytest

from src.config import EngineLimits, JobConfig
from src.consts import DEFAULT_MAX_ORDER, ENV_GROWTH_WINDOW, ENV_MAX_ORDER, ENV_WORKERS
from src.enums import GrowthTarget, OutputFormat, Restriction
from src.errors import ConfigError, OutOfRange, ParseError


class TestEngineLimits:
    def test_defaults(self, monkeypatch, tmp_path):
        for name in (ENV_MAX_ORDER, ENV_GROWTH_WINDOW, ENV_WORKERS):
            monkeypatch.delenv(name, raising=False)
        limits = EngineLimits.from_env(tmp_path / "missing.env")
        assert limits.max_order == DEFAULT_MAX_ORDER
        assert limits.workers == 1

    def test_environment_overrides(self, monkeypatch, tmp_path):
        monkeypatch.setenv(ENV_MAX_ORDER, "20")
        monkeypatch.setenv(ENV_WORKERS, "3")
        limits = EngineLimits.from_env(tmp_path / "missing.env")
        assert limits.max_order == 20
        assert limits.workers == 3

    def test_dotenv_file(self, monkeypatch, tmp_path):
        monkeypatch.delenv(ENV_GROWTH_WINDOW, raising=False)
        env_file = tmp_path / ".env"
        env_file.write_text(f"{ENV_GROWTH_WINDOW}=7\n")
        assert EngineLimits.from_env(env_file).growth_window == 7
        monkeypatch.delenv(ENV_GROWTH_WINDOW, raising=False)

    @pytest.mark.parametrize("raw", ["ten", "0"])
    def test_bad_values(self, monkeypatch, tmp_path, raw):
        monkeypatch.setenv(ENV_MAX_ORDER, raw)
        with pytest.raises(ConfigError):
            EngineLimits.from_env(tmp_path / "missing.env")

    def test_order_range(self):
        limits = EngineLimits(max_order=12)
        assert limits.check_order(12) == 12
        with pytest.raises(OutOfRange):
            limits.check_order(13)
        with pytest.raises(OutOfRange):
            limits.check_order(1)


class TestJobConfig:
    def test_lambdas_become_fractions(self):
        config = JobConfig(command='sweep', lambdas=["1/2", 2])
        assert config.lambdas == [Fraction(1, 2), Fraction(2)]

    def test_bad_lambda(self):
        with pytest.raises(ParseError):
            JobConfig(command='sweep', lambdas=["0.5.1"])

    def test_empty_k_range(self):
        with pytest.raises(OutOfRange):
            JobConfig(command='hilbert', k_range=(5, 3))

    def test_k_above_limit(self):
        with pytest.raises(OutOfRange):
            JobConfig(command='hilbert', k_range=(1, 15))

    def test_workers(self):
        with pytest.raises(ConfigError):
            JobConfig(command='hilbert', workers=0)

    def test_order_is_checked(self):
        with pytest.raises(OutOfRange):
            JobConfig(command='log', order=200)


class TestEnums:
    def test_value_lists(self):
        assert OutputFormat.all_formats() == ['text', 'json', 'csv']
        assert 'what-series' in GrowthTarget.all_targets()
        assert Restriction.all_restrictions() == ['none', 'x0', 'diag']
