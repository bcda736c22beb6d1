"""
Tests for configuration management
"""

from src.qdeform.utils.config import (EngineConfig, QDeformConfig, get_config, load_config_from_env,
                                      set_config)


class TestDefaults:

    def test_engine_defaults(self):
        engine = EngineConfig()
        assert engine.default_degree == 6
        assert engine.hopf_degree == 4
        assert engine.cocycle_degree == 3
        assert engine.double_degree == 5
        assert engine.root_of_unity_degree == 10

    def test_round_trip_through_dict(self):
        config = QDeformConfig()
        config.engine.hopf_degree = 2
        config.logging.enabled = False
        restored = QDeformConfig.from_dict(config.to_dict())
        assert restored.engine.hopf_degree == 2
        assert restored.logging.enabled is False
        assert restored.output.verbose is False


class TestEnvironment:

    def test_overrides_are_coerced(self):
        config = QDeformConfig.from_env({
            "QDEFORM_DEFAULT_DEGREE": "8",
            "QDEFORM_VERBOSE": "yes",
            "QDEFORM_LOG_ENABLED": "0",
            "QDEFORM_LOG_LEVEL": "DEBUG",
            "QDEFORM_LOG_DIR": "/tmp/qdeform-logs",
        })
        assert config.engine.default_degree == 8
        assert config.output.verbose is True
        assert config.logging.enabled is False
        assert config.logging.level == "DEBUG"
        assert config.logging.log_dir == "/tmp/qdeform-logs"

    def test_empty_values_are_ignored(self):
        config = QDeformConfig.from_env({"QDEFORM_HOPF_DEGREE": "", "UNRELATED": "1"})
        assert config.engine.hopf_degree == 4

    def test_global_instance(self):
        previous = get_config()
        try:
            config = load_config_from_env({"QDEFORM_COCYCLE_DEGREE": "2"})
            assert get_config() is config
            assert config.engine.cocycle_degree == 2
        finally:
            set_config(previous)
