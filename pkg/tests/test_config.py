import pytest

import config


@pytest.fixture
def restore_config():
    saved = {name: dict(section) for name, section in config.get_config().items()}
    yield
    for name, values in saved.items():
        config.get_config(name).clear()
        config.get_config(name).update(values)


def test_sections_present():
    sections = config.get_config()
    for name in ("stallings", "intersection", "configuration", "verify", "oracle", "output", "logging"):
        assert name in sections
    assert config.get_config("output")["schema"] == "ftfa-kit/1"


def test_update_config(restore_config):
    assert config.update_config("verify", "witness_rank", 5)
    assert config.VERIFY_CONFIG["witness_rank"] == 5
    assert not config.update_config("missing", "key", 1)


def test_env_overrides(restore_config):
    applied = config.apply_env_overrides({
        "FTFA_COSET_CAP": "1234",
        "FTFA_WITNESS_RANK": "2",
        "FTFA_LOG_LEVEL": "DEBUG",
    })
    assert applied == {"FTFA_COSET_CAP": 1234, "FTFA_WITNESS_RANK": 2, "FTFA_LOG_LEVEL": "DEBUG"}
    assert config.STALLINGS_CONFIG["coset_cap"] == 1234
    assert config.LOGGING_CONFIG["log_level"] == "DEBUG"


def test_env_override_bad_value(restore_config):
    before = config.ORACLE_CONFIG["cell_cap"]
    assert config.apply_env_overrides({"FTFA_ORACLE_CELL_CAP": "çok", "FTFA_COSET_CAP": ""}) == {}
    assert config.ORACLE_CONFIG["cell_cap"] == before


def test_print_config(capsys):
    config.print_config()
    err = capsys.readouterr().err
    assert "ftfa-kit/1" in err
    assert "coset_cap" in err and "witness_rank" in err
