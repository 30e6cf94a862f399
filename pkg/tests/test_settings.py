import pytest

from m2c.core.errors import ConfigError
from m2c.core.settings import DEFAULTS, Settings


def test_defaults():
    settings = Settings()
    assert settings.depth == DEFAULTS["depth"]
    assert settings.report == "text"
    assert settings.fillers == "phi"
    assert not settings.failFast


def test_settings_is_shared():
    Settings().update(depth=3)
    assert Settings().depth == 3


def test_yaml_layer(tmp_path):
    path = tmp_path / "m2c.yaml"
    path.write_text("depth: 3\nreport: json\n", encoding="utf-8")
    settings = Settings()
    settings.loadFile(str(path))
    assert (settings.depth, settings.report) == (3, "json")
    settings.update(report="text")
    assert settings.report == "text"


def test_config_from_environment(tmp_path, monkeypatch):
    path = tmp_path / "run.yaml"
    path.write_text("fillers: kv\n", encoding="utf-8")
    monkeypatch.setenv("M2C_CONFIG", str(path))
    Settings.reset()
    assert Settings().fillers == "kv"


def test_thread_cap(monkeypatch):
    monkeypatch.setenv("M2C_THREADS", "1")
    Settings.reset()
    settings = Settings()
    settings.update(threads=16)
    assert settings.threads == 1


def test_bad_thread_cap(monkeypatch):
    monkeypatch.setenv("M2C_THREADS", "many")
    Settings.reset()
    with pytest.raises(ConfigError):
        Settings()


@pytest.mark.parametrize("overrides", [{"colour": "red"}, {"depth": "2"}, {"depth": 0}, {"fail_fast": 1},
                                       {"report": "xml"}, {"threads": True}])
def test_bad_values(overrides):
    with pytest.raises(ConfigError):
        Settings().update(**overrides)


def test_config_must_be_a_mapping(tmp_path):
    path = tmp_path / "list.yaml"
    path.write_text("- depth\n", encoding="utf-8")
    with pytest.raises(ConfigError):
        Settings().loadFile(str(path))


def test_none_leaves_values_alone():
    settings = Settings()
    settings.update(depth=None, report=None)
    assert settings.depth == DEFAULTS["depth"]
