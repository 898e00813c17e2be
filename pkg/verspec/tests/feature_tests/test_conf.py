"""
User configuration persistence, config overrides of the run defaults, and named loggers.
"""

import pytest
import logzero

from verspec import conf
from verspec.cli import parse_config
from verspec.conf.configio import ConfigIO
from verspec.util import log


def test_configio_save(tmp_path):
    user_conf = ConfigIO(tmp_path / "conf" / "user_conf.json")
    assert user_conf.read() == {}
    user_conf.save("default_base", "P2")
    user_conf.save("default_emit", "json")
    assert user_conf.read() == {"default_base": "P2", "default_emit": "json"}
    assert user_conf.read("default_base") == "P2"
    user_conf.save("default_emit")
    assert user_conf.read() == {"default_base": "P2"}


def test_set_overrides_defaults(tmp_path, monkeypatch):
    monkeypatch.setattr(conf, "user_conf", ConfigIO(tmp_path / "user_conf.json"))
    previous = conf.get("default_base")
    try:
        conf.set("default_base", "P2")
        assert conf.get("default_base") == "P2"
        assert conf.user_conf.read("default_base") == "P2"
        assert parse_config(["verify"]).base.text == "P2"
        assert parse_config(["verify", "--base", "P1"]).base.text == "P1"
    finally:
        conf.set("default_base", previous, save=False)
    assert parse_config(["verify"]).base.text == previous
    assert conf.get("no_such_key", 7) == 7


def test_version(capsys):
    with pytest.raises(SystemExit) as exit_info:
        parse_config(["--version"])
    assert exit_info.value.code == 0
    assert capsys.readouterr().out.strip() == conf.application_name


def test_named_loggers():
    colored = log.get_logger("verspec_conf_tests")
    assert isinstance(colored.handlers[0].formatter, logzero.LogFormatter)
    assert colored.handlers[0] is not log.handler

    plain = log.get_logger("verspec_conf_tests_plain", color=False)
    assert plain.handlers == [log.handler]
