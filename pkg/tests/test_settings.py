import pytest

from taurank.settings import DEFAULTS
from taurank.settings import load_settings


@pytest.fixture
def ini_file(tmpdir):
    def write(body):
        path = tmpdir.join('taurank.ini')
        path.write_text('[taurank]\n' + body, encoding='utf-8')
        return str(path)
    return write


def test_defaults():
    settings = load_settings()
    assert settings == DEFAULTS
    assert settings is not DEFAULTS


def test_ini_settings(ini_file, caplog):
    settings = load_settings(ini_file(
        'field = fp:7\n'
        'trials = 16\n'
        'colour = blue\n'
    ))
    assert settings['field'] == 'fp:7'
    assert settings['trials'] == 16
    assert settings['seed'] == DEFAULTS['seed']
    assert 'colour' not in settings
    assert "ignoring unknown setting 'colour'" in caplog.text


def test_sentry_settings(ini_file):
    settings = load_settings(ini_file('sentry_dsn =\n'))
    assert settings['sentry_dsn'] is None
    assert settings['sentry_environment'] == 'development'


def test_bad_integer(ini_file):
    with pytest.raises(ValueError, match=r'trials expects an integer'):
        load_settings(ini_file('trials = many\n'))
