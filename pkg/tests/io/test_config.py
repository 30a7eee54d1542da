import os

import pytest

import semiwave.misc.testing_tools
from semiwave.data.initial_data import NonlinearityParams
from semiwave.errors import ConfigError
from semiwave.io.config import RunConfig

datadir = pytest.fixture(semiwave.misc.testing_tools.datadir)


def test_defaults():
    config = RunConfig()
    assert config.model == 'special-plus'
    assert config.p == 2.0
    assert config.h == 1.0/64
    assert config.T_cap is None
    assert config.deriv is False
    assert config.eps_values() == [0.4, 0.2, 0.1, 0.05]
    assert list(config.effective()) == list(RunConfig.keys)
    assert config.validate() is config


def test_parsing():
    config = RunConfig({'model': 'general', 'p': '3', 'q': 2,
                        'eps-list': '0.4, 0.2,0.1', 'max_iter': '50',
                        'deriv': 'yes', 'T_cap': 'none', 'tol': None})
    assert config.p == 3.0
    assert config.q == 2.0
    assert config.eps_list == [0.4, 0.2, 0.1]
    assert config.max_iter == 50
    assert config.deriv is True
    assert config.T_cap is None
    assert config.tol is None
    assert config.params() == NonlinearityParams(3, 2)


@pytest.mark.parametrize('key, value', [
    ('p', 'two'), ('max_iter', 2.5), ('deriv', 'maybe'),
    ('model', 'quadratic'), ('family', 'gauss'), ('sign', 'plus'),
    ('method', 'newton')])
def test_invalid_values(key, value):
    with pytest.raises(ConfigError) as exc_info:
        RunConfig({key: value})
    assert key in str(exc_info.value)


def test_unknown_key():
    with pytest.raises(ConfigError) as exc_info:
        RunConfig({'dt': 0.1})
    assert "Unknown configuration key 'dt'" in str(exc_info.value)
    config = RunConfig()
    with pytest.raises(AttributeError):
        config.dt = 0.1
    with pytest.raises(AttributeError):
        config.dt


def test_key_case():
    config = RunConfig({'t-cap': 5, 'r': 2})
    assert config.T_cap == 5.0
    assert config.R == 2.0
    config = RunConfig({'T': 5, 't': 2})
    assert config.T == 5.0
    assert config.t == 2.0


@pytest.mark.parametrize('overrides', [
    {'h': 0}, {'h': -0.1}, {'T': 0}, {'R': 0.5}, {'eps': -1},
    {'threshold': 0}, {'max_iter': 0}, {'jobs': 0}, {'samples': 1},
    {'tol': 0}, {'T_cap': -1}, {'t': -1}, {'h': 2, 'T': 1},
    {'eps_list': '0.4, 0.2'}, {'eps_list': '0.4, 0.2, 0'},
    {'model': 'general', 'p': 1.5, 'q': 1}])
def test_validate(overrides):
    config = RunConfig(overrides)
    with pytest.raises(ConfigError):
        config.validate()


def test_data():
    config = RunConfig({'family': 'traveling', 'amp_f': 0.5, 'sign': '-',
                        'R': 2})
    data = config.data()
    assert data.family == 'traveling'
    assert data.R == 2.0
    assert data.params['sign'] == '-'
    data = RunConfig({'amp_g': 2}).data()
    assert data.family == 'bump'
    assert data.params['amp_g'] == 2.0


def test_from_sources(tmpdir):
    filename = str(tmpdir.join('run.cfg'))
    with open(filename, 'w') as out_fh:
        out_fh.write("# lifespan run\n"
                     "model = special-minus\n"
                     "\n"
                     "p = 3   # cubic\n"
                     "eps_list = 0.4, 0.2, 0.1\n"
                     "T = 20\n")
    config = RunConfig.from_sources(filename, {'p': 4, 'h': None})
    assert config.model == 'special-minus'
    assert config.p == 4.0
    assert config.h == 1.0/64
    assert config.T == 20.0
    assert config.eps_values() == [0.4, 0.2, 0.1]
    assert config == RunConfig.from_sources(filename, {'p': 4})


def test_malformed_file(tmpdir):
    filename = str(tmpdir.join('bad.cfg'))
    with open(filename, 'w') as out_fh:
        out_fh.write("model = general\np 3\n")
    with pytest.raises(ConfigError) as exc_info:
        RunConfig.from_sources(filename)
    assert 'line 2' in str(exc_info.value)
    with pytest.raises(IOError):
        RunConfig.from_sources(str(tmpdir.join('missing.cfg')))


def test_sweep_config_file(datadir):
    config = RunConfig.from_sources(os.path.join(datadir, 'sweep.cfg'))
    config.validate()
    assert config.params() == NonlinearityParams(3, variant='special-minus')
    assert config.eps_values() == [0.4, 0.2, 0.1, 0.05]
    assert config.T_cap == 400.0
    assert config.jobs == 2
    assert config.h == 1.0/64
