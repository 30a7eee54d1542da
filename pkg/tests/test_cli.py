import os

import pytest

from semiwave.cli import main
from semiwave.io.tables import read_json, TraceTable, RecordsTable


@pytest.fixture
def out(tmpdir):
    return str(tmpdir.join('out'))


def test_oracle(out, capsys):
    exit_code = main(['oracle', '--M', '1', '--eps', '0.1', '--p', '3',
                      '--out', out])
    assert exit_code == 0
    assert capsys.readouterr().out.strip() == "t0 = 50"
    summary = read_json(os.path.join(out, 'oracle.json'))['summary']
    assert summary['t0'] == pytest.approx(50.0)


def test_oracle_from_data(out, capsys):
    exit_code = main(['oracle', '--eps', '0.5', '--p', '2', '--t', '1',
                      '--out', out])
    assert exit_code == 0
    assert capsys.readouterr().out.strip() == "t0 = 2, U(1) = 1"


def test_oracle_errors(out, capsys):
    assert main(['oracle', '--M', '1', '--eps', '1', '--p', '2', '--t', '2',
                 '--out', out]) == 2
    assert main(['oracle', '--model', 'general', '--q', '2',
                 '--out', out]) == 2
    assert 'Error' in capsys.readouterr().err


def test_config_errors(out, tmpdir):
    assert main(['solve', '--h', '0', '--out', out]) == 2
    assert main(['solve', '--dt', '0.1', '--out', out]) == 2
    assert main(['frobnicate']) == 2
    missing = str(tmpdir.join('missing.cfg'))
    assert main(['--config', missing, 'solve', '--out', out]) == 3


def test_config_file(out, tmpdir, capsys):
    cfg = str(tmpdir.join('run.cfg'))
    with open(cfg, 'w') as out_fh:
        out_fh.write("p = 3\neps = 0.5\nM = 1\n")
    assert main(['--config', cfg, 'oracle', '--out', out]) == 0
    assert capsys.readouterr().out.strip() == "t0 = 2"
    assert main(['--config', cfg, 'oracle', '--p', '2', '--out', out]) == 0
    assert capsys.readouterr().out.strip() == "t0 = 2"
    config = read_json(os.path.join(out, 'oracle.json'))['config']
    assert config['p'] == 2.0
    assert config['eps'] == 0.5


def test_solve_deterministic(out):
    args = ['solve', '--eps', '0.2', '--T', '2', '--h', '0.0625',
            '--out', out]
    assert main(args) == 0
    contents = {}
    for filename in ('trace.dat', 'solve.json'):
        with open(os.path.join(out, filename)) as in_fh:
            contents[filename] = in_fh.read()
    assert main(args) == 0
    for filename in ('trace.dat', 'solve.json'):
        with open(os.path.join(out, filename)) as in_fh:
            assert in_fh.read() == contents[filename]
    table = TraceTable.read(os.path.join(out, 'trace.dat'))
    assert len(table) == 33
    assert table.config['eps'] == '0.2'


def test_solve_blowup(out, capsys):
    # blow-up predicted by the oracle (t0 = 1): not a failure
    assert main(['solve', '--eps', '1', '--T', '3', '--h', '0.0625',
                 '--out', out]) == 0
    assert 'threshold_crossed' in capsys.readouterr().out
    summary = read_json(os.path.join(out, 'solve.json'))['summary']
    assert summary['x_blowup'] == 0.0


def test_solve_unexpected_blowup(out):
    # no oracle for the general model: blow-up is reported as a failure
    assert main(['solve', '--model', 'general', '--p', '2', '--q', '0',
                 '--eps', '3', '--T', '5', '--h', '0.0625',
                 '--out', out]) == 1


def test_picard(out, capsys):
    assert main(['picard', '--model', 'general', '--p', '2', '--q', '2',
                 '--eps', '0.2', '--T', '2', '--h', '0.0625',
                 '--out', out]) == 0
    assert 'converged' in capsys.readouterr().out
    content = read_json(os.path.join(out, 'picard.json'))
    assert content['summary']['status'] == 'converged'
    assert len(content['residuals']) == content['summary']['iterations'] - 1


def test_blowup(out, capsys):
    assert main(['blowup', '--eps', '0.5', '--T', '4', '--h', '0.0078125',
                 '--out', out]) == 0
    assert '(oracle 2)' in capsys.readouterr().out
    summary = read_json(os.path.join(out, 'blowup.json'))['summary']
    assert summary['t0_estimate'] == pytest.approx(2.0, rel=0.02)
    assert summary['x0_oracle'] == pytest.approx(0.0, abs=1e-12)
    for filename in ('trace.dat', 'curve.dat'):
        assert os.path.isfile(os.path.join(out, filename))
    assert main(['blowup', '--model', 'free', '--out', out]) == 2


def test_sweep(out, capsys):
    assert main(['sweep', '--p', '2', '--eps-list', '0.4, 0.2, 0.1',
                 '--h', '0.0078125', '--out', out]) == 0
    assert 'slope' in capsys.readouterr().out
    summary = read_json(os.path.join(out, 'sweep.json'))['summary']
    assert summary['passed'] is True
    assert summary['slope'] == pytest.approx(-1.0, rel=0.05)
    records = RecordsTable.read(os.path.join(out, 'records.dat')).records()
    assert [rec.eps for rec in records] == [0.1, 0.2, 0.4]


def test_selftest(out, capsys):
    assert main(['selftest', '--h', '0.0625', '--T', '1', '--out',
                 out]) == 0
    assert 'selftest passed' in capsys.readouterr().out
    summary = read_json(os.path.join(out, 'selftest.json'))['summary']
    assert summary['passed'] is True
    assert summary['failed'] == []
