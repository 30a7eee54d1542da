import math
import os

import numpy as np
import pytest

from semiwave.analysis.blowup import blowup_curve
from semiwave.analysis.lifespan import LifespanRecord
from semiwave.data.initial_data import NonlinearityParams, make_bump_data
from semiwave.errors import TableParserError
from semiwave.io.config import RunConfig
from semiwave.io.tables import (
    TraceTable, RecordsTable, CurveTable, write_json, read_json, jsonable)
from semiwave.solvers.march import solve


@pytest.fixture
def result():
    params = NonlinearityParams(2, variant='special-plus')
    return solve(make_bump_data(0, 1, 1), params, 0.5, T=1.0, h=0.125)


@pytest.fixture
def config():
    return RunConfig({'eps': 0.5, 'T': 1.0, 'h': 0.125}).effective()


def test_trace_table(result, config, tmpdir):
    table = TraceTable.from_result(result, config)
    assert len(table) == 9
    assert table.config['eps'] == '0.5'
    assert table.config['T_cap'] == 'none'
    assert table.config['deriv'] == 'false'
    filename = str(tmpdir.join('trace.dat'))
    table.write(filename)
    with open(filename) as in_fh:
        first = in_fh.readline()
    assert first == "# semiwave trace %s\n" % table.ID
    table2 = TraceTable.read(filename)
    assert table2 == table
    assert table2.config == table.config
    assert np.all(table2.table['sup_a'] == result.trace[:, 1])


def test_id_is_content_derived(result, config):
    table1 = TraceTable.from_result(result, config)
    table2 = TraceTable.from_result(result, config)
    assert table1.ID == table2.ID
    assert table1.to_str() == table2.to_str()
    config['eps'] = 0.25
    assert TraceTable.from_result(result, config).ID != table1.ID


def test_read_errors(result, config, tmpdir):
    filename = str(tmpdir.join('trace.dat'))
    TraceTable.from_result(result, config).write(filename)
    with pytest.raises(TableParserError) as exc_info:
        CurveTable.read(filename)
    assert 'contains a trace table' in str(exc_info.value)
    with open(filename) as in_fh:
        lines = in_fh.readlines()
    tampered = str(tmpdir.join('tampered.dat'))
    with open(tampered, 'w') as out_fh:
        out_fh.write("".join(lines[:-1]))
    with pytest.raises(TableParserError) as exc_info:
        TraceTable.read(tampered)
    assert 'does not match' in str(exc_info.value)
    no_id = str(tmpdir.join('no_id.dat'))
    with open(no_id, 'w') as out_fh:
        out_fh.write("".join(lines[1:]))
    with pytest.raises(TableParserError) as exc_info:
        TraceTable.read(no_id)
    assert 'does not define an ID' in str(exc_info.value)
    bad_value = str(tmpdir.join('bad_value.dat'))
    with open(bad_value, 'w') as out_fh:
        out_fh.write("".join(lines[:-1]) + "1.0 2.0 x 4.0\n")
    with pytest.raises(TableParserError) as exc_info:
        TraceTable.read(bad_value)
    assert "invalid value 'x'" in str(exc_info.value)


def test_records_table(tmpdir):
    records = [LifespanRecord(0.1, 10.2, 'march', 1.0/64, 1e6, False),
               LifespanRecord(0.05, 40.0, 'march', 1.0/64, 1e6, True)]
    table = RecordsTable.from_records(records, {'model': 'special-plus'})
    filename = str(tmpdir.join('records.dat'))
    table.write(filename)
    assert RecordsTable.read(filename).records() == records


def test_curve_table(tmpdir):
    curve = blowup_curve(make_bump_data(0, 1, 1), '+', 0.5, 2, n_samples=11)
    table = CurveTable.from_curve(curve)
    assert len(table) == 9
    filename = str(tmpdir.join('curve.dat'))
    table.write(filename)
    table2 = CurveTable.read(filename)
    assert np.all(table2.table['t0'] == [pt.t0 for pt in curve])


def test_table_validation():
    with pytest.raises(ValueError):
        CurveTable({'x0': [1.0], 'M': [1.0]})
    with pytest.raises(ValueError):
        CurveTable({'x0': [1.0], 'M': [1.0], 't0': [1.0, 2.0]})
    with pytest.raises(ValueError):
        RecordsTable({'eps': [0.1], 'T_obs': [1.0], 'method': ['two words'],
                      'h': [0.1], 'threshold': [1.0], 'censored': [False]})


def test_jsonable():
    obj = {'a': np.float64(1.5), 'b': [np.int64(2), math.inf],
           'c': np.array([np.nan, -np.inf]), 'd': np.bool_(True),
           'e': None}
    assert jsonable(obj) == {'a': 1.5, 'b': [2, 'inf'],
                             'c': ['nan', '-inf'], 'd': True, 'e': None}


def test_write_json(tmpdir, config):
    filename = str(tmpdir.join('result.json'))
    summary = {'status': 'completed', 't_cross': None, 't0': math.inf}
    write_json(filename, config, summary, [1e-3, 1e-6])
    content = read_json(filename)
    assert content['summary']['t0'] == 'inf'
    assert content['residuals'] == [1e-3, 1e-6]
    assert content['config']['eps'] == 0.5
    filename2 = str(tmpdir.join('result2.json'))
    write_json(filename2, config, summary, [1e-3, 1e-6])
    with open(filename) as fh1, open(filename2) as fh2:
        assert fh1.read() == fh2.read()
    assert os.path.getsize(filename) > 0
