"""Text tables (amplitude traces, sweep records, blow-up curves) and JSON
result files.

Every table file has the format::

    # semiwave trace 2b3e0f4a-...
    # eps = 0.25
    # model = 'special-plus'
    #                       t                    sup_a  ...
      0.0000000000000000e+00   2.5000000000000000e-01 ...

The ID in the first line is an RFC 4122 UUID3 derived from the remainder of
the file, so that two files with the same configuration and data have the
same ID (and are byte-identical).
"""
import json
import math
import re
import uuid
from collections import OrderedDict

import numpy as np

from ..errors import TableParserError

__all__ = ['DataTable', 'TraceTable', 'RecordsTable', 'CurveTable',
           'write_json', 'read_json']

__private__ = ['jsonable']

FLOAT, WORD, FLAG = 'float', 'word', 'flag'


def _config_str(value):
    """Canonical text representation of a config value"""
    if isinstance(value, bool):
        return 'true' if value else 'false'
    if value is None:
        return 'none'
    if isinstance(value, (list, tuple)):
        return ", ".join(_config_str(v) for v in value)
    if isinstance(value, float):
        return repr(value)
    return str(value)


class DataTable(object):
    """Columnar data with a config header and a content-derived ID.

    Subclasses define the :attr:`kind` and the :attr:`columns` (pairs of
    name and type, where the type is ``'float'``, ``'word'``, or ``'flag'``).

    Args:
        data (dict): column name => sequence of values (all of equal length)
        config (dict or None): configuration to record in the header. Values
            are stored as their canonical string representation.

    Raises:
        ValueError: if `data` does not match :attr:`columns`
    """
    kind = None
    columns = ()
    col_width = 25
    _uuid_namespace = uuid.UUID('5f1b7d6e-2c1a-4cd4-9f43-8d2b0d7f1e90')
    _rx = {
        'head_ID': re.compile(r'^# semiwave (?P<kind>[\w-]+)\s+'
                              r'(?P<ID>[a-f\d-]{36})\s*$'),
        'config': re.compile(r'^#\s*(?P<key>[\w-]+)\s+=\s?(?P<value>.*)$'),
    }

    def __init__(self, data, config=None):
        names = [name for (name, _) in self.columns]
        if set(data.keys()) != set(names):
            raise ValueError("%s requires the columns %s"
                             % (self.__class__.__name__, ", ".join(names)))
        self.table = OrderedDict()
        nrows = None
        for name, col_type in self.columns:
            if col_type == FLOAT:
                col = np.array(data[name], dtype=np.float64)
            elif col_type == FLAG:
                col = np.array(data[name], dtype=bool)
            else:
                col = [str(v) for v in data[name]]
                if any(re.search(r'\s', v) or len(v) == 0 for v in col):
                    raise ValueError("Values in column '%s' must be single "
                                     "words" % name)
            if nrows is None:
                nrows = len(col)
            elif len(col) != nrows:
                raise ValueError("All columns must have the same length")
            self.table[name] = col
        self._nrows = nrows or 0
        self.config = OrderedDict()
        if config is not None:
            for key, value in config.items():
                self.config[str(key)] = _config_str(value)

    @classmethod
    def new_id(cls, name):
        """Deterministic RFC 4122 identifier for the string `name`"""
        return str(uuid.uuid3(cls._uuid_namespace, name))

    @property
    def ID(self):
        """Identifier derived from the header and data (read-only)"""
        return self.new_id(self._body())

    @property
    def nrows(self):
        return self._nrows

    def __len__(self):
        return self._nrows

    def __eq__(self, other):
        return (isinstance(other, DataTable) and self.kind == other.kind and
                self.ID == other.ID)

    def __hash__(self):
        return hash(self.ID)

    def __repr__(self):
        return "%s(ID=%s)" % (self.__class__.__name__, self.ID)

    def _format(self, col_type, value):
        w = self.col_width
        if col_type == FLOAT:
            return "%*.16e" % (w, value)
        elif col_type == FLAG:
            return "%*d" % (w, int(value))
        return "%*s" % (w, value)

    def _body(self):
        lines = []
        for key, value in self.config.items():
            lines.append("# %s = %s" % (key, value))
        w = self.col_width
        header = "#%*s" % (w - 1, self.columns[0][0])
        for name, _ in self.columns[1:]:
            header += "%*s" % (w, name)
        lines.append(header)
        for i in range(self._nrows):
            lines.append("".join(self._format(col_type, self.table[name][i])
                                 for (name, col_type) in self.columns))
        return "\n".join(lines) + "\n"

    def to_str(self):
        """Full string representation, as written by :meth:`write`"""
        return "# semiwave %s %s\n%s" % (self.kind, self.ID, self._body())

    def __str__(self):
        return self.to_str()

    def write(self, filename):
        """Write the table to a text file; it may later be restored with the
        :meth:`read` class method"""
        with open(filename, 'w') as out_fh:
            out_fh.write(self.to_str())

    @classmethod
    def read(cls, filename):
        """Read a table from `filename`, in the format written by
        :meth:`write`.

        Raises:
            TableParserError: if the file has an incorrect format, or if the
                ID does not match the content
        """
        ID = None
        config = OrderedDict()
        data = OrderedDict([(name, []) for (name, _) in cls.columns])
        header_seen = False
        with open(filename) as in_fh:
            for lineno, line in enumerate(in_fh, 1):
                line = line.rstrip("\n")
                if line.startswith('#'):
                    m = cls._rx['head_ID'].match(line)
                    if m:
                        if m.group('kind') != cls.kind:
                            raise TableParserError(
                                "File %s contains a %s table, not %s"
                                % (filename, m.group('kind'), cls.kind))
                        ID = m.group('ID')
                        continue
                    m = cls._rx['config'].match(line)
                    if m and not header_seen:
                        config[m.group('key')] = m.group('value')
                        continue
                    names = line[1:].split()
                    if names == [name for (name, _) in cls.columns]:
                        header_seen = True
                        continue
                    raise TableParserError("File %s, line %d: unexpected "
                                           "comment line" % (filename, lineno))
                if not header_seen:
                    raise TableParserError(
                        "File %s does not contain a column header for %s"
                        % (filename, ", ".join(data)))
                fields = line.split()
                if len(fields) != len(cls.columns):
                    raise TableParserError(
                        "File %s, line %d: expected %d columns, found %d"
                        % (filename, lineno, len(cls.columns), len(fields)))
                for (name, col_type), field in zip(cls.columns, fields):
                    try:
                        if col_type == FLOAT:
                            data[name].append(float(field))
                        elif col_type == FLAG:
                            data[name].append(bool(int(field)))
                        else:
                            data[name].append(field)
                    except ValueError:
                        raise TableParserError(
                            "File %s, line %d: invalid value '%s' in column "
                            "%s" % (filename, lineno, field, name))
        if ID is None:
            raise TableParserError("File %s does not define an ID"
                                   % filename)
        if not header_seen:
            raise TableParserError("File %s does not contain a column header"
                                   % filename)
        table = cls(data, config)
        if table.ID != ID:
            raise TableParserError("File %s: ID %s does not match the data"
                                   % (filename, ID))
        return table


class TraceTable(DataTable):
    """Amplitude trace of the marching solver"""
    kind = 'trace'
    columns = (('t', FLOAT), ('sup_a', FLOAT), ('sup_b', FLOAT),
               ('sup_u', FLOAT))

    @classmethod
    def from_result(cls, result, config=None):
        """Trace of a :class:`~semiwave.solvers.march.SolveResult`"""
        trace = result.trace
        data = OrderedDict([(name, trace[:, i])
                            for (i, (name, _)) in enumerate(cls.columns)])
        return cls(data, config)


class RecordsTable(DataTable):
    """Records of a lifespan sweep"""
    kind = 'records'
    columns = (('eps', FLOAT), ('T_obs', FLOAT), ('method', WORD),
               ('h', FLOAT), ('threshold', FLOAT), ('censored', FLAG))

    @classmethod
    def from_records(cls, records, config=None):
        """Table for a list of
        :class:`~semiwave.analysis.lifespan.LifespanRecord`"""
        data = OrderedDict([(name, [getattr(rec, name) for rec in records])
                            for (name, _) in cls.columns])
        return cls(data, config)

    def records(self):
        """Convert back into a list of
        :class:`~semiwave.analysis.lifespan.LifespanRecord`"""
        from ..analysis.lifespan import LifespanRecord
        names = [name for (name, _) in self.columns]
        return [LifespanRecord(*[self.table[name][i] for name in names])
                for i in range(self.nrows)]


class CurveTable(DataTable):
    """Per-characteristic blow-up times"""
    kind = 'curve'
    columns = (('x0', FLOAT), ('M', FLOAT), ('t0', FLOAT))

    @classmethod
    def from_curve(cls, curve, config=None):
        """Table for a list of :class:`~semiwave.analysis.blowup.CurvePoint`"""
        data = OrderedDict([(name, [getattr(pt, name) for pt in curve])
                            for (name, _) in cls.columns])
        return cls(data, config)


def jsonable(obj):
    """Convert `obj` recursively into something :func:`json.dumps` accepts
    with ``allow_nan=False``: numpy scalars and arrays become Python numbers
    and lists, non-finite floats become the strings ``'inf'``, ``'-inf'``,
    ``'nan'``"""
    if isinstance(obj, dict):
        return OrderedDict((str(k), jsonable(v)) for (k, v) in obj.items())
    if isinstance(obj, (list, tuple, np.ndarray)):
        return [jsonable(v) for v in obj]
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        obj = float(obj)
        if math.isfinite(obj):
            return obj
        return repr(obj)
    return obj


def write_json(filename, config, summary, residuals=()):
    """Write a result file with the members ``config``, ``summary``, and
    ``residuals`` (keys sorted, deterministic formatting)"""
    result = {'config': config, 'summary': summary,
              'residuals': list(residuals)}
    with open(filename, 'w') as out_fh:
        json.dump(jsonable(result), out_fh, sort_keys=True, indent=2,
                  allow_nan=False)
        out_fh.write("\n")


def read_json(filename):
    """Read a result file written by :func:`write_json`"""
    with open(filename) as in_fh:
        return json.load(in_fh)
