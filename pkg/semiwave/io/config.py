"""Run configuration for the command line interface.

A :class:`RunConfig` is assembled from three sources, in increasing order of
precedence: the built-in defaults, a ``key = value`` text file, and explicit
overrides (command line flags)::

    # sweep.cfg
    model = special-plus
    p = 3
    eps_list = 0.4, 0.2, 0.1, 0.05
"""
import math
from collections import OrderedDict

from ..analysis.lifespan import METHODS, geometric_eps_list
from ..data.initial_data import FAMILIES, NonlinearityParams, make_data
from ..errors import ConfigError

__all__ = ['RunConfig']

__private__ = ['parse_config_file']


def _float(value):
    try:
        return float(value)
    except (TypeError, ValueError):
        raise ConfigError("'%s' is not a number" % (value, ))


def _optional_float(value):
    if value is None or str(value).strip().lower() in ('', 'none'):
        return None
    return _float(value)


def _int(value):
    try:
        if isinstance(value, float) and not value.is_integer():
            raise ValueError
        return int(value)
    except (TypeError, ValueError):
        raise ConfigError("'%s' is not an integer" % (value, ))


def _bool(value):
    if isinstance(value, bool):
        return value
    text = str(value).strip().lower()
    if text in ('1', 'true', 'yes', 'on'):
        return True
    if text in ('0', 'false', 'no', 'off'):
        return False
    raise ConfigError("'%s' is not a boolean" % (value, ))


def _float_list(value):
    if value is None or str(value).strip().lower() in ('', 'none'):
        return None
    if isinstance(value, str):
        value = [v for v in value.replace(',', ' ').split()]
    return [_float(v) for v in value]


def _choice(*options):
    def parse(value):
        value = str(value).strip()
        if value not in options:
            raise ConfigError("'%s' must be one of %s"
                              % (value, ", ".join(options)))
        return value
    return parse


def _str(value):
    return str(value).strip()


class RunConfig(object):
    """Validated set of run parameters.

    Every key in :attr:`keys` is available as an attribute; assignments are
    parsed and type-checked (raising :exc:`~semiwave.errors.ConfigError`).
    Consistency between keys is checked by :meth:`validate`.

    Args:
        overrides (dict): initial values on top of the defaults. Keys may
            use ``-`` in place of ``_``; None values are ignored.

    Examples:

        >>> config = RunConfig({'model': 'general', 'p': 2, 'q': 2})
        >>> config.q
        2.0
    """

    #: key => (parser, default)
    keys = OrderedDict([
        ('model', (_choice(*NonlinearityParams.variants), 'special-plus')),
        ('p', (_float, 2.0)),
        ('q', (_float, 0.0)),
        ('eps', (_float, 0.1)),
        ('eps_list', (_float_list, None)),
        ('family', (_choice(*FAMILIES), 'bump')),
        ('amp_f', (_float, 0.0)),
        ('amp_g', (_float, 1.0)),
        ('sign', (_choice('+', '-'), '+')),
        ('R', (_float, 1.0)),
        ('h', (_float, 1.0/64)),
        ('T', (_float, 10.0)),
        ('T_cap', (_optional_float, None)),
        ('tol', (_optional_float, None)),
        ('max_iter', (_int, 200)),
        ('threshold', (_float, 1e6)),
        ('deriv', (_bool, False)),
        ('method', (_choice(*METHODS), 'march')),
        ('M', (_optional_float, None)),
        ('t', (_optional_float, None)),
        ('samples', (_int, 201)),
        ('out', (_str, '.')),
        ('jobs', (_int, 1)),
        ('seed', (_int, 0)),
    ])

    def __init__(self, overrides=None):
        values = OrderedDict()
        for key, (_, default) in self.keys.items():
            values[key] = default
        object.__setattr__(self, '_values', values)
        if overrides is not None:
            self.update(overrides)

    @classmethod
    def _normalize_key(cls, key):
        norm = key.strip().replace('-', '_')
        if norm in cls.keys:
            return norm
        for known in cls.keys:  # case-insensitive fallback (T, R, M)
            if known.lower() == norm.lower():
                return known
        raise ConfigError("Unknown configuration key '%s'" % key)

    def __getattr__(self, name):
        try:
            return self._values[name]
        except KeyError:
            raise AttributeError(name)

    def __setattr__(self, name, value):
        if name not in self.keys:
            raise AttributeError("Unknown configuration key '%s'" % name)
        parser = self.keys[name][0]
        try:
            self._values[name] = parser(value)
        except ConfigError as exc_info:
            raise ConfigError("%s: %s" % (name, exc_info))

    def update(self, mapping):
        """Set all keys in `mapping` whose value is not None"""
        for key, value in mapping.items():
            if value is not None:
                setattr(self, self._normalize_key(key), value)
        return self

    def update_from_file(self, filename):
        """Set the keys defined in the config file `filename`

        Raises:
            ConfigError: for malformed lines or unknown keys
            IOError: if the file cannot be read
        """
        return self.update(parse_config_file(filename))

    @classmethod
    def from_sources(cls, filename=None, overrides=None):
        """Defaults, updated from `filename` (if given), updated from
        `overrides`"""
        config = cls()
        if filename is not None:
            config.update_from_file(filename)
        if overrides is not None:
            config.update(overrides)
        return config

    def validate(self):
        """Check the consistency of all values

        Raises:
            ConfigError: if any value is invalid
        """
        self.params()
        checks = [
            ('h', self.h > 0 and math.isfinite(self.h)),
            ('T', self.T > 0 and math.isfinite(self.T)),
            ('R', self.R >= 1 and math.isfinite(self.R)),
            ('eps', self.eps >= 0),
            ('threshold', self.threshold > 0),
            ('max_iter', self.max_iter >= 1),
            ('jobs', self.jobs >= 1),
            ('samples', self.samples >= 2),
            ('tol', self.tol is None or self.tol > 0),
            ('T_cap', self.T_cap is None or self.T_cap > 0),
            ('t', self.t is None or self.t >= 0),
        ]
        for key, ok in checks:
            if not ok:
                raise ConfigError("invalid value %s = %r" % (
                                  key, self._values[key]))
        if self.h > self.T:
            raise ConfigError("zero-size grid: h = %r exceeds T = %r"
                              % (self.h, self.T))
        if self.eps_list is not None:
            if len(self.eps_list) < 3 or min(self.eps_list) <= 0:
                raise ConfigError("eps_list must contain at least three "
                                  "values > 0")
        return self

    def params(self):
        """The :class:`NonlinearityParams` (raises :exc:`ConfigError` for
        inadmissible exponents)"""
        try:
            return NonlinearityParams(self.p, self.q, variant=self.model)
        except ValueError as exc_info:
            raise ConfigError(str(exc_info))

    def data(self):
        """The :class:`InitialData` for the configured family"""
        try:
            if self.family == 'bump':
                return make_data('bump', amp_f=self.amp_f, amp_g=self.amp_g,
                                 R=self.R)
            return make_data(self.family, amp_f=self.amp_f, R=self.R,
                             sign=self.sign)
        except ValueError as exc_info:
            raise ConfigError(str(exc_info))

    def eps_values(self):
        """`eps_list`, or the default geometric list 0.4, 0.2, 0.1, 0.05"""
        if self.eps_list is None:
            return geometric_eps_list()
        return list(self.eps_list)

    def effective(self):
        """Ordered mapping of all keys to their effective values (copy)"""
        return OrderedDict(self._values)

    def __eq__(self, other):
        return (isinstance(other, RunConfig) and
                self._values == other._values)

    def __repr__(self):
        args = ", ".join("%s=%r" % kv for kv in self._values.items())
        return "RunConfig(%s)" % args


def parse_config_file(filename):
    """Read a ``key = value`` file into an ordered mapping of strings.
    Comments start with ``#``; blank lines are ignored.

    Raises:
        ConfigError: for lines without ``=``
    """
    values = OrderedDict()
    with open(filename) as in_fh:
        for lineno, line in enumerate(in_fh, 1):
            line = line.split('#', 1)[0].strip()
            if len(line) == 0:
                continue
            if '=' not in line:
                raise ConfigError("%s, line %d: expected 'key = value'"
                                  % (filename, lineno))
            key, value = line.split('=', 1)
            values[key.strip()] = value.strip()
    return values
