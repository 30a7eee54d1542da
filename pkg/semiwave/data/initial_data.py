r"""Compactly supported initial data $(f, g)$ with exact derivatives.

Data families are piecewise polynomials, constructed symbolically with SymPy
and compiled to NumPy through :func:`sympy.lambdify`. All derivative
evaluators ($f'$, $f''$, $g'$) and the antiderivative

.. math::

    G(x) = \int_{-\infty}^{x} g(y)\, dy

are therefore exact up to rounding, and every evaluator returns exactly zero
outside of the support $|x| \le R$.
"""
import logging
from collections import OrderedDict, namedtuple

import numpy as np
import sympy

__all__ = [
    'NonlinearityParams', 'InitialData', 'MStar', 'make_bump_data',
    'make_traveling_data', 'make_data', 'eval_M', 'eval_Mstar', 'FAMILIES']

__private__ = ['as_sign']

_x = sympy.Symbol('x', real=True)
_y = sympy.Symbol('y', real=True)

#: amplitudes below this value count as zero (no blow-up signal)
DEGENERATE_LIMIT = 1e-14


def as_sign(sign):
    """Convert `sign` (one of ``'+'``, ``'-'``, ``+1``, ``-1``) to the
    integer ``+1`` or ``-1``"""
    if sign in ('+', 1):
        return 1
    if sign in ('-', -1):
        return -1
    raise ValueError("sign must be '+' or '-', not %r" % (sign, ))


class NonlinearityParams(object):
    r"""Exponents and variant of the nonlinear term.

    The variants are

    * ``'general'``: $|u_t|^p |u_x|^q$, with $p, q \in (1,\infty)\cup\{0\}$
    * ``'special-plus'``/``'special-minus'``:
      $|u_t \pm u_x|^{p-1}(u_t \pm u_x)$ with $p > 1$ ($q$ is ignored)
    * ``'free'``: no nonlinearity at all (linear wave equation)

    Raises:
        ValueError: if the exponents are not admissible for the variant
    """

    GENERAL = 'general'
    SPECIAL_PLUS = 'special-plus'
    SPECIAL_MINUS = 'special-minus'
    FREE = 'free'
    variants = (GENERAL, SPECIAL_PLUS, SPECIAL_MINUS, FREE)

    def __init__(self, p, q=0, variant=GENERAL):
        if variant not in self.variants:
            raise ValueError("variant '%s' must be one of %s"
                             % (variant, ", ".join(self.variants)))
        p = float(p)
        q = float(q)
        if variant == self.GENERAL:
            for name, val in (('p', p), ('q', q)):
                if not (val > 1 or val == 0):
                    raise ValueError(
                        "%s = %r: the general product model requires %s > 1 "
                        "or %s = 0" % (name, val, name, name))
            if p == 0 and q == 0:
                raise ValueError("p and q cannot both vanish (the source "
                                 "would not be supported in the cone)")
        elif variant in (self.SPECIAL_PLUS, self.SPECIAL_MINUS):
            if not p > 1:
                raise ValueError("p = %r: the special model requires p > 1"
                                 % p)
            q = 0.0
        self._p = p
        self._q = q
        self._variant = variant

    @property
    def p(self):
        r"""Exponent of $u_t$ (general) or of $u_t \pm u_x$ (special)"""
        return self._p

    @property
    def q(self):
        """Exponent of $u_x$ (general model only, zero otherwise)"""
        return self._q

    @property
    def variant(self):
        """One of :attr:`variants`"""
        return self._variant

    @property
    def is_special(self):
        return self._variant in (self.SPECIAL_PLUS, self.SPECIAL_MINUS)

    @property
    def sign(self):
        """+1 for ``'special-plus'``, -1 for ``'special-minus'``, None
        otherwise"""
        return {self.SPECIAL_PLUS: 1, self.SPECIAL_MINUS: -1}.get(
            self._variant, None)

    @property
    def lifespan_exponent(self):
        r"""The exponent $\kappa$ in $T(\varepsilon) \sim C
        \varepsilon^{-\kappa}$: $p-1$ for the special model, $p+q-1$ for
        the general product model"""
        if self.is_special:
            return self._p - 1.0
        if self._variant == self.GENERAL:
            return self._p + self._q - 1.0
        return None

    @property
    def exploratory(self):
        """True if blow-up results for these parameters cannot be verified
        (general product with $p>1$ and $q>1$: the upper lifespan bound is
        open)"""
        return (self._variant == self.GENERAL and self._p > 1 and
                self._q > 1)

    def __eq__(self, other):
        return (isinstance(other, NonlinearityParams) and
                self.__key() == other.__key())

    def __hash__(self):
        return hash(self.__key())

    def __key(self):
        return (self._p, self._q, self._variant)

    def __repr__(self):
        return "NonlinearityParams(p=%r, q=%r, variant=%r)" % self.__key()


def _compile(expr, R, left=0.0, right=0.0):
    r"""Compile the symbolic `expr` (valid on $|x| \le R$) into a NumPy
    evaluator that returns `left` for $x < -R$ and `right` for $x > R$"""
    func = sympy.lambdify(_x, expr, modules='numpy')

    def evaluate(x):
        x = np.asarray(x, dtype=np.float64)
        res = np.where(x > R, right, left).astype(np.float64)
        inside = np.abs(x) <= R
        res[inside] = func(x[inside])
        if res.ndim == 0:
            return res[()]
        return res

    return evaluate


class InitialData(object):
    r"""Initial data ``u(x,0) = f(x), u_t(x,0) = g(x)`` supported in $|x| \le
    R$.

    Instances should be created through one of the family constructors
    (:func:`make_bump_data`, :func:`make_traveling_data`, or
    :func:`make_data`). They are picklable (they are re-created from the
    family name and parameters), so that they can be shipped to worker
    processes.

    Args:
        family (str): name of the data family (key in :data:`FAMILIES`)
        params (OrderedDict): the parameters passed to the family constructor
            (excluding `R`)
        R (float): support radius ($R \ge 1$)
        f_expr: SymPy expression for $f$ on $|x| \le R$ (in the symbol `x`)
        g_expr: SymPy expression for $g$ on $|x| \le R$

    Attributes:
        f, df, ddf, g, dg, G: evaluators for $f$, $f'$, $f''$, $g$, $g'$, and
            $G(x) = \int_{-\infty}^{x} g$. All accept scalars or arrays.
    """

    def __init__(self, family, params, R, f_expr, g_expr):
        R = float(R)
        if not R >= 1:
            raise ValueError("support radius R = %r must be >= 1" % R)
        self._family = family
        self._params = OrderedDict(params)
        self._R = R
        self.f_expr = sympy.sympify(f_expr)
        self.g_expr = sympy.sympify(g_expr)
        df_expr = sympy.diff(self.f_expr, _x)
        G_expr = sympy.integrate(self.g_expr.subs(_x, _y), (_y, -R, _x))
        total = float(sympy.integrate(self.g_expr, (_x, -R, R)))
        self.f = _compile(self.f_expr, R)
        self.df = _compile(df_expr, R)
        self.ddf = _compile(sympy.diff(df_expr, _x), R)
        self.g = _compile(self.g_expr, R)
        self.dg = _compile(sympy.diff(self.g_expr, _x), R)
        self.G = _compile(G_expr, R, right=total)
        self._total_g = total

    @property
    def family(self):
        return self._family

    @property
    def params(self):
        """Copy of the family parameters"""
        return self._params.copy()

    @property
    def R(self):
        """Support radius"""
        return self._R

    @property
    def total_g(self):
        r"""$\int g(x)\, dx$, i.e. the constant value of $G$ for $x > R$"""
        return self._total_g

    def __reduce__(self):
        kwargs = self.params
        kwargs['R'] = self._R
        return (_rebuild, (self._family, kwargs))

    def __repr__(self):
        args = ", ".join("%s=%r" % (k, v) for (k, v) in self._params.items())
        return "InitialData(%s: %s, R=%r)" % (self._family, args, self._R)


def _rebuild(family, kwargs):
    return make_data(family, **kwargs)


def make_bump_data(amp_f, amp_g, R=1.0):
    r"""Polynomial bump data

    .. math::

        f(x) = a_f (1 - (x/R)^2)^3, \quad g(x) = a_g (1 - (x/R)^2)^2

    on $|x| \le R$, zero outside. This is $C^2 \times C^1$ across $\pm R$.

    Example:

        >>> data = make_bump_data(0, 1, 2)
        >>> print("%.12f" % data.G(10.0))
        2.133333333333
    """
    R = float(R)
    if not R >= 1:
        raise ValueError("support radius R = %r must be >= 1" % R)
    s = 1 - (_x / sympy.Float(R))**2
    f_expr = sympy.Float(float(amp_f)) * s**3
    g_expr = sympy.Float(float(amp_g)) * s**2
    params = OrderedDict([('amp_f', float(amp_f)), ('amp_g', float(amp_g))])
    return InitialData('bump', params, R, f_expr, g_expr)


def make_traveling_data(amp_f, R=1.0, sign='+'):
    r"""Data $(f, \mp f')$ with $f(x) = a_f (1 - (x/R)^2)^3$.

    For the special model with the matching sign, $u(x,t) = \varepsilon
    f(x \mp t)$ is a global solution, since $\pm f' + g \equiv 0$.
    """
    R = float(R)
    if not R >= 1:
        raise ValueError("support radius R = %r must be >= 1" % R)
    sgn = as_sign(sign)
    s = 1 - (_x / sympy.Float(R))**2
    f_expr = sympy.Float(float(amp_f)) * s**3
    g_expr = -sgn * sympy.diff(f_expr, _x)
    params = OrderedDict([('amp_f', float(amp_f)),
                          ('sign', '+' if sgn > 0 else '-')])
    return InitialData('traveling', params, R, f_expr, g_expr)


#: Registry of data families, by name
FAMILIES = OrderedDict([
    ('bump', make_bump_data),
    ('traveling', make_traveling_data),
])


def make_data(family, **kwargs):
    """Instantiate the data `family` (a key in :data:`FAMILIES`) with the
    given keyword arguments"""
    try:
        factory = FAMILIES[family]
    except KeyError:
        raise ValueError("Unknown data family '%s', must be one of %s"
                         % (family, ", ".join(FAMILIES)))
    return factory(**kwargs)


def eval_M(data, sign, x0):
    r"""Blow-up amplitude $M_\pm(x_0) = \pm f'(x_0) + g(x_0)$ (of either
    sign)"""
    return as_sign(sign) * data.df(x0) + data.g(x0)


MStar = namedtuple('MStar', ['value', 'x', 'degenerate'])


def eval_Mstar(data, sign, n_samples=2**16 + 1):
    r"""Maximize $|\pm f'(x) + g(x)|$ over `n_samples` equidistant points in
    $[-R, R]$.

    Returns:
        MStar: named tuple ``(value, x, degenerate)``. Ties are broken towards
        the smallest `x`. If the maximum is below $10^{-14}$ (no blow-up
        signal), ``(0.0, 0.0, True)`` is returned.
    """
    xs = np.linspace(-data.R, data.R, int(n_samples))
    vals = np.abs(eval_M(data, sign, xs))
    k = int(np.argmax(vals))  # first occurence = smallest x
    if vals[k] < DEGENERATE_LIMIT:
        logging.getLogger(__name__).info(
            "degenerate data %r: |%sf' + g| vanishes", data,
            '+' if as_sign(sign) > 0 else '-')
        return MStar(0.0, 0.0, True)
    return MStar(float(vals[k]), float(xs[k]), False)
