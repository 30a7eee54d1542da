r"""Closed-form d'Alembert solution $u^0$ of the free wave equation and its
derivatives.

.. math::

    u^0(x,t) = \frac{1}{2}\{f(x+t) + f(x-t)\}
               + \frac{1}{2}\int_{x-t}^{x+t} g(y)\, dy

All evaluators are scale-free (they correspond to $\varepsilon = 1$); the
amplitude $\varepsilon$ is stored only for the :meth:`FreeWave.scaled`
convenience accessor. Sums are grouped pairwise such that even/odd data
produce exactly even/odd results on grids symmetric about $x = 0$.
"""
import numpy as np

__all__ = ['FreeWave']

__private__ = []


def _check_time(t):
    if np.any(np.asarray(t) < 0):
        raise ValueError("the free solution is evaluated for t >= 0 only")


class FreeWave(object):
    r"""Evaluator for $u^0$ and its first and second derivatives.

    Args:
        data (InitialData): the initial data $(f, g)$
        eps (float): amplitude $\varepsilon$ (used by :meth:`scaled` only)

    All evaluators take `x` and `t` (scalars or broadcastable arrays, with
    ``t >= 0``) and vanish exactly for $|x| > t + R$.
    """

    _names = ('u0', 'u0_t', 'u0_x', 'u0_tx', 'u0_xx', 'u0_tt')

    def __init__(self, data, eps=1.0):
        self.data = data
        self.eps = float(eps)

    def u0(self, x, t):
        _check_time(t)
        d = self.data
        xp, xm = np.add(x, t), np.subtract(x, t)
        return 0.5 * (d.f(xp) + d.f(xm)) + 0.5 * (d.G(xp) - d.G(xm))

    def u0_t(self, x, t):
        _check_time(t)
        d = self.data
        xp, xm = np.add(x, t), np.subtract(x, t)
        return 0.5 * ((d.df(xp) - d.df(xm)) + (d.g(xp) + d.g(xm)))

    def u0_x(self, x, t):
        _check_time(t)
        d = self.data
        xp, xm = np.add(x, t), np.subtract(x, t)
        return 0.5 * ((d.df(xp) + d.df(xm)) + (d.g(xp) - d.g(xm)))

    def u0_tx(self, x, t):
        _check_time(t)
        d = self.data
        xp, xm = np.add(x, t), np.subtract(x, t)
        return 0.5 * ((d.ddf(xp) - d.ddf(xm)) + (d.dg(xp) + d.dg(xm)))

    def u0_xx(self, x, t):
        _check_time(t)
        d = self.data
        xp, xm = np.add(x, t), np.subtract(x, t)
        return 0.5 * ((d.ddf(xp) + d.ddf(xm)) + (d.dg(xp) - d.dg(xm)))

    def u0_tt(self, x, t):
        """Second time derivative; identical to :meth:`u0_xx` (free wave
        equation)"""
        _check_time(t)
        d = self.data
        xp, xm = np.add(x, t), np.subtract(x, t)
        return 0.5 * ((d.ddf(xp) + d.ddf(xm)) + (d.dg(xp) - d.dg(xm)))

    def scaled(self, name, x, t):
        r"""Return $\varepsilon$ times the evaluator `name` (e.g. ``'u0_t'``)
        at `(x, t)`"""
        if name not in self._names:
            raise ValueError("Unknown evaluator '%s'" % name)
        return self.eps * getattr(self, name)(x, t)

    def __repr__(self):
        return "FreeWave(%r, eps=%r)" % (self.data, self.eps)
