"""Exact (p,q)-deformed calculus, p-adic special functions and local zeta functions.

Rational results come back as ``fractions.Fraction``; parameters are passed as
strings such as ``"4/5"`` so that no value goes through a float.
"""

from fractions import Fraction

from . import _core
from ._core import RpqError, ghost_boundary as _ghost_boundary, run_cli, suite_names

__all__ = [
    "RpqError",
    "number",
    "factorial",
    "binomial",
    "zigzag",
    "family",
    "gamma",
    "padic_gamma",
    "zeta_spin_half",
    "ghost_boundary",
    "suite_names",
    "run_cli",
]


def _param(x):
    return str(x) if not isinstance(x, str) else x


def _bind(kwargs):
    return {k: (_param(v) if k in ("p", "q", "x", "rho") else v) for k, v in kwargs.items()}


def number(n, **kwargs):
    return Fraction(_core.number(n, **_bind(kwargs)))


def factorial(n, **kwargs):
    return Fraction(_core.factorial(n, **_bind(kwargs)))


def binomial(m, n, **kwargs):
    return Fraction(_core.binomial(m, n, **_bind(kwargs)))


def zigzag(count, **kwargs):
    return [Fraction(v) for v in _core.zigzag(count, **_bind(kwargs))]


def family(name, **kwargs):
    return [Fraction(v) for v in _core.family(name, **_bind(kwargs))]


def gamma(z, **kwargs):
    out = dict(_core.gamma(_param(z), **_bind(kwargs)))
    if out["exact"] is not None:
        out["exact"] = Fraction(out["exact"])
    return out


def padic_gamma(n, prime, **kwargs):
    return Fraction(_core.padic_gamma(n, prime, **_bind(kwargs)))


def zeta_spin_half(prime, s):
    return Fraction(_core.zeta_spin_half(prime, s))


def ghost_boundary(group, l):
    return Fraction(_ghost_boundary(group, l))
