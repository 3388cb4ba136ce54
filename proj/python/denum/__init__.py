"""Exact restricted-partition counts and Sylvester wave decompositions.

Thin wrappers over the compiled kernels in ``denum._core``; exact values
cross the boundary as decimal/rational strings and are converted to ``int``
or ``fractions.Fraction`` here.
"""

from fractions import Fraction

from denum import _core

__all__ = [
    "count",
    "count_series",
    "quasipolynomial_json",
    "evaluate_quasipolynomial",
    "wave_residues",
    "fourier_dedekind",
    "verify",
    "stirling2",
    "delta_power_zero",
    "euler_h",
]


def count(components, max_l):
    return [int(v) for v in _core.count(list(components), max_l)]


def count_series(components, max_l):
    return [int(v) for v in _core.count_series(list(components), max_l)]


def quasipolynomial_json(components):
    return _core.quasipolynomial_json(list(components))


def evaluate_quasipolynomial(qp_json, l):
    return Fraction(_core.evaluate_quasipolynomial(qp_json, l))


def wave_residues(components, q):
    return [[Fraction(c) for c in poly] for poly in _core.wave_residues(list(components), q)]


def fourier_dedekind(l, betas, q):
    return Fraction(_core.fourier_dedekind(l, list(betas), q))


def verify(components, max_l):
    return _core.verify(list(components), max_l)


def stirling2(m, n):
    return int(_core.stirling2(m, n))


def delta_power_zero(n, m):
    return int(_core.delta_power_zero(n, m))


def euler_h(n, lam):
    return Fraction(_core.euler_h(n, str(Fraction(lam))))
