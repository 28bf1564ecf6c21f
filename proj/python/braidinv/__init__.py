"""Exact computations for the inverse of the Kontsevich integral on B2.

Rationals come back from the extension as canonical "p/q" strings and are
converted to :class:`fractions.Fraction` here.
"""

from fractions import Fraction

from . import _braidinv as _core

__all__ = [
    "asymptotics",
    "basis_inverse",
    "beta_relation_lhs",
    "builtin_sequence",
    "canonical_braid_sum",
    "condition_c",
    "entry_sequence",
    "filtration_order",
    "kontsevich",
    "leibniz_partial",
    "lift",
    "q_expand",
    "reproduce",
    "residue",
    "run_cli",
    "solve_t",
    "theta_value",
]

canonical_braid_sum = _core.canonical_braid_sum
filtration_order = _core.filtration_order
asymptotics = _core.asymptotics
builtin_sequence = _core.builtin_sequence
condition_c = _core.condition_c
reproduce = _core.reproduce
solve_t = _core.solve_t


def kontsevich(braid="tau", order=7):
    """Coefficients of Z(braid) in t^0..t^order."""
    return [Fraction(c) for c in _core.kontsevich(braid, order)]


def residue(braid):
    order, value = _core.residue(braid)
    return order, Fraction(value)


def lift(order, method="strengthen", seed="tau"):
    """Polynomial P with t -> P(seed), as {degree: coefficient}."""
    return {k: Fraction(c) for k, c in _core.lift(order, method, seed).items()}


def q_expand(order):
    """Coefficients of <n> = q^n - p^n in the tau lift of the given order."""
    return {n: Fraction(c) for n, c in _core.q_expand(order).items()}


def theta_value(k):
    return Fraction(_core.theta_value(k))


def beta_relation_lhs(s):
    return Fraction(_core.beta_relation_lhs(s))


def leibniz_partial(r):
    return Fraction(_core.leibniz_partial(r))


def basis_inverse(r, kind="balanced", with_factorials=False):
    return [[Fraction(c) for c in row] for row in _core.basis_inverse(r, kind, with_factorials)]


def entry_sequence(kind, row, col, r_values, with_factorials=False, jobs=1):
    return [Fraction(c) for c in _core.entry_sequence(kind, row, col, list(r_values), with_factorials, jobs)]


def run_cli(*args):
    """Runs the command-line tool in-process; returns (exit_code, stdout, stderr)."""
    return _core.run_cli([str(a) for a in args])
