"""Numerical checks for operator power inequalities in matrix algebras."""

try:
    from ._cstarineq import *  # noqa: F401,F403
except ImportError:  # build-tree layout keeps the extension next to this package
    from _cstarineq import *  # noqa: F401,F403
