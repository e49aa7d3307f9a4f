"""Functional-equation toolkit: special functions, shifted-zeta
combinations, comb measures and their Prony decomposition, and named
verification suites. Everything lives in the compiled core."""

try:
    from ._zetacomb import *  # installed package layout
except ImportError:  # build tree: the module sits next to us on sys.path
    from _zetacomb import *  # noqa: F401,F403

__version__ = "0.1.0"
