"""Stanley-Reisner liaison toolkit.

Exact Groebner bases over Q and GF(2), simplicial homology, Cohen-Macaulay and
vertex-decomposability tests, and verification/search/refutation engines for
basic double G-links of squarefree monomial ideals.
"""

from ._core import *  # noqa: F401,F403
from . import _core

__all__ = [name for name in dir(_core) if not name.startswith("_")]
