"""Exact vertex-isoperimetry toolkit for hypercubes and Hamming balls.

Thin wrapper over the compiled extension. Families travel as plain dicts in
the same JSON shape the CLI emits: {"n": ..., "repr": "explicit" | "profile"
| "padded", ...}. Counts that can exceed machine integers come back as
Python ints, exact ratios as fractions.Fraction.
"""

from ._isoball import *  # noqa: F401,F403
from ._isoball import __doc__ as _core_doc

__all__ = [name for name in dir() if not name.startswith("_")]
