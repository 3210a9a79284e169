"""Vertex boundaries, compressions and initial segments on Z^k x N^d.

Coordinates passed to ``project``, ``section`` and the compression functions
are 0-based.
"""

from ._core import *  # noqa: F401,F403
from ._core import Error, NotCompressed, BudgetExceeded  # noqa: F401

__all__ = [name for name in dir() if not name.startswith("_")]
