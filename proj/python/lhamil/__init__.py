"""Python bindings for the lhamil C++ library.

Graphs are ``Graph`` objects (at most 64 vertices). Sweep reports are
returned as plain dictionaries with the same keys as the CLI's JSON output.
"""

from ._lhamil import *  # noqa: F401,F403
from ._lhamil import Graph, Graph6Error, ParameterError  # noqa: F401

__all__ = [name for name in dir() if not name.startswith("_")]
