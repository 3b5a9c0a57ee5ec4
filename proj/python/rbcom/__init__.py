"""Resonant-beam SWIPT link simulator.

Thin wrapper over the compiled core. Everything public lives in the
extension module; this package just re-exports it.
"""

from ._rbcom import *  # noqa: F401,F403
from ._rbcom import __doc__  # noqa: F401

__version__ = "0.1.0"
