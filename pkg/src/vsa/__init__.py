"""
vsa/__init__.py

Exact computations with vertex superalgebras admitting PBW bases: graded state spaces, vertex
operations and axiom checks, the standard filtration, truncated Y(z)-injectivity certificates
and Hopf algebra actions.
"""

from vsa.defaults import tool_version
from vsa.errors import (
    AmbientMismatchError,
    ClosureError,
    LatticeError,
    PreconditionError,
    StructureError,
    VertexAlgebraError,
)
from vsa.violations import Violation

__version__ = tool_version()
