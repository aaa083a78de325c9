"""
This module defines the exception hierarchy shared by every vsa subpackage.

Axiom checkers never raise on a failed axiom; they return violation records.
The exceptions below signal inputs that could not be checked at all.
"""


class VertexAlgebraError(ValueError):
    """
    Base class of all errors raised by the vsa package.
    """


class StructureError(VertexAlgebraError):
    """
    Malformed indices, dimension mismatches or malformed JSON payloads.
    """


class LatticeError(VertexAlgebraError):
    """
    A weight or mode index outside the algebra's (1/T) lattice.
    """


class AmbientMismatchError(VertexAlgebraError):
    """
    States from different algebras were combined.
    """


class PreconditionError(VertexAlgebraError):
    """
    An operation was called without its precondition holding.
    """


class ClosureError(VertexAlgebraError):
    """
    A subalgebra closure did not stabilize under the iteration cap.
    """
