"""
Library-wide defaults. Every value is overridable per call and per CLI flag.
"""

from importlib import metadata

DENSE_RANK_THRESHOLD = 64
"""Matrices with both dimensions at most this size are ranked densely."""

CLOSURE_ITERATION_CAP = 32
"""Maximal number of product rounds when closing a set of generators."""

WINDOW_RADIUS = 4
"""Default radius of the mode-index window used by axiom sweeps."""

DISTRIBUTION_NAME = "vertexsuperalgebra"
FALLBACK_VERSION = "1.0.0"


def default_max_window(cutoff, lattice_denominator: int) -> int:
    """
    Return the default widest extra row window, 2·N·T, for the Y(z) certificate.

    >>> from fractions import Fraction
    >>> default_max_window(Fraction(5, 2), 2)
    10
    """
    return int(2 * cutoff * lattice_denominator)


def tool_version() -> str:
    """
    Return the installed distribution version, or the source-tree version.
    """
    try:
        return metadata.version(DISTRIBUTION_NAME)
    except metadata.PackageNotFoundError:
        return FALLBACK_VERSION
