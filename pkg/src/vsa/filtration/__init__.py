"""
filtration/__init__.py
"""

from .filtration import (
    BiDegree,
    GrElement,
    check_gr_commutative,
    convolve_gr_dimensions,
    dimensions_to_json,
    filtration_level,
    gr_dimensions,
    gr_product,
    project,
)
from .pbw_certificate import CHECKS, PBWCertificate, dimension_table, pbw_certificate
