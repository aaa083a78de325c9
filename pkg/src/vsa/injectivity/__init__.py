"""
injectivity/__init__.py
"""

from .injectivity import (
    INJECTIVE,
    UNDETERMINED,
    InjectivityCertificate,
    YZSystem,
    build_gr_yz_matrix,
    build_yz_matrix,
    certify,
    certify_subalgebra,
    subalgebra_closure,
)
