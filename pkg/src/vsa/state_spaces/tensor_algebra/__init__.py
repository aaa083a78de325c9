"""
state_spaces/tensor_algebra/__init__.py
"""

from .tensor_algebra import TensorAlgebra, tensor_state
