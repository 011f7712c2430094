"""Exact combinatorics of ACM bundles on Geigle-Lenzing projective planes.

The package works with a weight quadruple ``p = (p1, p2, p3, p4)``. Start from
:class:`~glacm.picard.Weights`, which carries the Picard group arithmetic;
every other module takes a ``Weights`` as its first argument.
"""
from .errors import ContextError, DomainError, GLError, UnsupportedInput
from .picard import LElem, Weights

__version__ = "0.1.0"

__all__ = ["LElem", "Weights", "GLError", "DomainError", "ContextError", "UnsupportedInput", "__version__"]
