"""Nonbinary symplectic stabilizer codes over prime fields.

Linear constructions over two-dimensional algebras, quadratic-residue codes
from real quadratic integer rings, fault-tolerant matrix groups and a dense
stabilizer-state check.
"""

from .errors import DomainError, NotFoundError, ParseError, ResourceError
from .sympcode import CodeParams, SympCode, SympVector, dual, parameters, singleton_check

__all__ = ["CodeParams", "DomainError", "NotFoundError", "ParseError", "ResourceError",
           "SympCode", "SympVector", "dual", "parameters", "singleton_check"]
__version__ = "0.1.0"
