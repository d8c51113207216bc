__version__ = "0.1.0"

from .errors import NestoError
from .core import BuildingSet, validate, from_graph
from .complex import nested_complex, extended_nested_complex

__all__ = [
    '__version__', 'NestoError', 'BuildingSet', 'validate', 'from_graph',
    'nested_complex', 'extended_nested_complex',
]
