"""Hodge diamonds of period domains, their polarized degeneracy relation, and
explicit R-split polarized mixed Hodge structures realizing them."""

from .diamonds import *  # noqa: F403
from .diamonds import __all__ as _diamonds_all
from .relation import *  # noqa: F403
from .relation import __all__ as _relation_all

__version__ = "0.1.0"
__all__ = [*_diamonds_all, *_relation_all]
