"""Exact linear algebra over Q(i): subspaces, filtrations and polarized mixed Hodge structures."""

from .filtration import *  # noqa: F403
from .filtration import __all__ as _filtration_all
from .pmhs import *  # noqa: F403
from .pmhs import __all__ as _pmhs_all
from .scalar import *  # noqa: F403
from .scalar import __all__ as _scalar_all
from .subspace import *  # noqa: F403
from .subspace import __all__ as _subspace_all

__all__ = [*_scalar_all, *_subspace_all, *_filtration_all, *_pmhs_all]
