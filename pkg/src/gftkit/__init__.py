"""Numerical toolkit for integral transforms of univalent functions on the unit disk."""

from .catalog import CATALOG_NAMES, AnalyticFn, catalog_build, catalog_schema
from .errors import GFTError
from .holomorphic import Holomorphic
from .series import TaylorPoly
from .transforms import alexander, apply_operator, cesaro_beta, hornich_add, hornich_scale, j_gamma

__version__ = "0.1.0"

__all__ = [
    "CATALOG_NAMES",
    "AnalyticFn",
    "GFTError",
    "Holomorphic",
    "TaylorPoly",
    "alexander",
    "apply_operator",
    "catalog_build",
    "catalog_schema",
    "cesaro_beta",
    "hornich_add",
    "hornich_scale",
    "j_gamma",
]
