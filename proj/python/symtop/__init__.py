"""Python bindings for the symmetric-top Poisson reduction library."""

from ._symtop import *  # noqa: F401,F403
from ._symtop import SymtopError, SpaceId, Method  # noqa: F401

__all__ = [name for name in dir() if not name.startswith("_")]
