"""Lozi map periodic orbits, renormalization geometry and bifurcation curves."""

from ._lozi import *  # noqa: F401,F403
from ._lozi import (  # noqa: F401
    ConditionFailed,
    DomainError,
    EndpointOrder,
    GeometryError,
    LoziError,
    MultipleCrossing,
    NoSignChange,
    ParseError,
    SingularSystem,
)

__version__ = "0.1.0"
