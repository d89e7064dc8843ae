"""Finite generalized pseudoeffect algebras."""

from ._core import (
    CapExceeded,
    DomainError,
    FiniteGpea,
    InvalidModel,
    UsageError,
    center,
    chain,
    closure_gamma,
    enumerate_gpeas,
    exocenter,
    fundamental,
    is_cogpea,
    is_commutative,
    law_ids,
    model_d4,
    model_v3,
    parse_model,
    run,
    serialize_model,
    verify_laws,
    violations,
)

__all__ = [
    "CapExceeded",
    "DomainError",
    "FiniteGpea",
    "InvalidModel",
    "UsageError",
    "center",
    "chain",
    "closure_gamma",
    "enumerate_gpeas",
    "exocenter",
    "fundamental",
    "is_cogpea",
    "is_commutative",
    "law_ids",
    "model_d4",
    "model_v3",
    "parse_model",
    "run",
    "serialize_model",
    "verify_laws",
    "violations",
]
