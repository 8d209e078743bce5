"""Reasoning with psi-forms: entailment, image, e-difference, SOK update and plan validation."""

from ._psiplan import (
    Error,
    IllFormed,
    Inconsistent,
    NotFixedLength,
    ParseError,
    PreconditionError,
    PsiForm,
    Sok,
    ediff,
    entails,
    image,
    oracle,
    update,
    validate,
)

__all__ = [
    "Error",
    "IllFormed",
    "Inconsistent",
    "NotFixedLength",
    "ParseError",
    "PreconditionError",
    "PsiForm",
    "Sok",
    "ediff",
    "entails",
    "image",
    "oracle",
    "update",
    "validate",
]
