"""Promotion, evacuation, bump diagrams, growth diagrams and webs for
Kreweras words."""

from .kernels import BACKEND
from .words import (
    dual_evacuate,
    enumerate_words,
    evacuate,
    is_connected,
    is_kreweras,
    orbit,
    promote,
    promote_inverse,
    promote_power,
    random_word,
    swap_bc,
    validate,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "dual_evacuate",
    "enumerate_words",
    "evacuate",
    "is_connected",
    "is_kreweras",
    "orbit",
    "promote",
    "promote_inverse",
    "promote_power",
    "random_word",
    "swap_bc",
    "validate",
]
