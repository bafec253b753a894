"""Figure rendering for dimerdyn CSV outputs."""

from .render import (
    EXPECTED_CONVENTIONS,
    ConventionMismatchError,
    EmptyDataError,
    FigureSpec,
    MissingColumnError,
    RenderError,
    default_spec,
    read_table,
    render,
)

__all__ = [
    "EXPECTED_CONVENTIONS",
    "ConventionMismatchError",
    "EmptyDataError",
    "FigureSpec",
    "MissingColumnError",
    "RenderError",
    "default_spec",
    "read_table",
    "render",
]
