"""Figure rendering for dihedral-walk CSV outputs."""

from .render import FigureSpec, SchemaError, render

__version__ = "0.1.0"
