"""Exact lattice computations for the minimal model program on normal surfaces."""

from ._core import LcsurfError, Surface, preset_names

__all__ = ["LcsurfError", "Surface", "preset_names"]
