"""

The `metrology` package models the length, volume and capacity units of the tablets and the exact conversions between them.

- `units`: the closed catalog (`nindan`, `gi`, `kùš`, `nindan³`, `volume-sar`, `sìla`, `gur`, `gur₇`) and name lookup. ASCII names (`kus`, `nindan3`, `sar`, `gur7`) are accepted everywhere; the transliterated symbols are printed.
- `quantity`: `Quantity`, `convert`, storage-constant capacity conversion, gur₇/gur/sìla decomposition, the clumsy `3 (nindan, that is, 6) gi` notation and the JSON shapes.
"""
# ruff: noqa
from .units import *
from .units import is_unit_name
from .quantity import *
