"""

The `sexagesimal` package is the exact numeric kernel of `susa`. Every number that appears on a tablet, `14,24`, `0;6,40` or `1,12;15`, is held as a `SexRational`, an always-reduced `fractions.Fraction`.

### Contents

- `numerals`: parsing and formatting of base-60 numerals, absolute (with the `;` point) or floating (point-free, as written on the tablets).
- `arithmetic`: exact `add`, `sub`, `mul`, `div`, `reciprocal` and the regular-number tests.
- `expression`: an infix evaluator over numerals used by the command line.

All values are immutable and every function is pure.
"""
# ruff: noqa
from .numerals import *
from .arithmetic import *
from .expression import evaluate
