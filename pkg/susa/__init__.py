"""
!!! warning "susa is in alpha"
    The API may change on minor versions.

## About susa
`susa` replays the volume computations of Old Babylonian and Elamite mathematical tablets step by step, with exact base-60 arithmetic, and checks every number the scribe wrote.

Four layers build on one another:

- `sexagesimal`: exact rationals read and written as base-60 numerals (`1,12;15`), reciprocals and regular numbers.
- `metrology`: lengths, volumes and capacities (nindan, kùš, volume-sar, sìla, gur, gur₇), storage constants and capacity breakdowns.
- `solids`: volume rules from the cuboid to the pyramidal frustum and the grain heap, with a Simpson slab oracle and the Platonic meshes.
- `tablet_vm`: a small procedure language whose steps read one-to-one against a translation, an interpreter and a claim verifier.

## Installation

```bash
pip install susa
```

## Usage
!!! example "SMT No. 14, problem 1"
    === "Python"
        ```python
        import susa

        report = susa.verify(susa.run(susa.load_bundled("SMT14-P1")))
        print(report.result_line())
        # x = 4 nindan, y = 6, z = 10; 1 annotated scribal error
        ```
    === "Command line"
        ```bash
        susa replay SMT14-P1
        susa sexa recip 9            # 0;6,40
        susa convert "14,24 sar" nindan3
        ```
"""
# ruff: noqa
from .sexagesimal import *
from .metrology import *
from .solids import *
from .tablet_vm import *

__version__ = "0.1.0"
