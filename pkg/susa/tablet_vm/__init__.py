"""

The `tablet_vm` package replays the computations of mathematical tablets step by step and checks every value the tablet states.

A procedure is written one step per line, in the order of the translation::

    t1 := RECIP 12 => 0;5  # Obv. L2-4
    v := MUL t1 V => 1,12  # Obv. L4-5

`parse_script` reads the text, `run` replays it with exact arithmetic and `verify` judges the resulting `Trace`. Each claim is `ok`, an `annotated-error` (the tablet is wrong in a way the edition already notes), a `mismatch` or `unclaimed`.

Example:
    ```python
    from susa.tablet_vm import load_bundled, run, verify

    report = verify(run(load_bundled("SMT14-P1")))
    report.status  # ReportStatus.annotated_errors_only
    print(report.to_text())
    ```
"""
# ruff: noqa
from .elements import *
from .visitor import *
from .validator import *
from .parser import *
from .interpreter import *
from .cursor import *
from .report import *
from .bundled import *
