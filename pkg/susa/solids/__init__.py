"""

The `solids` package holds every volume rule the toolkit knows, from the cuboid to the frustum of a regular `n`-gon pyramid, plus the grain-heap solver of SMT No. 14, the polyhedron formula and a numerical Cavalieri oracle.

### Modules

- `elements`: frozen descriptors (`Cuboid`, `PrismSpec`, `PyramidSpec`, `SquareFrustum`, `NgonFrustum`, `TruncatedTriangularPrism`, `GrainHeap`, `RotationSolid`, `Slope`).
- `functional`: exact rules, including the Babylonian and Egyptian frustum rules and the grain-heap forward and inverse computations.
- `approximate`: rules involving π or radicals, evaluated with sympy to a requested precision.
- `mesh`: combinatorial polyhedra, the five Platonic meshes and the Euler characteristic.
- `oracle`: Simpson slab integration of cross-section profiles.
- `codec`: the JSON shape of descriptors and the `volume_of` dispatcher.

Rules that avoid π and radicals stay in the exact kernel, so a tablet replay and its closed-form counterpart agree to the last digit.
"""
# ruff: noqa
from .elements import *
from .functional import *
from .approximate import *
from .mesh import *
from .oracle import *
from .codec import *
