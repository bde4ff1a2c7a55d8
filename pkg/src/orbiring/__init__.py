"""Inertial and Chen-Ruan cohomology rings of linear circle actions.

Computes sector products for diagonal circle representations (symplectic and
hyperkahler flavours), their rational Chen-Ruan quotient rings for weighted
projective and hyperprojective spaces, and invariants that tell such rings
apart.
"""
from .comparator import (DistinguishResult, Fingerprint, check_homotopy_theorem, distinguish,
                         fingerprint, rep_homotopy_equivalent)
from .errors import (ClosedFormInapplicable, DegenerateWeights, OrbiringError, OrderMismatch,
                     PositivityRequired)
from .inertial import (InertialElement, InertialPresentation, ObstructionData, ProductMonomial,
                       inertial_presentation, inertial_product, obstruction_data_oracle,
                       sector_unit_product, sector_unit_product_closed_form)
from .kernel import UPoly
from .quotient import (FiniteGradedAlgebra, conjectural_integral_algebra, cr_algebra,
                       hermite_normal_form, integer_kernel, lattice_maps,
                       multivariable_presentation)
from .sectors import CircleWeightSystem, Mode, Sector, logweight

__all__ = [
    "CircleWeightSystem", "ClosedFormInapplicable", "DegenerateWeights", "DistinguishResult",
    "FiniteGradedAlgebra", "Fingerprint", "InertialElement", "InertialPresentation", "Mode",
    "ObstructionData", "OrbiringError", "OrderMismatch", "PositivityRequired", "ProductMonomial",
    "Sector", "UPoly", "check_homotopy_theorem", "conjectural_integral_algebra", "cr_algebra",
    "distinguish", "fingerprint", "hermite_normal_form", "inertial_presentation",
    "inertial_product", "integer_kernel", "lattice_maps", "logweight",
    "multivariable_presentation", "obstruction_data_oracle", "rep_homotopy_equivalent",
    "sector_unit_product", "sector_unit_product_closed_form",
]
__version__ = "0.1.0"
