"""Continuous analogues of Young diagrams: exact coefficients, diagram
geometry, Bessel-series volumes, q/z-cardinalities, z-volumes and Monte
Carlo cross-checks."""

__version__ = "0.1.0"

from .errors import ContYoungError, DomainError, NumericError, RangeError, ResourceError
from .series import SeriesValue
from .polynomial import IntegerPolynomial, RationalPolynomial
from .diagrams import DIAMOND, DirectedPath, area, concat, dual, leq, path_new
from .volume import bessel_i, rho, vol_dn, vol_region
from .graded import q_factorial, young_qcard, z_cardinality
from .zvolume import d_coeff, mean_area, vol_z_d, vol_z_dn

__all__ = [
    "__version__",
    "ContYoungError",
    "DomainError",
    "NumericError",
    "RangeError",
    "ResourceError",
    "SeriesValue",
    "IntegerPolynomial",
    "RationalPolynomial",
    "DIAMOND",
    "DirectedPath",
    "area",
    "concat",
    "dual",
    "leq",
    "path_new",
    "bessel_i",
    "rho",
    "vol_dn",
    "vol_region",
    "q_factorial",
    "young_qcard",
    "z_cardinality",
    "d_coeff",
    "mean_area",
    "vol_z_d",
    "vol_z_dn",
]
