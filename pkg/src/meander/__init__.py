"""Phase-portrait engine for the planar weak-resonance field.

The model is z' = eps*z + z*A(|z|^2) + B*conj(z)^(n-1) with n-fold
rotational symmetry.  The package computes and classifies its equilibrium
structure (origin, peripheral rings, nodes at infinity), integrates orbits
and separatrices, and reports the ornamental patterns the field draws:
centroids, n-cycles and stars, flower rings, spider-nets.
"""

from .field import (
    CartPoint,
    CartVelocity,
    ModelParams,
    NotNormalizedError,
    PolarPoint,
    PolarVelocity,
    dH_dt,
    divergence,
    eval_cartesian,
    eval_polar,
    hamiltonian,
    is_hamiltonian,
    normalize_rotation,
)
from .equilibria import (
    Equilibrium,
    IllConditionedRootsError,
    RadialPolynomial,
    ZeroPolynomialError,
    build_radial_polynomials,
    classify,
    descartes_bound,
    origin_analysis,
    peripheral_equilibria,
    positive_roots,
    quasi_equilibria,
    radial_limit_cycles,
)
from .asymptotics import DegenerateEquatorError, EquatorNode, equator_equilibria, spider_net_possible
from .integrator import (
    CaptureBall,
    IntegrateOptions,
    Orbit,
    SeparatrixSet,
    destination_census,
    integrate_orbit,
    trace_separatrices,
)
from .patterns import (
    DegeneratePortraitError,
    PatternReport,
    Portrait,
    PortraitOptions,
    boundary_c_threshold,
    build_portrait,
    classify_patterns,
    regime,
)
from .portrait_io import RenderStyle, portrait_document, to_json, to_svg
from .reports import analyze_params, ring_bound, root_bound, scan_1d, scan_2d

__version__ = "0.1.0"
