"""Suzuki groups Sz(q), the ovoid they act on, and its two 2-design families.

The package constructs everything from scratch over GF(q) with
q = 2^(2n+1) >= 8 and re-verifies the structural claims by brute force:
design parameters, pair tallies, orbit sizes, stabilizers, transitivity and
ovoid geometry.  See the cli module (or the szovoid console script) for the
command-line surface.
"""

from .action import GeneratorSet, closure, generator_set, ordered_pair_orbit, \
    point_orbit, set_orbit, setwise_stabilizer, stabilizer_order, to_perm
from .designs import Design, DesignParams, build_design, expected_params, \
    pair_coverage, verify_2design, verify_claims, verify_ovoid_geometry
from .errors import VerificationError
from .gf2m import DEFAULT_POLYS, GF2m, is_irreducible
from .suzuki import INFINITY, Ovoid, build_ovoid, gen_m, gen_s, gen_tau, \
    k_orbits, point_p, subgroup, verify_generator_coverage
from .verify import VerificationRun, run_suite

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_POLYS", "Design", "DesignParams", "GF2m", "GeneratorSet",
    "INFINITY", "Ovoid", "VerificationError", "VerificationRun",
    "build_design", "build_ovoid", "closure", "expected_params",
    "gen_m", "gen_s", "gen_tau", "generator_set", "is_irreducible",
    "k_orbits", "ordered_pair_orbit", "pair_coverage", "point_orbit",
    "point_p", "run_suite", "set_orbit", "setwise_stabilizer",
    "stabilizer_order", "subgroup", "to_perm", "verify_2design",
    "verify_claims", "verify_generator_coverage", "verify_ovoid_geometry",
]
