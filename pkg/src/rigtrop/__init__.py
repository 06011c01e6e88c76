"""Box-ball systems, rigged configurations and tropical shape formulas."""
from .boxball import asymptotic_solitons, energy_Ers, evolve_T1inf, evolve_Trs
from .crystals import combinatorial_R, energy_H, kashiwara, kashiwara_tensor
from .errors import *  # noqa: F401,F403
from .loopsym import LoopPolynomial, cylindric_loop_schur, elementary_e, loop_schur, tau_poly
from .paths import PathSpec, parse_path
from .rigged import RiggedConfiguration, phi, phi_inverse, rc_kashiwara
from .tableaux import CylindricShape, Partition, SkewShape, build_cylindric_shape
from .tropical import conjectured_shape, first_shape_theorem, lambda_shapes, trop_eval

__version__ = "0.1.0"
