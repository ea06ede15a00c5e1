from .cubic import CubicForm, hessian_matrix, hessian_of
from .identities import (commutation_check, derive_structure_constants, endpoint_invariant_check,
                         h_coordinate_suite, pencil_hessian_identity, verify_Hj_structure)
from .invariants import (InvariantValue, PencilParameter, automorphism_order, critical_fibers, critical_points,
                         hesse_J, hessian_h_map, hessian_j_map, htilde, htilde_map, j_hesse, j_lambda, j_of_M,
                         j_of_m, j_weierstrass)
