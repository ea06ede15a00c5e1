from .point import SpherePoint
from .dynamics import (AnalyticPassport, PreimageNode, analytic_passport, critical_containment_check,
                       critical_containment_suite, critical_points_of_iterate, eval_H, eval_iterate, fiber_degrees,
                       forward_orbit, iterated_preimages, solve_preimage, sorted_leaves, symbolic_iterate)
from .quartic import quartic_factor, quartic_identity_check
from .trace import INTERVALS, Polyline, TraceResult, trace_preimage_curves
