from .multipoly import GENERATORS, MultiPoly, Rational, det3, partial_derivative, poly_arith
from .ratfunc import (INFINITY, RationalFunction1V, VARIABLE_TAGS, rf_compose, rf_derivative, rf_difference,
                      rf_divisor, rf_evaluate, rf_evaluate_numeric, rf_expansion_at_infinity, rf_normalize,
                      rf_order_at, symbol_for)
