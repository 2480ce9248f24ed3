"""Ratio functions, exact coefficient ledger, certificates and scanners."""

from .certificates import eval_g2, eval_g3456, f7_lower_bound_check
from .conjecture import conjecture_scan, solve_p0
from .ledger import (
    RationalCoeff, coeff_a, coeff_b, coeff_c, coeff_d, coeff_u, coeff_v, coeff_w, seq_D, seq_g,
    seq_g1, theorem2_gap,
)
from .ratios import BoundConstants, best_constants, ratio_F, ratio_G, ratio_G1, ratio_R
from .scan import MonotonicityReport, monotonicity_scan
