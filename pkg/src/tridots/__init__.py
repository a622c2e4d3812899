"""tridots: exact maxima for non-attacking dots on triangular boards.

The package pins down N(n), the largest number of dots placeable on the
size-n triangular board with at most one dot per row, column and standard
diagonal, three independent ways:

* an exhaustive backtracking search (exact_solver),
* an explicit placement giving the lower bound (construction),
* a closed-form dual LP certificate giving the matching upper bound
  (dual_certificate), checked in exact rational arithmetic.

An exact simplex solver (rational_simplex) computes the LP relaxation
optimum with zero rounding error, and closed_forms carries the target
values both bounds hit.  Everything is exposed over HTTP by
tridots.service and on the command line by the tridots CLI.
"""

__version__ = "0.1.0"

from .closed_forms import lpf, nf
from .construction import Placement, build_placement, validate_placement
from .dual_certificate import (
    DualCertificate,
    build_certificate,
    certificate_objective,
    upper_bound,
    verify_feasible,
)
from .exact_solver import count_optima, max_dots
from .geometry import Cell, LineIndices, all_cells, line_indices
from .lp_model import LpProblem, LpSolution, build_dual, build_primal, export_lp_text
from .rational_simplex import lp_value, solve

__all__ = [
    "__version__",
    "Cell",
    "DualCertificate",
    "LineIndices",
    "LpProblem",
    "LpSolution",
    "Placement",
    "all_cells",
    "build_certificate",
    "build_dual",
    "build_placement",
    "build_primal",
    "certificate_objective",
    "count_optima",
    "export_lp_text",
    "line_indices",
    "lp_value",
    "lpf",
    "max_dots",
    "nf",
    "solve",
    "upper_bound",
    "validate_placement",
    "verify_feasible",
]
