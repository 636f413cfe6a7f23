from .base import output, ordered_iteritems, debug_on_error, Struct
from .errors import (MPMIError, InvariantViolationError, StateParseError,
                     UsageError)
from .ioutils import (ensure_path, edit_filename, save_options, load_state,
                      save_state, loads_state, dumps_state, write_csv)
from .parsing import parse_as_list, parse_as_dict
from .states import (SystemShape, DensityOperator, from_pure, partial_trace,
                     trace_out, marginals, tensor, ghz, w3, bell,
                     wghz_mixture, product_bell, classical_chi, random_pure,
                     random_mixed, random_product)
from .correlations import (von_neumann_entropy, relative_entropy,
                           mutual_information, retc, marginal_mi_sum,
                           marginal_entropy_sum, pure_distribution_rhs,
                           residual_correlation, closest_product_state,
                           decomposition_identity_gap, correlation_profile)
from .audit import make_tolerances, make_ensemble_config, run_ensemble
from .timing import get_timestamp, Timer
from .version import __version__
