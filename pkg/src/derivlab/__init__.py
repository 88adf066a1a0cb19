"""derivlab: a quadrature laboratory for weighted convolution algebras on
the half line, their dual modules, and the derivations between them.

The package discretizes the weighted integrable functions, their dual
space, and the weighted measures on a truncated grid, implements the
convolution product, the dual-module action, and the derivation operators
with kernel factor s/(t+s), and provides verdict engines that check the
operator-theoretic claims these objects satisfy (weak-star continuity
conditions and witnesses, range properties, compactness proxies) at desk
scale.
"""

from .algebra import (
    check_bai_convergence,
    convolve_l1,
    convolve_measure,
    module_action,
    slack,
)
from .analyzers import (
    EpsilonNet,
    compact_verdict,
    family_total_boundedness,
    greedy_epsilon_net,
    measure_U,
    net_covers_family,
    noncompact_witness_limit,
    noncompact_witness_step,
    range_c0_check,
    svd_decay,
    weakstar_condition_check,
    weakstar_counterexample_check,
)
from .catalog import CatalogEntry, build, get_entry, list_entries
from .config import DEFAULT_TOLERANCES, RunConfig, load_config, parse_config
from .derivations import (
    DerivationKernel,
    KernelFamily,
    NormProfilePoint,
    apply_D,
    apply_Dbar_measure,
    apply_T,
    deriv_delta,
    deriv_delta_norm_profile,
    derivation_identity_residual,
    kernel_family,
)
from .errors import (
    ConfigError,
    DerivlabError,
    DomainError,
    ExtrapolationError,
    GridMismatchError,
    HypothesisViolatedError,
    InvalidParamsError,
    SupportOverflowError,
    TailError,
    UnknownEntryError,
    WindowOverflowError,
)
from .report import AnalysisReport, dyadic_window_maxima, evidence
from .sampling import bump_fn, bump_l1, random_bump_pair, random_bump_params
from .spaces import (
    Grid,
    L1Element,
    LInfElement,
    MeasureElement,
    Tail,
    Weight,
    approx_identity,
    check_submultiplicative,
    indicator_l1,
    indicator_linf,
    is_c0_membership,
    is_l0inf,
    l1_norm,
    linf_norm,
    lower_integral_constant,
    measure_norm,
    pairing_c0_measure,
    pairing_l1_linf,
    weight_eval,
)

__version__ = "0.1.0"
