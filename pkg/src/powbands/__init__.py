"""Solution sets of b^x = kx + b (mod q) and the limit points of b^(qp) mod qp / qp."""

from .decomp import UnitDecomposition, compose, decompose
from .modmath import euler_phi, is_prime, mod_inverse, mod_pow, multiplicative_order, units
from .primes import ProgressionSpec, first_n_primes, iter_primes, primes_in_ap
from .sampler import (
    SamplePoint,
    VerificationReport,
    figure_series,
    find_in_interval,
    predict_band,
    sample,
    verify_derived_set,
    verify_exact_law,
)
from .zsets import (
    Dichotomy,
    ModContext,
    SolutionSets,
    all_zsets,
    beta_k,
    classify_x,
    counts,
    dichotomy,
    make_context,
    zk_bruteforce,
    zk_structural,
)

__version__ = "0.1.0"
