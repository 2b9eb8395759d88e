"""Bayesian nonparametric estimation of discovery probabilities.

Estimators and credible intervals for the probability that the next
observation belongs to a species seen a given number of times, under a
two-parameter Poisson-Dirichlet prior, alongside the classical Good-Turing
family.
"""

from .estimators import (
    InsufficientSpectrum,
    InvalidTarget,
    OutOfRange,
    SmoothingRule,
    bnp_cumulative,
    bnp_discovery,
    bnp_discovery_via_identity,
    discovery_profile,
    expected_freq_count,
    expected_new_species,
    good_toulmin,
    good_turing,
    smooth_spectrum,
    smoothed_good_turing,
    sse,
)
from .intervals import (
    Infeasible,
    InvalidState,
    Unsupported,
    ZPosteriorSampler,
    asymptotic_estimate,
    credible_interval,
    exact_interval_new_species_based,
    exact_pmf_new_species,
    mean_Z,
    r_star,
    r_star_cum,
    sample_Z,
    sample_Z_posterior,
)
from .pyp import BoundaryFit, FitConfig, PdParams, eppf_loglik, fit_empirical_bayes, posterior_grid
from .records import CredibleInterval, DiscoveryEstimate
from .rng import make_rng
from .stable import SamplerStall, sample_positive_stable, sample_tilted_stable
from .summary import SampleSummary, from_counts, from_raw_tokens, from_spectrum, load_naegleria
from .zeta import UnknownSpecies, ZetaPopulation, true_discovery, zeta_sample

__version__ = "0.1.0"
