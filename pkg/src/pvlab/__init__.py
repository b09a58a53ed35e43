"""pvlab: numerical experiments on Dirichlet character sums.

Exact character arithmetic, interval sums and their maxima, Gauss sums,
trapezoid smoothing windows and the sweeps that measure them.
"""
from .bounds import (
    EnergyCount,
    RatioRecord,
    burgess_complete_sum,
    c_constant,
    congruence_energy,
    long_sum_ratio,
    long_sum_ratios,
    theorem_check,
)
from .charsum import (
    IntervalSumRecord,
    PrefixWalk,
    gauss_expansion_check,
    gauss_sum,
    gauss_sum_table,
    max_interval_sum,
    partial_sum,
    prefix_walk,
    pv_constant,
)
from .dirichlet import (
    DirichletCharacter,
    character,
    character_table,
    enumerate_characters,
    legendre_character,
    primitive_characters,
)
from .errors import PvlabError
from .harness import SweepConfig, SweepReport, fit_l1_model, load_config, run_sweep, write_report
from .modarith import FactoredModulus, UnitGroupBasis, UnityValue, factorize, unit_group_basis
from .window import SpectrumSummary, TrapezoidWindow, l1_norm, make_window, pom_gap

__version__ = "0.1.0"
