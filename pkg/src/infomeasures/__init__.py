"""Bounded divergence measures and information-theoretic cost-benefit tools.

Everything is computed in bits. The package groups into four areas:
scalar measures over finite PMFs (``measures``), the cost-benefit ratio
of a processing step (``cost_benefit``), prefix codes and the n-1 bound
on realized coding cost (``coding``), and CSV sweeps comparing the
measures over parameter grids (``sweep``). The ``im`` console script
fronts all four.
"""

from .measures import (
    DIVERGENCE_KINDS,
    ELEMENT_KINDS,
    ClampPolicy,
    DivergenceSpec,
    Pmf,
    as_pmf,
    cross_entropy,
    d_new,
    d_new_g,
    d_new_gc,
    divergence,
    element,
    entropy,
    js_divergence,
    kl_divergence,
    max_entropy,
    minkowski,
)
from .cost_benefit import (
    BenefitBreakdown,
    CostBenefitInput,
    alphabet_compression,
    benefit_and_cbr,
    blend,
    potential_distortion_kl,
    potential_distortion_new,
)
from .coding import (
    CodeBook,
    CodingReport,
    avg_code_length,
    ce_upper_bound,
    huffman,
    kl_upper_bound,
    section2_pmf,
    simulate_transmission,
    uniform_q_bound,
    unary_code,
    worst_case_report,
)
from .sweep import (
    SweepRow,
    SweepSpec,
    column_names,
    default_spec,
    run_sweep,
    sweep_figure1,
    sweep_figure2,
    sweep_figure3,
    write_csv,
)

__version__ = "0.1.0"
