"""Galois-division multiplexing toolkit.

Spreading-sequence design over GF(p^m) / GI(p^m): finite-field
trigonometric carriers, Fourier/Hartley transforms, cyclotomic-coset
spectrum compression, the full mux/demux pipeline and its link metrics.
"""

from .cosets import (
    CosetEstimates,
    CosetPartition,
    LineFrame,
    compress_spectrum,
    coset_estimates,
    expand_spectrum,
    fourier_cosets,
    hartley_cosets,
    hartley_count_closed_form,
    irreducible_count,
    mobius,
    scheme_partition,
)
from .errors import (
    EvenCharacteristicError,
    FormulaInapplicableError,
    GdmError,
    InternalInconsistencyError,
    JNotEmbeddableError,
    KindMismatchError,
    LeaderCountMismatchError,
    NoSuchOrderError,
    NotBaseFieldError,
    NotCoprimeError,
    NotInvertibleError,
    NotPrimeError,
    SpecMismatchError,
)
from .fields import (
    FieldElement,
    FieldSpec,
    GaussianElement,
    element_order,
    find_element_of_order,
    is_prime,
    make_field,
    minus_one_is_qr,
)
from .mux import (
    GdmGain,
    LinkMetrics,
    MuxConfig,
    PipelineResult,
    UserFrame,
    bandwidth_compactness,
    demux,
    galois_modulate,
    gdm_gain,
    link_metrics,
    mux,
    shannon_feasible,
    shannon_max_compactness,
    shannon_min_snr,
    transmit_pipeline,
)
from .transforms import (
    FOURIER,
    HARTLEY,
    ConjugacyReport,
    SignalVector,
    Spectrum,
    ffft_forward,
    ffft_inverse,
    ffht_forward,
    ffht_inverse,
    hartley_sign,
    verify_conjugacy,
)
from .trig import (
    ABSTRACT,
    EMBEDDED,
    CarrierMatrix,
    OrthogonalityReport,
    TrigContext,
    carrier_matrix,
    embed_j,
    ff_cas,
    ff_cos,
    ff_sin,
    verify_orthogonality,
)
from .verify import PropertyResult, run_property_suite

__version__ = '0.1.0'
