"""Z-complementary pairs built directly from generalized Boolean functions."""

from .construct import (
    Permutation,
    SequencePair,
    Theorem1Params,
    claimed_zcz,
    gcp_pair,
    gdj_gbf,
    mate_pair,
    theorem1_gbf,
    theorem1_pair,
)
from .corr import (
    AacsProfile,
    CorrelationValue,
    aacf,
    aacs_profile,
    accf,
    is_zero,
    magnitude,
    zcz_width,
)
from .gbf import (
    GeneralizedBooleanFunction,
    Literal,
    PhaseSequence,
    Term,
    complement_all_vars,
    evaluate,
    to_sequence,
    truncate,
)
from .verify import (
    SearchResult,
    ZcpReport,
    exhaustive_search,
    magnitude_floor_check,
    ratio_table,
    verify_gcp,
    verify_mates,
    verify_zcp,
)

__version__ = "0.1.0"
