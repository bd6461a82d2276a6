"""Generalized Gabidulin codes over cyclic Galois extensions."""

from .codes import GabidulinCode, code_new
from .decoding import (
    DecodeResult,
    DecodingFailure,
    LinePattern,
    NetworkPattern,
    decode,
    decode_gauss,
    decode_line_erasures,
    decode_network_erasures,
    decode_wb,
    reconstruct_wb,
    term_rank_cover,
)
from .estimator import GabidulinDecoder, GabidulinEncoder
from .fields import (
    QQ,
    CyclicAutomorphism,
    ExtensionField,
    FieldElement,
    PrimeField,
    automorphism_make,
    cyclotomic_field,
    finite_field,
    frobenius,
    k_rank,
    tower_extend,
)
from .rank_metric import rank_distance, weight
from .residue import (
    LiftAlphabet,
    ResidueContext,
    find_inert_prime,
    make_residue_context,
    reduce_word,
    residue_decode_and_lift,
    size_of,
)
from .skew import (
    HdimViolation,
    OpCounter,
    SkewPoly,
    annihilator,
    annihilator_interpolator,
    df_annihilator_interpolator,
    interpolator,
    root_space_dim,
    sp_add,
    sp_divide,
    sp_eval,
    sp_mul,
)

__version__ = "0.1.0"
