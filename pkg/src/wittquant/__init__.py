"""Exact Drinfeld-twist quantizations of Witt-type Lie algebras.

The package constructs, over exact coefficient rings, the twist-deformed
Hopf structures on U(W) in characteristic 0 and on the restricted enveloping
algebra of the Jacobson-Witt algebra W(n;1) in characteristic p, and ships an
executable verification suite for the identities these constructions rest on.
"""

from .liealg import (
    BasisDeriv,
    JacobsonWitt,
    LieElement,
    RMatrixData,
    WittAlgebra,
    WPlusAlgebra,
    bracket_jw,
    bracket_wplus,
    bracket_witt,
    p_power_basis,
    pairing,
    reduce_wplus_to_jw,
)
from .rings import QQ, TPoly, binom_int, gf, multi_binom_mod_p, t_quotient, t_series, tpoly_mul
from .twist import (
    QuantizedHopf,
    TwistCoefficients,
    TwistElement,
    TwistorPair,
    build_twist,
    char0_general,
    conjugation_oracle,
    integral_basic,
    integral_eta,
    modular,
    modular_unrestricted,
    one_minus_et_power,
    quantized_antipode,
    quantized_coproduct,
)
from .uea import (
    EnvelopingAlgebra,
    TensorElement,
    UEAElement,
    ad_divided_power,
    antipode0_counit0,
    coproduct0,
    factorial_element,
    pbw_normalize,
    tensor_mul,
    uea_mul,
)
from .grammar import ElementSyntaxError, format_element, parse_element
from .verify import (
    Char0Config,
    CheckReport,
    CheckResult,
    ModularConfig,
    check_commutation_suite,
    check_dimensions_radford,
    check_factorial_identities,
    check_hopf_axioms,
    check_modular_reduction,
    check_restricted_structure,
    check_twist_laws,
    run_suites,
)

__version__ = "0.1.0"
