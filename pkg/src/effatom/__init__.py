"""effatom: algebraic effective-charge model of nonrelativistic atoms and ions.

Binding energies and per-subshell effective charges come from closed
screening formulas over hydrogen-like orbitals; on top of those the package
provides ground-state configuration search, partial ionization potentials,
electron densities, analytic X-ray scattering factors, and independent
quadrature oracles for the two-electron integrals the screening ansatz
approximates.
"""

from .asymptotic import (
    THOMAS_FERMI_COEFFICIENT,
    asymptotic_binding_coefficient,
    calibrate_beta,
    screening_integral_coefficient,
)
from .atom import (
    AtomModel,
    IonizationRecord,
    SearchSpec,
    aufbau_configuration,
    ground_state,
    ionization_potential,
    ip_table,
    make_atom,
)
from .errors import (
    CalibrationError,
    EffatomError,
    InfeasibleSearchError,
    InvalidConfigurationError,
    NumericalError,
    UnoccupiedSubshellError,
)
from .monopole import (
    MatrixElementRecord,
    approx_inter,
    approx_intra,
    calibrate_alpha,
    difference_grid,
    exact_monopole,
)
from .observables import (
    BOHR_ANGSTROM,
    DensityProfile,
    FormFactorCurve,
    density,
    density_profile,
    form_factor,
    form_factor_curve,
    inverse_power_derivative,
    rho_at_nucleus,
    subshell_form_factor,
)
from .orbitals import RadialOrbital, confluent_poly, radial_norm, radial_value
from .refdata import ReferenceDataset, hf_reference, ip_shells, reference_configuration
from .screening import (
    ALPHA_EXACT,
    BETA_DEFAULT,
    DEFAULT_PARAMS,
    HARTREE_EV,
    EffectiveChargeTable,
    EnergyBreakdown,
    ScreeningParams,
    binding_energy,
    effective_charge,
    effective_charge_table,
    kappa_inter,
    kappa_intra,
    total_energy,
)
from .subshells import Configuration, Subshell, madelung_order, parse_subshell, subshell

__version__ = "0.1.0"

__all__ = [
    "ALPHA_EXACT",
    "AtomModel",
    "BETA_DEFAULT",
    "BOHR_ANGSTROM",
    "CalibrationError",
    "Configuration",
    "DEFAULT_PARAMS",
    "DensityProfile",
    "EffatomError",
    "EffectiveChargeTable",
    "EnergyBreakdown",
    "FormFactorCurve",
    "HARTREE_EV",
    "InfeasibleSearchError",
    "InvalidConfigurationError",
    "IonizationRecord",
    "MatrixElementRecord",
    "NumericalError",
    "RadialOrbital",
    "ReferenceDataset",
    "ScreeningParams",
    "SearchSpec",
    "Subshell",
    "THOMAS_FERMI_COEFFICIENT",
    "UnoccupiedSubshellError",
    "approx_inter",
    "approx_intra",
    "asymptotic_binding_coefficient",
    "aufbau_configuration",
    "binding_energy",
    "calibrate_alpha",
    "calibrate_beta",
    "confluent_poly",
    "density",
    "density_profile",
    "difference_grid",
    "effective_charge",
    "effective_charge_table",
    "exact_monopole",
    "form_factor",
    "form_factor_curve",
    "ground_state",
    "hf_reference",
    "inverse_power_derivative",
    "ionization_potential",
    "ip_shells",
    "ip_table",
    "kappa_inter",
    "kappa_intra",
    "madelung_order",
    "make_atom",
    "parse_subshell",
    "radial_norm",
    "radial_value",
    "reference_configuration",
    "rho_at_nucleus",
    "screening_integral_coefficient",
    "subshell",
    "subshell_form_factor",
    "total_energy",
]
