"""Monogenity, conductors and power integral bases of the simplest cubic fields."""

from ._core import (
    CaseLabel,
    Check,
    ConductorData,
    FieldElement,
    MonogenityVerdict,
    PibCertificate,
    ThreeAdicCase,
    VerificationReport,
    analyze,
    check_certificate,
    check_negative,
    check_shanks_relations,
    ck_principal,
    coincidence_class,
    conductor,
    cube_root_exact,
    delta,
    element_discriminant,
    factor,
    field_monogenic,
    is_integral,
    is_prime,
    minimal_polynomial,
    monogenic_param_cube,
    monogenic_param_valuation,
    norm,
    power_integral_basis,
    reduce_param,
    reproduce_tables,
    scan,
    sigma,
    three_case,
    trace,
    vp,
)

__all__ = [name for name in dir() if not name.startswith("_")]
