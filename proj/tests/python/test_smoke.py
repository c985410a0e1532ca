from fractions import Fraction

import simplecubic as sc


def test_conductor_and_factorization():
    data = sc.conductor(740)
    assert data.delta == 549829
    assert data.conductor == 1603
    assert data.conductor_factors == [(7, 1), (229, 1)]
    assert data.three_case == sc.ThreeAdicCase.V3_ZERO
    assert sc.factor(10296668263) == [(7, 3), (5479, 2)]
    assert sc.cube_root_exact(343) == 7
    assert sc.cube_root_exact(49) is None


def test_big_integers_cross_the_boundary():
    big = 2**127 - 1
    assert sc.is_prime(big)
    assert sc.reduce_param(-(10**30)) == 10**30 - 3


def test_field_arithmetic():
    theta = sc.FieldElement.theta(12)
    assert sc.trace(theta) == Fraction(12)
    assert sc.norm(theta) == 1
    gamma = sc.FieldElement(12, -1, 1, 0, 3)
    assert sc.is_integral(gamma)
    assert sc.element_discriminant(gamma) == 49
    assert sc.minimal_polynomial(gamma) == [-1, -4, -3, 1]
    assert theta * theta.inverse() == sc.FieldElement(12, 1)


def test_monogenity():
    v = sc.field_monogenic(3)
    assert v.field_monogenic and v.case_label == sc.CaseLabel.B and v.witness_t == 0
    cert = sc.power_integral_basis(54)
    assert (cert.m, cert.a, cert.disc) == (7, 4, 81)
    assert sc.check_certificate(cert).overall
    assert not sc.field_monogenic(21).field_monogenic
    assert sc.check_negative(21).overall
    assert sc.ck_principal(101471)


def test_analyze_and_scan():
    rec = sc.analyze(-4, verify=True)
    assert rec["normalized_t"] == 1
    assert rec["verification"]["passed"]
    rows = sc.scan(-1, 2000, jobs=2)
    case_c = [r["t"] for r in rows if r["case"] == "c"]
    assert len(case_c) == 253 and case_c[0] == 21 and case_c[-1] == 1992
    assert sc.reproduce_tables().overall
