#!/usr/bin/env python3
"""
Tests de l'analyse perturbative
Dénombrements, seuils, récurrences de suppression et paramètre d'ordre
"""

import sys
from pathlib import Path

import numpy as np

# Add project root to path
sys.path.insert(0, str(Path(__file__).parent))

from qcch.errors import CapExceededError, InputError
from qcch.kato_engine import PerturbationSpec
from qcch.pauli_algebra import apply_left, parse_pauli, paulis_of_weight
from qcch.perturbation_analysis import (
    PRESET_COEFFICIENTS,
    QUADRATIC_COEFFICIENT,
    bound_recursion,
    classical_failure_recursion,
    code_state,
    correctable_transversal,
    count_identity_processes,
    count_leakage_channel,
    count_report,
    count_same_error_processes,
    effective_coupling_bound,
    leakage_channel_syndrome,
    order_parameter,
    order_parameter_expectation,
    second_order_shift,
    solve_threshold,
    suppression_curve,
    syndrome_projector,
    threshold,
    threshold_coefficients,
)
from qcch.stabilizer_codes import five_qubit_code, nine_qubit_subsystem_code, syndrome, trivial_code


def test_1_counts():
    """Test 1: Processus identité, même-erreur et canal de fuite"""
    print("=" * 70)
    print("TEST 1: Dénombrements")
    print("=" * 70)

    five = count_report(five_qubit_code())
    assert five.same_error_processes == 15
    assert five.identity_processes == 15
    assert five.stabilizer_processes == 15
    assert five.gauge_processes == 0
    assert five.leakage_enumerated == 12
    assert five.leakage_subspace_count == 12
    assert five.leakage_syndrome is not None
    print(f"✅ five-qubit: {five.to_dict()}")

    nine = count_report(nine_qubit_subsystem_code())
    assert nine.same_error_processes == 27
    assert nine.identity_processes == 63
    assert nine.stabilizer_processes == 27
    assert nine.gauge_processes == 36
    assert nine.leakage_enumerated == 44
    print(f"✅ nine-qubit: identité 63 (jauge {nine.gauge_processes}), fuite 44")

    trivial = trivial_code(3)
    assert count_same_error_processes(trivial) == 9
    assert count_identity_processes(trivial) == 9
    assert count_leakage_channel(trivial) == 0
    assert leakage_channel_syndrome(trivial) is None
    print("✅ Code trivial: aucune fuite")


def test_2_thresholds():
    """Test 2: γ* des presets et note d'erratum"""
    print("\n" + "=" * 70)
    print("TEST 2: Seuils")
    print("=" * 70)

    assert QUADRATIC_COEFFICIENT == 216000
    assert threshold_coefficients(five_qubit_code()) == PRESET_COEFFICIENTS["five-qubit"]
    assert threshold_coefficients(nine_qubit_subsystem_code()) == PRESET_COEFFICIENTS["nine-qubit"]

    five = threshold("five-qubit")
    assert abs(five.gamma_star - 0.0020901) < 1e-6, five.gamma_star
    assert abs(five.residual) < 1e-12
    assert five.erratum and "144000" in five.erratum
    print(f"✅ five-qubit γ* = {five.gamma_star:.7f}")

    nine = threshold("nine-qubit")
    assert abs(nine.gamma_star - 0.0019936) < 1e-6, nine.gamma_star
    assert nine.erratum is None
    print(f"✅ nine-qubit γ* = {nine.gamma_star:.7f}")

    counted = threshold(code=five_qubit_code(), J=2.0)
    assert counted.gamma_star == five.gamma_star
    assert counted.x_star == 2.0 * five.gamma_star

    custom = threshold(c1=10.0, c2=0.0)
    assert abs(custom.gamma_star - 0.1) < 1e-15
    assert custom.code_name == "custom"
    for c1, c2 in [(-1.0, 1.0), (0.0, 0.0)]:
        try:
            solve_threshold(c1, c2)
        except ValueError:
            print(f"✅ ({c1}, {c2}) rejeté")
        else:
            raise AssertionError("ValueError attendu")


def test_3_fixed_point_and_recursions():
    """Test 3: x* point fixe, suppression doublement exponentielle"""
    print("\n" + "=" * 70)
    print("TEST 3: Récurrences")
    print("=" * 70)

    c1, c2 = PRESET_COEFFICIENTS["five-qubit"]
    J = 1.5
    report = threshold("five-qubit", J=J)
    x_star = report.x_star
    assert abs(effective_coupling_bound(x_star, c1, c2, J) - x_star) < 1e-12 * x_star

    below = bound_recursion(0.5 * x_star, c1, c2, 4, J)
    assert all(b < a for a, b in zip(below, below[1:])), below
    above = bound_recursion(1.2 * x_star, c1, c2, 3, J)
    assert all(b > a for a, b in zip(above, above[1:])), above
    print("✅ Décroissance sous x*, croissance au-dessus")

    curve = suppression_curve(0.5 * x_star, x_star, 4)
    assert len(curve) == 5
    for r, value in enumerate(curve):
        assert abs(value - x_star * 0.5 ** (2 ** r)) <= 1e-15 * x_star
    assert suppression_curve(x_star, x_star, 3) == [x_star] * 4
    assert suppression_curve(0.0, x_star, 2) == [0.0, 0.0, 0.0]
    print(f"✅ Courbe {['%.2e' % v for v in curve]}")

    assert abs(classical_failure_recursion(1e-3, 1e-2, 1, 2) - 1e-2 * 0.1 ** 4) < 1e-18
    assert classical_failure_recursion(1e-2, 1e-2, 1, 5) == 1e-2
    for call in (lambda: suppression_curve(-1.0, x_star, 2),
                 lambda: classical_failure_recursion(0.0, 1e-2, 1, 2)):
        try:
            call()
        except ValueError:
            pass
        else:
            raise AssertionError("ValueError attendu")

    for bad_star in (0.0, -x_star):
        try:
            suppression_curve(0.5 * x_star, bad_star, 2)
        except InputError:
            print(f"✅ x* = {bad_star:g} rejeté")
        else:
            raise AssertionError("InputError attendu")


def test_4_second_order_shift():
    """Test 4: Décalage du second ordre -Σ λ²/(J m_Q)"""
    print("\n" + "=" * 70)
    print("TEST 4: Décalage du second ordre")
    print("=" * 70)

    code = five_qubit_code()
    expected = -(4 / 1 + 6 / 2 + 4 / 3 + 1 / 4)
    assert abs(second_order_shift(code, 1.0, PerturbationSpec.uniform(5, 1e-3)) - expected) < 1e-12
    assert abs(second_order_shift(code, 2.0, PerturbationSpec.uniform(5, 1e-3)) - expected / 2) < 1e-12

    spec = PerturbationSpec.single(5, 0, "X", 1e-3)
    m = syndrome(code, parse_pauli("XIIII")).weight
    assert second_order_shift(code, 1.0, spec) == -1.0 / m
    assert second_order_shift(code, 1.0, PerturbationSpec.zero(5)) == 0.0
    print(f"✅ Décalage uniforme {expected:.6f}")


def test_5_order_parameter():
    """Test 5: <D ρ D†> = 1 pour les erreurs corrigibles, 0 pour un logique"""
    print("\n" + "=" * 70)
    print("TEST 5: Paramètre d'ordre")
    print("=" * 70)

    code = five_qubit_code()
    table = correctable_transversal(code, 1)
    assert len(table) == 16
    assert table[0].is_identity

    total = sum(syndrome_projector(code, bits) for bits in range(16))
    assert np.allclose(total, np.eye(32))

    D = order_parameter(code, t=1)
    phi = code_state(code)
    assert abs(np.linalg.norm(phi) - 1.0) < 1e-12
    assert np.allclose(syndrome_projector(code, 0) @ phi, phi)

    rho0 = np.outer(phi, phi.conj())
    assert abs(order_parameter_expectation(D, rho0, phi) - 1.0) < 1e-12
    for error in paulis_of_weight(5, 1):
        damaged = apply_left(error, phi[:, None])[:, 0]
        rho = np.outer(damaged, damaged.conj())
        value = order_parameter_expectation(D, rho, phi)
        assert abs(value - 1.0) < 1e-12, (error.label, value)
    print("✅ 15 erreurs de poids 1 ramenées dans le code")

    flipped = code_state(code, logical_bit=1)
    assert abs(np.vdot(phi, flipped)) < 1e-12
    rho = np.outer(flipped, flipped.conj())
    assert abs(order_parameter_expectation(D, rho, phi)) < 1e-12

    # poids 2 sur un code parfait: la correction complète un logique, |0̄> survit seulement à Z̄
    values = []
    for error in paulis_of_weight(5, 2):
        damaged = apply_left(error, phi[:, None])[:, 0]
        rho = np.outer(damaged, damaged.conj())
        values.append(order_parameter_expectation(D, rho, phi))
    assert all(min(abs(v), abs(v - 1.0)) < 1e-12 for v in values)
    assert any(abs(v) < 1e-12 for v in values)
    print(f"✅ Logique: paramètre d'ordre nul; poids 2: {sum(v < 0.5 for v in values)}/90 à 0")

    try:
        order_parameter(code, max_qubits=4)
    except CapExceededError:
        print("✅ Plafond dense respecté")
    else:
        raise AssertionError("CapExceededError attendu")


TESTS = [
    test_1_counts,
    test_2_thresholds,
    test_3_fixed_point_and_recursions,
    test_4_second_order_shift,
    test_5_order_parameter,
]


def main():
    results = {}
    for test in TESTS:
        try:
            test()
            results[test.__name__] = True
        except AssertionError as e:
            print(f"\n❌ {test.__name__} failed: {e}")
            results[test.__name__] = False

    # Résumé
    print("\n" + "=" * 70)
    print("RÉSUMÉ DES TESTS")
    print("=" * 70)
    for test_name, result in results.items():
        status = "✅ PASS" if result else "❌ FAIL"
        print(f"{test_name}: {status}")

    total_pass = sum(results.values())
    print(f"\nRésultat: {total_pass}/{len(results)} tests passés")
    return 0 if total_pass == len(results) else 1


if __name__ == "__main__":
    sys.exit(main())
