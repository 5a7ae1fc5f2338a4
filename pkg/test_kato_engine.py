#!/usr/bin/env python3
"""
Tests du moteur de Kato
Projecteurs de niveau, sommes de compositions, annulation du premier ordre,
proportionnalité du second ordre et comparaison à la diagonalisation exacte
"""

import sys
from pathlib import Path

import numpy as np
import scipy.linalg

# Add project root to path
sys.path.insert(0, str(Path(__file__).parent))

from qcch.code_hamiltonian import (
    CodeHamiltonian,
    HamiltonianStructure,
    HamiltonianTerm,
    build_concatenated,
    build_flat,
    to_dense,
)
from qcch.errors import CapExceededError, DimensionMismatchError, DivergenceError
from qcch.kato_engine import (
    PerturbationSpec,
    build_levels,
    composition_sum,
    compositions,
    effective_hamiltonian,
    kato_term,
    operator_norm,
    projector_term,
    projector_truncation_bound,
    series_eigenvalues,
    series_term_count,
    truncation_bound,
)
from qcch.pauli_algebra import parse_pauli, single_qubit_paulis
from qcch.perturbation_analysis import second_order_shift
from qcch.stabilizer_codes import five_qubit_code, nine_qubit_subsystem_code, syndrome

# arrondi flottant en dessous duquel la borne de troncature n'est plus mesurable
FLOAT_FLOOR = 1e-12


def test_1_level_projectors():
    """Test 1: Projecteurs de niveau exacts"""
    print("=" * 70)
    print("TEST 1: Projecteurs de niveau")
    print("=" * 70)

    h = build_flat(five_qubit_code(), J=1.0)
    decomp = build_levels(h)
    assert decomp.energies == [-2.0, -1.0, 0.0, 1.0, 2.0]
    assert [lvl.rank for lvl in decomp.levels] == [2, 8, 12, 8, 2]

    total = sum(lvl.projector for lvl in decomp.levels)
    assert np.allclose(total, np.eye(32))
    for i, a in enumerate(decomp.levels):
        assert np.allclose(a.projector @ a.projector, a.projector)
        for b in decomp.levels[i + 1:]:
            assert np.allclose(a.projector @ b.projector, 0)

    H0 = to_dense(h)
    for i, lvl in enumerate(decomp.levels):
        assert np.allclose(H0 @ lvl.projector, lvl.energy * lvl.projector)
        # G^(1) (H0 - E_i) = I - Π_i
        G1 = decomp.resolvent_power(i, 1)
        assert np.allclose(G1 @ (H0 - lvl.energy * np.eye(32)), np.eye(32) - lvl.projector)
        assert decomp.gap(i) == 1.0
    assert np.allclose(decomp.resolvent_power(0, 0), -decomp.projector(0))
    assert decomp.level_of_pattern(0) == 0
    print("✅ Π_i orthogonaux, complets, résolvantes cohérentes")


def test_2_compositions():
    """Test 2: Nombre de termes C(2m-1, m) et sommes DP == explicites"""
    print("\n" + "=" * 70)
    print("TEST 2: Compositions")
    print("=" * 70)

    for m in range(1, 7):
        assert len(list(compositions(m - 1, m + 1))) == series_term_count(m)
    assert list(compositions(1, 3)) == [(0, 0, 1), (0, 1, 0), (1, 0, 0)]
    assert series_term_count(2) == 3 and series_term_count(3) == 10

    h = build_flat(five_qubit_code(), J=1.0)
    decomp = build_levels(h)
    V = PerturbationSpec.random(5, 1.0, seed=3).assemble()
    for level in (0, 2):
        for total, parts in [(0, 2), (1, 3), (2, 4), (3, 4), (3, 5)]:
            dp = composition_sum(decomp, level, V, total, parts, method="dp")
            explicit = composition_sum(decomp, level, V, total, parts, method="explicit")
            threaded = composition_sum(decomp, level, V, total, parts, method="explicit", threads=3)
            assert np.allclose(dp, explicit, atol=1e-12)
            assert np.allclose(explicit, threaded, atol=1e-14)
    print("✅ DP, explicite et explicite parallèle identiques")


def test_3_first_order_vanishes():
    """Test 3: ||A_0^(1)|| < 1e-12 pour 100 perturbations aléatoires"""
    print("\n" + "=" * 70)
    print("TEST 3: Annulation du premier ordre")
    print("=" * 70)

    h = build_flat(five_qubit_code(), J=1.0)
    decomp = build_levels(h)
    rng = np.random.default_rng(2024)
    worst = 0.0
    for _ in range(100):
        spec = PerturbationSpec.random(5, 1e-3, rng=rng)
        a1 = kato_term(decomp, 0, spec.assemble(), 1)
        worst = max(worst, operator_norm(a1))
    assert worst < 1e-12, worst
    print(f"✅ max ||A_0^(1)|| = {worst:.2e}")

    report = effective_hamiltonian(h, PerturbationSpec.random(5, 1e-3, seed=1), order=1, decomp=decomp)
    assert report.first_order_vanishes


def test_4_second_order_proportional():
    """Test 4: A_0^(2) ∝ Π_0, coefficient = -Σ 1/(J m_Q)"""
    print("\n" + "=" * 70)
    print("TEST 4: Second ordre")
    print("=" * 70)

    code = five_qubit_code()
    for J in (1.0, 2.5):
        h = build_flat(code, J=J)
        spec = PerturbationSpec.uniform(5, 1e-3)
        report = effective_hamiltonian(h, spec, order=2)
        check = report.proportionality[1]
        assert check.order == 2
        assert check.proportional, check.residual
        oracle = sum(1.0 / (J * syndrome(code, q).weight) for q in single_qubit_paulis(5))
        assert abs(report.second_order_coefficient + oracle) < 1e-10
        assert abs(report.second_order_coefficient - second_order_shift(code, J, spec)) < 1e-10
        assert abs(report.second_order_coefficient) <= 15.0 / J
        print(f"✅ J={J}: b0 = {report.second_order_coefficient:.10f} (oracle -{oracle:.10f})")

    # aucune composante logique au second ordre (distance 3)
    for name in "XYZ":
        assert report.logical_norms[name] < 1e-12, (name, report.logical_norms[name])
    assert report.logical_norms["I"] > 0
    # le niveau 0 est un seul motif: W ne relie Π_0 qu'à des motifs atteints par une ou deux erreurs
    assert 0 in report.syndrome_norms


def test_5_series_matches_exact_spectrum():
    """Test 5: Ordre 6 vs diagonalisation exacte, dans la borne de troncature"""
    print("\n" + "=" * 70)
    print("TEST 5: Série vs spectre exact")
    print("=" * 70)

    h = build_flat(five_qubit_code(), J=1.0)
    decomp = build_levels(h)
    H0 = to_dense(h)
    for gamma in (1e-4, 1e-3):
        spec = PerturbationSpec.uniform(5, gamma)
        exact = np.linalg.eigvalsh(H0 + spec.x * spec.assemble())
        series = []
        bound = 0.0
        for level in range(len(decomp.levels)):
            report = effective_hamiltonian(h, spec, level=level, order=6, decomp=decomp)
            series.extend(series_eigenvalues(report, decomp))
            bound = max(bound, report.truncation_bound)
        series = np.sort(np.array(series))
        assert len(series) == 32
        error = float(np.max(np.abs(series - exact)))
        assert error <= bound + FLOAT_FLOOR, (gamma, error, bound)
        print(f"✅ γ={gamma:g}: erreur {error:.2e} <= borne {bound:.2e}")


def test_6_bound_random_trials():
    """Test 6: La borne de troncature tient sur 100 tirages"""
    print("\n" + "=" * 70)
    print("TEST 6: Borne de troncature aléatoire")
    print("=" * 70)

    h = build_flat(five_qubit_code(), J=1.0)
    decomp = build_levels(h)
    H0 = to_dense(h)
    rng = np.random.default_rng(99)
    for trial in range(100):
        x = float(rng.uniform(1e-4, 5e-3))
        order = int(rng.integers(1, 5))
        spec = PerturbationSpec.random(5, x, rng=rng)
        report = effective_hamiltonian(h, spec, level=0, order=order, decomp=decomp)
        exact = np.linalg.eigvalsh(H0 + spec.x * spec.assemble())[:2]
        approx = series_eigenvalues(report, decomp)
        error = float(np.max(np.abs(approx - exact)))
        assert error <= report.truncation_bound + FLOAT_FLOOR, (trial, error, report.truncation_bound)
    print("✅ 100 tirages sous la borne")


def test_7_truncation_bounds():
    """Test 7: Branches de la borne et divergence"""
    print("\n" + "=" * 70)
    print("TEST 7: Bornes")
    print("=" * 70)

    assert abs(truncation_bound(1.0, 0.1, 1.0, 2) - 0.4 ** 3) < 1e-15
    assert abs(truncation_bound(1.0, 0.2, 1.0, 2) - 0.5 * 0.8 ** 3 / 0.2) < 1e-12
    assert truncation_bound(1.0, 0.0, 1.0, 2) == 0.0
    assert truncation_bound(float("inf"), 0.3, 1.0, 2) == 0.0
    assert abs(projector_truncation_bound(1.0, 0.1, 1.0, 2) - 2 * 0.4 ** 3) < 1e-15
    for call in (lambda: truncation_bound(1.0, 0.25, 1.0, 2),
                 lambda: projector_truncation_bound(1.0, 0.3, 1.0, 2)):
        try:
            call()
        except DivergenceError as exc:
            assert exc.q >= 1.0
        else:
            raise AssertionError("DivergenceError attendu")

    h = build_flat(five_qubit_code(), J=1.0)
    try:
        effective_hamiltonian(h, PerturbationSpec.uniform(5, 0.1), order=2)
    except DivergenceError as exc:
        print(f"✅ {exc}")
    else:
        raise AssertionError("DivergenceError attendu")


def test_8_zero_perturbation_and_caps():
    """Test 8: V = 0, plafonds et tailles"""
    print("\n" + "=" * 70)
    print("TEST 8: Cas limites")
    print("=" * 70)

    h = build_flat(five_qubit_code(), J=1.0)
    report = effective_hamiltonian(h, PerturbationSpec.zero(5), order=3)
    assert report.truncation_bound == 0.0
    assert report.convergence_ratio == 0.0
    assert report.first_order_vanishes
    assert all(operator_norm(a) == 0.0 for a in report.series_terms)
    assert np.allclose(report.effective, report.energy * build_levels(h).projector(0))
    print("✅ Rapport trivial pour V = 0")

    for call, error in [
        (lambda: effective_hamiltonian(h, PerturbationSpec.zero(5), order=9), CapExceededError),
        (lambda: effective_hamiltonian(build_concatenated(five_qubit_code(), 2),
                                       PerturbationSpec.zero(25)), CapExceededError),
        (lambda: effective_hamiltonian(h, PerturbationSpec.zero(4)), DimensionMismatchError),
        (lambda: PerturbationSpec(5, {}, -1.0), ValueError),
        (lambda: PerturbationSpec(5, {(7, "X"): 1.0}, 0.1), DimensionMismatchError),
    ]:
        try:
            call()
        except error:
            print(f"✅ {error.__name__}")
        else:
            raise AssertionError(f"{error.__name__} attendu")

    spec = PerturbationSpec.random(5, 0.01, seed=5)
    assert abs(spec.max_coefficient - 1.0) < 1e-15
    V = spec.assemble()
    assert np.allclose(V, V.conj().T)
    assert operator_norm(V) <= spec.norm_bound + 1e-12
    assert len(spec.terms()) == 15


def test_9_operator_norm():
    """Test 9: Itération de puissance == SVD"""
    print("\n" + "=" * 70)
    print("TEST 9: Norme d'opérateur")
    print("=" * 70)

    rng = np.random.default_rng(0)
    for _ in range(10):
        m = rng.standard_normal((16, 16)) + 1j * rng.standard_normal((16, 16))
        exact = np.linalg.norm(m, 2)
        assert abs(operator_norm(m) - exact) <= 1e-6 * exact
    assert operator_norm(np.zeros((4, 4))) == 0.0
    print("✅ Normes conformes à numpy")


def test_10_projector_series_and_gauge():
    """Test 10: B^(1) reproduit le projecteur exact; jauge au second ordre (9 qubits)"""
    print("\n" + "=" * 70)
    print("TEST 10: Projecteur perturbé et jauge")
    print("=" * 70)

    h = build_flat(five_qubit_code(), J=1.0)
    decomp = build_levels(h)
    spec = PerturbationSpec.uniform(5, 1e-4)
    V = spec.assemble()
    x = spec.x
    evals, evecs = np.linalg.eigh(to_dense(h) + x * V)
    exact_projector = evecs[:, :2] @ evecs[:, :2].conj().T
    zeroth = decomp.projector(0)
    first = zeroth + x * projector_term(decomp, 0, V, 1)
    second = first + x ** 2 * projector_term(decomp, 0, V, 2)
    err0 = operator_norm(exact_projector - zeroth)
    err1 = operator_norm(exact_projector - first)
    err2 = operator_norm(exact_projector - second)
    assert err1 < 0.05 * err0, (err0, err1)
    assert err2 < 0.05 * err1, (err1, err2)
    print(f"✅ Erreurs projecteur: {err0:.1e} > {err1:.1e} > {err2:.1e}")

    nine = build_flat(nine_qubit_subsystem_code(), J=1.0)
    report = effective_hamiltonian(nine, PerturbationSpec.uniform(9, 1e-3), order=2)
    assert report.gauge_nontrivial_norm is not None
    assert report.gauge_nontrivial_norm > 1e-9
    for name in "XYZ":
        assert report.logical_norms[name] < 1e-12
    print(f"✅ Composante de jauge non triviale {report.gauge_nontrivial_norm:.3e}")


def _two_level(gap: float) -> CodeHamiltonian:
    """H0 = -(Δ/2) Z sur un qubit: |0> à -Δ/2, |1> à +Δ/2"""
    return CodeHamiltonian(
        terms=(HamiltonianTerm(-gap / 2, parse_pauli("Z")),),
        J=gap,
        structure=HamiltonianStructure("flat", "two-level"),
        n_qubits=1,
    )


def test_11_two_level_closed_forms():
    """Test 11: A^(2) = -|v|²/Δ Π0 et B^(1) = -V/Δ sur un système à deux niveaux"""
    print("\n" + "=" * 70)
    print("TEST 11: Système à deux niveaux")
    print("=" * 70)

    for gap in (1.0, 2.5):
        decomp = build_levels(_two_level(gap))
        assert decomp.energies == [-gap / 2, gap / 2]
        pi0 = decomp.projector(0)
        assert np.allclose(pi0, np.diag([1.0, 0.0]))
        assert np.allclose(decomp.resolvent_power(0, 1), np.diag([0.0, 1.0 / gap]))

        v = 0.3 + 0.4j
        V = np.array([[0.0, v], [np.conj(v), 0.0]])
        assert np.allclose(kato_term(decomp, 0, V, 1), 0.0)
        assert np.allclose(kato_term(decomp, 0, V, 2), -abs(v) ** 2 / gap * pi0)
        # |ψ0(x)> = |0> - x v*/Δ |1>  =>  P0(x) = Π0 - x V/Δ + O(x²)
        assert np.allclose(projector_term(decomp, 0, V, 1), -V / gap)
        print(f"✅ Δ={gap:g}: A^(2) et B^(1) conformes aux formes closes")

    gap, x = 1.0, 1e-2
    h = _two_level(gap)
    decomp = build_levels(h)
    report = effective_hamiltonian(h, PerturbationSpec.single(1, 0, "X", x), level=0, order=2, decomp=decomp)
    assert abs(report.second_order_coefficient + 1.0 / gap) < 1e-12
    # valeur propre exacte de diag(0, Δ) + x σx, décalée de -Δ/2
    exact = (gap - np.sqrt(gap ** 2 + 4 * x ** 2)) / 2 - gap / 2
    approx = series_eigenvalues(report, decomp)[0]
    assert abs(approx - exact) <= 3 * x ** 4 / gap ** 3, (approx, exact)
    assert abs(approx - exact) <= report.truncation_bound
    print(f"✅ Valeur propre à O(x⁴): écart {abs(approx - exact):.1e}")


def test_12_projector_series_sum_to_identity():
    """Test 12: Σ_i P_i(x) = I sur tous les niveaux"""
    print("\n" + "=" * 70)
    print("TEST 12: Complétude des projecteurs perturbés")
    print("=" * 70)

    h = build_flat(five_qubit_code(), J=1.0)
    decomp = build_levels(h)
    for spec in (PerturbationSpec.uniform(5, 1e-3), PerturbationSpec.random(5, 5e-3, seed=3)):
        V = spec.assemble()
        total = np.zeros((32, 32), dtype=complex)
        for level in range(len(decomp.levels)):
            total = total + decomp.projector(level)
            for m in range(1, 4):
                total = total + spec.x ** m * projector_term(decomp, level, V, m)
        error = operator_norm(total - np.eye(32))
        assert error < 1e-9, error
        print(f"✅ x={spec.x:g}: ||Σ P_i(x) - I|| = {error:.1e}")


def test_13_projector_bound_against_exact():
    """Test 13: ||P_i - Π_i - Σ x^m B^(m)|| <= borne du projecteur (scipy.linalg.eigh)"""
    print("\n" + "=" * 70)
    print("TEST 13: Borne de troncature du projecteur")
    print("=" * 70)

    h = build_flat(five_qubit_code(), J=1.0)
    decomp = build_levels(h)
    H0 = to_dense(h)
    ranks = [lvl.rank for lvl in decomp.levels]
    for seed, x in [(1, 1e-3), (2, 2e-3), (4, 1e-3)]:
        spec = PerturbationSpec.random(5, x, seed=seed)
        V = spec.assemble()
        norm_v = operator_norm(V)
        _, vectors = scipy.linalg.eigh(H0 + x * V)
        for level in (0, 1):
            start = sum(ranks[:level])
            block = vectors[:, start:start + ranks[level]]
            exact = block @ block.conj().T
            series = decomp.projector(level).astype(complex)
            for p in range(1, 4):
                series = series + x ** p * projector_term(decomp, level, V, p)
                error = operator_norm(exact - series)
                bound = projector_truncation_bound(decomp.gap(level), x, norm_v, p)
                assert error <= bound + FLOAT_FLOOR, (seed, level, p, error, bound)
        print(f"✅ seed={seed}, x={x:g}: erreurs sous 2q^(p+1) pour p = 1..3")


def test_14_order_eight_matches_full_spectrum():
    """Test 14: Série d'ordre 8 sur tous les niveaux vs diagonalisation 32x32"""
    print("\n" + "=" * 70)
    print("TEST 14: Complétude à l'ordre 8")
    print("=" * 70)

    h = build_flat(five_qubit_code(), J=1.0)
    decomp = build_levels(h)
    H0 = to_dense(h)
    for seed, x in [(11, h.J / 100), (12, h.J / 200)]:
        spec = PerturbationSpec.random(5, x, seed=seed)
        exact = np.linalg.eigvalsh(H0 + x * spec.assemble())
        series = []
        bound = 0.0
        for level in range(len(decomp.levels)):
            report = effective_hamiltonian(h, spec, level=level, order=8, decomp=decomp)
            series.extend(series_eigenvalues(report, decomp))
            bound = max(bound, report.truncation_bound)
        series = np.sort(np.array(series))
        assert len(series) == 32
        error = float(np.max(np.abs(series - exact)))
        assert error <= bound + FLOAT_FLOOR, (seed, error, bound)
        print(f"✅ seed={seed}, x={x:g}: erreur {error:.2e} <= borne {bound:.2e}")


TESTS = [
    test_1_level_projectors,
    test_2_compositions,
    test_3_first_order_vanishes,
    test_4_second_order_proportional,
    test_5_series_matches_exact_spectrum,
    test_6_bound_random_trials,
    test_7_truncation_bounds,
    test_8_zero_perturbation_and_caps,
    test_9_operator_norm,
    test_10_projector_series_and_gauge,
    test_11_two_level_closed_forms,
    test_12_projector_series_sum_to_identity,
    test_13_projector_bound_against_exact,
    test_14_order_eight_matches_full_spectrum,
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
