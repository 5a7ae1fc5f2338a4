#!/usr/bin/env python3
"""
Tests de l'algèbre de Pauli
Produits et phases comparés aux matrices denses, commutation, format texte
"""

import sys
from itertools import product
from math import comb
from pathlib import Path

import numpy as np

# Add project root to path
sys.path.insert(0, str(Path(__file__).parent))

from qcch.errors import CapExceededError, DimensionMismatchError, PauliParseError
from qcch.pauli_algebra import (
    PauliOperator,
    apply_left,
    commutes,
    conjugate,
    embed,
    format_pauli,
    multiply,
    parse_pauli,
    paulis_of_weight,
    random_pauli,
    single_qubit_paulis,
    tensor,
    to_dense_matrix,
)


def test_1_parse_and_format():
    """Test 1: Parse / format avec préfixes de phase"""
    print("=" * 70)
    print("TEST 1: Parse et format")
    print("=" * 70)

    for text, phase in [("XZZXI", 0), ("+XY", 0), ("-IZ", 2), ("+iY", 1), ("-iXYZ", 3)]:
        op = parse_pauli(text)
        assert op.phase_exp == phase, f"{text}: phase {op.phase_exp} != {phase}"
        print(f"✅ {text!r} -> {format_pauli(op)!r}")

    assert format_pauli(parse_pauli("+XY")) == "XY"
    assert format_pauli(parse_pauli("-iXYZ")) == "-iXYZ"
    assert parse_pauli("IXI").axis(1) == "X"

    for bad in ["", "   ", "XQ", "xz", "i-X", "*X"]:
        try:
            parse_pauli(bad)
        except PauliParseError as exc:
            print(f"✅ {bad!r} rejeté: {exc}")
        else:
            raise AssertionError(f"{bad!r} aurait dû être rejeté")


def test_2_dense_convention():
    """Test 2: Y = iXZ avec phase_exp = 0"""
    print("\n" + "=" * 70)
    print("TEST 2: Convention de phase")
    print("=" * 70)

    X = np.array([[0, 1], [1, 0]], dtype=complex)
    Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
    Z = np.array([[1, 0], [0, -1]], dtype=complex)
    assert np.allclose(to_dense_matrix(parse_pauli("X")), X)
    assert np.allclose(to_dense_matrix(parse_pauli("Y")), Y)
    assert np.allclose(to_dense_matrix(parse_pauli("Z")), Z)
    assert parse_pauli("Y").phase_exp == 0

    # qubit 0 = facteur le plus à gauche
    assert np.allclose(to_dense_matrix(parse_pauli("XZ")), np.kron(X, Z))
    assert np.allclose(to_dense_matrix(parse_pauli("-iYX")), -1j * np.kron(Y, X))
    print("✅ Matrices denses conformes (Y = iXZ, qubit 0 à gauche)")


def test_3_multiply_matches_dense():
    """Test 3: Produit de groupe == produit matriciel"""
    print("\n" + "=" * 70)
    print("TEST 3: Produits et phases")
    print("=" * 70)

    xz = multiply(parse_pauli("X"), parse_pauli("Z"))
    assert format_pauli(xz) == "-iY", format_pauli(xz)
    assert format_pauli(parse_pauli("Z") * parse_pauli("X")) == "+iY"

    rng = np.random.default_rng(7)
    for _ in range(200):
        n = int(rng.integers(1, 5))
        a = random_pauli(n, rng)
        b = random_pauli(n, rng)
        assert np.allclose(to_dense_matrix(a * b), to_dense_matrix(a) @ to_dense_matrix(b)), \
            f"{format_pauli(a)} * {format_pauli(b)}"
    print("✅ 200 produits aléatoires conformes aux matrices")

    try:
        multiply(parse_pauli("XX"), parse_pauli("X"))
    except DimensionMismatchError:
        print("✅ Tailles différentes rejetées")
    else:
        raise AssertionError("DimensionMismatchError attendu")


def test_4_commutation():
    """Test 4: commutes == commutateur dense nul"""
    print("\n" + "=" * 70)
    print("TEST 4: Commutation")
    print("=" * 70)

    assert commutes(parse_pauli("XZZXI"), parse_pauli("IXZZX"))
    assert not commutes(parse_pauli("XXXXX"), parse_pauli("ZZZZZ"))

    labels = ["".join(p) for p in product("IXYZ", repeat=2)]
    for la in labels:
        for lb in labels:
            a, b = parse_pauli(la), parse_pauli(lb)
            ma, mb = to_dense_matrix(a), to_dense_matrix(b)
            dense = np.allclose(ma @ mb, mb @ ma)
            assert commutes(a, b) == dense, f"{la}, {lb}"
    print(f"✅ {len(labels) ** 2} paires à 2 qubits vérifiées")


def test_5_tensor_embed_weight():
    """Test 5: Produit tensoriel, plongement et poids"""
    print("\n" + "=" * 70)
    print("TEST 5: Tensor, embed, weight")
    print("=" * 70)

    t = tensor([parse_pauli("X"), parse_pauli("-Z"), parse_pauli("Y")])
    assert format_pauli(t) == "-XZY"
    assert embed(parse_pauli("XY"), 5, 2).label == "IIXYI"
    assert parse_pauli("IXIYZ").weight == 3
    assert parse_pauli("IXIYZ").support == (1, 3, 4)

    for n, w in [(3, 0), (3, 1), (4, 2), (5, 3)]:
        ops = list(paulis_of_weight(n, w))
        assert len(ops) == comb(n, w) * 3 ** w
        assert all(op.weight == w for op in ops)
        assert [op.label for op in ops] == sorted(op.label for op in ops)
    assert len(single_qubit_paulis(5)) == 15

    try:
        embed(parse_pauli("XX"), 3, 2)
    except DimensionMismatchError:
        print("✅ Plongement hors registre rejeté")
    else:
        raise AssertionError("DimensionMismatchError attendu")
    print("✅ Tensor / embed / énumérations cohérents")


def test_6_matrix_free_actions():
    """Test 6: apply_left et conjugate sans matrice dense de P"""
    print("\n" + "=" * 70)
    print("TEST 6: Actions sans matrice")
    print("=" * 70)

    rng = np.random.default_rng(11)
    for _ in range(30):
        p = random_pauli(3, rng)
        m = rng.standard_normal((8, 8)) + 1j * rng.standard_normal((8, 8))
        dense = to_dense_matrix(p)
        assert np.allclose(apply_left(p, m), dense @ m)
        assert np.allclose(conjugate(p, m), dense @ m @ dense.conj().T)
    print("✅ apply_left / conjugate conformes")


def test_7_dense_cap():
    """Test 7: Plafond de la représentation dense"""
    print("\n" + "=" * 70)
    print("TEST 7: Plafond dense")
    print("=" * 70)

    try:
        to_dense_matrix(PauliOperator.identity(14))
    except CapExceededError as exc:
        print(f"✅ {exc}")
    else:
        raise AssertionError("CapExceededError attendu")

    try:
        to_dense_matrix(PauliOperator.identity(4), max_qubits=3)
    except CapExceededError:
        print("✅ Plafond explicite respecté")
    else:
        raise AssertionError("CapExceededError attendu")


TESTS = [
    test_1_parse_and_format,
    test_2_dense_convention,
    test_3_multiply_matches_dense,
    test_4_commutation,
    test_5_tensor_embed_weight,
    test_6_matrix_free_actions,
    test_7_dense_cap,
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
