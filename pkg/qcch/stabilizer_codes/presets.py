"""
Codes intégrés: [[5,1,3]] et le code de sous-système [[9,1,4,3]] (3x3).

Disposition du code à 9 qubits: qubit (ligne r, colonne c) -> indice 3r + c.
Les générateurs X couvrent deux lignes, les générateurs Z deux colonnes.
Les paires de jauge sont des XX verticales (même colonne) et des ZZ
horizontales (même ligne), choisies pour former des paires symplectiques.
"""

from typing import Callable, Dict, List

from qcch.pauli_algebra import parse_pauli

from .code import StabilizerCode


def _ops(labels: List[str]):
    return tuple(parse_pauli(s) for s in labels)


def five_qubit_code() -> StabilizerCode:
    return StabilizerCode(
        name="five-qubit",
        n=5,
        generators=_ops(["XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"]),
        logical_x=_ops(["XXXXX"]),
        logical_z=_ops(["ZZZZZ"]),
    )


def nine_qubit_subsystem_code() -> StabilizerCode:
    return StabilizerCode(
        name="nine-qubit",
        n=9,
        generators=_ops(["XXXXXXIII", "IIIXXXXXX", "ZZIZZIZZI", "IZZIZZIZZ"]),
        logical_x=_ops(["XXXIIIIII"]),
        logical_z=_ops(["ZIIZIIZII"]),
        # (X colonne 0 lignes 0-1, Z ligne 0 colonnes 0-1), ...
        gauge_x=_ops(["XIIXIIIII", "IIIXIIXII", "IIXIIXIII", "IIIIIXIIX"]),
        gauge_z=_ops(["ZZIIIIIII", "IIIIIIZZI", "IZZIIIIII", "IIIIIIIZZ"]),
    )


def trivial_code(n: int = 1) -> StabilizerCode:
    """Aucun générateur: k = n, distance 1"""
    x = tuple(parse_pauli("I" * q + "X" + "I" * (n - q - 1)) for q in range(n))
    z = tuple(parse_pauli("I" * q + "Z" + "I" * (n - q - 1)) for q in range(n))
    return StabilizerCode(name=f"trivial-{n}", n=n, generators=(), logical_x=x, logical_z=z)


PRESETS: Dict[str, Callable[[], StabilizerCode]] = {
    "five-qubit": five_qubit_code,
    "nine-qubit": nine_qubit_subsystem_code,
}


def get_preset(name: str) -> StabilizerCode:
    try:
        return PRESETS[name.lower()]()
    except KeyError:
        raise KeyError(f"unknown preset {name!r}; available: {', '.join(PRESETS)}") from None


__all__ = ["five_qubit_code", "nine_qubit_subsystem_code", "trivial_code", "PRESETS", "get_preset"]
