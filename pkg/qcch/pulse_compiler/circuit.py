"""
Circuits bang-bang en couches: CNOT, changements de base, rotations

Format texte (indices 0-based, une porte par ligne, "---" entre couches):

    BASIS 0 X
    CX 0 4
    ROT 4 Z 0.2
    ---

BASIS q X est l'Hadamard (X <-> Z), BASIS q Y est (Y+Z)/√2 (Y <-> Z); les
deux sont leurs propres inverses. ROT q A θ vaut exp(-i θ A / 2).
"""

import json
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Tuple, Union

from qcch.errors import InputError

logger = logging.getLogger(__name__)

LAYER_SEPARATOR = "---"


@dataclass(frozen=True)
class CX:
    control: int
    target: int

    @property
    def qubits(self) -> Tuple[int, ...]:
        return (self.control, self.target)

    def to_text(self) -> str:
        return f"CX {self.control} {self.target}"


@dataclass(frozen=True)
class BasisChange:
    qubit: int
    axis: str       # "X" (Hadamard) ou "Y"

    @property
    def qubits(self) -> Tuple[int, ...]:
        return (self.qubit,)

    def to_text(self) -> str:
        return f"BASIS {self.qubit} {self.axis}"


@dataclass(frozen=True)
class Rotation:
    qubit: int
    axis: str
    angle: float

    @property
    def qubits(self) -> Tuple[int, ...]:
        return (self.qubit,)

    def to_text(self) -> str:
        return f"ROT {self.qubit} {self.axis} {self.angle!r}"


Gate = Union[CX, BasisChange, Rotation]


def layer_is_parallel(layer: List[Gate]) -> bool:
    """Supports disjoints, sauf des CNOT d'un même éventail qui ne partagent que le pivot"""
    seen: Dict[int, Gate] = {}
    for gate in layer:
        for q in gate.qubits:
            other = seen.get(q)
            if other is not None and not _shares_pivot(other, gate, q):
                return False
        for q in gate.qubits:
            seen[q] = gate
    return True


def _shares_pivot(a: Gate, b: Gate, qubit: int) -> bool:
    # éventail sortant (même contrôle) ou entrant (même cible): les CNOT commutent
    if not (isinstance(a, CX) and isinstance(b, CX)):
        return False
    return (a.control == b.control == qubit) or (a.target == b.target == qubit)


@dataclass
class PulseCircuit:
    n_qubits: int
    layers: List[List[Gate]] = field(default_factory=list)
    repetitions: int = 1

    @property
    def depth(self) -> int:
        return len(self.layers)

    @property
    def gates(self) -> List[Gate]:
        return [g for layer in self.layers for g in layer]

    def gate_counts(self) -> Dict[str, int]:
        counts = {"CX": 0, "BASIS": 0, "ROT": 0}
        for gate in self.gates:
            counts[_kind(gate)] += 1
        return counts

    def append_layer(self, layer: List[Gate]):
        if layer:
            self.layers.append(list(layer))

    def extend(self, other: "PulseCircuit"):
        """Exécution séquentielle de other après self"""
        for layer in other.layers:
            self.append_layer(layer)

    def merge_parallel(self, other: "PulseCircuit"):
        """Superpose other couche par couche (supports disjoints attendus)"""
        for index, layer in enumerate(other.layers):
            if index < len(self.layers):
                self.layers[index].extend(layer)
            else:
                self.layers.append(list(layer))

    def is_parallel(self) -> bool:
        return all(layer_is_parallel(layer) for layer in self.layers)

    # --- export -------------------------------------------------------------

    def to_text(self) -> str:
        lines = []
        for layer in self.layers:
            lines.extend(g.to_text() for g in layer)
            lines.append(LAYER_SEPARATOR)
        return "\n".join(lines) + ("\n" if lines else "")

    def to_dict(self) -> dict:
        return {
            "n_qubits": self.n_qubits,
            "depth": self.depth,
            "repetitions": self.repetitions,
            "gate_counts": self.gate_counts(),
            "layers": [[_gate_to_dict(g) for g in layer] for layer in self.layers],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)


def _kind(gate: Gate) -> str:
    if isinstance(gate, CX):
        return "CX"
    if isinstance(gate, BasisChange):
        return "BASIS"
    return "ROT"


def _gate_to_dict(gate: Gate) -> dict:
    if isinstance(gate, CX):
        return {"gate": "CX", "control": gate.control, "target": gate.target}
    if isinstance(gate, BasisChange):
        return {"gate": "BASIS", "qubit": gate.qubit, "axis": gate.axis}
    return {"gate": "ROT", "qubit": gate.qubit, "axis": gate.axis, "angle": gate.angle}


# ============================================================================
# Parsers
# ============================================================================

def _parse_gate_line(line: str, lineno: int) -> Gate:
    parts = line.split()
    try:
        if parts[0] == "CX" and len(parts) == 3:
            return CX(int(parts[1]), int(parts[2]))
        if parts[0] == "BASIS" and len(parts) == 3 and parts[2] in ("X", "Y"):
            return BasisChange(int(parts[1]), parts[2])
        if parts[0] == "ROT" and len(parts) == 4 and parts[2] in ("X", "Y", "Z"):
            return Rotation(int(parts[1]), parts[2], float(parts[3]))
    except ValueError as exc:
        raise InputError(f"line {lineno}: {exc}") from exc
    raise InputError(f"line {lineno}: cannot parse gate {line!r}")


def parse_text(text: str, n_qubits: int = 0) -> PulseCircuit:
    """Inverse de PulseCircuit.to_text; n_qubits déduit si 0"""
    layers: List[List[Gate]] = []
    current: List[Gate] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line == LAYER_SEPARATOR:
            if current:
                layers.append(current)
            current = []
            continue
        current.append(_parse_gate_line(line, lineno))
    if current:
        layers.append(current)
    width = max((q + 1 for layer in layers for g in layer for q in g.qubits), default=0)
    return PulseCircuit(max(n_qubits, width), layers)


def parse_json(data: Union[str, dict]) -> PulseCircuit:
    if isinstance(data, str):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as exc:
            raise InputError(f"invalid circuit JSON: {exc}") from exc
    layers = []
    for layer in data.get("layers", []):
        gates: List[Gate] = []
        for g in layer:
            kind = g.get("gate")
            if kind == "CX":
                gates.append(CX(int(g["control"]), int(g["target"])))
            elif kind == "BASIS":
                gates.append(BasisChange(int(g["qubit"]), g["axis"]))
            elif kind == "ROT":
                gates.append(Rotation(int(g["qubit"]), g["axis"], float(g["angle"])))
            else:
                raise InputError(f"unknown gate kind {kind!r}")
        layers.append(gates)
    return PulseCircuit(int(data["n_qubits"]), layers, int(data.get("repetitions", 1)))


__all__ = [
    "LAYER_SEPARATOR",
    "CX",
    "BasisChange",
    "Rotation",
    "Gate",
    "layer_is_parallel",
    "PulseCircuit",
    "parse_text",
    "parse_json",
]
