"""
Compilation de exp(-i t P) et des pas de Hamiltonien en circuits bang-bang

Gabarit: couche de changements de base, éventail de CNOT vers (ou depuis)
le pivot, rotation sur le pivot, puis les couches miroir. Le pivot est le
qubit non trivial d'indice le plus élevé.

- chaîne toute X: CNOT pivot -> autres, rotation X (profondeur 3)
- chaîne toute Z: CNOT autres -> pivot, rotation Z (profondeur 3)
- sinon: chaque facteur est ramené à Z (Hadamard pour X, (Y+Z)/√2 pour Y),
  puis forme Z (profondeur 5)
- poids 1: une seule rotation native (profondeur 1)
"""

import logging
import math
from collections import defaultdict
from itertools import combinations
from typing import List, Union

from qcch.code_hamiltonian import CodeHamiltonian
from qcch.errors import CompilationError, ConstructionError
from qcch.pauli_algebra import PauliOperator, commutes
from qcch.stabilizer_codes import StabilizerCode

from .circuit import CX, BasisChange, Gate, PulseCircuit, Rotation

logger = logging.getLogger(__name__)


def _rotation_angle(p: PauliOperator, t: float) -> float:
    """exp(-i t P) = ROT(2t) sur la chaîne sans phase; phase 2 (-P) inverse le signe"""
    if not p.is_hermitian:
        raise CompilationError(f"cannot exponentiate non-Hermitian Pauli (phase i^{p.phase_exp})")
    return -2.0 * t if p.phase_exp == 2 else 2.0 * t


def compile_pauli_exponential(p: PauliOperator, t: float) -> PulseCircuit:
    """Circuit de exp(-i t P).

    Raises:
        CompilationError: P identité ou non hermitien.
    """
    if p.is_identity:
        raise CompilationError("identity Pauli has nothing to compile")
    angle = _rotation_angle(p, t)
    support = p.support
    pivot = support[-1]
    others = support[:-1]
    axes = {q: p.axis(q) for q in support}
    circuit = PulseCircuit(p.n_qubits)

    if not others:
        circuit.append_layer([Rotation(pivot, axes[pivot], angle)])
        return circuit

    if all(a == "X" for a in axes.values()):
        fan: List[Gate] = [CX(pivot, q) for q in others]
        circuit.append_layer(fan)
        circuit.append_layer([Rotation(pivot, "X", angle)])
        circuit.append_layer(list(reversed(fan)))
        return circuit

    fan = [CX(q, pivot) for q in others]
    if all(a == "Z" for a in axes.values()):
        circuit.append_layer(fan)
        circuit.append_layer([Rotation(pivot, "Z", angle)])
        circuit.append_layer(list(reversed(fan)))
        return circuit

    basis = [BasisChange(q, axes[q]) for q in support if axes[q] != "Z"]
    circuit.append_layer(basis)
    circuit.append_layer(fan)
    circuit.append_layer([Rotation(pivot, "Z", angle)])
    circuit.append_layer(list(reversed(fan)))
    circuit.append_layer(list(reversed(basis)))
    return circuit


def compile_hamiltonian_step(h: CodeHamiltonian, dt: float) -> PulseCircuit:
    """Circuit exact de exp(-i H dt) (termes commutants).

    Les blocs de même niveau ont des supports disjoints: le g-ième générateur
    de tous les blocs d'un niveau partage les mêmes couches.

    Raises:
        ConstructionError: deux termes anticommutent.
    """
    for (i, a), (j, b) in combinations(enumerate(h.operators), 2):
        if not commutes(a, b):
            raise ConstructionError(f"terms {i} and {j} anticommute; step would not be exact")

    # (niveau, rang du générateur dans son bloc) -> termes de tous les blocs
    groups = defaultdict(list)
    rank_in_block = defaultdict(int)
    for term in h.terms:
        slot = rank_in_block[(term.level, term.block)]
        rank_in_block[(term.level, term.block)] += 1
        groups[(term.level, slot)].append(term)

    circuit = PulseCircuit(h.n_qubits)
    for key in sorted(groups):
        parallel = PulseCircuit(h.n_qubits)
        for term in groups[key]:
            parallel.merge_parallel(compile_pauli_exponential(term.operator, term.coefficient * dt))
        circuit.extend(parallel)
    logger.info(f"Hamiltonian step: {len(h.terms)} terms, depth {circuit.depth}")
    return circuit


def depth_budget(h: CodeHamiltonian, per_term: int = 5) -> int:
    """C·(générateurs par bloc)·r"""
    per_block = len(h.base_code.generators) if h.base_code is not None else len(h.terms)
    return per_term * per_block * h.levels


def compile_evolution(h: CodeHamiltonian, total_time: float, steps: int = 1) -> PulseCircuit:
    """Évolution par pas: le circuit d'un pas de durée total_time/steps, répété `steps` fois"""
    if steps < 1:
        raise ValueError(f"steps must be >= 1, got {steps}")
    circuit = compile_hamiltonian_step(h, total_time / steps)
    circuit.repetitions = steps
    return circuit


def compile_logical_pauli(source: Union[StabilizerCode, CodeHamiltonian], which: str,
                          index: int = 0) -> PulseCircuit:
    """Une couche de rotations π réalisant le représentant logique (à une phase globale près)"""
    which = which.upper()
    if isinstance(source, CodeHamiltonian):
        n = source.n_qubits
        op = PauliOperator.identity(n) if which == "I" else source.logical(which)
        if op is None:
            raise CompilationError(f"Hamiltonian has no logical {which}")
    else:
        n = source.n
        op = source.logical(which, index)
    circuit = PulseCircuit(n)
    circuit.append_layer([Rotation(q, op.axis(q), math.pi) for q in op.support])
    return circuit


__all__ = [
    "compile_pauli_exponential",
    "compile_hamiltonian_step",
    "depth_budget",
    "compile_evolution",
    "compile_logical_pauli",
]
