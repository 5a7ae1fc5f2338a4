"""
Dénombrement des processus d'erreur du second ordre

Un processus est une paire ordonnée (Q, R) de Paulis d'un qubit. Deux tallies
coexistent:
- processus identité: Q·R agit trivialement sur l'information logique
  (stabilisateur, ou groupe de jauge pour un code de sous-système);
- canal de fuite: paires sur des qubits distincts dont le produit tombe dans
  un même sous-espace de stabilisateur excité, maximisé sur les sous-espaces.
"""

import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Optional, Tuple

from qcch.pauli_algebra import multiply, single_qubit_paulis
from qcch.stabilizer_codes import StabilizerCode, Syndrome, syndrome

logger = logging.getLogger(__name__)


@dataclass
class CountReport:
    code_name: str
    n: int
    same_error_processes: int
    identity_processes: int
    stabilizer_processes: int
    leakage_subspace_count: int
    leakage_enumerated: int
    leakage_syndrome: Optional[Syndrome] = None
    naive_sigma2_bounds: Tuple[int, int] = field(default=(0, 0))

    @property
    def gauge_processes(self) -> int:
        """Paires triviales seulement grâce à la jauge"""
        return self.identity_processes - self.stabilizer_processes

    def to_dict(self) -> dict:
        return {
            "code": self.code_name,
            "n": self.n,
            "same_error_processes": self.same_error_processes,
            "identity_processes": self.identity_processes,
            "stabilizer_processes": self.stabilizer_processes,
            "gauge_processes": self.gauge_processes,
            "leakage_subspace_count": self.leakage_subspace_count,
            "leakage_enumerated": self.leakage_enumerated,
            "leakage_syndrome": str(self.leakage_syndrome) if self.leakage_syndrome else None,
            "naive_sigma2_bounds": {"lower": self.naive_sigma2_bounds[0], "upper": self.naive_sigma2_bounds[1]},
        }


def count_same_error_processes(code: StabilizerCode) -> int:
    """Paires (Q, Q): 3n"""
    return 3 * code.n


def count_identity_processes(code: StabilizerCode, include_gauge: bool = True) -> int:
    """Paires ordonnées (Q, R) avec Q·R trivial sur l'information logique"""
    singles = single_qubit_paulis(code.n)
    total = 0
    for q in singles:
        for r in singles:
            product = multiply(q, r)
            trivial = code.acts_trivially(product) if include_gauge else code.in_stabilizer(product)
            if trivial:
                total += 1
    return total


def leakage_histogram(code: StabilizerCode) -> Counter:
    """Syndrome excité -> nombre de paires sur qubits distincts y menant"""
    singles = single_qubit_paulis(code.n)
    histogram: Counter = Counter()
    for q in singles:
        for r in singles:
            if q.support == r.support:
                continue
            s = syndrome(code, multiply(q, r))
            if not s.is_trivial:
                histogram[s.bits] += 1
    return histogram


def count_leakage_channel(code: StabilizerCode) -> int:
    """Maximum sur les sous-espaces excités du nombre de paires qui y mènent (0 sans générateur)"""
    return max(leakage_histogram(code).values(), default=0)


def leakage_channel_syndrome(code: StabilizerCode) -> Optional[Syndrome]:
    """Syndrome arg-max du canal de fuite, le plus petit en cas d'égalité"""
    histogram = leakage_histogram(code)
    if not histogram:
        return None
    best = max(histogram.values())
    return Syndrome(min(b for b, c in histogram.items() if c == best), len(code.generators))


def leakage_subspace_rule(code: StabilizerCode) -> int:
    """m sous-espaces excités vers lesquels fuir, m - 1 restants: m(m-1)"""
    m = len(code.generators)
    return m * (m - 1)


def count_report(code: StabilizerCode) -> CountReport:
    logger.debug(f"Counting error processes for {code.name}")
    report = CountReport(
        code_name=code.name,
        n=code.n,
        same_error_processes=count_same_error_processes(code),
        identity_processes=count_identity_processes(code, include_gauge=True),
        stabilizer_processes=count_identity_processes(code, include_gauge=False),
        leakage_subspace_count=leakage_subspace_rule(code),
        leakage_enumerated=count_leakage_channel(code),
        leakage_syndrome=leakage_channel_syndrome(code),
        naive_sigma2_bounds=(3 * code.n, 9 * code.n ** 2),
    )
    logger.info(
        f"{code.name}: identity {report.identity_processes} (same-error {report.same_error_processes}), "
        f"leakage {report.leakage_enumerated}"
    )
    return report


def second_order_shift(code: StabilizerCode, J: float, spec) -> float:
    """-Σ_Q λ_Q² / (J·m_Q), m_Q = poids du syndrome de Q (termes à syndrome nul ignorés)"""
    total = 0.0
    for value, op in spec.terms():
        m_q = syndrome(code, op).weight
        if m_q:
            total -= value ** 2 / (J * m_q)
    return total


__all__ = [
    "CountReport",
    "count_same_error_processes",
    "count_identity_processes",
    "leakage_histogram",
    "count_leakage_channel",
    "leakage_channel_syndrome",
    "leakage_subspace_rule",
    "count_report",
    "second_order_shift",
]
