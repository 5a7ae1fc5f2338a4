"""
Décodeur par table de syndromes (poids minimal, égalités départagées par ordre
lexicographique du label de l'erreur).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, Iterator, Optional, Tuple

from qcch.config.limits import DEFAULT_MAX_DECODER_WEIGHT
from qcch.pauli_algebra import PauliOperator, multiply, paulis_of_weight

from .code import StabilizerCode, syndrome

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SyndromeDecoder:
    code: StabilizerCode
    table: Dict[int, PauliOperator] = field(default_factory=dict)
    search_weight: int = 0

    @property
    def complete(self) -> bool:
        return len(self.table) == 1 << len(self.code.generators)

    def correction(self, syndrome_bits: int) -> Optional[PauliOperator]:
        return self.table.get(syndrome_bits)

    def transversal(self, t: Optional[int] = None) -> Iterator[Tuple[int, PauliOperator]]:
        """(syndrome, représentant) triés par syndrome, poids <= t si donné"""
        for bits in sorted(self.table):
            op = self.table[bits]
            if t is None or op.weight <= t:
                yield bits, op


def build_decoder(code: StabilizerCode, max_weight: Optional[int] = None) -> SyndromeDecoder:
    """Table syndrome -> correction de poids minimal, construite par poids croissant"""
    limit = min(code.n, DEFAULT_MAX_DECODER_WEIGHT if max_weight is None else max_weight)
    n_syndromes = 1 << len(code.generators)
    table: Dict[int, PauliOperator] = {}
    reached = 0
    for w in range(0, limit + 1):
        reached = w
        for op in paulis_of_weight(code.n, w):
            bits = syndrome(code, op).bits
            if bits not in table:
                table[bits] = op
        if len(table) == n_syndromes:
            break
    if len(table) < n_syndromes:
        logger.warning(
            f"⚠️ Decoder for {code.name}: {len(table)}/{n_syndromes} syndromes covered up to weight {reached}"
        )
    return SyndromeDecoder(code, table, reached)


@lru_cache(maxsize=32)
def decoder_for(code: StabilizerCode) -> SyndromeDecoder:
    return build_decoder(code)


def is_correctable(code: StabilizerCode, e: PauliOperator, t: int) -> bool:
    """True si le décodage de poids minimal (corrections de poids <= t) restaure l'état.

    Pour un code de sous-système, une correction à un opérateur de jauge près compte
    comme un succès.
    """
    s = syndrome(code, e)
    correction = decoder_for(code).correction(s.bits)
    if correction is None or correction.weight > t:
        return False
    return code.acts_trivially(multiply(correction, e))


__all__ = ["SyndromeDecoder", "build_decoder", "decoder_for", "is_correctable"]
