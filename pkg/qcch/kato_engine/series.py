"""
Série de Kato pour un niveau dégénéré i de H0

    A_i^(m) = (-1)^(m-1) Σ_(k_1+...+k_(m+1) = m-1) G^(k_1) V G^(k_2) ... V G^(k_(m+1))
    B_i^(m) = (-1)^(m-1) Σ_(k_1+...+k_(m+1) = m)   G^(k_1) V G^(k_2) ... V G^(k_(m+1))

avec (H - λ_i) P_i(x) = Σ x^m A_i^(m) et P_i(x) = Π_i + Σ x^m B_i^(m).

Deux évaluations donnent le même résultat: l'énumération explicite des
compositions (ordre lexicographique) et une somme par programmation dynamique
F_(j+1)(s) = Σ_t F_j(s - t) V G^(t).
"""

import concurrent.futures
import logging
import math
from functools import reduce
from typing import Iterator, List, Optional, Tuple

import numpy as np

from qcch.config.limits import DEFAULT_MAX_KATO_ORDER
from qcch.errors import CapExceededError, DivergenceError

from .projectors import LevelDecomposition

logger = logging.getLogger(__name__)


# ============================================================================
# Compositions
# ============================================================================

def compositions(total: int, parts: int) -> Iterator[Tuple[int, ...]]:
    """Tuples de `parts` entiers >= 0 de somme `total`, ordre lexicographique"""
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def series_term_count(m: int) -> int:
    """Nombre de produits dans A^(m): C(2m-1, m)"""
    return math.comb(2 * m - 1, m)


def _check_order(m: int, max_order: Optional[int]):
    if m < 1:
        raise ValueError(f"series order must be >= 1, got {m}")
    cap = DEFAULT_MAX_KATO_ORDER if max_order is None else max_order
    if m > cap:
        raise CapExceededError("Kato order", m, cap)


def _chain(decomp: LevelDecomposition, i: int, V: np.ndarray, ks: Tuple[int, ...]) -> np.ndarray:
    factors = []
    for j, k in enumerate(ks):
        if j:
            factors.append(V)
        factors.append(decomp.resolvent_power(i, k))
    return reduce(np.matmul, factors)


def _explicit_sum(decomp, i, V, total, parts, threads: int) -> np.ndarray:
    combos = list(compositions(total, parts))
    if threads > 1:
        with concurrent.futures.ThreadPoolExecutor(max_workers=threads) as executor:
            products = list(executor.map(lambda ks: _chain(decomp, i, V, ks), combos))
    else:
        products = [_chain(decomp, i, V, ks) for ks in combos]
    # réduction dans l'ordre lexicographique, quel que soit le nombre de threads
    result = np.zeros((decomp.dim, decomp.dim), dtype=complex)
    for product in products:
        result = result + product
    return result


def _dp_sum(decomp, i, V, total, parts) -> np.ndarray:
    # F[s] = somme des préfixes à j facteurs G dont les exposants totalisent s
    F = [decomp.resolvent_power(i, s) for s in range(total + 1)]
    for _ in range(parts - 1):
        FV = [f @ V for f in F]
        F = [
            sum((FV[s - t] @ decomp.resolvent_power(i, t) for t in range(s + 1)),
                np.zeros((decomp.dim, decomp.dim), dtype=complex))
            for s in range(total + 1)
        ]
    return F[total]


def composition_sum(decomp: LevelDecomposition, i: int, V: np.ndarray, total: int, parts: int,
                    method: str = "dp", threads: int = 1) -> np.ndarray:
    """Σ sur les compositions de `total` en `parts` parts de G V G ... V G"""
    if method == "explicit":
        return _explicit_sum(decomp, i, V, total, parts, threads)
    if method == "dp":
        return _dp_sum(decomp, i, V, total, parts)
    raise ValueError(f"unknown summation method {method!r}")


# ============================================================================
# Termes de la série
# ============================================================================

def kato_term(decomp: LevelDecomposition, i: int, V: np.ndarray, m: int,
              max_order: Optional[int] = None, method: str = "dp", threads: int = 1) -> np.ndarray:
    """A_i^(m); m=1 donne Π_i V Π_i"""
    _check_order(m, max_order)
    sign = -1.0 if (m - 1) % 2 else 1.0
    return sign * composition_sum(decomp, i, V, m - 1, m + 1, method, threads)


def projector_term(decomp: LevelDecomposition, i: int, V: np.ndarray, m: int,
                   max_order: Optional[int] = None, method: str = "dp", threads: int = 1) -> np.ndarray:
    """B_i^(m); m=1 donne G^(1) V G^(0) + G^(0) V G^(1)"""
    _check_order(m, max_order)
    sign = -1.0 if (m - 1) % 2 else 1.0
    return sign * composition_sum(decomp, i, V, m, m + 1, method, threads)


# ============================================================================
# Bornes de troncature
# ============================================================================

def convergence_ratio(gap: float, x: float, norm_v: float) -> float:
    if math.isinf(gap):
        return 0.0
    return 4.0 * x * norm_v / gap


def truncation_bound(gap: float, x: float, norm_v: float, p: int) -> float:
    """Borne sur les termes d'ordre > p.

    Δ·q^(p+1) si x||V|| <= Δ/8, sinon (Δ/2)·q^(p+1)/(1-q), q = 4x||V||/Δ.

    Raises:
        DivergenceError: q >= 1.
    """
    if x == 0.0 or norm_v == 0.0 or math.isinf(gap):
        return 0.0
    q = convergence_ratio(gap, x, norm_v)
    if x * norm_v <= gap / 8:
        return gap * q ** (p + 1)
    if q < 1.0:
        return (gap / 2) * q ** (p + 1) / (1.0 - q)
    raise DivergenceError(q)


def projector_truncation_bound(gap: float, x: float, norm_v: float, p: int) -> float:
    """||P_i(x) - Π_i - Σ_(m<=p) x^m B^(m)|| <= 2 q^(p+1)"""
    q = convergence_ratio(gap, x, norm_v)
    if q >= 1.0:
        raise DivergenceError(q)
    return 2.0 * q ** (p + 1)


def alternative_remainder_bound(J: float, n_qubits: int, x: float, p: int) -> float:
    """Lecture ||V|| <= 3n, Δ = J: J·(12 n x / J)^(p+1)"""
    return J * (12.0 * n_qubits * x / J) ** (p + 1)


__all__ = [
    "compositions",
    "series_term_count",
    "composition_sum",
    "kato_term",
    "projector_term",
    "convergence_ratio",
    "truncation_bound",
    "projector_truncation_bound",
    "alternative_remainder_bound",
]
