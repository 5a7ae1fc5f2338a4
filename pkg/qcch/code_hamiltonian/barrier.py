# qcch/code_hamiltonian/barrier.py
"""
Barrière d'énergie: chemin minimax de l'identité vers un opérateur logique

Les états sont les classes d'erreurs modulo le stabilisateur (clé canonique:
vecteur symplectique réduit par la base échelonnée). Un pas applique un Pauli
de poids <= move_weight; l'énergie d'une classe ne dépend que de son syndrome
vis-à-vis des termes du Hamiltonien.

La recherche est un Dijkstra sur la clé (goulot, nombre de pas): le premier
état cible retiré du tas donne la barrière exacte. Si le budget est épuisé,
le dernier goulot retiré est une borne inférieure.
"""

from __future__ import annotations

import heapq
import logging
from dataclasses import dataclass, field
from itertools import count
from typing import Dict, List, Optional, Tuple

import networkx as nx

from qcch.config.limits import DEFAULT_MAX_BARRIER_STATES
from qcch.errors import CapExceededError, InputError
from qcch.pauli_algebra import PauliOperator, commutes, format_pauli, paulis_of_weight
from qcch.stabilizer_codes import distance

from .hamiltonian import CodeHamiltonian

logger = logging.getLogger(__name__)

# au-delà, le représentant de poids minimal n'est pas cherché
_MAX_REPRESENTATIVE_QUBITS = 10


@dataclass(frozen=True)
class BarrierStep:
    operator: PauliOperator     # erreur cumulée après ce pas
    move: PauliOperator         # Pauli appliqué à ce pas
    energy: float


@dataclass
class BarrierResult:
    barrier: float
    exact: bool
    path: List[BarrierStep] = field(default_factory=list)
    logical_representative: Optional[PauliOperator] = None
    explored: int = 0
    certified_lower_bound: float = 0.0

    @property
    def endpoint(self) -> Optional[PauliOperator]:
        return self.path[-1].operator if self.path else None

    def to_dict(self) -> dict:
        return {
            "barrier": self.barrier,
            "exact": self.exact,
            "lower_bound_only": not self.exact,
            "certified_lower_bound": self.certified_lower_bound,
            "explored_cosets": self.explored,
            "path": [
                {"move": format_pauli(s.move), "operator": format_pauli(s.operator), "energy": s.energy}
                for s in self.path
            ],
            "logical_representative": (
                format_pauli(self.logical_representative) if self.logical_representative else None
            ),
        }


# ============================================================================
# Outils
# ============================================================================

def _syndrome_mask(h: CodeHamiltonian, op: PauliOperator) -> int:
    mask = 0
    for i, term in enumerate(h.terms):
        if not commutes(op, term.operator):
            mask |= 1 << i
    return mask


def _energy(h: CodeHamiltonian, mask: int) -> float:
    # tous les coefficients valent -J/2: chaque terme violé coûte J
    return h.J * mask.bit_count()


def _product(a: PauliOperator, b: PauliOperator) -> PauliOperator:
    # phase sans importance pour les classes d'erreurs
    return PauliOperator(a.n_qubits, a.x_bits ^ b.x_bits, a.z_bits ^ b.z_bits)


def _moves(h: CodeHamiltonian, move_weight: int) -> List[Tuple[PauliOperator, int]]:
    moves = []
    for w in range(1, min(move_weight, h.n_qubits) + 1):
        for op in paulis_of_weight(h.n_qubits, w):
            moves.append((op, _syndrome_mask(h, op)))
    return moves


def certified_lower_bound(h: CodeHamiltonian) -> float:
    """r·J si le code de base a une distance >= 2 (chaque niveau coûte au moins J)"""
    if h.base_code is None or not h.terms:
        return 0.0
    d = distance(h.base_code, max_weight=2)
    if d is not None and d < 2:
        return 0.0
    return h.levels * h.J


def minimum_weight_representative(h: CodeHamiltonian, op: PauliOperator) -> Optional[PauliOperator]:
    """Pauli de poids minimal équivalent à op modulo stabilisateur et jauge"""
    if h.n_qubits > _MAX_REPRESENTATIVE_QUBITS:
        return None
    for w in range(0, op.weight + 1):
        for candidate in paulis_of_weight(h.n_qubits, w):
            if h.acts_trivially(_product(candidate, op)):
                return candidate
    return op


# ============================================================================
# Recherche minimax
# ============================================================================

def energy_barrier(h: CodeHamiltonian, move_weight: int = 1,
                   max_states: Optional[int] = None) -> BarrierResult:
    """Barrière minimax vers une classe logique non triviale.

    Args:
        move_weight: poids maximal du Pauli appliqué à chaque pas.
        max_states: nombre maximal de classes réglées avant abandon.

    Returns:
        BarrierResult; exact=False si le budget est épuisé, la barrière est
        alors max(goulot atteint, borne certifiée).
    """
    if move_weight < 1:
        raise InputError(f"move weight must be >= 1, got {move_weight}")
    budget = DEFAULT_MAX_BARRIER_STATES if max_states is None else max_states
    certified = certified_lower_bound(h)
    basis = h.stabilizer_basis
    moves = _moves(h, move_weight)
    logger.debug(f"Barrier search: {h.n_qubits} qubits, {len(moves)} moves, budget {budget}")

    start = PauliOperator.identity(h.n_qubits)
    start_key = basis.coset_key(start)
    best: Dict[int, Tuple[float, int]] = {start_key: (0.0, 0)}
    state: Dict[int, Tuple[PauliOperator, int]] = {start_key: (start, 0)}
    parent: Dict[int, Tuple[int, PauliOperator]] = {}
    settled = set()
    tie = count()
    heap = [(0.0, 0, next(tie), start_key)]
    bottleneck = 0.0

    while heap:
        b, steps, _, key = heapq.heappop(heap)
        if key in settled:
            continue
        settled.add(key)
        bottleneck = b
        op, mask = state[key]

        if mask == 0 and not h.acts_trivially(op):
            path = _rebuild_path(h, parent, state, key)
            logger.info(f"✅ Barrier {b / h.J:g}J found after {len(settled)} cosets ({len(path)} steps)")
            return BarrierResult(
                barrier=b,
                exact=True,
                path=path,
                logical_representative=minimum_weight_representative(h, op),
                explored=len(settled),
                certified_lower_bound=certified,
            )

        if len(settled) >= budget:
            logger.warning(
                f"⚠️ Barrier search budget {budget} exhausted; reporting lower bound"
            )
            return BarrierResult(
                barrier=max(bottleneck, certified),
                exact=False,
                explored=len(settled),
                certified_lower_bound=certified,
            )

        for move, move_mask in moves:
            nxt = _product(op, move)
            nkey = basis.coset_key(nxt)
            if nkey in settled:
                continue
            nmask = mask ^ move_mask
            candidate = (max(b, _energy(h, nmask)), steps + 1)
            if nkey not in best or candidate < best[nkey]:
                best[nkey] = candidate
                state[nkey] = (nxt, nmask)
                parent[nkey] = (key, move)
                heapq.heappush(heap, (candidate[0], candidate[1], next(tie), nkey))

    # aucun logique non trivial (code sans qubit logique)
    return BarrierResult(barrier=float("inf"), exact=True, explored=len(settled),
                         certified_lower_bound=certified)


def _rebuild_path(h: CodeHamiltonian, parent, state, key) -> List[BarrierStep]:
    moves = []
    while key in parent:
        key, move = parent[key]
        moves.append(move)
    moves.reverse()
    path = []
    current = PauliOperator.identity(h.n_qubits)
    for move in moves:
        current = _product(current, move)
        path.append(BarrierStep(current, move, _energy(h, _syndrome_mask(h, current))))
    return path


# ============================================================================
# Graphe des classes (networkx)
# ============================================================================

def coset_graph(h: CodeHamiltonian, max_states: Optional[int] = None) -> nx.Graph:
    """Graphe complet des classes d'erreurs reliées par un Pauli de poids 1.

    Noeuds: clés canoniques (attributs energy, target, label); poids d'arête:
    max des énergies des extrémités. graph.graph["source"] = classe identité.

    Raises:
        CapExceededError: plus de max_states classes.
    """
    budget = DEFAULT_MAX_BARRIER_STATES if max_states is None else max_states
    basis = h.stabilizer_basis
    moves = _moves(h, 1)
    start = PauliOperator.identity(h.n_qubits)
    source = basis.coset_key(start)

    graph = nx.Graph(source=source)
    graph.add_node(source, energy=0.0, target=False, label=start.label)
    frontier = [(start, 0)]
    while frontier:
        nxt_frontier = []
        for op, mask in frontier:
            key = basis.coset_key(op)
            energy_here = graph.nodes[key]["energy"]
            for move, move_mask in moves:
                nxt = _product(op, move)
                nkey = basis.coset_key(nxt)
                nmask = mask ^ move_mask
                if nkey not in graph:
                    if graph.number_of_nodes() >= budget:
                        raise CapExceededError("coset graph states", graph.number_of_nodes() + 1, budget)
                    graph.add_node(
                        nkey,
                        energy=_energy(h, nmask),
                        target=nmask == 0 and not h.acts_trivially(nxt),
                        label=nxt.label,
                    )
                    nxt_frontier.append((nxt, nmask))
                weight = max(energy_here, graph.nodes[nkey]["energy"])
                graph.add_edge(key, nkey, weight=weight)
        frontier = nxt_frontier
    logger.debug(f"Coset graph: {graph.number_of_nodes()} nodes, {graph.number_of_edges()} edges")
    return graph


def barrier_via_spanning_tree(graph: nx.Graph) -> float:
    """Barrière minimax par l'arbre couvrant minimal (le chemin minimax y passe)"""
    source = graph.graph["source"]
    targets = [n for n, data in graph.nodes(data=True) if data["target"]]
    if not targets:
        return float("inf")
    work = graph.copy()
    sink = ("sink",)
    for t in targets:
        work.add_edge(t, sink, weight=graph.nodes[t]["energy"])
    tree = nx.minimum_spanning_tree(work, weight="weight")
    path = nx.shortest_path(tree, source, sink)
    return max(tree.edges[u, v]["weight"] for u, v in zip(path, path[1:]))


def graph_summary(graph: nx.Graph) -> dict:
    energies = [data["energy"] for _, data in graph.nodes(data=True)]
    return {
        "nodes": graph.number_of_nodes(),
        "edges": graph.number_of_edges(),
        "targets": sum(1 for _, data in graph.nodes(data=True) if data["target"]),
        "connected": nx.is_connected(graph),
        "max_energy": max(energies) if energies else 0.0,
    }


__all__ = [
    "BarrierStep",
    "BarrierResult",
    "certified_lower_bound",
    "minimum_weight_representative",
    "energy_barrier",
    "coset_graph",
    "barrier_via_spanning_tree",
    "graph_summary",
]
