"""
CLI du workbench (click)

    python run_qcch.py code-info --code nine-qubit
    python run_qcch.py spectrum --code five-qubit --levels 2
    python run_qcch.py perturb --x 0.001 --order 2 --output json
    python run_qcch.py compile --pauli XXXX --t 0.3 --verify

Codes de sortie: 0 succès, 2 entrée invalide, 3 plafond dépassé ou divergence.
Énergies affichées en unités de J, couplages sous la forme γ = x/J à côté de x.
"""

import functools
import logging
from typing import Any, Callable, Dict, List, Optional

import click
import numpy as np
import scipy.linalg
from threadpoolctl import threadpool_limits

from qcch.code_hamiltonian import (
    CodeHamiltonian,
    barrier_via_spanning_tree,
    build_concatenated,
    coset_graph,
    energy_barrier,
    error_energy,
    graph_summary,
    numeric_spectrum,
    spectrum,
    to_dense,
)
from qcch.config.paths import QCCH_LOG
from qcch.config_manager import RunConfig, config_manager
from qcch.env_manager import env_manager
from qcch.errors import InputError, InvalidCodeError, QcchError
from qcch.kato_engine import PerturbationSpec, effective_hamiltonian
from qcch.logging_setup import setup_logging
from qcch.pauli_algebra import format_pauli, parse_pauli, to_dense_matrix
from qcch.perturbation_analysis import (
    PRESET_COEFFICIENTS,
    ThresholdReport,
    bound_recursion,
    classical_failure_recursion,
    count_report,
    count_same_error_processes,
    second_order_shift,
    suppression_curve,
    threshold,
)
from qcch.pulse_compiler import (
    PulseCircuit,
    circuit_unitary,
    compile_evolution,
    compile_logical_pauli,
    compile_pauli_exponential,
    depth_budget,
)
from qcch.reporting import json_document, key_value_table, make_table, print_tables, save_document
from qcch.stabilizer_codes import distance, load_code, validate

logger = logging.getLogger(__name__)

# distance énumérée jusqu'à ce poids par code-info
_CODE_INFO_MAX_WEIGHT = 6


class QcchGroup(click.Group):
    """Convertit les QcchError en message sur stderr et code de sortie"""

    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except QcchError as exc:
            click.echo(f"❌ {type(exc).__name__}: {exc}", err=True)
            for violation in getattr(exc, "violations", []):
                click.echo(f"   - {violation}", err=True)
            ctx.exit(exc.exit_code)


@click.group(cls=QcchGroup)
@click.option("--verbose", "-v", is_flag=True, help="Logs INFO sur stderr")
@click.option("--profile", default=None, help="Profil YAML (data/config/profiles.yaml)")
@click.pass_context
def cli(ctx, verbose: bool, profile: Optional[str]):
    """Workbench de Hamiltoniens de codes concaténés"""
    setup_logging(str(QCCH_LOG), "INFO" if verbose else env_manager.log_level)
    ctx.ensure_object(dict)
    ctx.obj["profile"] = profile


# ============================================================================
# Options communes
# ============================================================================

def common_options(func: Callable) -> Callable:
    options = [
        click.option("--code", default=None, help="Preset (five-qubit, nine-qubit) ou fichier JSON"),
        click.option("--J", "J", type=float, default=None, help="Unité d'énergie J > 0"),
        click.option("--levels", type=int, default=None, help="Niveaux de concaténation r"),
        click.option("--output", type=click.Choice(["table", "json"]), default=None),
        click.option("--seed", type=int, default=None),
        click.option("--threads", type=int, default=None, help="Threads BLAS et sommes parallèles"),
        click.option("--max-dim", type=int, default=None, help="Plafond dense (qubits)"),
        click.option("--max-states", type=int, default=None, help="Budget de la recherche de barrière"),
        click.option("--save", is_flag=True, help="Écrit le document JSON dans data/reports"),
    ]
    for option in reversed(options):
        func = option(func)
    return func


def _run(command: str, renderer: Callable[[Dict[str, Any]], None]):
    """Décorateur: résout la config, exécute, puis affiche table ou JSON.

    Les options qui sont des champs de RunConfig passent par le ConfigManager
    (profil, validation); les autres sont transmises telles quelles.
    """

    def decorator(func):
        @functools.wraps(func)
        @click.pass_context
        def wrapper(ctx, save: bool, **kwargs):
            fields = {k: v for k, v in kwargs.items() if k in RunConfig.model_fields}
            extras = {k: v for k, v in kwargs.items() if k not in RunConfig.model_fields}
            cfg = config_manager.resolve(ctx.obj.get("profile"), **fields)
            logger.debug(f"{command}: {cfg.model_dump(exclude_none=True)} {extras}")
            with threadpool_limits(limits=cfg.threads):
                payload = func(cfg, **extras)
            text = json_document(command, payload)
            if save:
                save_document(command, text)
            if cfg.output == "json":
                click.echo(text)
            else:
                renderer(payload)

        return wrapper

    return decorator


def _hamiltonian(cfg: RunConfig) -> CodeHamiltonian:
    return build_concatenated(load_code(cfg.code), cfg.levels, cfg.J)


def _threshold_for(cfg: RunConfig, c1: Optional[float] = None, c2: Optional[float] = None) -> ThresholdReport:
    if c1 is not None:
        return threshold(c1=c1, c2=c2, J=cfg.J)
    if cfg.code.lower() in PRESET_COEFFICIENTS:
        return threshold(preset=cfg.code, J=cfg.J)
    return threshold(code=load_code(cfg.code), J=cfg.J)


# ============================================================================
# code-info
# ============================================================================

def _render_code_info(p: dict):
    lines = [f"{p['name']}  {p['parameters']}  valid={p['valid']}"]
    rows = [("generator", g) for g in p["generators"]]
    rows += [("logical X", g) for g in p["logical_x"]] + [("logical Z", g) for g in p["logical_z"]]
    rows += [("gauge X", g) for g in p["gauge_x"]] + [("gauge Z", g) for g in p["gauge_z"]]
    print_tables([make_table("Operators", ["role", "pauli"], rows)], lines)


@cli.command("code-info")
@common_options
@_run("code-info", _render_code_info)
def code_info(cfg: RunConfig):
    """Générateurs, logiques, distance et validation d'un code"""
    code = load_code(cfg.code, check=False)
    report = validate(code)
    if not report.is_valid:
        raise InvalidCodeError(f"code {code.name!r} is invalid", report.violations)
    d = distance(code, max_weight=min(code.n, _CODE_INFO_MAX_WEIGHT))
    return {
        "name": code.name,
        "n": code.n,
        "k": code.k,
        "gauge_qubits": code.gauge_count,
        "distance": d,
        "distance_search_weight": min(code.n, _CODE_INFO_MAX_WEIGHT),
        "parameters": code.parameters(d),
        "valid": report.is_valid,
        "generators": [format_pauli(g) for g in code.generators],
        "logical_x": [format_pauli(g) for g in code.logical_x],
        "logical_z": [format_pauli(g) for g in code.logical_z],
        "gauge_x": [format_pauli(g) for g in code.gauge_x],
        "gauge_z": [format_pauli(g) for g in code.gauge_z],
    }


# ============================================================================
# spectrum
# ============================================================================

def _render_spectrum(p: dict):
    lines = [
        f"{p['structure']['base']} r={p['structure']['levels']}: "
        f"{p['n_terms']} terms on {p['n_qubits']} qubits, J={p['J']}",
        f"{len(p['levels'])} levels, gap {p['gap_over_J']:g} J",
    ]
    if p["numeric_match"] is not None:
        lines.append(f"dense cross-check: {'✅ match' if p['numeric_match'] else '❌ mismatch'}")
    rows = [(lvl["energy"] / p["J"], lvl["degeneracy"], lvl.get("violated_terms")) for lvl in p["levels"]]
    print_tables([make_table("Spectrum (energies in J)", ["E/J", "degeneracy", "violated"], rows)], lines)


@cli.command("spectrum")
@common_options
@click.option("--numeric", is_flag=True, help="Vérifie par diagonalisation dense")
@_run("spectrum", _render_spectrum)
def spectrum_cmd(cfg: RunConfig, numeric: bool = False):
    """Niveaux d'énergie et dégénérescences"""
    h = _hamiltonian(cfg)
    summary = spectrum(h)
    payload = summary.to_dict()
    payload.update({
        "J": h.J,
        "n_qubits": h.n_qubits,
        "n_terms": len(h.terms),
        "structure": h.structure.to_dict(),
        "gap_over_J": summary.gap / h.J,
        "numeric_match": None,
    })
    if numeric:
        dense = numeric_spectrum(h, max_qubits=cfg.limits.max_dense_qubits)
        payload["numeric_match"] = [
            (round(a.energy, 9), a.degeneracy) for a in summary.levels
        ] == [(round(b.energy, 9), b.degeneracy) for b in dense.levels]
    return payload


# ============================================================================
# perturb
# ============================================================================

def _render_perturb(p: dict):
    lines = [
        f"level {p['level']} (E = {p['energy'] / p['J']:g} J), order {p['order']}, "
        f"x = {p['x']:g}, γ = {p['gamma']:g}",
        f"q = 4x||V||/Δ = {p['convergence_ratio']:.6g}, first order vanishes: {p['first_order_vanishes']}",
    ]
    if p["b0_signed"] is not None:
        lines.append(f"b0 = {p['b0_signed']:.10g} (count bound {p['b0_count_bound']:g}/J)")
    orders = make_table(
        "Series norms", ["m", "||x^m A^(m)||", "||x^m B^(m)||"],
        [(s["order"], s["A_norm"], s["B_norm"]) for s in p["series_norms"]],
    )
    bounds = key_value_table("Bounds", {
        "truncation": p["truncation_bound"],
        "projector truncation": p["projector_truncation_bound"],
        "12n reading": p["alternative_bound_12n"],
        "second-order shift oracle": p["second_order_shift"],
    })
    tables = [orders, bounds]
    if p["logical_norms"]:
        tables.append(make_table("Logical components", ["P", "norm"], sorted(p["logical_norms"].items())))
    print_tables(tables, lines)


@cli.command("perturb")
@common_options
@click.option("--x", "x", type=float, default=None, help="Intensité de la perturbation")
@click.option("--order", type=int, default=None, help="Ordre p de la série de Kato")
@click.option("--level", type=int, default=None, help="Niveau non perturbé i")
@click.option("--kind", type=click.Choice(["uniform", "random", "single"]), default="uniform")
@click.option("--qubit", type=int, default=0, help="Qubit perturbé (--kind single)")
@click.option("--axis", type=click.Choice(["X", "Y", "Z"], case_sensitive=False), default="X")
@_run("perturb", _render_perturb)
def perturb(cfg: RunConfig, kind: str = "uniform", qubit: int = 0, axis: str = "X"):
    """Hamiltonien effectif par la série de Kato"""
    h = _hamiltonian(cfg)
    if kind == "random":
        spec = PerturbationSpec.random(h.n_qubits, cfg.x, seed=cfg.seed)
    elif kind == "single":
        spec = PerturbationSpec.single(h.n_qubits, qubit, axis, cfg.x)
    else:
        spec = PerturbationSpec.uniform(h.n_qubits, cfg.x)
    report = effective_hamiltonian(
        h, spec, level=cfg.level, order=cfg.order,
        max_qubits=cfg.limits.max_perturb_qubits, max_order=cfg.limits.max_kato_order,
        threads=cfg.threads,
    )
    payload = report.to_dict()
    payload["perturbation"] = spec.to_dict()
    payload["kind"] = kind
    flat = h.levels == 1 and h.base_code is not None
    payload["second_order_shift"] = second_order_shift(h.base_code, h.J, spec) if flat else None
    payload["b0_signed"] = report.second_order_coefficient
    payload["b0_count_bound"] = count_same_error_processes(h.base_code) / h.J if flat else None
    return payload


# ============================================================================
# threshold
# ============================================================================

def _render_threshold(p: dict):
    lines = [f"{p['code']}: γ* = {p['gamma_star']:.7f}, x* = {p['x_star']:.7g} (J = {p['J']:g})"]
    if p["erratum_note"]:
        lines.append(f"⚠️ erratum: {p['erratum_note']}")
    print_tables([key_value_table("Threshold", {
        "c1": p["c1"], "c2": p["c2"], "gamma*": p["gamma_star"], "residual": p["residual"],
    })], lines)


@cli.command("threshold")
@common_options
@click.option("--c1", type=float, default=None, help="Coefficient linéaire explicite")
@click.option("--c2", type=float, default=None, help="Coefficient quadratique explicite")
@_run("threshold", _render_threshold)
def threshold_cmd(cfg: RunConfig, c1: Optional[float] = None, c2: Optional[float] = None):
    """Seuil γ* racine de c1·γ + c2·γ² = 1"""
    try:
        report = _threshold_for(cfg, c1, c2)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    return report.to_dict()


# ============================================================================
# counts
# ============================================================================

def _render_counts(p: dict):
    rows = [
        ("same-error pairs (3n)", p["same_error_processes"]),
        ("identity processes", p["identity_processes"]),
        ("  via stabilizer", p["stabilizer_processes"]),
        ("  via gauge", p["gauge_processes"]),
        ("leakage (enumerated)", p["leakage_enumerated"]),
        ("leakage syndrome", p["leakage_syndrome"]),
        ("leakage (m(m-1) rule)", p["leakage_subspace_count"]),
        ("naive σ2 lower", p["naive_sigma2_bounds"]["lower"]),
        ("naive σ2 upper", p["naive_sigma2_bounds"]["upper"]),
    ]
    print_tables([make_table(f"Process counts: {p['code']} (n={p['n']})", ["quantity", "value"], rows)])


@cli.command("counts")
@common_options
@_run("counts", _render_counts)
def counts(cfg: RunConfig):
    """Dénombrement des processus du second ordre"""
    return count_report(load_code(cfg.code)).to_dict()


# ============================================================================
# suppress
# ============================================================================

def _render_suppress(p: dict):
    lines = [f"{p['code']}: x = {p['x']:g} (γ = {p['gamma']:g}), x* = {p['x_star']:.7g}"]
    rows = [
        (r["level"], r["x_r"], r["gamma_r"], r["bound_recursion"], r.get("classical_failure"))
        for r in p["levels"]
    ]
    print_tables([make_table(
        "Suppression by level", ["r", "x_r", "γ_r", "polynomial bound", "classical p_fail"], rows,
    )], lines)


@cli.command("suppress")
@common_options
@click.option("--x", "x", type=float, default=None, help="Couplage physique x")
@click.option("--r-max", type=int, default=4, help="Dernier niveau de concaténation")
@click.option("--p", "p", type=float, default=None, help="Probabilité d'erreur classique")
@click.option("--p-star", type=float, default=None, help="Seuil classique p*")
@click.option("--t-correct", type=int, default=1, help="Erreurs corrigées par bloc")
@_run("suppress", _render_suppress)
def suppress(cfg: RunConfig, r_max: int = 4, p: Optional[float] = None,
             p_star: Optional[float] = None, t_correct: int = 1):
    """Suppression doublement exponentielle x_r = x*(x/x*)^(2^r)"""
    if r_max < 0:
        raise InputError("--r-max must be >= 0")
    report = _threshold_for(cfg)
    curve = suppression_curve(cfg.x, report.x_star, r_max)
    recursion = bound_recursion(cfg.x, report.c1, report.c2, r_max, cfg.J)
    classical = p is not None and p_star is not None
    if classical and (p <= 0 or p_star <= 0):
        raise InputError("--p and --p-star must be > 0")
    levels: List[Dict[str, Any]] = []
    for r, (x_r, bound) in enumerate(zip(curve, recursion)):
        row = {"level": r, "x_r": x_r, "gamma_r": x_r / cfg.J, "bound_recursion": bound}
        if classical:
            row["classical_failure"] = classical_failure_recursion(p, p_star, t_correct, r)
        levels.append(row)
    return {
        "code": report.code_name,
        "x": cfg.x,
        "gamma": cfg.gamma,
        "J": cfg.J,
        "x_star": report.x_star,
        "gamma_star": report.gamma_star,
        "below_threshold": cfg.x < report.x_star,
        "levels": levels,
    }


# ============================================================================
# barrier
# ============================================================================

def _render_barrier(p: dict):
    status = "exact" if p["exact"] else "lower bound only"
    lines = [
        f"barrier = {p['barrier_over_J']:g} J ({status}), certified >= {p['certified_lower_bound'] / p['J']:g} J, "
        f"{p['explored_cosets']} cosets explored",
        f"logical reached: {p['logical_representative']}  witness verified: {p['witness_verified']}",
    ]
    rows = [(i + 1, s["move"], s["operator"], s["energy"] / p["J"]) for i, s in enumerate(p["path"])]
    tables = [make_table("Witness path", ["step", "move", "error", "E/J"], rows)]
    if p.get("graph"):
        tables.append(key_value_table("Coset graph", p["graph"]))
    print_tables(tables, lines)


@cli.command("barrier")
@common_options
@click.option("--move-weight", "move_weight", type=int, default=None, help="Poids maximal des Paulis par pas")
@click.option("--graph", "with_graph", is_flag=True, help="Construit aussi le graphe networkx des classes")
@_run("barrier", _render_barrier)
def barrier(cfg: RunConfig, with_graph: bool = False):
    """Barrière d'énergie minimax vers une erreur logique"""
    h = _hamiltonian(cfg)
    result = energy_barrier(h, move_weight=cfg.move_weight, max_states=cfg.limits.max_barrier_states)
    payload = result.to_dict()
    payload.update({
        "J": h.J,
        "n_qubits": h.n_qubits,
        "levels": h.levels,
        "barrier_over_J": result.barrier / h.J,
        "witness_verified": all(
            abs(error_energy(h, step.operator) - step.energy) < 1e-12 for step in result.path
        ) and (not result.exact or max((s.energy for s in result.path), default=0.0) == result.barrier),
        "graph": None,
    })
    if with_graph:
        graph = coset_graph(h, cfg.limits.max_barrier_states)
        summary = graph_summary(graph)
        summary["spanning_tree_barrier"] = barrier_via_spanning_tree(graph)
        payload["graph"] = summary
    return payload


# ============================================================================
# compile
# ============================================================================

def _render_compile(p: dict):
    lines = [f"{p['target']}: depth {p['depth']} (budget {p['depth_budget']}), "
             f"repetitions {p['circuit']['repetitions']}, gates {p['circuit']['gate_counts']}"]
    if p["verify_error"] is not None:
        ok = "✅" if p["verify_error"] < 1e-10 else "❌"
        lines.append(f"{ok} ||U - target|| = {p['verify_error']:.3e}")
    lines.append(p["text"].rstrip())
    print_tables([], lines)


def _global_phase_distance(U: np.ndarray, target: np.ndarray) -> float:
    overlap = np.trace(target.conj().T @ U)
    phase = overlap / abs(overlap) if abs(overlap) > 0 else 1.0
    return float(np.linalg.norm(U - phase * target, 2))


@cli.command("compile")
@common_options
@click.option("--pauli", default=None, help="Chaîne de Pauli à exponentier, ex. XXXX ou -ZZ")
@click.option("--t", "t", type=float, default=None, help="Durée de l'évolution")
@click.option("--logical", type=click.Choice(["X", "Y", "Z"], case_sensitive=False), default=None,
              help="Compile le Pauli logique du code au lieu d'une évolution")
@click.option("--steps", type=int, default=1, help="Pas d'évolution (répétitions)")
@click.option("--verify", is_flag=True, help="Compare l'unitaire du circuit à scipy.linalg.expm")
@_run("compile", _render_compile)
def compile_cmd(cfg: RunConfig, logical: Optional[str] = None, steps: int = 1, verify: bool = False):
    """Circuit bang-bang de exp(-i t P), d'un pas de H, ou d'un Pauli logique"""
    if steps < 1:
        raise InputError("--steps must be >= 1")
    budget = 5
    target: Optional[np.ndarray] = None
    phase_free = False
    if cfg.pauli:
        p = parse_pauli(cfg.pauli)
        circuit: PulseCircuit = compile_pauli_exponential(p, cfg.t)
        label = f"exp(-i {cfg.t:g} {format_pauli(p)})"
        if verify:
            target = scipy.linalg.expm(-1j * cfg.t * to_dense_matrix(p, cfg.limits.max_circuit_qubits))
    else:
        h = _hamiltonian(cfg)
        budget = depth_budget(h)
        if logical:
            circuit = compile_logical_pauli(h, logical)
            label = f"logical {logical.upper()} on {h.structure.base} r={h.levels}"
            phase_free = True
            if verify:
                target = to_dense_matrix(h.logical(logical), cfg.limits.max_circuit_qubits)
        else:
            circuit = compile_evolution(h, cfg.t, steps)
            label = f"exp(-i {cfg.t:g} H) on {h.structure.base} r={h.levels}, {steps} step(s)"
            if verify:
                target = scipy.linalg.expm(-1j * cfg.t * to_dense(h, cfg.limits.max_circuit_qubits))

    verify_error = None
    if verify:
        U = circuit_unitary(circuit, cfg.limits.max_circuit_qubits)
        if phase_free:
            verify_error = _global_phase_distance(U, target)
        else:
            verify_error = float(np.linalg.norm(U - target, 2))
        logger.info(f"compile verify: ||U - target|| = {verify_error:.3e}")

    return {
        "target": label,
        "t": cfg.t,
        "depth": circuit.depth,
        "depth_budget": budget,
        "within_budget": circuit.depth <= budget,
        "parallel": circuit.is_parallel(),
        "circuit": circuit.to_dict(),
        "text": circuit.to_text(),
        "verify_error": verify_error,
    }


__all__ = ["cli", "QcchGroup", "common_options"]
