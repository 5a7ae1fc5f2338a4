"""
Seuils de couplage et récurrences de concaténation

Le seuil γ* est la racine positive de c1·γ + c2·γ² = 1; pour les codes
intégrés c1 = (processus même-erreur) + (canal de fuite) et c2 = 60³.
"""

import logging
import math
from dataclasses import dataclass
from typing import List, Optional

from qcch.errors import InputError
from qcch.stabilizer_codes import StabilizerCode, get_preset

from .counting import count_leakage_channel, count_same_error_processes

logger = logging.getLogger(__name__)

QUADRATIC_COEFFICIENT = 60 ** 3

PRESET_COEFFICIENTS = {
    "five-qubit": (27, QUADRATIC_COEFFICIENT),
    "nine-qubit": (71, QUADRATIC_COEFFICIENT),
}

ERRATA = {
    "five-qubit": "the closed form (sqrt(96081)-9)/14400 usually quoted has a dropped zero: "
                  "the denominator is 144000, matching 0.0020901",
}


@dataclass
class ThresholdReport:
    code_name: str
    c1: float
    c2: float
    gamma_star: float
    J: float = 1.0
    erratum: Optional[str] = None

    @property
    def x_star(self) -> float:
        return self.gamma_star * self.J

    @property
    def residual(self) -> float:
        """c1·γ* + c2·γ*² - 1"""
        return self.c1 * self.gamma_star + self.c2 * self.gamma_star ** 2 - 1.0

    def to_dict(self) -> dict:
        return {
            "code": self.code_name,
            "c1": self.c1,
            "c2": self.c2,
            "gamma_star": self.gamma_star,
            "x_star": self.x_star,
            "J": self.J,
            "residual": self.residual,
            "erratum": self.erratum is not None,
            "erratum_note": self.erratum,
        }


def solve_threshold(c1: float, c2: float) -> float:
    """Racine positive de c1·γ + c2·γ² = 1.

    (-c1 + sqrt(c1² + 4c2))/(2c2) écrit sous la forme 2/(c1 + sqrt(c1² + 4c2)),
    stable et valable pour c2 = 0.
    """
    if c1 < 0 or c2 < 0 or (c1 == 0 and c2 == 0):
        raise ValueError(f"threshold needs c1, c2 >= 0 not both zero (got {c1}, {c2})")
    return 2.0 / (c1 + math.sqrt(c1 * c1 + 4.0 * c2))


def threshold_coefficients(code: StabilizerCode) -> tuple:
    """(c1, c2) à partir des dénombrements du code"""
    return count_same_error_processes(code) + count_leakage_channel(code), QUADRATIC_COEFFICIENT


def threshold(preset: Optional[str] = None, c1: Optional[float] = None, c2: Optional[float] = None,
              J: float = 1.0, code: Optional[StabilizerCode] = None) -> ThresholdReport:
    """Seuil d'un preset, d'un code (coefficients dénombrés) ou de (c1, c2) explicites"""
    if c1 is not None:
        name = preset or "custom"
        coeffs = (c1, QUADRATIC_COEFFICIENT if c2 is None else c2)
    elif preset is not None and preset.lower() in PRESET_COEFFICIENTS:
        name = preset.lower()
        coeffs = PRESET_COEFFICIENTS[name]
    else:
        code = code if code is not None else get_preset(preset or "five-qubit")
        name = code.name
        coeffs = threshold_coefficients(code)
    gamma = solve_threshold(*coeffs)
    report = ThresholdReport(name, float(coeffs[0]), float(coeffs[1]), gamma, J, ERRATA.get(name))
    logger.info(f"Threshold {name}: c1={coeffs[0]}, c2={coeffs[1]}, γ*={gamma:.7f}")
    return report


def effective_coupling_bound(x: float, c1: float, c2: float, J: float = 1.0) -> float:
    """Couplage effectif au niveau suivant: J(c1γ² + c2γ³), γ = x/J; vaut x en x*"""
    gamma = x / J
    return J * (c1 * gamma ** 2 + c2 * gamma ** 3)


def bound_recursion(x: float, c1: float, c2: float, r_max: int, J: float = 1.0) -> List[float]:
    """x_0 = x, x_(r+1) = effective_coupling_bound(x_r)"""
    values = [x]
    for _ in range(r_max):
        values.append(effective_coupling_bound(values[-1], c1, c2, J))
    return values


def suppression_curve(x: float, x_star: float, r_max: int) -> List[float]:
    """x_r = x*·(x/x*)^(2^r) pour r = 0..r_max"""
    if x_star <= 0:
        raise InputError(f"threshold coupling must be > 0, got {x_star}")
    if x < 0:
        raise ValueError(f"coupling must be >= 0, got {x}")
    ratio = x / x_star
    return [x_star * ratio ** (2 ** r) for r in range(r_max + 1)]


def classical_failure_recursion(p: float, p_star: float, t: int, r: int) -> float:
    """p_fail = p*·(p/p*)^((t+1)^r)"""
    if p <= 0 or p_star <= 0:
        raise ValueError("probabilities must be > 0")
    return p_star * (p / p_star) ** ((t + 1) ** r)


__all__ = [
    "QUADRATIC_COEFFICIENT",
    "PRESET_COEFFICIENTS",
    "ThresholdReport",
    "solve_threshold",
    "threshold_coefficients",
    "threshold",
    "effective_coupling_bound",
    "bound_recursion",
    "suppression_curve",
    "classical_failure_recursion",
]
