"""
Exceptions du workbench qcch.

Chaque exception porte le code de sortie utilisé par la CLI:
2 pour une entrée invalide, 3 pour un plafond dépassé ou une série divergente.
"""


class QcchError(Exception):
    """Base de toutes les erreurs qcch"""

    exit_code = 1


# ============================================================================
# Erreurs d'entrée (exit 2)
# ============================================================================

class InputError(QcchError):
    exit_code = 2


class PauliParseError(InputError, ValueError):
    """Texte Pauli invalide (vide, caractère inconnu, préfixe mal formé)"""


class DimensionMismatchError(InputError, ValueError):
    """Opérateurs ou codes avec des nombres de qubits différents"""


class InvalidCodeError(InputError):
    """Code qui ne passe pas la validation, ou fichier de code mal formé"""

    def __init__(self, message: str, violations=None):
        super().__init__(message)
        self.violations = list(violations or [])


class ConstructionError(InputError):
    """Construction incohérente: termes qui anticommutent, transversal en conflit"""


class CompilationError(InputError):
    """Pauli impossible à compiler (identité, phase non hermitienne)"""


# ============================================================================
# Plafonds et divergence (exit 3)
# ============================================================================

class CapExceededError(QcchError):
    exit_code = 3

    def __init__(self, what: str, requested, cap):
        super().__init__(f"{what}: {requested} exceeds cap {cap}")
        self.what = what
        self.requested = requested
        self.cap = cap


class DivergenceError(QcchError):
    """Rapport de convergence q = 4x||V||/Δ >= 1"""

    exit_code = 3

    def __init__(self, q: float):
        super().__init__(f"perturbation series does not converge: q = {q:.6g} >= 1")
        self.q = q


__all__ = [
    "QcchError",
    "InputError",
    "PauliParseError",
    "DimensionMismatchError",
    "InvalidCodeError",
    "ConstructionError",
    "CompilationError",
    "CapExceededError",
    "DivergenceError",
]
