"""
qcch: Hamiltoniens de codes stabilisateurs concaténés

Algèbre de Pauli, codes, Hamiltoniens concaténés, série de Kato,
analyse de seuil et compilation bang-bang, exposés par la CLI `run_qcch.py`.
"""

__version__ = "0.1.0"

__all__ = ["__version__"]
