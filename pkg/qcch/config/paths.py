"""
Configuration des chemins du workbench

Ce module centralise les dossiers de données: logs, codes utilisateur,
rapports JSON et profils de configuration.

Usage:
    from qcch.config.paths import LOGS_DIR, CODES_DIR, REPORTS_DIR

Le dossier racine peut être surchargé avec QCCH_DATA_DIR (via .env ou
variable d'environnement), sinon ./data à la racine du projet.
"""

import os
from pathlib import Path

# ============================================================================
# Configuration des chemins de base
# ============================================================================

PROJECT_ROOT = Path(__file__).resolve().parent.parent.parent

DATA_DIR = Path(os.getenv('QCCH_DATA_DIR') or PROJECT_ROOT / 'data')

# ============================================================================
# Chemins des logs
# ============================================================================

LOGS_DIR = DATA_DIR / 'logs'
QCCH_LOG = LOGS_DIR / 'qcch.log'

# ============================================================================
# Codes, rapports et profils
# ============================================================================

CODES_DIR = DATA_DIR / 'codes'  # définitions JSON de codes utilisateur
REPORTS_DIR = DATA_DIR / 'reports'  # sorties --save de la CLI
CONFIG_DIR = DATA_DIR / 'config'
PROFILES_FILE = CONFIG_DIR / 'profiles.yaml'

# ============================================================================
# Création des dossiers
# ============================================================================

def ensure_directories():
    """Crée tous les dossiers nécessaires"""
    for d in (DATA_DIR, LOGS_DIR, CODES_DIR, REPORTS_DIR, CONFIG_DIR):
        d.mkdir(parents=True, exist_ok=True)


def print_paths_info():
    """Affiche les chemins configurés (debug)"""
    print("=" * 70)
    print("📁 Configuration des chemins")
    print("=" * 70)
    print(f"DATA_DIR:      {DATA_DIR}")
    print(f"LOGS_DIR:      {LOGS_DIR}")
    print(f"CODES_DIR:     {CODES_DIR}")
    print(f"REPORTS_DIR:   {REPORTS_DIR}")
    print(f"PROFILES_FILE: {PROFILES_FILE}")
    print("=" * 70)


if __name__ == "__main__":
    print_paths_info()


__all__ = [
    'PROJECT_ROOT',
    'DATA_DIR',
    'LOGS_DIR',
    'QCCH_LOG',
    'CODES_DIR',
    'REPORTS_DIR',
    'CONFIG_DIR',
    'PROFILES_FILE',
    'ensure_directories',
    'print_paths_info',
]
