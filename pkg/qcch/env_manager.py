import os
import logging
from typing import Optional

from dotenv import load_dotenv

from qcch.config.paths import PROJECT_ROOT

logger = logging.getLogger(__name__)


class EnvManager:
    """Gestionnaire des variables d'environnement QCCH_*"""

    def __init__(self, env_file: Optional[str] = None):
        self._load_dotenv(env_file)

    def _load_dotenv(self, env_file: Optional[str]):
        """Charge le fichier .env s'il existe (sans écraser l'environnement système)"""
        path = env_file or str(PROJECT_ROOT / '.env')
        if os.path.exists(path):
            load_dotenv(path, override=False)
            logger.debug(f"Fichier .env chargé: {path}")
        else:
            logger.debug("Fichier .env non trouvé, utilisation des variables d'environnement système")

    def get_int(self, key: str, default: int) -> int:
        """Lit un entier; valeur invalide -> défaut avec un warning"""
        raw = os.environ.get(key, '').strip()
        if not raw:
            return default
        try:
            return int(raw)
        except ValueError:
            logger.warning(f"⚠️ {key}={raw!r} n'est pas un entier, utilisation de {default}")
            return default

    def get_str(self, key: str, default: str = '') -> str:
        return os.environ.get(key, default).strip() or default

    @property
    def max_dim(self) -> Optional[int]:
        """Plafond dense (qubits) si QCCH_MAX_DIM est défini"""
        value = self.get_int('QCCH_MAX_DIM', 0)
        return value if value > 0 else None

    @property
    def log_level(self) -> str:
        return self.get_str('QCCH_LOG_LEVEL', 'WARNING').upper()


env_manager = EnvManager()

__all__ = ['EnvManager', 'env_manager']
