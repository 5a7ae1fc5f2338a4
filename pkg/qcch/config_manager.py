import logging
import os
from typing import Any, Dict, Optional

import yaml
from pydantic import BaseModel, Field, ValidationError, field_validator, model_validator

from qcch.config.limits import Limits, get_limits
from qcch.config.paths import PROFILES_FILE
from qcch.errors import InputError

logger = logging.getLogger(__name__)

OUTPUT_FORMATS = ("table", "json")


class RunConfig(BaseModel):
    """Paramètres d'une commande: flags CLI > profil YAML > défauts"""

    code: str = "five-qubit"
    J: float = 1.0
    x: float = 0.0
    levels: int = 1
    order: int = 2
    level: int = 0
    move_weight: int = 1
    t: float = 0.1
    pauli: Optional[str] = None
    output: str = "table"
    seed: int = 0
    threads: int = 1
    max_dim: Optional[int] = Field(default=None, gt=0)
    max_states: Optional[int] = Field(default=None, gt=0)
    max_order: Optional[int] = Field(default=None, gt=0)

    @field_validator("J")
    @classmethod
    def check_J(cls, v: float) -> float:
        if v <= 0:
            raise ValueError("J must be > 0")
        return v

    @field_validator("x")
    @classmethod
    def check_x(cls, v: float) -> float:
        if v < 0:
            raise ValueError("x must be >= 0")
        return v

    @field_validator("levels", "threads", "move_weight")
    @classmethod
    def check_positive(cls, v: int) -> int:
        if v < 1:
            raise ValueError("must be >= 1")
        return v

    @field_validator("level")
    @classmethod
    def check_level(cls, v: int) -> int:
        if v < 0:
            raise ValueError("level must be >= 0")
        return v

    @field_validator("output")
    @classmethod
    def check_output(cls, v: str) -> str:
        v = v.lower()
        if v not in OUTPUT_FORMATS:
            raise ValueError(f"output must be one of {', '.join(OUTPUT_FORMATS)}")
        return v

    @model_validator(mode="after")
    def check_order(self):
        cap = self.limits.max_kato_order
        if not 1 <= self.order <= cap:
            raise ValueError(f"order must be in 1..{cap}")
        return self

    @property
    def limits(self) -> Limits:
        return get_limits().with_overrides(self.max_dim, self.max_states, self.max_order)

    @property
    def gamma(self) -> float:
        return self.x / self.J


class ConfigManager:
    def __init__(self, profiles_file: str = str(PROFILES_FILE)):
        self.profiles_file = profiles_file
        self.profiles: Dict[str, Dict[str, Any]] = {}
        self._load_profiles()

    def _load_profiles(self):
        """Charge les profils YAML s'ils existent"""
        if not os.path.exists(self.profiles_file):
            logger.debug(f"Pas de profils: {self.profiles_file}")
            return
        try:
            with open(self.profiles_file, 'r', encoding='utf-8') as f:
                data = yaml.safe_load(f) or {}
            self.profiles = {str(k): dict(v or {}) for k, v in data.get('profiles', {}).items()}
            logger.info(f"Profils chargés: {', '.join(self.profiles) or 'aucun'}")
        except (OSError, yaml.YAMLError, AttributeError) as e:
            logger.error(f"❌ Erreur lors du chargement des profils: {e}")
            self.profiles = {}

    def get_profile(self, name: str) -> Dict[str, Any]:
        if name not in self.profiles:
            raise InputError(f"unknown profile {name!r}; available: {', '.join(self.profiles) or 'none'}")
        return dict(self.profiles[name])

    def resolve(self, profile: Optional[str] = None, **overrides) -> RunConfig:
        """Fusionne défauts < profil < overrides (les None sont ignorés)"""
        values: Dict[str, Any] = {}
        if profile:
            values.update(self.get_profile(profile))
        values.update({k: v for k, v in overrides.items() if v is not None})
        try:
            return RunConfig(**values)
        except ValidationError as exc:
            first = exc.errors()[0]
            field = ".".join(str(p) for p in first.get("loc", ())) or "config"
            raise InputError(f"invalid {field}: {first['msg']}") from exc

    def save_profile(self, name: str, config: RunConfig):
        self.profiles[name] = config.model_dump(exclude_none=True)
        os.makedirs(os.path.dirname(self.profiles_file), exist_ok=True)
        with open(self.profiles_file, 'w', encoding='utf-8') as f:
            yaml.safe_dump({'profiles': self.profiles}, f, sort_keys=True)


config_manager = ConfigManager()

__all__ = ['RunConfig', 'ConfigManager', 'config_manager', 'OUTPUT_FORMATS']
