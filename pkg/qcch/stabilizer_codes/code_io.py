"""
Fichiers de définition de codes (JSON)

Format:
    {"name": ..., "n": 5, "generators": ["XZZXI", ...], "logical_x": [...],
     "logical_z": [...], "gauge_x": [...], "gauge_z": [...]}
"""

import json
import logging
from pathlib import Path
from typing import List, Union

from pydantic import BaseModel, Field, ValidationError, model_validator

from qcch.config.paths import CODES_DIR
from qcch.errors import InvalidCodeError, PauliParseError
from qcch.pauli_algebra import format_pauli, parse_pauli

from .code import StabilizerCode, validate
from .presets import PRESETS

logger = logging.getLogger(__name__)


class CodeDefinition(BaseModel):
    name: str
    n: int = Field(gt=0)
    generators: List[str] = Field(default_factory=list)
    logical_x: List[str] = Field(default_factory=list)
    logical_z: List[str] = Field(default_factory=list)
    gauge_x: List[str] = Field(default_factory=list)
    gauge_z: List[str] = Field(default_factory=list)

    @model_validator(mode="after")
    def check_lengths(self):
        for attr in ("generators", "logical_x", "logical_z", "gauge_x", "gauge_z"):
            for text in getattr(self, attr):
                letters = text.lstrip("+-i")
                if len(letters) != self.n:
                    raise ValueError(f"{attr} entry {text!r} has {len(letters)} letters, expected {self.n}")
        return self

    def to_code(self) -> StabilizerCode:
        try:
            ops = {attr: tuple(parse_pauli(t) for t in getattr(self, attr))
                   for attr in ("generators", "logical_x", "logical_z", "gauge_x", "gauge_z")}
        except PauliParseError as exc:
            raise InvalidCodeError(f"code {self.name!r}: {exc}") from exc
        return StabilizerCode(name=self.name, n=self.n, **ops)

    @classmethod
    def from_code(cls, code: StabilizerCode) -> "CodeDefinition":
        fmt = lambda ops: [format_pauli(op) for op in ops]  # noqa: E731
        return cls(
            name=code.name,
            n=code.n,
            generators=fmt(code.generators),
            logical_x=fmt(code.logical_x),
            logical_z=fmt(code.logical_z),
            gauge_x=fmt(code.gauge_x),
            gauge_z=fmt(code.gauge_z),
        )


def code_to_dict(code: StabilizerCode) -> dict:
    return CodeDefinition.from_code(code).model_dump()


def code_from_dict(data: dict, check: bool = True) -> StabilizerCode:
    try:
        definition = CodeDefinition.model_validate(data)
    except ValidationError as exc:
        raise InvalidCodeError(f"malformed code definition: {exc.errors()[0]['msg']}") from exc
    code = definition.to_code()
    if check:
        report = validate(code)
        if not report.is_valid:
            raise InvalidCodeError(f"code {code.name!r} is invalid", report.violations)
    return code


def _resolve(ref: Union[str, Path]) -> Path:
    path = Path(ref)
    if path.exists():
        return path
    candidate = CODES_DIR / f"{ref}.json"
    if candidate.exists():
        return candidate
    raise InvalidCodeError(f"code {ref!r} is neither a preset nor a readable file")


def load_code(ref: Union[str, Path], check: bool = True) -> StabilizerCode:
    """Preset ("five-qubit", "nine-qubit"), chemin JSON, ou nom dans CODES_DIR"""
    if isinstance(ref, str) and ref.lower() in PRESETS:
        return PRESETS[ref.lower()]()
    path = _resolve(ref)
    try:
        with open(path, "r", encoding="utf-8") as f:
            data = json.load(f)
    except (OSError, json.JSONDecodeError) as exc:
        logger.error(f"❌ Lecture du code {path}: {exc}")
        raise InvalidCodeError(f"cannot read code file {path}: {exc}") from exc
    code = code_from_dict(data, check=check)
    logger.info(f"Code {code.name} chargé depuis {path}")
    return code


def save_code(code: StabilizerCode, path: Union[str, Path]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        json.dump(code_to_dict(code), f, ensure_ascii=False, indent=2)
    return path


__all__ = ["CodeDefinition", "code_to_dict", "code_from_dict", "load_code", "save_code"]
