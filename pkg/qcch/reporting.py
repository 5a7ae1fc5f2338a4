"""
Sortie des commandes: tables rich ou documents JSON versionnés

Chaque document JSON a la forme {"schema": "qcch.<commande>/1", ...} et est
sérialisé avec sort_keys pour une sortie identique octet par octet.
"""

import json
import logging
import math
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional, Sequence

import numpy as np
from rich.console import Console
from rich.table import Table

from qcch.config.paths import REPORTS_DIR

logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1


def _default(value: Any):
    if isinstance(value, (np.integer,)):
        return int(value)
    if isinstance(value, (np.floating,)):
        return float(value)
    if isinstance(value, np.ndarray):
        return value.tolist()
    if isinstance(value, Path):
        return str(value)
    raise TypeError(f"not JSON serializable: {type(value).__name__}")


def _finite(value: Any):
    """Remplace inf et nan par les chaînes "inf", "-inf", "nan" (JSON strict)"""
    if isinstance(value, dict):
        return {k: _finite(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_finite(v) for v in value]
    if isinstance(value, np.ndarray):
        return _finite(value.tolist())
    if isinstance(value, (float, np.floating)) and not math.isfinite(value):
        return "nan" if math.isnan(value) else ("inf" if value > 0 else "-inf")
    return value


def json_document(command: str, payload: Dict[str, Any]) -> str:
    document = {"schema": f"qcch.{command}/{SCHEMA_VERSION}"}
    document.update(_finite(payload))
    return json.dumps(document, indent=2, sort_keys=True, allow_nan=False, default=_default)


def save_document(command: str, text: str, directory: Optional[Path] = None) -> Path:
    directory = Path(directory or REPORTS_DIR)
    directory.mkdir(parents=True, exist_ok=True)
    path = directory / f"qcch-{command}.json"
    path.write_text(text + "\n", encoding="utf-8")
    logger.info(f"✅ Rapport sauvegardé: {path}")
    return path


def console() -> Console:
    # résolu à chaque appel pour suivre sys.stdout (CliRunner)
    return Console(highlight=False, markup=False, soft_wrap=True)


def make_table(title: str, columns: Sequence[str], rows: Iterable[Sequence[Any]]) -> Table:
    table = Table(title=title, show_lines=False)
    for col in columns:
        table.add_column(col)
    for row in rows:
        table.add_row(*[_fmt(v) for v in row])
    return table


def _fmt(value: Any) -> str:
    if isinstance(value, float):
        if value == 0.0:
            return "0"
        if abs(value) >= 1e5 or abs(value) < 1e-3:
            return f"{value:.6e}"
        return f"{value:.7g}"
    if value is None:
        return "-"
    return str(value)


def print_tables(tables: List[Table], lines: Sequence[str] = ()):
    out = console()
    for line in lines:
        out.print(line)
    for table in tables:
        out.print(table)


def key_value_table(title: str, items: Dict[str, Any]) -> Table:
    return make_table(title, ["field", "value"], items.items())


__all__ = [
    "SCHEMA_VERSION",
    "json_document",
    "save_document",
    "console",
    "make_table",
    "print_tables",
    "key_value_table",
]
