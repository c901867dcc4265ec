"""
Base experiment class for the CSV-producing statistical harnesses
"""
import csv
from abc import ABC, abstractmethod
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

from loguru import logger

from geometry import GeometryConfig


class BaseExperiment(ABC):
    """Base class for all experiments"""

    def __init__(self, name: str, csv_name: str, seed: int, geometry: GeometryConfig):
        self.name = name
        self.csv_name = csv_name
        self.seed = seed
        self.geometry = geometry

    @property
    @abstractmethod
    def fieldnames(self) -> List[str]:
        """CSV header of this experiment"""

    @abstractmethod
    def run(self) -> List[Any]:
        """Execute the experiment and return its rows"""

    @abstractmethod
    def get_description(self) -> str:
        """One-line description for logs and reports"""

    @abstractmethod
    def row_to_dict(self, row: Any) -> Dict[str, Any]:
        """Flatten one row into CSV cells"""

    def write_csv(self, rows: List[Any], out_dir: Union[str, Path]) -> Path:
        """Write rows under ``out_dir``, header first, LF line endings"""
        path = Path(out_dir) / self.csv_name
        path.parent.mkdir(parents=True, exist_ok=True)
        with path.open("w", encoding="utf-8", newline="") as f:
            writer = csv.DictWriter(f, fieldnames=self.fieldnames, lineterminator="\n")
            writer.writeheader()
            for row in rows:
                writer.writerow(self.row_to_dict(row))
        logger.info(f"{self.name}: wrote {len(rows)} row(s) to {path}")
        return path


def positive_or_default(name: str, value: Optional[int], default: int) -> int:
    """``value`` unless it is None; an explicit value below 1 is an error"""
    if value is None:
        return default
    if value < 1:
        raise ValueError(f"{name} must be >= 1, got {value}")
    return value


def format_float(value: float) -> str:
    """Fixed-precision float text so CSV bytes do not depend on repr quirks"""
    return f"{value:.6f}"
