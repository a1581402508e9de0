"""
Report writer - JSON or CSV, written atomically
"""

import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Sequence, Union

import pandas as pd

from config import REPORT_CONFIG
from core.errors import ReportError
from utils.atomic_files import atomic_write_text

logger = logging.getLogger(__name__)

PARAMETER_COLUMNS = ("h", "q", "r", "dt")


def build_payload(results: Sequence, seed: int) -> Dict[str, Any]:
    return {
        "suite_version": REPORT_CONFIG["suite_version"],
        "seed": seed,
        "results": [result.to_record() for result in results],
    }


def results_frame(results: Sequence) -> pd.DataFrame:
    """One row per result in the fixed CSV column order."""
    rows = []
    for result in results:
        record = result.to_record()
        row = {column: record.get(column) for column in REPORT_CONFIG["csv_columns"]}
        for key in PARAMETER_COLUMNS:
            row[key] = record["parameters"].get(key)
        rows.append(row)
    return pd.DataFrame(rows, columns=REPORT_CONFIG["csv_columns"])


def write_report(results: List, path: Union[str, Path], format: str = "json", seed: int = 0) -> Path:
    """
    Write every result record to path.
    Raises ReportError for an empty result list or an unknown format.
    """
    if not results:
        raise ReportError("no results to report; refusing to write an empty report")
    if format == "json":
        text = json.dumps(build_payload(results, seed), sort_keys=True, indent=2, allow_nan=False) + "\n"
    elif format == "csv":
        text = results_frame(results).to_csv(index=False)
    else:
        raise ReportError(f"unknown report format {format!r}; expected json or csv")

    target = atomic_write_text(path, text)
    logger.info("💾 Report written: %s (%d results, %s)", target, len(results), format)
    return target
