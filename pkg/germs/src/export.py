import pandas as pd
from typing import Any, Dict, List, Optional, Sequence

from .consts import FLOAT_FORMAT


def hilbert_frame(reports: Sequence) -> pd.DataFrame:
    """One row per k: k, value (inverse spectral norm), prediction, ratio."""
    rows = [{
        'k': report.k,
        'value': report.inverse_spectral_norm,
        'prediction': report.asymptotic_prediction,
        'ratio': report.ratio,
    } for report in reports]
    return pd.DataFrame(rows, columns=['k', 'value', 'prediction', 'ratio'])


def growth_frame(report) -> pd.DataFrame:
    """One row per degree: n, value, root_test, window_max of its block."""
    rows = [{
        'n': n,
        'value': value,
        'root_test': root,
        'window_max': report.window_max[report.window_of(n)],
    } for n, value, root in zip(report.degrees, report.values, report.root_test)]
    return pd.DataFrame(rows, columns=['n', 'value', 'root_test', 'window_max'])


def sweep_frame(records: List[Dict[str, Any]]) -> pd.DataFrame:
    """One row per lambda sample, in input order."""
    columns = ['lam', 'trend', 'root_test_last', 'window_max_last', 'transport']
    return pd.DataFrame([{key: record[key] for key in columns} for record in records], columns=columns)


def series_frame(rows: List[Dict[str, Any]]) -> pd.DataFrame:
    """Exact coefficient rows; coefficients stay "p/q" strings."""
    columns = list(rows[0].keys()) if rows else ['xk', 'yk', 'c']
    return pd.DataFrame(rows, columns=columns)


def to_csv(frame: pd.DataFrame, filename: Optional[str] = None) -> str:
    """
    Render a frame as CSV (header row, comma separator, 17 significant digits).

    Writes to `filename` when given and always returns the text.
    """
    text = frame.to_csv(index=False, float_format=FLOAT_FORMAT, lineterminator='\n')
    if filename is not None:
        with open(filename, 'w', encoding='utf-8', newline='') as handle:
            handle.write(text)
    return text
