"""
Golden expected-value tables shipped with the repository
"""

import logging
from pathlib import Path
from typing import Dict, List, Optional, Tuple

import pandas as pd

from config import Config

logger = logging.getLogger(__name__)


def _read(name: str, directory: Optional[Path] = None) -> pd.DataFrame:
    path = Path(directory or Config.GOLDEN_DIR) / name
    frame = pd.read_csv(path)
    logger.debug(f"Loaded {len(frame)} golden rows from {path}")
    return frame


def _optional_int(value) -> Optional[int]:
    return None if pd.isna(value) else int(value)


def load_table1(directory: Optional[Path] = None) -> List[Dict[str, int]]:
    frame = _read('table1.csv', directory)
    return [{key: int(value) for key, value in row.items()} for row in frame.to_dict('records')]


def load_constructions(directory: Optional[Path] = None) -> List[Dict[str, object]]:
    frame = _read('constructions.csv', directory)
    rows = []
    for row in frame.to_dict('records'):
        rows.append({
            'source': str(row['source']),
            'q': int(row['q']), 'n': int(row['n']), 't': int(row['t']),
            'construction': str(row['construction']),
            'n_prime': _optional_int(row['n_prime']),
            'r': _optional_int(row['r']),
            'tau': int(row['tau']),
            'length': int(row['length']), 'k': int(row['k']), 'd': int(row['d']),
            'alphabet': int(row['alphabet']),
        })
    return rows


def parse_terms(terms: str) -> Dict[int, int]:
    """'5:3;0:10' -> {3: 5, 10: 0}: X exponent -> log of its coefficient"""
    h: Dict[int, int] = {}
    for term in terms.split(';'):
        coeff_log, exponent = (int(part) for part in term.split(':'))
        h[exponent] = coeff_log
    return h


def load_table8(directory: Optional[Path] = None) -> List[Dict[str, object]]:
    frame = _read('table8.csv', directory)
    rows = []
    for row in frame.to_dict('records'):
        rows.append({
            'row': int(row['row']),
            'terms': str(row['terms']),
            'claimed_m': int(row['claimed_m']),
            'delta_top': int(row['delta_top']),
            'alt_delta_top': _optional_int(row['alt_delta_top']),
            'length': int(row['length']), 'k': int(row['k']), 'd': int(row['d']),
        })
    return rows


def expected_triple(row: Dict[str, object]) -> Tuple[int, int, int]:
    return int(row['length']), int(row['k']), int(row['d'])
