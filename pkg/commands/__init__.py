"""
Command handlers for the tracecode CLI
"""

import logging
from typing import Callable, Iterable, List, Sequence, TypeVar

from joblib import Parallel, delayed
from tqdm import tqdm

from models.qadic import b_of_t
from result_models import ReportRow, RunConfig

logger = logging.getLogger(__name__)

Item = TypeVar('Item')


def guarded(fn: Callable[[Item, RunConfig], ReportRow], key: Callable[[Item], str]):
    """Turn an exception inside one row into an error row"""
    def run(item: Item, cfg: RunConfig) -> ReportRow:
        try:
            return fn(item, cfg)
        except Exception as e:
            logger.error(f"Error processing {key(item)}: {e}")
            return ReportRow(key=key(item), status='error', notes=[f"{type(e).__name__}: {e}"])
    return run


def run_rows(items: Sequence[Item], fn: Callable[[Item, RunConfig], ReportRow], cfg: RunConfig,
             key: Callable[[Item], str], desc: str) -> List[ReportRow]:
    """Process rows in input order, optionally on a thread pool"""
    worker = guarded(fn, key)
    progress: Iterable[Item] = tqdm(items, desc=desc, disable=cfg.quiet, leave=False)
    if cfg.jobs > 1 and len(items) > 1:
        return list(Parallel(n_jobs=cfg.jobs, prefer='threads')(
            delayed(worker)(item, cfg) for item in progress))
    return [worker(item, cfg) for item in progress]


def matches_filters(row: dict, cfg: RunConfig) -> bool:
    """Row selection by --q/--n/--t/--b; b is derived from t when a row lacks it"""
    if 'b' not in row and 't' in row:
        row = dict(row, b=b_of_t(row['q'], row['t']))
    return all(row.get(key) in values for key, values in cfg.filters().items())
