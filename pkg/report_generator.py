"""
Report Generation for tracecode commands
Renders a command report as JSON, CSV or a fixed-width text table.
"""

import io
import json
import logging
import re
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional

import pandas as pd

from result_models import Report, ReportRow

logger = logging.getLogger(__name__)


class ReportGenerator:
    def __init__(self, fmt: str = 'json'):
        if fmt not in ('json', 'csv', 'text'):
            raise ValueError(f"unknown report format {fmt}")
        self.fmt = fmt

    def document(self, report: Report) -> Dict[str, Any]:
        """Report as a plain dictionary with the versioned schema key"""
        data = report.model_dump(mode='json', by_alias=True)
        data['summary'] = report.summary()
        return data

    def generate_json(self, report: Report) -> str:
        return json.dumps(self.document(report), sort_keys=True, indent=2, ensure_ascii=False) + '\n'

    def flatten_row(self, row: ReportRow) -> Dict[str, Any]:
        """One CSV/text record per report row"""
        return {
            'key': row.key,
            'status': row.status,
            'values': json.dumps(row.values, sort_keys=True, ensure_ascii=False),
            'expected': json.dumps(row.expected, sort_keys=True, ensure_ascii=False),
            'params': ' '.join(p.label() for p in row.params),
            'notes': ' | '.join(row.notes),
        }

    def generate_csv(self, report: Report) -> str:
        frame = pd.DataFrame([self.flatten_row(row) for row in report.rows],
                             columns=['key', 'status', 'values', 'expected', 'params', 'notes'])
        buffer = io.StringIO()
        frame.to_csv(buffer, index=False, lineterminator='\n')
        return buffer.getvalue()

    def generate_text(self, report: Report) -> str:
        lines: List[str] = [f"tracecode {report.command} (schema {report.schema_version})"]
        width = max([len(row.key) for row in report.rows] + [3])
        for row in report.rows:
            params = ' '.join(p.label() for p in row.params)
            lines.append(f"{row.key:<{width}}  {row.status:<8}  {params}".rstrip())
            for note in row.notes:
                lines.append(f"{'':<{width}}  - {note}")
        summary = ', '.join(f"{k}={v}" for k, v in sorted(report.summary().items()))
        lines.append(f"summary: {summary or 'no rows'}")
        return '\n'.join(lines) + '\n'

    def render(self, report: Report) -> str:
        if self.fmt == 'csv':
            return self.generate_csv(report)
        if self.fmt == 'text':
            return self.generate_text(report)
        return self.generate_json(report)

    def write(self, report: Report, out: Optional[str] = None) -> str:
        """Write to ``out`` (or stdout) and return the rendered text"""
        text = self.render(report)
        if out:
            path = Path(out)
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(text, encoding='utf-8')
            logger.info(f"Report written to {path}")
        else:
            sys.stdout.write(text)
        return text


def export_code(directory: str, name: str, poly, code) -> List[str]:
    """Write the defining polynomial and the generator matrix of one code under ``directory``"""
    target = Path(directory)
    target.mkdir(parents=True, exist_ok=True)
    stem = re.sub(r'[^A-Za-z0-9]+', '_', name).strip('_')
    files = {
        f"{stem}.poly.json": json.dumps(poly.to_json(), sort_keys=True, indent=2) + '\n',
        f"{stem}.gen.json": json.dumps(code.generator_json(), sort_keys=True) + '\n',
        f"{stem}.gen.txt": code.generator_text() + '\n',
    }
    for file_name, text in files.items():
        (target / file_name).write_text(text, encoding='utf-8')
    logger.info(f"Exported {name} to {target}")
    return sorted(files)
