import io
import json

import pandas as pd

from golden_tables import load_constructions, load_table1, load_table8, parse_terms
from report_generator import ReportGenerator
from result_models import QuantumParams, Report, ReportRow


def _report():
    params = QuantumParams(n=160, k=96, d=12, q=2)
    return Report(command='build', config={'jobs': 1}, rows=[
        ReportRow(key='record', values={'k': 96}, expected={'k': 96}, params=[params], notes=['ok']),
        ReportRow(key='broken', status='error', notes=['DomainError: bad']),
    ])


def test_json_document_has_schema_and_summary():
    text = ReportGenerator('json').render(_report())
    data = json.loads(text)
    assert data['schema'] == 1
    assert data['summary'] == {'match': 1, 'error': 1}
    assert data['rows'][0]['params'][0]['n'] == 160
    assert text == ReportGenerator('json').render(_report())


def test_csv_has_one_line_per_row():
    frame = pd.read_csv(io.StringIO(ReportGenerator('csv').render(_report())))
    assert list(frame.columns) == ['key', 'status', 'values', 'expected', 'params', 'notes']
    assert frame['status'].tolist() == ['match', 'error']
    assert frame['params'][0] == '[[160,96,≥12]]_2'


def test_text_table_and_file_output(tmp_path):
    out = tmp_path / 'reports' / 'build.txt'
    text = ReportGenerator('text').write(_report(), str(out))
    assert out.read_text(encoding='utf-8') == text
    assert '[[160,96,≥12]]_2' in text
    assert 'summary: error=1, match=1' in text


def test_failed_report():
    assert _report().failed
    assert not Report(command='gv', rows=[ReportRow(key='x', status='info')]).failed


def test_golden_tables_load():
    assert len(load_table1()) == 13
    assert len(load_constructions()) == 110
    table8 = load_table8()
    assert len(table8) == 20
    assert table8[6]['alt_delta_top'] == 7
    assert table8[0]['alt_delta_top'] is None


def test_parse_terms():
    assert parse_terms('5:3') == {3: 5}
    assert parse_terms('1:19;0:10') == {19: 1, 10: 0}
