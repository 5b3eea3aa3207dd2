import json

import pytest

from common.errors import InvariantBreach
from reports.generator import ReportGenerator
from reports.serializers import Output, format_cell, multiseries_rows, operator_rows, series_rows, to_json, to_tsv
from verify.base_suite import CheckResult, SuiteResult


def sample():
    return Output('char', {'lambda': '[2,1]', 'mu': '[3]', 'value': -1}, ('lambda', 'mu', 'value'),
                  [['[2,1]', '[3]', -1]], title='χ')


def test_json_keeps_payload_order():
    text = to_json(sample())
    assert json.loads(text) == {'lambda': '[2,1]', 'mu': '[3]', 'value': -1}
    assert text.index('lambda') < text.index('value')


def test_tsv_layout():
    lines = to_tsv(sample()).split("\n")
    assert lines[0] == "# winf-tsv v1 char"
    assert lines[1] == "lambda\tmu\tvalue"
    assert lines[2] == "[2,1]\t[3]\t-1"


def test_tsv_rejects_ragged_rows():
    output = Output('x', {}, ('a', 'b'), [[1]])
    with pytest.raises(InvariantBreach):
        to_tsv(output)


def test_format_cell():
    assert format_cell(True) == 'true'
    assert format_cell(None) == ''
    assert format_cell("a\tb\nc") == 'a b c'


def test_row_builders():
    assert series_rows([{'partition': '[1]', 'z_exp': -2, 'coeff': '1'}]) == [['[1]', -2, '1']]
    terms = [{'u_exps': [1, 0], 'partitions': ['[1]', '[]'], 'z_exp': 0, 'coeff': '1/2'}]
    assert multiseries_rows(terms) == [['1,0', '[1];[]', 0, '1/2']]
    operator = {'blocks': [{'n': 1, 'rows': [{'from': '[1]', 'to': '[1]', 'z_exp': 0, 'coeff': '1'}]}]}
    assert operator_rows(operator) == [[1, '[1]', '[1]', 0, '1']]


def test_pretty_rendering():
    text = ReportGenerator().render_pretty(sample())
    lines = text.split("\n")
    assert lines[0] == 'χ'
    assert lines[1].startswith('lambda  mu ')
    assert lines[2].split() == ['[2,1]', '[3]', '-1']
    empty = ReportGenerator().render_pretty(Output('series', {}, ('partition',), [], title='S'))
    assert empty.endswith('(no terms)')


def test_verification_report(tmp_path):
    results = [
        SuiteResult('good', [CheckResult('a', True)]),
        SuiteResult('bad', [CheckResult('b', False, detail='off by one'), CheckResult('c', False, hard=False)]),
    ]
    generator = ReportGenerator()
    text = generator.render_verification(results)
    assert text.startswith('Verification report: FAIL')
    assert '== good: pass' in text
    assert 'FAILED  b: off by one' in text
    assert 'REPORT  c' in text
    path = generator.write_report(results, tmp_path / 'out' / 'report.txt')
    assert path.read_text(encoding='utf-8').startswith('Verification report: FAIL')
