import json

import pytest

from main import EXIT_INTERNAL, EXIT_OK, EXIT_USAGE, EXIT_VERIFY_FAILED, parse_term, run
from combinatorics.partitions import Partition
from common.errors import InvalidInputError


def run_json(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr().out
    return code, (json.loads(out) if code == EXIT_OK and out.strip() else None)


def test_empty_character(capsys):
    code, payload = run_json(capsys, 'char', '[]', '[]')
    assert code == EXIT_OK
    assert payload['value'] == 1


def test_phi(capsys):
    code, payload = run_json(capsys, 'phi', '[2,1]', '[1,1]')
    assert payload == {'lambda': '[2,1]', 'delta': '[1,1]', 'value': '3'}


def test_class_product(capsys):
    code, payload = run_json(capsys, 'classprod', '[1]', '[2]')
    assert code == EXIT_OK
    assert set(payload) == {'lhs', 'rhs', 'result'}
    assert (payload['lhs'], payload['rhs']) == ('[1]', '[2]')
    assert payload['result'] == [{'partition': '[2]', 'coeff': '2'}, {'partition': '[2,1]', 'coeff': '1'}]


def test_class_product_in_larger_ambient_degree(capsys):
    code, payload = run_json(capsys, 'classprod', '[2]', '[2]', '--n', '5')
    assert code == EXIT_OK
    assert payload['result'] == [{'partition': '[1,1]', 'coeff': '1'}, {'partition': '[3]', 'coeff': '3'},
                                 {'partition': '[2,2]', 'coeff': '2'}]


def test_hurwitz_mixed_value(capsys):
    code, payload = run_json(capsys, 'hurwitz', '0', '7', '[4,3]', '[2,1]', '[4,2,1]')
    assert code == EXIT_OK
    assert payload['value'] == '5/4'
    assert payload['h'] == -1
    assert payload['connected'] is False


def test_hurwitz_connected_and_classical(capsys):
    code, payload = run_json(capsys, 'hurwitz', '--connected', '--classical', '0', '3', '[2,1]', '[2]', '[3]')
    assert code == EXIT_OK
    assert payload['value'] == '1'
    assert payload['connected'] is True
    assert 'classical' in payload


def test_hurwitz_bounds(capsys):
    assert run(['hurwitz', '0', '9', '[2]']) == EXIT_USAGE
    assert run(['--max-n', '20', 'hurwitz', '0', '13']) == EXIT_USAGE
    assert run(['hurwitz', '3', '2']) == EXIT_USAGE
    assert "exceeds" in capsys.readouterr().err


@pytest.mark.parametrize("argv", [
    ['char', '[2,x]', '[3]'],
    ['char', '[2,1]', '[2]'],
    ['phi'],
    ['verify', 'nope'],
    ['--threads', '0', 'char', '[1]', '[1]'],
    ['--config', '/nonexistent/winf.conf', 'char', '[1]', '[1]'],
    ['cutjoin', 'build', '[3]', '--method', 'explicit'],
    ['genfun', '--insert', 'u=[]'],
    ['hurwitz', '0', '7', '[4,3', '[2,1]', '[4,2,1]'],
    ['hurwitz', '0', '7', '4,3]', '[2,1]', '[4,2,1]'],
    ['hurwitz', '0', '7', '(4,3]', '[2,1]', '[4,2,1]'],
    ['classprod', '[1', '[2]'],
])
def test_usage_errors(argv):
    assert run(argv) == EXIT_USAGE


def test_help_exits_cleanly(capsys):
    assert run(['--help']) == EXIT_OK


def test_cutjoin_build_and_apply(capsys):
    code, payload = run_json(capsys, 'cutjoin', '--N', '2', 'build', '[2]')
    assert code == EXIT_OK
    assert payload['label'] == 'W([2])'
    assert {'from': '[1,1]', 'to': '[2]', 'z_exp': 2, 'coeff': '1'} in payload['blocks'][2]['rows']

    code, payload = run_json(capsys, 'cutjoin', '--N', '2', 'apply', '[2]', '[1,1]')
    assert payload['terms'] == [{'partition': '[2]', 'z_exp': 2, 'coeff': '1'}]

    code, payload = run_json(capsys, 'cutjoin', '--N', '2', '--normalized', 'apply', '[2]', '3/2:[1,1]:-1')
    assert payload['terms'] == [{'partition': '[2]', 'z_exp': 0, 'coeff': '3/2'}]


def test_cutjoin_methods_agree(capsys):
    outputs = []
    for method in ('action', 'normal-ordered', 'explicit'):
        code, payload = run_json(capsys, 'cutjoin', '--N', '3', '--method', method, 'build', '[2]')
        assert code == EXIT_OK
        outputs.append(payload['blocks'])
    assert outputs[0] == outputs[1] == outputs[2]


def test_cutjoin_compose_and_eigen(capsys):
    code, payload = run_json(capsys, 'cutjoin', '--N', '2', 'compose', '[1]', '[1]')
    assert payload['label'] == 'W([1])W([1])'
    code, payload = run_json(capsys, 'cutjoin', '--N', '3', 'eigen', '[2]', '[3]')
    assert payload['holds'] is True
    assert payload['eigenvalue'] == [{'z_exp': 1, 'coeff': '3'}]


def test_schur(capsys):
    code, payload = run_json(capsys, 'schur', '[1]', '--genus-expanded', '2')
    assert payload['terms'] == [{'partition': '[1]', 'z_exp': -2, 'coeff': '1'}]
    code, payload = run_json(capsys, 'schur', '[1,1]')
    assert payload['terms'] == [{'partition': '[2]', 'z_exp': 0, 'coeff': '-1/2'},
                                {'partition': '[1,1]', 'z_exp': 0, 'coeff': '1/2'}]


def test_genfun(capsys):
    code, payload = run_json(capsys, 'genfun', '--N', '1', '--U', '0')
    assert code == EXIT_OK
    assert set(payload) == {'g', 'N', 'U', 'method', 'families', 'insertions', 'terms'}
    assert payload['terms'][0] == {'u_exps': [], 'partitions': ['[]'], 'z_exp': -2, 'coeff': '1'}

    code, direct = run_json(capsys, 'genfun', '--insert', 'u=[2]', '--N', '2', '--U', '2')
    code, action = run_json(capsys, 'genfun', '--insert', 'u=[2]', '--N', '2', '--U', '2', '--method', 'action')
    assert direct['terms'] == action['terms']
    assert action['method'] == 'action'

    code, closed = run_json(capsys, 'genfun', '--N', '1', '--closed', 'two-family')
    assert closed['families'] == 2
    assert closed['method'] == 'closed:two-family'


def test_output_formats(capsys):
    assert run(['--format', 'tsv', 'char', '[2,1]', '[3]']) == EXIT_OK
    lines = capsys.readouterr().out.strip().split("\n")
    assert lines == ["# winf-tsv v1 char", "lambda\tmu\tvalue", "[2,1]\t[3]\t-1"]

    assert run(['--format', 'pretty', 'char', '[2,1]', '[3]']) == EXIT_OK
    assert '-1' in capsys.readouterr().out


def test_identical_runs_are_byte_identical(capsys):
    run(['cutjoin', '--N', '3', 'build', '[2,1]'])
    first = capsys.readouterr().out
    run(['--threads', '3', 'cutjoin', '--N', '3', 'build', '[2,1]'])
    assert capsys.readouterr().out == first


def test_verify(capsys, tmp_path):
    report = tmp_path / 'verify.txt'
    code = run(['--max-n', '3', 'verify', 'products', '--report', str(report)])
    assert code == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert payload['passed'] is True
    assert payload['suites'][0]['suite'] == 'products'
    assert report.read_text(encoding='utf-8').startswith('Verification report: PASS')


def test_verify_failure_exit_code(capsys, monkeypatch):
    from verify.base_suite import CheckResult, SuiteResult
    import main

    monkeypatch.setattr(main, 'run_suites', lambda name, settings: [SuiteResult('x', [CheckResult('a', False)])])
    assert run(['verify', 'eigen']) == EXIT_VERIFY_FAILED


def test_unexpected_errors_map_to_internal(monkeypatch):
    import main

    def explode(args, settings):
        raise ZeroDivisionError("boom")

    monkeypatch.setitem(main.COMMANDS, 'char', explode)
    assert run(['char', '[1]', '[1]']) == EXIT_INTERNAL


def test_parse_term(P):
    term = parse_term("3/2:[2,1]:-4")
    assert term.bound == 3
    assert term.coefficient(P(2, 1)).coefficient(-4) == 3 / 2
    assert parse_term("[1]").coefficient(Partition((1,))).coefficient(0) == 1
    for bad in ("a:b:c:d", "1:[2]:x", "x:[2]"):
        with pytest.raises(InvalidInputError):
            parse_term(bad)


@pytest.mark.parametrize("suite,canonical", [
    ('examples32', 'connected'),
    ('example42', 'closed-forms'),
    ('theorem44', 'products'),
])
def test_verify_alternate_suite_names(capsys, suite, canonical):
    assert run(['--max-n', '4', 'verify', suite]) == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert payload['suite'] == suite
    assert payload['passed'] is True
    assert [entry['suite'] for entry in payload['suites']] == [canonical]
