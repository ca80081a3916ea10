import json

import numpy as np
import pytest

from Common.errors import CapacityError, InputError, ParseError
from CommandLine import ModelSpec, cmd_diagnose, cmd_init, cmd_sample, load_model, parse_start, read_table_csv
from Distributions import KDPP, ExplicitTable, WeightedGraph
from main import main


def _write_matrix(path, matrix):
    path.write_text('\n'.join(','.join(repr(float(x)) for x in row) for row in matrix) + '\n')
    return path


def _records(path):
    return [json.loads(line) for line in path.read_text().splitlines()]


@pytest.fixture
def identity_csv(tmp_path):
    return _write_matrix(tmp_path / 'L.csv', np.eye(4))


@pytest.fixture
def random_csv(tmp_path):
    factor = np.random.default_rng(17).standard_normal((8, 8))
    return _write_matrix(tmp_path / 'random.csv', factor @ factor.T)


class TestModelLoading:
    def test_kdpp(self, identity_csv):
        d = load_model(ModelSpec('kdpp', identity_csv, 2))
        assert isinstance(d, KDPP) and (d.n, d.k) == (4, 2)

    def test_kdpp_needs_k(self, identity_csv):
        with pytest.raises(InputError):
            load_model(ModelSpec('kdpp', identity_csv))

    def test_features(self, tmp_path):
        path = _write_matrix(tmp_path / 'X.csv', [[1, 0], [0, 1], [1, 1]])
        d = load_model(ModelSpec('kdpp', path, 2, features=True))
        assert d.mass((0, 1)) == pytest.approx(1.0)
        assert d.mass((0, 2)) == pytest.approx(1.0)

    def test_table(self, tmp_path):
        path = tmp_path / 't.csv'
        path.write_text('0;1,2.0\n\n1;2,3\n')
        n, k, entries = read_table_csv(path)
        assert (n, k) == (3, 2)
        assert entries == {(0, 1): 2.0, (1, 2): 3.0}
        assert isinstance(load_model(ModelSpec('table', path)), ExplicitTable)

    def test_graph(self, tmp_path):
        path = tmp_path / 'g.csv'
        path.write_text('0,1,1.0\n1,2,2.0\n2,0,1.5\n')
        d = load_model(ModelSpec('spanning-tree', path))
        assert isinstance(d, WeightedGraph) and (d.n, d.k) == (3, 2)

    def test_k_mismatch(self, tmp_path):
        path = tmp_path / 'g.csv'
        path.write_text('0,1,1.0\n1,2,2.0\n')
        with pytest.raises(InputError):
            load_model(ModelSpec('spanning-tree', path, 3))

    @pytest.mark.parametrize("text, line", [('1,0\n0,abc\n', 2), ('1,0\n0\n', 2), ('1,0\n0,inf\n', 2)])
    def test_malformed_matrix_names_line(self, tmp_path, text, line):
        path = tmp_path / 'bad.csv'
        path.write_text(text)
        with pytest.raises(ParseError, match=f"bad.csv:{line}:"):
            load_model(ModelSpec('kdpp', path, 1))

    def test_malformed_table(self, tmp_path):
        path = tmp_path / 'bad.csv'
        path.write_text('0;1,1.0\n0;1;2,1.0\n')
        with pytest.raises(ParseError, match=":2:"):
            read_table_csv(path)

    def test_missing_file(self, tmp_path):
        with pytest.raises(InputError):
            load_model(ModelSpec('table', tmp_path / 'missing.csv'))

    def test_parse_start(self, identity_csv):
        d = load_model(ModelSpec('kdpp', identity_csv, 2))
        assert parse_start('3,1', d) == (1, 3)
        assert parse_start(None, d) is None
        with pytest.raises(InputError):
            parse_start('1,x', d)
        with pytest.raises(InputError):
            parse_start('1,2,3', d)


class TestCommands:
    def test_sample_records(self, identity_csv, tmp_path):
        out = tmp_path / 'samples.jsonl'
        assert cmd_sample(ModelSpec('kdpp', identity_csv, 2), 0.01, 5, seed=7, output_path=out) == 0
        records = _records(out)
        assert len(records) == 5
        for record in records:
            assert set(record) == {"subset", "steps", "accepts"}
            assert record["steps"] == 52
            assert len(record["subset"]) == 2

    def test_zero_steps_returns_init(self, identity_csv, tmp_path):
        out = tmp_path / 'samples.jsonl'
        cmd_sample(ModelSpec('kdpp', identity_csv, 2), 0.01, 4, seed=1, steps=0, output_path=out)
        assert all(record["subset"] == [0, 1] for record in _records(out))

    def test_explicit_start(self, identity_csv, tmp_path):
        out = tmp_path / 'samples.jsonl'
        cmd_sample(ModelSpec('kdpp', identity_csv, 2), 0.01, 2, seed=1, steps=0, start='2,3', output_path=out)
        assert all(record["subset"] == [2, 3] for record in _records(out))

    def test_chosen_start_above_cap_suggests_steps(self, identity_csv):
        with pytest.raises(CapacityError, match="--steps"):
            cmd_sample(ModelSpec('kdpp', identity_csv, 2), 0.01, 1, seed=1, start='2,3', cap=3)

    def test_num_samples(self, identity_csv):
        with pytest.raises(InputError):
            cmd_sample(ModelSpec('kdpp', identity_csv, 2), 0.01, 0, seed=1)

    def test_init(self, tmp_path):
        path = _write_matrix(tmp_path / 'L.csv', np.diag([4.0, 3.0, 2.0, 1.0]))
        out = tmp_path / 'init.json'
        assert cmd_init(ModelSpec('kdpp', path, 2), out) == 0
        record = _records(out)[0]
        assert record["subset"] == [0, 1]
        assert record["method"] == "greedy_det"

    def test_diagnose_uniform(self, identity_csv, tmp_path):
        out = tmp_path / 'report.json'
        assert cmd_diagnose(ModelSpec('kdpp', identity_csv, 2), 0.01, output_path=out) == 0
        report = _records(out)[0]
        assert report["c_mu"] == pytest.approx(0.125)
        assert report["lambda"] >= 0.125
        for key in ("c_mu_lower_bound", "tau_bound", "tv_curve", "negative_correlation_ok", "exchange_ok"):
            assert key in report

    def test_diagnose_disconnected_fails(self, tmp_path):
        path = tmp_path / 't.csv'
        path.write_text('0;1,1\n2;3,1\n')
        out = tmp_path / 'report.json'
        assert cmd_diagnose(ModelSpec('table', path), 0.01, output_path=out) == 1
        assert _records(out)[0]["exchange_ok"] is False

    def test_diagnose_random_passes(self, random_csv, tmp_path):
        out = tmp_path / 'report.json'
        assert cmd_diagnose(ModelSpec('kdpp', random_csv, 3), 0.01, output_path=out) == 0

    def test_diagnose_capacity(self, random_csv):
        with pytest.raises(CapacityError, match="--cap 56"):
            cmd_diagnose(ModelSpec('kdpp', random_csv, 3), 0.01, cap=10)


class TestMain:
    def test_byte_identical_runs(self, identity_csv, tmp_path):
        outputs = []
        for name in ('first.jsonl', 'second.jsonl'):
            out = tmp_path / name
            argv = ['sample', '--model', 'kdpp', '--ensemble', str(identity_csv), '--k', '2', '--epsilon', '0.01',
                    '--num-samples', '100', '--seed', '7', '--threads', '1', '--output', str(out)]
            assert main(argv) == 0
            outputs.append(out.read_bytes())
        assert outputs[0] == outputs[1]
        assert len(outputs[0].splitlines()) == 100

    def test_threads_do_not_change_output(self, identity_csv, tmp_path):
        outputs = []
        for threads in ('1', '2'):
            out = tmp_path / f'{threads}.jsonl'
            main(['sample', '--model', 'kdpp', '--ensemble', str(identity_csv), '--k', '2', '--num-samples', '20',
                  '--seed', '3', '--threads', threads, '--output', str(out)])
            outputs.append(out.read_bytes())
        assert outputs[0] == outputs[1]

    def test_init_stdout(self, tmp_path, capsys):
        path = _write_matrix(tmp_path / 'L.csv', np.eye(5))
        assert main(['init', '--model', 'kdpp', '--ensemble', str(path), '--k', '3']) == 0
        assert json.loads(capsys.readouterr().out)["subset"] == [0, 1, 2]

    def test_parse_error_exit_code(self, tmp_path, capsys):
        path = tmp_path / 'bad.csv'
        path.write_text('1,0\n0,oops\n')
        assert main(['init', '--model', 'kdpp', '--ensemble', str(path), '--k', '1']) == 2
        assert 'bad.csv:2' in capsys.readouterr().err

    def test_domain_error_exit_code(self, tmp_path):
        path = _write_matrix(tmp_path / 'L.csv', np.ones((3, 3)))
        assert main(['init', '--model', 'kdpp', '--ensemble', str(path), '--k', '2']) == 3

    def test_capacity_exit_code(self, identity_csv, capsys):
        argv = ['diagnose', '--model', 'kdpp', '--ensemble', str(identity_csv), '--k', '2', '--cap', '3']
        assert main(argv) == 4
        assert '--cap 6' in capsys.readouterr().err

    def test_wrong_input_flag(self, identity_csv):
        assert main(['init', '--model', 'table', '--ensemble', str(identity_csv)]) == 2
