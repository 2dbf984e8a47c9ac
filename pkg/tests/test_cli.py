import csv
import os

import pytest

from petalgrow import __version__
from petalgrow.cli.main import EXIT_INVALID, EXIT_OK, EXIT_RUN_FAILURE, EXIT_USAGE, main
from petalgrow.setting import parse_config

SELF_INTERSECTING_OBJ = """\
v 0 0 0
v 2 0 0
v 0 2 0
v 0.3 0.3 -1
v 0.3 0.3 1
v -1 -1 0
f 1 2 3
f 4 5 6
"""


@pytest.fixture
def disk_obj(tmp_path) -> str:  # type: ignore
    path = str(tmp_path / 'disk.obj')
    code = main(
        ['generate', '--kind', 'disk', '--out', path, '--radial', '3', '--angular', '18']
    )
    assert code == EXIT_OK
    return path


def test_version(capsys: pytest.CaptureFixture) -> None:
    assert main(['--version']) == EXIT_OK
    assert __version__ in capsys.readouterr().out


class TestValidate:
    def test_generated_disk(self, disk_obj: str, capsys: pytest.CaptureFixture) -> None:
        assert main(['validate', '--input', disk_obj]) == EXIT_OK
        assert capsys.readouterr().out.splitlines()[-1] == 'valid'

    def test_self_intersecting(self, tmp_path, capsys: pytest.CaptureFixture) -> None:  # type: ignore
        path = tmp_path / 'crossed.obj'
        path.write_text(SELF_INTERSECTING_OBJ)
        assert main(['validate', '--input', str(path)]) == EXIT_INVALID
        assert 'invalid: 1 self-intersecting face pairs' in capsys.readouterr().out

    def test_unreadable(self, tmp_path) -> None:  # type: ignore
        path = tmp_path / 'broken.obj'
        path.write_text('v 0 0 0\nf 1 2 x\n')
        assert main(['validate', '--input', str(path)]) == EXIT_INVALID

    def test_missing_file(self, tmp_path) -> None:  # type: ignore
        assert main(['validate', '--input', str(tmp_path / 'nope.obj')]) == EXIT_INVALID

    def test_unknown_flag(self) -> None:
        assert main(['validate', '--bogus']) == EXIT_USAGE


def test_metrics(disk_obj: str, capsys: pytest.CaptureFixture) -> None:
    capsys.readouterr()
    assert main(['metrics', '--input', disk_obj, '--header']) == EXIT_OK
    header, row = list(csv.reader(capsys.readouterr().out.splitlines()))
    assert header[:3] == ['V', 'E', 'F']
    assert row[0] == '37'
    assert int(row[-1]) == 0
    assert 0.0 < float(row[header.index('mean_quality')]) <= 1.0


def test_generate_rejects_unknown_kind(tmp_path) -> None:  # type: ignore
    out = str(tmp_path / 'sphere.obj')
    assert main(['generate', '--kind', 'sphere', '--out', out]) == EXIT_USAGE
    assert not os.path.exists(out)


class TestGrow:
    def test_needs_exactly_one_source(self, disk_obj: str, tmp_path) -> None:  # type: ignore
        out = str(tmp_path / 'run')
        both = ['grow', '--input', disk_obj, '--generate', 'disk', '--out', out]
        assert main(both) == EXIT_USAGE
        assert main(['grow', '--out', out]) == EXIT_USAGE

    def test_missing_input(self, tmp_path) -> None:  # type: ignore
        args = ['grow', '--input', str(tmp_path / 'nope.obj'), '--out', str(tmp_path / 'run')]
        assert main(args) == EXIT_INVALID

    @pytest.mark.parametrize('line', ['bending_kmax = fast', 'stifness = 2', 'dt 0.1'])
    def test_bad_config(self, tmp_path, line: str) -> None:  # type: ignore
        config = tmp_path / 'bad.cfg'
        config.write_text(line + '\n')
        args = ['grow', '--config', str(config), '--generate', 'disk']
        assert main(args + ['--out', str(tmp_path / 'run')]) == EXIT_USAGE

    def test_run_directory(self, disk_obj: str, tmp_path) -> None:  # type: ignore
        out = str(tmp_path / 'disk_seed004')
        args = ['grow', '--input', disk_obj, '--out', out, '--steps', '3', '--seed', '4']
        assert main(args + ['--export-every', '1']) == EXIT_OK
        assert parse_config(os.path.join(out, 'config.echo')).seed == 4
        frames = sorted(os.listdir(os.path.join(out, 'frames')))
        assert frames == ['frame_%06d.obj' % i for i in range(4)]
        with open(os.path.join(out, 'metrics.csv'), newline='') as file:
            assert [row[0] for row in csv.reader(file)] == ['step', '0', '1', '2', '3']

    def test_same_seed_same_metrics(self, tmp_path) -> None:  # type: ignore
        outputs = []
        for name in ('first', 'second'):
            out = str(tmp_path / name)
            args = ['grow', '--generate', 'annulus', '--out', out, '--steps', '3']
            assert main(args + ['--seed', '11']) == EXIT_OK
            with open(os.path.join(out, 'metrics.csv'), 'rb') as file:
                outputs.append(file.read())
        assert outputs[0] == outputs[1]

    def test_seed_from_environment(self, tmp_path, monkeypatch) -> None:  # type: ignore
        monkeypatch.setenv('PETALGROW_SEED', '5')
        env_run = str(tmp_path / 'env')
        flag_run = str(tmp_path / 'flag')
        base = ['grow', '--generate', 'disk', '--steps', '0']
        assert main(base + ['--out', env_run]) == EXIT_OK
        assert main(base + ['--out', flag_run, '--seed', '6']) == EXIT_OK
        assert parse_config(os.path.join(env_run, 'config.echo')).seed == 5
        assert parse_config(os.path.join(flag_run, 'config.echo')).seed == 6

    def test_bad_seed_in_environment(self, tmp_path, monkeypatch) -> None:  # type: ignore
        monkeypatch.setenv('PETALGROW_SEED', 'abc')
        args = ['grow', '--generate', 'disk', '--steps', '0', '--out', str(tmp_path / 'run')]
        assert main(args) == EXIT_USAGE

    def test_unknown_method(self, tmp_path) -> None:  # type: ignore
        args = ['grow', '--generate', 'disk', '--method', 'magic']
        assert main(args + ['--out', str(tmp_path / 'run')]) == EXIT_USAGE


def test_exit_codes_are_distinct() -> None:
    assert len({EXIT_OK, EXIT_USAGE, EXIT_RUN_FAILURE, EXIT_INVALID}) == 4


@pytest.mark.slow
def test_benchmark(tmp_path) -> None:  # type: ignore
    config = tmp_path / 'small.cfg'
    config.write_text('max_vertices = 400\nmax_steps = 200\nexport_every = 0\n')
    out = str(tmp_path / 'bench')
    args = ['benchmark', '--out', out, '--config', str(config), '--kind', 'disk']
    assert main(args + ['--kind', 'annulus', '--seeds', '2']) == EXIT_OK
    with open(os.path.join(out, 'summary.csv'), newline='') as file:
        rows = list(csv.DictReader(file))
    assert [(r['kind'], r['seed']) for r in rows] == [
        ('disk', '0'), ('disk', '1'), ('annulus', '0'), ('annulus', '1')
    ]
    assert all(r['stop_reason'] != 'failure' for r in rows)
    assert os.path.isdir(os.path.join(out, 'disk_seed000', 'frames'))
