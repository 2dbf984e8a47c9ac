import csv
import os
import sys
from typing import Any, List, Optional

import click
import humanize
import typer
from loguru import logger
from pydantic import ValidationError

from .. import __prog__, __version__
from ..analysis import count_self_intersections, metrics
from ..exception import PetalgrowError
from ..generators import GeneratorSpec, InvalidSpecError, generate_initial
from ..logging import configure_logger
from ..mesh import Mesh, MeshInputError, is_valid_mesh, load_obj, mesh_problem, save_obj
from ..path import run_dir_name, summary_path
from ..setting import ConfigError, ConfigTypeError, EnvSettings, SimConfig, parse_config
from ..simulation import RunRecorder, RunResult, Simulation, StepFailure

__all__ = 'cli', 'main'

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_RUN_FAILURE = 2
EXIT_INVALID = 3

SUMMARY_COLUMNS = (
    'kind',
    'seed',
    'stop_reason',
    'steps',
    'V',
    'E',
    'F',
    'self_intersections',
    'mean_quality',
    'mean_valence',
    'mean_sq_dihedral',
    'digest',
)

cli = typer.Typer(add_completion=False)


class InputMeshError(PetalgrowError):
    """The input mesh could not be read."""


def version_callback(value: bool) -> None:
    if value:
        typer.echo(f'{__prog__} {__version__}')
        raise typer.Exit()


@cli.callback()
def cli_main(
    version: Optional[bool] = typer.Option(
        None,
        '--version',
        callback=version_callback,
        is_eager=True,
        help=f"show {__prog__}'s version and exit",
    ),
) -> None:
    """Differential growth of open triangular surfaces"""


def _setup_logging(
    log_dir: Optional[str], level: str = 'INFO', progress: bool = False
) -> bool:
    if not sys.stderr.isatty():
        progress = False
    os.environ['PETALGROW_PROGRESS'] = '1' if progress else ''
    configure_logger(log_dir, console_log_level=level)  # type: ignore
    return progress


def _override(config: SimConfig, **values: Any) -> SimConfig:
    for key, value in values.items():
        if value is None:
            continue
        try:
            setattr(config, key, value)
        except ValidationError as exc:
            raise ConfigTypeError(key, exc.errors()[0]['msg']) from exc
    return config


def _load_config(path: Optional[str], seed: Optional[int]) -> SimConfig:
    try:
        config = parse_config(path) if path is not None else SimConfig()
    except OSError as exc:
        raise ConfigError(f'cannot read config {path}: {exc}') from exc
    if seed is None:
        try:
            seed = EnvSettings().seed
        except ValidationError as exc:
            raise ConfigTypeError('seed', exc.errors()[0]['msg']) from exc
    return _override(config, seed=seed)


def _read_mesh(path: str) -> Mesh:
    try:
        return load_obj(path)
    except (MeshInputError, OSError) as exc:
        raise InputMeshError(f'cannot read {path}: {exc}') from exc


def _initial_mesh(
    input: Optional[str], generate: Optional[str], seed: int
) -> Mesh:
    if (input is None) == (generate is None):
        raise click.UsageError('give exactly one of --input and --generate')
    if input is not None:
        return _read_mesh(input)
    return generate_initial(GeneratorSpec(kind=generate, seed=seed))  # type: ignore


def _grow(
    mesh: Mesh, config: SimConfig, out: str, label: str, progress: bool
) -> RunResult:
    simulation = Simulation(mesh, config, label=label)
    recorder = RunRecorder(out, config)
    recorder.attach(simulation)
    try:
        return simulation.run(progress=progress)
    finally:
        recorder.detach()


@cli.command()
def grow(
    config: Optional[str] = typer.Option(
        None, '--config', '-c', help='path of the config file'
    ),
    input: Optional[str] = typer.Option(
        None, '--input', '-i', help='initial mesh (OBJ)'
    ),
    generate: Optional[str] = typer.Option(
        None,
        '--generate',
        help='generate the initial mesh: disk, annulus, moebius-like, punctured-torus',
    ),
    out: str = typer.Option(..., '--out', '-o', help='run directory'),
    seed: Optional[int] = typer.Option(
        None, '--seed', help='random seed (overwrite config and environment)'
    ),
    steps: Optional[int] = typer.Option(None, '--steps', help='maximum steps'),
    max_vertices: Optional[int] = typer.Option(
        None, '--max-vertices', help='stop once the mesh has this many vertices'
    ),
    export_every: Optional[int] = typer.Option(
        None, '--export-every', help='frame export cadence in steps'
    ),
    method: Optional[str] = typer.Option(
        None, '--method', help='growth method: shell or collision'
    ),
    log_dir: Optional[str] = typer.Option(
        None, '--log-dir', help='directory for debug log files'
    ),
    progress: bool = typer.Option(False, help='display progress'),
) -> None:
    """Grow a surface and record the run into a directory"""
    sim_config = _override(
        _load_config(config, seed),
        max_steps=steps,
        max_vertices=max_vertices,
        export_every=export_every,
        method=method,
    )
    progress = _setup_logging(log_dir, sim_config.console_log_level, progress)
    mesh = _initial_mesh(input, generate, sim_config.seed)
    result = _grow(mesh, sim_config, out, os.path.basename(os.path.normpath(out)), progress)
    if result.failed:
        raise typer.Exit(EXIT_RUN_FAILURE)


@cli.command('metrics')
def metrics_command(
    input: str = typer.Option(..., '--input', '-i', help='mesh (OBJ)'),
    header: bool = typer.Option(False, help='print the column names first'),
) -> None:
    """Print the quality metrics of a mesh as one CSV row"""
    _setup_logging(None, 'WARNING')
    mesh = _read_mesh(input)
    report = metrics(mesh)
    writer = csv.writer(sys.stdout, lineterminator='\n')
    if header:
        writer.writerow(
            [
                'V',
                'E',
                'F',
                'mean_quality',
                'mean_valence',
                'mean_sq_dihedral',
                'sum_sq_dihedral',
                'self_intersections',
            ]
        )
    writer.writerow(
        [
            report.vertex_count,
            report.edge_count,
            report.face_count,
            repr(report.mean_quality),
            repr(report.mean_valence),
            repr(report.mean_sq_dihedral),
            repr(report.sum_sq_dihedral),
            report.self_intersections,
        ]
    )


@cli.command()
def validate(
    input: str = typer.Option(..., '--input', '-i', help='mesh (OBJ)')
) -> None:
    """Exit with 0 if the mesh is valid and free of self-intersections"""
    _setup_logging(None, 'WARNING')
    mesh = _read_mesh(input)
    if not is_valid_mesh(mesh):
        typer.echo(f'invalid: {mesh_problem(mesh)}')
        raise typer.Exit(EXIT_INVALID)
    tolerance = 1e-10 * (mesh.mean_edge_length() or 1.0)
    count = count_self_intersections(mesh, tolerance)
    if count:
        typer.echo(f'invalid: {count} self-intersecting face pairs')
        raise typer.Exit(EXIT_INVALID)
    typer.echo('valid')


@cli.command('generate')
def generate_command(
    kind: str = typer.Option(
        ..., '--kind', '-k', help='disk, annulus, moebius-like or punctured-torus'
    ),
    out: str = typer.Option(..., '--out', '-o', help='output mesh (OBJ)'),
    seed: int = typer.Option(0, '--seed', help='perturbation seed'),
    radial: Optional[int] = typer.Option(None, help='rings or strip rows'),
    angular: Optional[int] = typer.Option(None, help='boundary or loop segments'),
    perturbation: Optional[float] = typer.Option(
        None, help='normal noise amplitude relative to the mean edge length'
    ),
) -> None:
    """Write an initial surface"""
    _setup_logging(None, 'WARNING')
    values = dict(radial=radial, angular=angular, perturbation=perturbation)
    spec = GeneratorSpec(
        kind=kind,  # type: ignore
        seed=seed,
        **{k: v for k, v in values.items() if v is not None},  # type: ignore
    )
    mesh = generate_initial(spec)
    directory = os.path.dirname(os.path.abspath(out))
    os.makedirs(directory, exist_ok=True)
    save_obj(mesh, out)
    typer.echo(f'{out}: {mesh.vertex_count} vertices, {mesh.face_count} faces')


@cli.command()
def benchmark(
    out: str = typer.Option(..., '--out', '-o', help='output directory'),
    config: Optional[str] = typer.Option(
        None, '--config', '-c', help='path of the config file'
    ),
    kinds: List[str] = typer.Option(
        ['disk', 'annulus', 'moebius-like', 'punctured-torus'], '--kind', help='surface kinds'
    ),
    seeds: int = typer.Option(30, '--seeds', help='seeds 0 .. N-1 per kind'),
    log_dir: Optional[str] = typer.Option(
        None, '--log-dir', help='directory for debug log files'
    ),
) -> None:
    """Grow every kind with every seed and summarize the outcomes"""
    base = _load_config(config, None)
    _setup_logging(log_dir, base.console_log_level)
    os.makedirs(out, exist_ok=True)

    failed = False
    with open(summary_path(out), 'wt', encoding='utf8', newline='') as file:
        writer = csv.writer(file, lineterminator='\n')
        writer.writerow(SUMMARY_COLUMNS)
        for kind in kinds:
            failures = intersecting = 0
            for seed in range(seeds):
                sim_config = base.copy(update={'seed': seed})
                mesh = generate_initial(GeneratorSpec(kind=kind, seed=seed))  # type: ignore
                name = run_dir_name(kind, seed)
                result = _grow(mesh, sim_config, os.path.join(out, name), name, False)
                final = result.final_metrics
                assert final is not None
                failures += result.failed
                intersecting += any(m.self_intersections > 0 for _, m in result.metrics)
                writer.writerow(
                    [
                        kind,
                        seed,
                        str(result.stop_reason),
                        result.steps,
                        final.vertex_count,
                        final.edge_count,
                        final.face_count,
                        final.self_intersections,
                        repr(final.mean_quality),
                        repr(final.mean_valence),
                        repr(final.mean_sq_dihedral),
                        result.digest,
                    ]
                )
                file.flush()
            failed = failed or failures > 0
            logger.info(
                f'{kind}: {seeds} runs, '
                f'{100.0 * intersecting / max(seeds, 1):.1f}% with self-intersections, '
                f'{100.0 * failures / max(seeds, 1):.1f}% failed'
            )
    logger.info(
        f'Summary of {humanize.intcomma(len(kinds) * seeds)} runs written to '
        f'{summary_path(out)}'
    )
    if failed:
        raise typer.Exit(EXIT_RUN_FAILURE)


def main(argv: Optional[List[str]] = None) -> int:
    try:
        code = cli(args=argv, prog_name=__prog__, standalone_mode=False)
    except click.UsageError as e:
        e.show()
        return EXIT_USAGE
    except (click.Abort, KeyboardInterrupt):
        return EXIT_USAGE
    except (ConfigError, InvalidSpecError) as e:
        logger.error(f'{e}')
        return EXIT_USAGE
    except InputMeshError as e:
        logger.error(f'{e}')
        return EXIT_INVALID
    except StepFailure as e:
        logger.error(f'{e}')
        return EXIT_RUN_FAILURE
    except BaseException as e:
        logger.exception(e)
        return EXIT_RUN_FAILURE
    else:
        return code if isinstance(code, int) else EXIT_OK


if __name__ == '__main__':
    sys.exit(main())
