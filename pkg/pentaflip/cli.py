import sys
from fractions import Fraction
from functools import wraps
from typing import Any, Callable, Dict, List, Optional, Tuple, TypeVar, cast
import attr
import click
import numpy as np
from pentaflip.errors import InapplicableGeneratorError, InvalidConfigError, PentaflipException
from pentaflip.gamma import parse_word
from pentaflip.hyperbolic import random_assignment, realize_labelled_triangulation, roundtrip_error
from pentaflip.polygon import DEFAULT_MAX_N, flip_graph, flip_graph_to_dot, flip_graph_to_json
from pentaflip.ptolemy_action import Policy, apply_word, load_state
from pentaflip.utils.output import dump_json, write_output
from pentaflip.verification.check import ICheckSuite
from pentaflip.verification.runner import run_suites
from pentaflip.verification.suites import PentagonCycleChecks, FlipGraphChecks, GammaRelationChecks, \
    MatrixPentagonChecks, LaurentChecks, OracleCrosscheckChecks, PathIndependenceChecks


EXIT_SUCCESS = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_INAPPLICABLE = 3

TARGETS = ['lemma1', 'gamma-relations', 'matrix-pentagon', 'laurent', 'oracle-crosscheck', 'path-independence']
RANDOMIZED_TARGETS = ['laurent', 'oracle-crosscheck', 'hyperbolic-check', 'hyperbolic-crosscheck']
FORMATS = ['text', 'json', 'dot']


def _at_least(minimum: int) -> Callable[[Any, Any, int], None]:
    def validate(instance: Any, attribute: Any, value: int) -> None:
        if value < minimum:
            raise InvalidConfigError("--%s must be at least %d, got %d" % (attribute.name, minimum, value))
    return validate


def _n_in_bounds(instance: 'RunConfig', attribute: Any, value: Optional[int]) -> None:
    if value is not None and not 3 <= value <= instance.max_n:
        raise InvalidConfigError("--n must be within 3..%d, got %d" % (instance.max_n, value))


def _known_format(instance: Any, attribute: Any, value: str) -> None:
    if value not in FORMATS:
        raise InvalidConfigError("Unknown format '%s'" % value)


@attr.s(auto_attribs=True, frozen=True)
class RunConfig(object):
    command: str
    max_n: int = attr.ib(default=DEFAULT_MAX_N, validator=_at_least(3))
    n: Optional[int] = attr.ib(default=None, validator=_n_in_bounds)
    seed: Optional[int] = None
    trials: int = attr.ib(default=100, validator=_at_least(1))
    length: int = attr.ib(default=10, validator=_at_least(0))
    output_format: str = attr.ib(default='json', validator=_known_format)
    policy: Policy = Policy.SKIP

    def __attrs_post_init__(self) -> None:
        if self.command in RANDOMIZED_TARGETS and self.seed is None:
            raise InvalidConfigError("%s is randomized and needs an explicit --seed" % self.command)

    def to_json(self) -> Dict[str, Any]:
        return {
            "command": self.command,
            "n": self.n,
            "seed": self.seed,
            "trials": self.trials,
            "length": self.length,
            "policy": self.policy.to_string(),
        }


F = TypeVar('F', bound=Callable[..., None])


def _reports_errors(command: F) -> F:
    """Turn domain exceptions into diagnostics on stderr and the documented exit codes."""
    @wraps(command)
    def wrapper(*args: Any, **kwargs: Any) -> None:
        try:
            command(*args, **kwargs)
        except InapplicableGeneratorError as e:
            click.echo("Error: %s" % e.message(), err=True)
            sys.exit(EXIT_INAPPLICABLE)
        except PentaflipException as e:
            click.echo("Error: %s" % e.message(), err=True)
            sys.exit(EXIT_USAGE)
        except OSError as e:
            click.echo("Error: %s" % e, err=True)
            sys.exit(EXIT_USAGE)
    return cast(F, wrapper)


@click.group()
def cli() -> None:
    """Verify flip identities on labelled polygon triangulations."""


@cli.command()
@click.argument('state_file', type=click.Path(exists=True, dir_okay=False))
@click.argument('word', default='')
@click.option('--policy', type=click.Choice(['skip', 'abort']), default='skip',
              help='What to do with a generator that is not applicable')
@click.option('--format', 'output_format', type=click.Choice(['text', 'json']), default='json')
@click.option('--out', type=click.Path(dir_okay=False), default=None)
@_reports_errors
def flip(state_file: str, word: str, policy: str, output_format: str, out: Optional[str]) -> None:
    """Apply a word of flip generators to a labelled triangulation."""
    config = RunConfig(command='flip', output_format=output_format, policy=Policy.parse(policy))
    with open(state_file) as f:
        state = load_state(f.read())
    report = apply_word(state, parse_word(word), config.policy)
    if config.output_format == 'json':
        write_output(dump_json(report.to_json()), out)
    else:
        write_output(report.to_string(), out)


def _suites_for(target: str, config: RunConfig) -> List[ICheckSuite]:
    if target == 'lemma1':
        return [PentagonCycleChecks()]
    if target == 'gamma-relations':
        if config.n is not None and config.n < 4:
            raise InvalidConfigError("gamma-relations needs --n of at least 4")
        sizes = [config.n] if config.n is not None else [5, 6]
        graph_sizes = [config.n] if config.n is not None else [4, 5, 6, 7, 8]
        return [FlipGraphChecks(graph_sizes, config.max_n), GammaRelationChecks(sizes, config.max_n)]
    if target == 'matrix-pentagon':
        return [MatrixPentagonChecks()]
    if target == 'laurent':
        assert config.seed is not None
        return [LaurentChecks(config.n if config.n is not None else 6, config.length, config.trials, config.seed)]
    if target == 'oracle-crosscheck':
        assert config.seed is not None
        return [OracleCrosscheckChecks(config.trials, config.seed)]
    assert target == 'path-independence'
    return [PathIndependenceChecks([config.n] if config.n is not None else [5, 6, 7], config.max_n)]


def _run_and_report(config: RunConfig, suites: List[ICheckSuite], out: Optional[str]) -> None:
    results = run_suites(suites)
    if config.output_format == 'json':
        report = results.to_json()
        report["config"] = config.to_json()
        write_output(dump_json(report), out)
    else:
        write_output(results.to_string(), out)
    if results.exit_code() != EXIT_SUCCESS:
        sys.exit(EXIT_CHECK_FAILED)


@cli.command()
@click.argument('target', type=click.Choice(TARGETS))
@click.option('--n', type=int, default=None, help='Polygon size (default depends on the target)')
@click.option('--seed', type=int, default=None, help='Seed for randomized targets')
@click.option('--trials', type=int, default=100)
@click.option('--len', 'length', type=int, default=10, help='Maximal random word length')
@click.option('--format', 'output_format', type=click.Choice(['text', 'json']), default='json')
@click.option('--out', type=click.Path(dir_okay=False), default=None)
@click.option('--max-n', type=int, default=DEFAULT_MAX_N, help='Upper bound for flip graph enumeration')
@_reports_errors
def verify(target: str, n: Optional[int], seed: Optional[int], trials: int, length: int, output_format: str,
           out: Optional[str], max_n: int) -> None:
    """Run a verification target; exits 1 if any check fails."""
    config = RunConfig(command=target, max_n=max_n, n=n, seed=seed, trials=trials, length=length,
                       output_format=output_format)
    _run_and_report(config, _suites_for(target, config), out)


@cli.command()
@click.option('--n', type=int, required=True)
@click.option('--format', 'output_format', type=click.Choice(['json', 'dot']), default='json')
@click.option('--out', type=click.Path(dir_okay=False), default=None)
@click.option('--max-n', type=int, default=DEFAULT_MAX_N)
@_reports_errors
def flipgraph(n: int, output_format: str, out: Optional[str], max_n: int) -> None:
    """Export the flip graph of the n-gon."""
    config = RunConfig(command='flipgraph', max_n=max_n, n=n, output_format=output_format)
    assert config.n is not None
    graph = flip_graph(config.n, config.max_n)
    if config.output_format == 'dot':
        write_output(flip_graph_to_dot(graph), out)
    else:
        write_output(dump_json(flip_graph_to_json(graph)), out)


@cli.group()
def hyperbolic() -> None:
    """Numeric checks on decorated ideal polygons."""


def _parse_assignment(items: Tuple[str, ...]) -> Dict[str, Fraction]:
    result = {}
    for item in items:
        name, sep, value = item.partition("=")
        if sep == "" or name.strip() == "":
            raise InvalidConfigError("Expected name=value, got '%s'" % item)
        try:
            result[name.strip()] = Fraction(value.strip())
        except ValueError:
            raise InvalidConfigError("Not a number: '%s'" % value)
    return result


@hyperbolic.command()
@click.argument('state_file', type=click.Path(exists=True, dir_okay=False))
@click.option('--seed', type=int, default=None, help='Draw the variable values at random')
@click.option('--assign', multiple=True, help='Variable value as name=value, repeatable')
@click.option('--out', type=click.Path(dir_okay=False), default=None)
@_reports_errors
def realize(state_file: str, seed: Optional[int], assign: Tuple[str, ...], out: Optional[str]) -> None:
    """Realize a labelled triangulation as a decorated ideal polygon."""
    with open(state_file) as f:
        state = load_state(f.read())
    if assign:
        assignment: Dict[str, Any] = dict(_parse_assignment(assign))
    elif seed is not None:
        assignment = dict(random_assignment(state, np.random.default_rng(seed)))
    else:
        raise InvalidConfigError("Give either --seed or at least one --assign")
    polygon = realize_labelled_triangulation(state, assignment)
    write_output(dump_json({
        "assignment": {name: str(value) for name, value in sorted(assignment.items())},
        "polygon": polygon.to_json(),
        "roundtrip_error": roundtrip_error(polygon, state, assignment),
    }), out)


@hyperbolic.command()
@click.option('--seed', type=int, default=None)
@click.option('--trials', type=int, default=100)
@click.option('--format', 'output_format', type=click.Choice(['text', 'json']), default='json')
@click.option('--out', type=click.Path(dir_okay=False), default=None)
@_reports_errors
def check(seed: Optional[int], trials: int, output_format: str, out: Optional[str]) -> None:
    """Monte Carlo check of the Ptolemy relation on realized quadrilaterals."""
    config = RunConfig(command='hyperbolic-check', seed=seed, trials=trials, output_format=output_format)
    assert config.seed is not None
    _run_and_report(config, [OracleCrosscheckChecks(config.trials, config.seed, crosscheck=False)], out)


@hyperbolic.command()
@click.option('--seed', type=int, default=None)
@click.option('--trials', type=int, default=100)
@click.option('--format', 'output_format', type=click.Choice(['text', 'json']), default='json')
@click.option('--out', type=click.Path(dir_okay=False), default=None)
@_reports_errors
def crosscheck(seed: Optional[int], trials: int, output_format: str, out: Optional[str]) -> None:
    """Compare symbolic flip labels with measured lambda lengths on the pentagon."""
    config = RunConfig(command='hyperbolic-crosscheck', seed=seed, trials=trials, output_format=output_format)
    assert config.seed is not None
    _run_and_report(config, [OracleCrosscheckChecks(config.trials, config.seed, residual=False)], out)
