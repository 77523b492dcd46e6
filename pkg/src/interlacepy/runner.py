"""Dispatch of the ``interlacepy`` commands.

A command reads one input object, computes a polynomial (or a count) with
one or both of its pipelines and renders the result in the output grammar of
:mod:`interlacepy.core.tools.output`. ``check`` runs the identity batteries
of :mod:`interlacepy.checks` instead.
"""

from __future__ import annotations

import logging
from typing import Callable, Optional

from attrs import define, field, frozen

from .checks import SUITE_REGISTRY
from .checks.generators import make_rng
from .checks.results import report_lines
from .core.algebra.polynomial import IntPoly1, IntPoly2
from .core.delta.matroid import tutte_matroid, tutte_rank_sum
from .core.delta.polynomials import (
    q_bar,
    q_bar_recursive,
    q_delta,
    q_delta_global,
    q_delta_global_recursive,
    q_delta_recursive,
)
from .core.delta.set_system import adjacency_delta_matroid
from .core.eulerian.circuits import euler_circuits, interlace_graph
from .core.eulerian.martin import eulerian_system_count, eulerian_systems, martin
from .core.eulerian.transitions import inconsistent_system
from .core.interlace.recursive import Q_recursive, q_matrix_recursive, q_nullity_recursive, q_twovar_recursive
from .core.interlace.statesum import Q_statesum, q_matrix, q_nullity_statesum, q_twovar_statesum
from .core.isotropic.klein import Z, KVector
from .core.isotropic.system import from_four_regular, from_graphic_presentation, transition_vector
from .core.isotropic.tutte_martin import global_tm, restricted_tm
from .core.plane.medial import oriented_medial
from .core.plane.tutte import tutte_diagonal
from .core.tools.config_file_parser import SuiteConfigParser
from .core.tools.formats import parse_file
from .core.tools.output import format_poly
from .errors import InterlaceError, MismatchError, UsageError

METHODS = ("statesum", "recursive", "both")
DELTA_POLYNOMIALS = ("q", "Q", "qbar", "tutte")
SUITES = tuple(SUITE_REGISTRY) + ("all",)

STATUS_OK = 0
STATUS_FAILED = 1
STATUS_USAGE = 2


@frozen
class Pipelines:
    """What a command prints and the two ways of computing it."""

    title: str
    statesum: Callable
    recursive: Callable


@define
class RunConfig:
    """One command invocation, with the suite configuration already merged
    under the command line options."""

    command: str
    input_path: Optional[str] = None
    input_format: Optional[str] = None
    method: str = "statesum"
    seed: int = 0
    trials: Optional[int] = None
    max_n: Optional[int] = None
    target: Optional[str] = None
    global_polynomial: bool = False
    caps: dict = field(factory=dict)
    suites: dict = field(factory=dict)

    @classmethod
    def from_options(cls, command, config_file=None, seed=None, **options) -> "RunConfig":
        """Read the suite configuration (``config_file`` or the default
        location) and overlay the options given on the command line."""
        config = SuiteConfigParser(config_file).get_config()
        return cls(
            command,
            seed=config["seed"] if seed is None else seed,
            caps=config["caps"],
            suites=config["suites"],
            **options,
        )

    def suite_settings(self, suite: str) -> dict:
        settings = dict(self.suites[suite])
        if self.trials is not None and "trials" in settings:
            settings["trials"] = self.trials
        if self.max_n is not None and "max_n" in settings:
            settings["max_n"] = self.max_n
        return settings


@define
class RunResult:
    lines: list = field(factory=list)
    status: int = STATUS_OK
    errors: list = field(factory=list)


def _graph_commands(command: str, graph, caps: dict) -> Pipelines:
    statesum_max_n = caps["statesum_max_n"]
    if command == "q":
        return Pipelines(
            "q_N", lambda: q_nullity_statesum(graph, statesum_max_n), lambda: q_nullity_recursive(graph)
        )
    if command == "q2":
        return Pipelines(
            "q", lambda: q_twovar_statesum(graph, statesum_max_n), lambda: q_twovar_recursive(graph)
        )
    if command == "Q":
        return Pipelines("Q", lambda: Q_statesum(graph, caps["global_max_n"]), lambda: Q_recursive(graph))
    matrix = graph.adjacency_matrix()
    return Pipelines("q_m", lambda: q_matrix(matrix, statesum_max_n), lambda: q_matrix_recursive(matrix))


def _host_martin(host, caps: dict) -> Pipelines:
    # second pipeline: interlace polynomial of the circle graph of one Eulerian system
    def circle_graph():
        circuit = next(eulerian_systems(host, caps["transition_cap"]))
        graph = interlace_graph(circuit)
        return q_nullity_recursive(graph) if host.directed else Q_recursive(graph)

    return Pipelines("m" if host.directed else "M", lambda: martin(host, caps["transition_cap"]), circle_graph)


def _host_euler_count(host, caps: dict) -> Pipelines:
    def backtrack():
        if host.directed and host.is_connected():
            return len(euler_circuits(host, caps["circuit_cap"]))
        return eulerian_system_count(host, caps["transition_cap"])

    # m(D; 1) and M(G; 2) count the transition systems with one circuit per component
    point = 1 if host.directed else 2
    return Pipelines(
        "eulerian circuits", lambda: martin(host, caps["transition_cap"]).evaluate(point), backtrack
    )


def _tutte_diag(plane, caps: dict) -> Pipelines:
    return Pipelines(
        "t(x, x)", lambda: martin(oriented_medial(plane), caps["transition_cap"]), lambda: tutte_diagonal(plane)
    )


def _tutte_martin(kind: str, obj, config: RunConfig) -> Pipelines:
    max_n = config.caps["isotropic_max_n"]
    if kind == "graph":
        system = from_graphic_presentation(obj)
        if config.global_polynomial:
            return Pipelines("TM", lambda: global_tm(system, max_n), lambda: Q_recursive(obj))
        # the default presentation has A = x and B = y, so A + B = z everywhere
        c = KVector(obj.labels, [Z] * obj.n)
        return Pipelines("tm", lambda: restricted_tm(system, c, max_n), lambda: q_nullity_recursive(obj))
    if config.global_polynomial:
        raise UsageError("--global needs a graph input")
    system = from_four_regular(obj)
    c = transition_vector(inconsistent_system(obj))
    return Pipelines(
        "tm", lambda: restricted_tm(system, c, max_n), lambda: martin(obj, config.caps["transition_cap"])
    )


def _delta(kind: str, obj, target: str) -> Pipelines:
    system = adjacency_delta_matroid(obj) if kind == "graph" else obj
    if target == "q":
        return Pipelines("q_delta", lambda: q_delta(system), lambda: q_delta_recursive(system))
    if target == "Q":
        return Pipelines("Q_delta", lambda: q_delta_global(system), lambda: q_delta_global_recursive(system))
    if target == "qbar":
        return Pipelines("q_bar", lambda: q_bar(system), lambda: q_bar_recursive(system))
    return Pipelines("t", lambda: tutte_rank_sum(system), lambda: tutte_matroid(system))


# command -> input kinds it accepts
COMMAND_INPUTS = {
    "q": ("graph",),
    "q2": ("graph",),
    "Q": ("graph",),
    "qm": ("graph",),
    "martin": ("digraph4", "graph4"),
    "euler-count": ("digraph4", "graph4"),
    "tutte-diag": ("plane",),
    "tm": ("graph", "digraph4"),
    "delta": ("setsystem", "graph"),
}


def pipelines(config: RunConfig, kind: str, obj) -> Pipelines:
    command = config.command
    if command in ("q", "q2", "Q", "qm"):
        return _graph_commands(command, obj, config.caps)
    if command == "martin":
        return _host_martin(obj, config.caps)
    if command == "euler-count":
        return _host_euler_count(obj, config.caps)
    if command == "tutte-diag":
        return _tutte_diag(obj, config.caps)
    if command == "tm":
        return _tutte_martin(kind, obj, config)
    if config.target not in DELTA_POLYNOMIALS:
        raise UsageError(f"delta expects one of {', '.join(DELTA_POLYNOMIALS)}")
    return _delta(kind, obj, config.target)


def render(title: str, value, label: str = "") -> list:
    """``title = value`` followed by the polynomial lines, if any."""
    lines = [f"{title}{label} = {value}"]
    if isinstance(value, (IntPoly1, IntPoly2)):
        lines.extend(format_poly(value))
    return lines


def compare(title: str, statesum, recursive):
    """:raise MismatchError: the two pipelines disagree"""
    if statesum != recursive:
        raise MismatchError(title, statesum, recursive)
    return statesum


def run_command(config: RunConfig) -> RunResult:
    if config.method not in METHODS:
        raise UsageError(f"method must be one of {', '.join(METHODS)}")
    if not config.input_path:
        raise UsageError(f"{config.command} needs --input")
    kind, obj = parse_file(config.input_path, config.input_format or COMMAND_INPUTS[config.command])
    logging.info("%s: read %s input from %s", config.command, kind, config.input_path)
    chosen = pipelines(config, kind, obj)
    if config.method != "both":
        value = getattr(chosen, config.method)()
        return RunResult(render(chosen.title, value))
    statesum = chosen.statesum()
    recursive = chosen.recursive()
    try:
        value = compare(chosen.title, statesum, recursive)
    except MismatchError as exc:
        lines = render(chosen.title, exc.left, " (statesum)") + render(chosen.title, exc.right, " (recursive)")
        return RunResult(lines + ["MISMATCH"], STATUS_FAILED)
    return RunResult(render(chosen.title, value) + ["MATCH"])


def run_check(config: RunConfig) -> RunResult:
    """Run one suite, or every suite for ``all``; each suite draws from its
    own generator seeded with ``config.seed``."""
    if config.target not in SUITES:
        raise UsageError(f"suite must be one of {', '.join(SUITES)}")
    names = list(SUITE_REGISTRY) if config.target == "all" else [config.target]
    results = []
    for name in names:
        logging.info("check: running suite %s with seed %d", name, config.seed)
        results.extend(SUITE_REGISTRY[name](make_rng(config.seed), config.suite_settings(name), config.caps))
    status = STATUS_OK if all(r.passed for r in results) else STATUS_FAILED
    return RunResult(report_lines(results), status)


def run(config: RunConfig) -> RunResult:
    """Execute a command.

    :return: report lines and exit status; 0 when everything matches,
        1 on a pipeline mismatch or a failed identity, 2 on a usage error,
        a parse error or an exceeded size cap
    """
    try:
        if config.command == "check":
            return run_check(config)
        if config.command not in COMMAND_INPUTS:
            raise UsageError(f"unknown command {config.command!r}")
        return run_command(config)
    except InterlaceError as exc:
        return RunResult(status=STATUS_USAGE, errors=[f"error: {exc}"])
