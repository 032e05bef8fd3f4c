"""Command driver: load a model, run one check, report as text or JSON records.

Exit statuses distinguish answers from failures to answer: 0 means every
queried check passed or the command produced its value, 1 means a queried
membership or verdict came back false, 2 means malformed input or usage,
3 an unknown name, 4 a dimension/structure mismatch, 5 an invalid blowup.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .blowup import BlowupClass, blowup_charts, classify
from .correspondences import corr_minimal_twist, in_colim_mcor, in_lcor, in_mcor
from .dsl import (
    BlowupDecl,
    CorrDecl,
    Diagnostic,
    MapDecl,
    Model,
    PairDecl,
    QPairDecl,
    format_decl,
    format_diagnostic,
    parse,
)
from .pairs import (
    Pair,
    StructureError,
    format_divisor,
    hom_log_exists,
    is_admissible,
    is_minimal,
    minimal_twist,
    twist,
)
from .qdivisors import cube, q_eq, q_normalize

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_INPUT = 2
EXIT_UNKNOWN_NAME = 3
EXIT_DIMENSION = 4
EXIT_INVALID_BLOWUP = 5

COMMANDS = {
    "check-admissible": ("name",),
    "minimal-twist": ("name",),
    "hom-log": ("name",),
    "check-minimal": ("name",),
    "blowup": ("name",),
    "classify": ("name",),
    "corr-check": ("name",),
    "qdiv-normalize": ("name",),
    "qdiv-eq": ("first", "second"),
    "cube": ("name", "n"),
    "twist": ("name", "n"),
    "check-all": (),
}


@dataclass(frozen=True)
class Report:
    """Outcome of one command: process status, human text, machine records."""

    status: int
    text: str
    records: tuple[dict, ...]
    diagnostics: tuple[Diagnostic, ...] = ()


class _CommandError(Exception):
    def __init__(self, status: int, diagnostic: Diagnostic):
        super().__init__(diagnostic.message)
        self.status = status
        self.diagnostic = diagnostic


def _arg_diag(command: list[str], index: int, message: str, code: str) -> Diagnostic:
    # span within the space-joined command line, so it stays inside the input
    column = 1 + sum(len(a) + 1 for a in command[:index])
    length = len(command[index]) if index < len(command) else 0
    return Diagnostic("error", 1, column, length, message, code)


def _lookup(model: Model, kind, noun: str, command: list[str], index: int):
    name = command[index]
    for decl in model.decls:
        if isinstance(decl, kind) and decl.name == name:
            return decl
    raise _CommandError(
        EXIT_UNKNOWN_NAME,
        _arg_diag(command, index, f"unknown {noun} '{name}'", "E021"),
    )


def _int_arg(command: list[str], index: int) -> int:
    text = command[index]
    if not text.isdigit():
        raise _CommandError(
            EXIT_INPUT,
            _arg_diag(command, index, f"expected a non-negative integer, got '{text}'", "E011"),
        )
    return int(text)


def _bool_text(b: bool) -> str:
    return "true" if b else "false"


def _twist_text(n: int | None) -> str:
    return "infeasible" if n is None else str(n)


def _pair_result(pair: Pair) -> dict:
    return {
        "coords": list(pair.chart.coords),
        "divisor": format_divisor(pair.chart, pair.divisor),
    }


def _pair_result_text(pair: Pair) -> str:
    coords = " ".join(pair.chart.coords)
    return f"coords {coords}; divisor {format_divisor(pair.chart, pair.divisor)}"


def _run_single(model: Model, command: list[str]) -> Report:
    verb = command[0]
    args = command[1:]

    if verb in ("check-admissible", "minimal-twist", "hom-log", "check-minimal"):
        decl = _lookup(model, MapDecl, "map", command, 1)
        f = decl.pair_map
        record = {"command": verb, "args": list(args), "inputs": {"map": format_decl(decl)}}
        lines = [f"command: {verb} {decl.name}", f"map: {format_decl(decl)}"]
        if verb == "check-admissible":
            verdict = is_admissible(f)
            record["verdict"] = verdict
            lines.append(f"admissible: {_bool_text(verdict)}")
            status = EXIT_OK if verdict else EXIT_FALSE
        elif verb == "hom-log":
            verdict = hom_log_exists(f)
            record["verdict"] = verdict
            lines.append(f"hom-log: {_bool_text(verdict)}")
            status = EXIT_OK if verdict else EXIT_FALSE
        elif verb == "check-minimal":
            verdict = is_minimal(f)
            record["verdict"] = verdict
            lines.append(f"minimal: {_bool_text(verdict)}")
            status = EXIT_OK if verdict else EXIT_FALSE
        else:
            n = minimal_twist(f)
            record["minimal_twist"] = n
            lines.append(f"minimal-twist: {_twist_text(n)}")
            status = EXIT_OK if n is not None else EXIT_FALSE
        return Report(status, "\n".join(lines), (record,))

    if verb == "classify":
        decl = _lookup(model, BlowupDecl, "blowup", command, 1)
        verdict = classify(decl.spec)
        record = {
            "command": verb,
            "args": list(args),
            "inputs": {"blowup": format_decl(decl)},
            "verdict": verdict.value,
        }
        text = "\n".join(
            [f"command: classify {decl.name}", f"blowup: {format_decl(decl)}",
             f"classification: {verdict.value}"]
        )
        status = EXIT_OK if verdict is not BlowupClass.INVALID else EXIT_FALSE
        return Report(status, text, (record,))

    if verb == "blowup":
        decl = _lookup(model, BlowupDecl, "blowup", command, 1)
        verdict = classify(decl.spec)
        if verdict is BlowupClass.INVALID:
            raise _CommandError(
                EXIT_INVALID_BLOWUP,
                _arg_diag(command, 1, f"blowup '{decl.name}' has a center missing the divisor support", "E072"),
            )
        chart = decl.spec.pair.chart
        charts = []
        lines = [f"command: blowup {decl.name}", f"blowup: {format_decl(decl)}",
                 f"classification: {verdict.value}"]
        for bc in blowup_charts(decl.spec):
            assigns = "; ".join(
                f"{name} <- " + _monomial_text(chart, bc.chart_map.expo[j])
                for j, name in enumerate(chart.coords)
            )
            transform = format_divisor(chart, bc.total_transform)
            charts.append(
                {
                    "index": bc.index,
                    "coord": chart.coords[bc.index],
                    "map": assigns,
                    "total_transform": transform,
                }
            )
            lines.append(f"chart {chart.coords[bc.index]}: map {{ {assigns} }}; total-transform {transform}")
        record = {
            "command": verb,
            "args": list(args),
            "inputs": {"blowup": format_decl(decl)},
            "verdict": verdict.value,
            "charts": charts,
        }
        return Report(EXIT_OK, "\n".join(lines), (record,))

    if verb == "corr-check":
        decl = _lookup(model, CorrDecl, "corr", command, 1)
        c = decl.corr
        memberships = {
            "mcor": in_mcor(c),
            "colim": in_colim_mcor(c),
            "lcor": in_lcor(c),
        }
        n = corr_minimal_twist(c)
        record = {
            "command": verb,
            "args": list(args),
            "inputs": {"corr": format_decl(decl)},
            "memberships": memberships,
            "minimal_twist": n,
        }
        lines = [
            f"command: corr-check {decl.name}",
            f"corr: {format_decl(decl)}",
            f"mcor: {_bool_text(memberships['mcor'])}",
            f"colim: {_bool_text(memberships['colim'])}",
            f"lcor: {_bool_text(memberships['lcor'])}",
            f"minimal-twist: {_twist_text(n)}",
        ]
        status = EXIT_OK if all(memberships.values()) else EXIT_FALSE
        return Report(status, "\n".join(lines), (record,))

    if verb == "qdiv-normalize":
        decl = _lookup(model, QPairDecl, "qpair", command, 1)
        result = q_normalize(decl.qpair)
        record = {
            "command": verb,
            "args": list(args),
            "inputs": {"qpair": format_decl(decl)},
            "level": result.level,
            "divisor": format_divisor(result.pair.chart, result.pair.divisor),
        }
        text = "\n".join(
            [f"command: qdiv-normalize {decl.name}", f"qpair: {format_decl(decl)}",
             f"normalized: ({result.level}, {record['divisor']})"]
        )
        return Report(EXIT_OK, text, (record,))

    if verb == "qdiv-eq":
        first = _lookup(model, QPairDecl, "qpair", command, 1)
        second = _lookup(model, QPairDecl, "qpair", command, 2)
        verdict = q_eq(first.qpair, second.qpair)
        record = {
            "command": verb,
            "args": list(args),
            "inputs": {"first": format_decl(first), "second": format_decl(second)},
            "verdict": verdict,
        }
        text = "\n".join(
            [f"command: qdiv-eq {first.name} {second.name}",
             f"first: {format_decl(first)}", f"second: {format_decl(second)}",
             f"equal: {_bool_text(verdict)}"]
        )
        return Report(EXIT_OK if verdict else EXIT_FALSE, text, (record,))

    if verb in ("cube", "twist"):
        decl = _lookup(model, PairDecl, "pair", command, 1)
        n = _int_arg(command, 2)
        try:
            result = cube(decl.pair, n) if verb == "cube" else twist(decl.pair, n)
        except ValueError as exc:
            raise _CommandError(EXIT_INPUT, _arg_diag(command, 2, str(exc), "E011")) from None
        record = {
            "command": verb,
            "args": list(args),
            "inputs": {"pair": format_decl(decl), "n": n},
            "result": _pair_result(result),
        }
        lines = [f"command: {verb} {decl.name} {n}", f"pair: {format_decl(decl)}",
                 f"result: {_pair_result_text(result)}"]
        if verb == "cube":
            # the complementary interval chart carries no divisor component
            lines.append("note: only the chart at infinity is materialized")
        return Report(EXIT_OK, "\n".join(lines), (record,))

    raise _CommandError(
        EXIT_INPUT,
        _arg_diag(command, 0, f"unknown command '{verb}'", "E011"),
    )


def _monomial_text(chart, exps) -> str:
    parts = [
        name if e == 1 else f"{name}^{e}"
        for name, e in zip(chart.coords, exps)
        if e > 0
    ]
    return " * ".join(parts) if parts else "1"


def _check_all(model: Model) -> Report:
    status = EXIT_OK
    texts: list[str] = []
    records: list[dict] = []
    for decl in model.decls:
        sub_commands: list[list[str]] = []
        if isinstance(decl, MapDecl):
            sub_commands = [
                ["check-admissible", decl.name],
                ["minimal-twist", decl.name],
                ["hom-log", decl.name],
                ["check-minimal", decl.name],
            ]
        elif isinstance(decl, CorrDecl):
            sub_commands = [["corr-check", decl.name]]
        elif isinstance(decl, BlowupDecl):
            sub_commands = [["classify", decl.name]]
            if classify(decl.spec) is not BlowupClass.INVALID:
                sub_commands.append(["blowup", decl.name])
        elif isinstance(decl, QPairDecl):
            sub_commands = [["qdiv-normalize", decl.name]]
        for sub in sub_commands:
            report = _run_single(model, sub)
            status = max(status, report.status)
            texts.append(report.text)
            records.extend(report.records)
    return Report(status, "\n\n".join(texts), tuple(records))


def run_command(model: Model, command) -> Report:
    """Run one command against a model; never raises for model-level problems."""
    command = list(command)
    if not command:
        return Report(
            EXIT_INPUT,
            "error: empty command",
            (),
            (Diagnostic("error", 1, 1, 0, "empty command", "E011"),),
        )
    verb = command[0]
    expected = COMMANDS.get(verb)
    try:
        if expected is None:
            raise _CommandError(EXIT_INPUT, _arg_diag(command, 0, f"unknown command '{verb}'", "E011"))
        if len(command) - 1 != len(expected):
            raise _CommandError(
                EXIT_INPUT,
                _arg_diag(
                    command, 0,
                    f"command '{verb}' takes {len(expected)} argument(s), got {len(command) - 1}",
                    "E011",
                ),
            )
        if verb == "check-all":
            return _check_all(model)
        return _run_single(model, command)
    except _CommandError as exc:
        return Report(
            exc.status,
            f"error: {exc.diagnostic.message}",
            (),
            (exc.diagnostic,),
        )
    except StructureError as exc:
        diag = Diagnostic("error", 1, 1, 0, str(exc), "E090")
        return Report(EXIT_DIMENSION, f"error: {exc}", (), (diag,))


def _read_model_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="modpairs",
        description="Checks on declared pairs, maps, correspondences, levelled pairs and blowups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for verb, positionals in COMMANDS.items():
        p = sub.add_parser(verb)
        for positional in positionals:
            p.add_argument(positional)
        p.add_argument("--model", default="-", help="model file, or - for stdin")
        p.add_argument("--machine", action="store_true", help="emit one JSON record per check")
    ns = parser.parse_args(argv)

    try:
        text = _read_model_text(ns.model)
    except OSError as exc:
        print(f"error: cannot read model: {exc}", file=sys.stderr)
        return EXIT_INPUT

    parsed = parse(text)
    if isinstance(parsed, list):
        for diag in parsed:
            print(format_diagnostic(diag), file=sys.stderr)
        return EXIT_INPUT

    command = [ns.command] + [getattr(ns, positional) for positional in COMMANDS[ns.command]]
    report = run_command(parsed, command)
    for diag in report.diagnostics:
        print(format_diagnostic(diag), file=sys.stderr)
    if ns.machine:
        for record in report.records:
            print(json.dumps(record, sort_keys=True))
    elif report.text:
        print(report.text)
    return report.status


if __name__ == "__main__":
    sys.exit(main())
