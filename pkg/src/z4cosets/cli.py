"""Command-line interface: ``z4cosets <command> [options]``.

Exit codes: 0 success, 1 usage error, 2 a verification failed, 3 a search
budget was exceeded (partial results are still written).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
from contextlib import contextmanager
from typing import Iterator

from . import pentadecoder, spectral, unitsearch
from .codes import constructions
from .codes.core import BINARY, Code, distance_enumerator, min_distance
from .group_ring import GroupRingElement, all_elements
from .quaternary import lee_weight_vector

EXIT_OK, EXIT_USAGE, EXIT_VERIFY, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


class VerificationFailed(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _common() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default=None)
    common.add_argument("--threads", type=int, default=1)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--bound-order", type=int, default=64, help="largest subgroup order in searches")
    common.add_argument("--output", "-o", default=None, help="write to this file instead of stdout")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = _Parser(prog="z4cosets", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("build", parents=[common], help="construct a named code")
    p.add_argument("name", help=", ".join(constructions.NAMED_CODES))

    p = sub.add_parser("analyze", parents=[common], help="metric report of a serialized code")
    p.add_argument("input", nargs="?", default="-", help="code file, '-' for stdin")

    p = sub.add_parser("decode", parents=[common], help="decode a received pentacode word")
    p.add_argument("word", help="five Z4 digits, e.g. 03210")

    sub.add_parser("verify-decoder", parents=[common], help="exhaustive decoder check")

    p = sub.add_parser("search", parents=[common], help="unit-group searches")
    p.add_argument("kind", choices=("subgroups", "pentacode-scan", "parameter-scan"))
    p.add_argument("--n", type=int, default=5)
    p.add_argument("--min-d", type=int, default=4)
    p.add_argument("--max-generators", type=int, default=4)
    p.add_argument("--max-subgroups", type=int, default=None)

    p = sub.add_parser("tables", parents=[common], help="reproduce the spectrum or representation tables")
    p.add_argument("which", choices=("spectrum", "representations"))

    p = sub.add_parser("simulate", parents=[common], help="Monte-Carlo run of the pentacode decoder")
    p.add_argument("--trials", type=int, default=10000)
    p.add_argument(
        "--weights",
        default="0:1,1:1",
        help="Lee error weights with relative frequencies, e.g. '1' or '0:1,1:3,2:1'",
    )
    return parser


@contextmanager
def _sink(path: str | None) -> Iterator:
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w") as fh:
            yield fh


def _csv(rows) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


# Commands. Each returns the text to emit.


def cmd_build(name: str, fmt: str | None = None) -> str:
    try:
        code = constructions.build(name)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None
    fmt = fmt or "text"
    if fmt == "json":
        return json.dumps({"n": code.n, "alphabet": code.alphabet, "M": code.size, "words": [_s(w) for w in code]}) + "\n"
    if fmt == "csv":
        return _csv([[_s(w)] for w in code])
    return code.serialize()


def _s(w) -> str:
    return "".join(str(x) for x in w)


def analyze_report(code: Code) -> dict:
    enum = distance_enumerator(code)
    report = {
        "n": code.n,
        "alphabet": code.alphabet,
        "M": code.size,
        "min_distance": min_distance(code),
        "enumerator": {str(d): c for d, c in enum.counts.items()},
        "distance_invariant": enum.distance_invariant,
        "gray_parameters": None,
    }
    if code.alphabet != BINARY:
        g = code.gray()
        report["gray_parameters"] = [g.n, g.size, min_distance(g)]
    return report


def cmd_analyze(text: str, fmt: str | None = None) -> str:
    try:
        code = Code.deserialize(text)
        report = analyze_report(code)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    fmt = fmt or "json"
    if fmt == "json":
        return json.dumps(report) + "\n"
    if fmt == "csv":
        return _csv([[k, json.dumps(v)] for k, v in report.items()])
    enum = distance_enumerator(code)
    total = code.n if code.alphabet == BINARY else 2 * code.n
    return (
        f"({code.n}, {code.size}, {report['min_distance']}) {code.metric} code over {code.alphabet}\n"
        f"D(x,y) = {enum.polynomial(total)}"
        f"{'' if enum.distance_invariant else '  (averaged, not distance-invariant)'}\n"
        f"Gray image parameters: {report['gray_parameters']}\n"
    )


def cmd_decode(word: str, fmt: str | None = None) -> str:
    if len(word) != 5 or any(ch not in "0123" for ch in word):
        raise UsageError(f"expected five Z4 digits, got {word!r}")
    outcome = pentadecoder.decode(GroupRingElement.parse(word))
    if fmt == "text":
        d = outcome.to_dict()
        return " ".join(f"{k}={v}" for k, v in d.items()) + "\n"
    return outcome.to_json() + "\n"


def cmd_verify_decoder(fmt: str | None = None) -> tuple[str, bool]:
    report = pentadecoder.decode_exhaustive_verify()
    if fmt == "json":
        from dataclasses import asdict

        return json.dumps({**asdict(report), "passed": report.passed}) + "\n", report.passed
    return report.table() + "\n", report.passed


def cmd_search(kind: str, n: int = 5, min_d: int = 4, bound_order: int = 64, max_generators: int = 4,
               threads: int = 1, max_subgroups: int | None = None) -> tuple[list[str], str, bool]:
    """JSON lines, a summary footer and whether the search finished within budget."""
    if kind == "subgroups":
        catalog = unitsearch.order40_subgroups()
        return list(catalog.json_lines()), json.dumps({"summary": f"{len(catalog)} subgroups", "count": len(catalog)}), True
    if kind == "pentacode-scan":
        hits = unitsearch.pentacode_subgroup_scan()
        lines = [
            json.dumps({"generators": [str(g) for g in h.subgroup.generators], "representatives": [str(r) for r in h.representatives]})
            for h in hits
        ]
        cosets = sum(len(h.representatives) for h in hits)
        footer = {"summary": f"{len(hits)} subgroups, {cosets} cosets", "subgroups": len(hits), "cosets": cosets}
        return lines, json.dumps(footer), True
    try:
        hits = unitsearch.coset_parameter_scan(
            n, min_d, max_subgroup_order=bound_order, max_generators=max_generators,
            threads=threads, max_subgroups=max_subgroups,
        )
        complete = True
    except unitsearch.BudgetExceeded as exc:
        hits, complete = exc.partial, False
    lines = [json.dumps(h.to_dict()) for h in hits]
    footer = {"summary": f"{len(hits)} parameter sets", "count": len(hits), "complete": complete}
    return lines, json.dumps(footer), complete


def cmd_tables(which: str, fmt: str | None = None) -> str:
    if which == "spectrum":
        rows = spectral.normalized_spectra()
        if fmt == "json":
            return spectral.spectra_json(rows) + "\n"
        return spectral.render_table(rows) + "\n"
    hits = unitsearch.pentacode_subgroup_scan()
    if fmt == "json":
        return json.dumps(
            [{"generators": [str(g) for g in h.subgroup.generators], "representatives": [str(r) for r in h.representatives]} for h in hits]
        ) + "\n"
    return unitsearch.render_representations(hits) + "\n"


def parse_weights(spec: str) -> dict[int, float]:
    dist: dict[int, float] = {}
    try:
        for part in spec.split(","):
            if ":" in part:
                w, p = part.split(":")
                dist[int(w)] = float(p)
            else:
                dist[int(part)] = 1.0
    except ValueError:
        raise UsageError(f"invalid weight distribution {spec!r}") from None
    if not dist or any(w < 0 or w > 10 for w in dist) or any(p < 0 for p in dist.values()) or sum(dist.values()) <= 0:
        raise UsageError(f"invalid weight distribution {spec!r}")
    return dist


def simulate(trials: int, weights: dict[int, float], seed: int = 0) -> dict:
    """Decode random codewords hit by random errors of the requested Lee weights."""
    if trials < 1:
        raise UsageError("trials must be at least 1")
    rng = random.Random(seed)
    by_weight: dict[int, list[GroupRingElement]] = {}
    for e in all_elements(5):
        by_weight.setdefault(lee_weight_vector(e.coeffs), []).append(e)
    choices = sorted(weights)
    probs = [weights[w] for w in choices]
    stats = {"trials": trials, "decoded": 0, "detected": 0, "miscorrected": 0}
    for _ in range(trials):
        m = rng.choice(pentadecoder.ALL_MESSAGES)
        w = rng.choices(choices, probs)[0]
        e = rng.choice(by_weight[w])
        out = pentadecoder.decode(pentadecoder.encode(m) + e)
        if out.detected:
            stats["detected"] += 1
        elif out.message == m:
            stats["decoded"] += 1
        else:
            stats["miscorrected"] += 1
    for key in ("decoded", "detected", "miscorrected"):
        stats[f"{key}_rate"] = stats[key] / trials
    return stats


def cmd_simulate(trials: int, weights: str, seed: int = 0, fmt: str | None = None) -> tuple[str, bool]:
    dist = parse_weights(weights)
    stats = simulate(trials, dist, seed)
    ok = True
    if max(w for w, p in dist.items() if p > 0) <= 2:
        ok = stats["miscorrected"] == 0
    if fmt == "text":
        return "\n".join(f"{k}: {v}" for k, v in stats.items()) + "\n", ok
    return json.dumps(stats) + "\n", ok


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    code = EXIT_OK
    try:
        if args.command == "build":
            out = cmd_build(args.name, args.format)
        elif args.command == "analyze":
            text = sys.stdin.read() if args.input == "-" else _read(args.input)
            out = cmd_analyze(text, args.format)
        elif args.command == "decode":
            out = cmd_decode(args.word, args.format)
        elif args.command == "verify-decoder":
            out, ok = cmd_verify_decoder(args.format)
            code = EXIT_OK if ok else EXIT_VERIFY
        elif args.command == "search":
            lines, footer, complete = cmd_search(
                args.kind, args.n, args.min_d, args.bound_order, args.max_generators, args.threads, args.max_subgroups
            )
            out = "".join(line + "\n" for line in lines) + footer + "\n"
            code = EXIT_OK if complete else EXIT_BUDGET
        elif args.command == "tables":
            out = cmd_tables(args.which, args.format)
        else:
            out, ok = cmd_simulate(args.trials, args.weights, args.seed, args.format)
            code = EXIT_OK if ok else EXIT_VERIFY
    except UsageError as exc:
        print(f"z4cosets: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    with _sink(args.output) as fh:
        fh.write(out)
    return code


def _read(path: str) -> str:
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(str(exc)) from None


if __name__ == "__main__":
    sys.exit(main())
