"""Command-line front end.

Every subcommand takes a degree sequence (comma- or whitespace-separated)
or a graph/spec file, prints a one-line human-readable report by default,
and mirrors it as versioned JSON under ``--json``.  Output is
deterministic byte-for-byte for a fixed input and flag set.

Exit codes: 0 success, 1 parse/usage errors, 2 domain precondition
violations (non-graphic input, infeasible spec, ...), 3 internal
invariant breaches (sweep mismatches, failed witness validation).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import extremal, oracle
from .bipartite import BipartiteDegreeSpec, build_bounded_bipartite, gale_ryser_feasible
from .errors import (
    Infeasible,
    InternalRepairFailure,
    InvalidSequence,
    InvalidWitness,
    NotConnected,
    NotForestSequence,
    NotGraphic,
    PreconditionViolated,
    TooLarge,
)
from .graphs import Graph, graph_from_json_obj, parse_edge_list_text, witness_to_json_obj
from .oracle import DEFAULT_ORACLE_LIMITS, GraphClass, iter_degree_sequences, oracle_extrema
from .realize import (
    forest_realize,
    havel_hakimi_realize,
    independent_dominating_head_forest,
    independent_tail_forest,
)
from .sequences import DegreeSequence, is_forest_sequence, is_graphic, normalize, parse_sequence_text

SCHEMA_VERSION = 1
ORACLE_LIMIT_ENV = "DEGSEQOPT_ORACLE_LIMIT"

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_PRECONDITION = 2
EXIT_INTERNAL = 3

_PARSE_ERRORS = (InvalidSequence, ValueError, KeyError, OSError, json.JSONDecodeError)
_PRECONDITION_ERRORS = (
    NotGraphic,
    NotForestSequence,
    PreconditionViolated,
    TooLarge,
    Infeasible,
    NotConnected,
)
_INTERNAL_ERRORS = (InternalRepairFailure, InvalidWitness, AssertionError)


class CliParseError(Exception):
    """Raised for malformed command lines and inputs; maps to exit 1."""


@dataclass
class CommandRequest:
    """A validated, dispatchable CLI invocation.

    Exactly one input source is set: an inline sequence, a graph file, an
    inline/file bipartite spec, or none for input-free commands (sweep).
    """

    subcommand: str
    sequence_text: str | None = None
    graph_path: str | None = None
    spec_text: str | None = None
    flags: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        sources = [
            s for s in (self.sequence_text, self.graph_path, self.spec_text) if s is not None
        ]
        if len(sources) > 1:
            raise CliParseError("more than one input source in one request")
        if self.flags.get("witness") and self.subcommand not in (
            "gamma-min",
            "forest gamma-min",
            "forest alpha-max",
        ):
            raise CliParseError(f"--witness is not valid for {self.subcommand!r}")


def _sequence(req: CommandRequest) -> DegreeSequence:
    return parse_sequence_text(req.sequence_text)


def _sequence_obj(d: DegreeSequence) -> dict:
    return {
        "sorted": list(d.entries),
        "input_order": list(d.original_order),
        "canonical": ",".join(str(x) for x in d.entries),
    }


def _chain_obj(chain: extremal.BoundChain) -> dict:
    return {
        "slater": chain.slater,
        "annihilation": chain.annihilation,
        "n0": chain.n0,
        "gamma_forest_low": chain.forest_gamma_low,
        "gamma_forest_high": chain.forest_gamma_high,
    }


def _result_payload(d: DegreeSequence, res: extremal.ExtremalResult, with_witness: bool) -> dict:
    payload = {
        "parameter": res.parameter.value,
        "value": res.value,
        "achieving_k": res.achieving_k,
        "bound_chain": _chain_obj(res.bound_chain),
        "sequence": _sequence_obj(d),
        "witness": None,
    }
    if with_witness and res.witness is not None:
        payload["witness"] = witness_to_json_obj(res.witness)
    return payload


def _edges_text(edges: list[list[int]]) -> str:
    return ",".join(f"{u}-{v}" for u, v in edges) if edges else "-"


def _bool(x: bool) -> str:
    return "true" if x else "false"


# --------------------------------------------------------------------------
# handlers: CommandRequest -> (payload, text, exit_code)


def _handle_check(req: CommandRequest):
    d = _sequence(req)
    graphic = is_graphic(d)
    forest = is_forest_sequence(d)
    payload = {"graphic": graphic, "forest": forest, "sequence": _sequence_obj(d)}
    return payload, f"graphic={_bool(graphic)} forest={_bool(forest)}", EXIT_OK


def _handle_bounds(req: CommandRequest):
    d = _sequence(req)
    chain = extremal.bound_chain(d)
    payload = dict(_chain_obj(chain))
    payload["sequence"] = _sequence_obj(d)
    text = (
        f"slater={chain.slater} annihilation={chain.annihilation} n0={chain.n0} "
        f"gamma_forest_low={chain.forest_gamma_low} gamma_forest_high={chain.forest_gamma_high}"
    )
    return payload, text, EXIT_OK


def _extremal_handler(func, key):
    def handle(req: CommandRequest):
        d = _sequence(req)
        kwargs = {}
        if key == "gamma_min" and req.flags.get("delta_cap") is not None:
            kwargs["delta_cap"] = req.flags["delta_cap"]
        res = func(d, **kwargs)
        payload = _result_payload(d, res, req.flags.get("witness", False))
        text = f"{key}={res.value}"
        if res.achieving_k is not None:
            text += f" k={res.achieving_k}"
        if payload["witness"] is not None:
            text += f" witness_edges={_edges_text(payload['witness']['edges'])}"
        return payload, text, EXIT_OK

    return handle


def _handle_realize(req: CommandRequest):
    d = _sequence(req)
    variant = req.flags["variant"]
    k = req.flags.get("k")
    if variant in ("indep-tail", "indep-dom"):
        if k is None:
            raise CliParseError(f"realize {variant} requires --k")
        builder = (
            independent_tail_forest if variant == "indep-tail"
            else independent_dominating_head_forest
        )
        witness = builder(d, k)
        payload = {"variant": variant, "witness": witness_to_json_obj(witness)}
        text = (
            f"n={d.n} k={k} edges={_edges_text(payload['witness']['edges'])} "
            f"claims={','.join(payload['witness']['claims'])}"
        )
        return payload, text, EXIT_OK
    graph = havel_hakimi_realize(d) if variant == "hh" else forest_realize(d)
    edges = [[u + 1, v + 1] for u, v in graph.edges()]
    payload = {
        "variant": variant,
        "n": graph.n,
        "edges": edges,
        "sequence": _sequence_obj(d),
    }
    return payload, f"n={graph.n} edges={_edges_text(edges)}", EXIT_OK


def _handle_oracle(req: CommandRequest):
    d = _sequence(req)
    graph_class = GraphClass.FOREST if req.flags.get("forest") else GraphClass.GENERAL
    rep = oracle_extrema(d, graph_class, limit=req.flags.get("limit"))
    payload = {
        "graph_class": graph_class.value,
        "count": rep.realization_count,
        "gamma_min": rep.gamma_min,
        "gamma_max": rep.gamma_max,
        "alpha_min": rep.alpha_min,
        "alpha_max": rep.alpha_max,
        "omega_min": rep.omega_min,
        "omega_max": rep.omega_max,
        "sequence": _sequence_obj(d),
    }
    text = (
        f"count={rep.realization_count} "
        f"gamma_min={rep.gamma_min} gamma_max={rep.gamma_max} "
        f"alpha_min={rep.alpha_min} alpha_max={rep.alpha_max} "
        f"omega_min={rep.omega_min} omega_max={rep.omega_max}"
    )
    return payload, text, EXIT_OK


def _load_graph(path: str) -> Graph:
    text = Path(path).read_text(encoding="utf-8")
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return graph_from_json_obj(json.loads(text))
    return parse_edge_list_text(text)


def _handle_slater_bound(req: CommandRequest):
    g = _load_graph(req.graph_path)
    rep = extremal.check_slater_bound(g)
    payload = {
        "holds": rep.holds,
        "gamma": rep.gamma,
        "slater": rep.slater,
        "cycle_excess": rep.cycle_excess,
        "bound": rep.bound,
        "n": g.n,
        "m": g.m,
    }
    text = (
        f"holds={_bool(rep.holds)} gamma={rep.gamma} slater={rep.slater} "
        f"cycle_excess={rep.cycle_excess} bound={rep.bound}"
    )
    code = EXIT_OK if rep.holds else EXIT_INTERNAL
    return payload, text, code


def _handle_bip_check(req: CommandRequest):
    raw = req.spec_text
    if not raw.lstrip().startswith("{"):
        raw = Path(raw).read_text(encoding="utf-8")
    obj = json.loads(raw)
    spec = BipartiteDegreeSpec.create(obj["a"], obj["b"], obj["ap"], obj["bp"])
    feasible = gale_ryser_feasible(spec)
    edges = None
    if feasible:
        g = build_bounded_bipartite(spec)
        edges = [[u + 1, v - spec.m + 1] for u, v in g.edges()]
    payload = {"feasible": feasible, "edges": edges}
    text = f"feasible={_bool(feasible)}"
    if edges is not None:
        text += f" edges={_edges_text(edges)}"
    return payload, text, EXIT_OK


_SWEEP_CHECKS = {
    GraphClass.GENERAL: {
        "gamma_min": lambda d, rep: extremal.gamma_min_bounded(d).value == rep.gamma_min,
        "alpha_max": lambda d, rep: extremal.alpha_max(d).value == rep.alpha_max,
        "omega_max": lambda d, rep: extremal.omega_max(d).value == rep.omega_max,
    },
    GraphClass.FOREST: {
        "gamma_min_forest": lambda d, rep: extremal.gamma_min_forest(d).value == rep.gamma_min,
        "alpha_max_forest": lambda d, rep: extremal.alpha_max_forest(d).value == rep.alpha_max,
    },
}


def _handle_sweep(req: CommandRequest):
    n_max = req.flags["n_max"]
    graph_class = GraphClass.FOREST if req.flags.get("forest") else GraphClass.GENERAL
    limit = req.flags.get("limit")
    if limit is None:
        limit = DEFAULT_ORACLE_LIMITS[graph_class]
    if n_max > limit:
        raise CliParseError(f"--n-max {n_max} exceeds oracle limit {limit}")
    checks = _SWEEP_CHECKS[graph_class]
    params = req.flags.get("params") or sorted(checks)
    unknown = [p for p in params if p not in checks]
    if unknown:
        raise CliParseError(f"unknown parameters for {graph_class.value} sweep: {unknown}")

    checked = {p: 0 for p in params}
    mismatches = {p: [] for p in params}
    for n in range(2 if graph_class is GraphClass.FOREST else 1, n_max + 1):
        positive = graph_class is GraphClass.FOREST
        for seq in iter_degree_sequences(n, positive_only=positive):
            d = normalize(list(seq))
            if graph_class is GraphClass.GENERAL and not is_graphic(d):
                continue
            if graph_class is GraphClass.FOREST and not is_forest_sequence(d):
                continue
            rep = oracle_extrema(d, graph_class, limit=limit)
            for p in params:
                checked[p] += 1
                if not checks[p](d, rep):
                    mismatches[p].append(list(seq))
    ok = all(not m for m in mismatches.values())
    payload = {
        "graph_class": graph_class.value,
        "n_max": n_max,
        "results": [
            {"parameter": p, "checked": checked[p], "mismatches": mismatches[p]}
            for p in params
        ],
        "ok": ok,
    }
    lines = [
        f"param={p} checked={checked[p]} mismatches={len(mismatches[p])}" for p in params
    ]
    for p in params:
        for seq in mismatches[p]:
            lines.append(f"MISMATCH {p} {','.join(str(x) for x in seq)}")
    lines.append(f"ok={_bool(ok)}")
    return payload, "\n".join(lines), EXIT_OK if ok else EXIT_INTERNAL


_HANDLERS = {
    "check": _handle_check,
    "bounds": _handle_bounds,
    "omega-max": _extremal_handler(extremal.omega_max, "omega_max"),
    "alpha-max": _extremal_handler(extremal.alpha_max, "alpha_max"),
    "gamma-min": _extremal_handler(extremal.gamma_min_bounded, "gamma_min"),
    "forest gamma-min": _extremal_handler(extremal.gamma_min_forest, "gamma_min_forest"),
    "forest alpha-max": _extremal_handler(extremal.alpha_max_forest, "alpha_max_forest"),
    "realize": _handle_realize,
    "oracle": _handle_oracle,
    "slater-bound": _handle_slater_bound,
    "bip-check": _handle_bip_check,
    "sweep": _handle_sweep,
}


def run(request: CommandRequest) -> tuple[int, str]:
    """Execute a request; returns (exit code, emitted report)."""
    as_json = request.flags.get("json", False)

    def emit(obj: dict, text: str) -> str:
        if as_json:
            envelope = {"schema_version": SCHEMA_VERSION, "command": request.subcommand}
            envelope.update(obj)
            return json.dumps(envelope, sort_keys=True)
        return text

    try:
        payload, text, code = _HANDLERS[request.subcommand](request)
    except CliParseError as exc:
        return EXIT_PARSE, emit(_error_obj(exc), f"error: {exc}")
    except _PRECONDITION_ERRORS as exc:
        return EXIT_PRECONDITION, emit(_error_obj(exc), f"error: {exc}")
    except _INTERNAL_ERRORS as exc:
        return EXIT_INTERNAL, emit(_error_obj(exc), f"internal error: {exc}")
    except _PARSE_ERRORS as exc:
        return EXIT_PARSE, emit(_error_obj(exc), f"error: {exc}")
    return code, emit(payload, text)


def _error_obj(exc: BaseException) -> dict:
    return {"error": {"type": type(exc).__name__, "message": str(exc)}}


# --------------------------------------------------------------------------
# argument parsing


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage errors are parse errors: exit 1
        raise CliParseError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="degseqopt", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_json(p):
        p.add_argument("--json", action="store_true", help="emit structured JSON")

    def add_seq(p):
        p.add_argument("sequence", help="degree sequence, e.g. 3,2,2,1 or '3 2 2 1'")

    p = sub.add_parser("check", help="graphicality and forest realizability")
    add_seq(p), add_json(p)

    p = sub.add_parser("bounds", help="Slater number, annihilation number, and the forest bracket")
    add_seq(p), add_json(p)

    for name, helptext in (
        ("omega-max", "largest clique number over realizations"),
        ("alpha-max", "largest independence number over realizations"),
    ):
        p = sub.add_parser(name, help=helptext)
        add_seq(p), add_json(p)

    p = sub.add_parser("gamma-min", help="smallest domination number over realizations")
    add_seq(p)
    p.add_argument("--delta-cap", type=int, default=None, metavar="D",
                   help="reject sequences with maximum entry above D")
    p.add_argument("--witness", action="store_true", help="attach a witness realization")
    add_json(p)

    p = sub.add_parser("forest", help="forest-restricted extremal parameters")
    fsub = p.add_subparsers(dest="forest_command", required=True)
    for name, helptext in (
        ("gamma-min", "smallest domination number over forest realizations"),
        ("alpha-max", "largest independence number over forest realizations"),
    ):
        fp = fsub.add_parser(name, help=helptext)
        add_seq(fp)
        fp.add_argument("--witness", action="store_true")
        add_json(fp)

    p = sub.add_parser("realize", help="construct a concrete realization")
    rsub = p.add_subparsers(dest="realize_command", required=True)
    for name, helptext in (
        ("hh", "Havel-Hakimi realization of a graphic sequence"),
        ("forest", "some forest realization"),
        ("indep-tail", "forest with independent tail below split --k"),
        ("indep-dom", "forest whose head of size --k is independent dominating"),
    ):
        rp = rsub.add_parser(name, help=helptext)
        add_seq(rp)
        if name in ("indep-tail", "indep-dom"):
            rp.add_argument("--k", type=int, required=True, help="split index")
        add_json(rp)

    p = sub.add_parser("oracle", help="exhaustive extrema over all realizations")
    add_seq(p)
    p.add_argument("--forest", action="store_true", help="restrict to forest realizations")
    p.add_argument("--limit", type=int, default=None, help="oracle size limit")
    add_json(p)

    p = sub.add_parser("slater-bound",
                       help="check gamma <= 3*slater + 2*(cycle excess) - 2 on a connected graph")
    p.add_argument("--graph", required=True, metavar="FILE",
                   help="edge-list file ('n m' header) or JSON {\"n\":..,\"edges\":[[i,j],..]}")
    add_json(p)

    p = sub.add_parser("bip-check", help="bounded-degree bipartite feasibility (debug)")
    p.add_argument("--spec", required=True,
                   help='JSON {"a":[..],"b":[..],"ap":[..],"bp":[..]} inline or a file path')
    add_json(p)

    p = sub.add_parser("sweep", help="compare formulas against the oracle over all sequences")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--forest", action="store_true")
    p.add_argument("--params", default=None,
                   help="comma-separated parameter names (default: all for the class)")
    p.add_argument("--limit", type=int, default=None, help="oracle size limit")
    add_json(p)

    return parser


def _default_oracle_limit() -> int | None:
    raw = os.environ.get(ORACLE_LIMIT_ENV)
    if raw is None:
        return None
    try:
        return int(raw)
    except ValueError as exc:
        raise CliParseError(f"bad {ORACLE_LIMIT_ENV}={raw!r}") from exc


def _request_from_args(args: argparse.Namespace) -> CommandRequest:
    command = args.command
    flags = {"json": getattr(args, "json", False)}
    sequence = getattr(args, "sequence", None)
    graph_path = None
    spec_text = None

    if command == "forest":
        command = f"forest {args.forest_command}"
        flags["witness"] = args.witness
    elif command == "realize":
        flags["variant"] = args.realize_command
        flags["k"] = getattr(args, "k", None)
    elif command == "gamma-min":
        flags["witness"] = args.witness
        flags["delta_cap"] = args.delta_cap
    elif command == "oracle":
        flags["forest"] = args.forest
        flags["limit"] = args.limit if args.limit is not None else _default_oracle_limit()
    elif command == "slater-bound":
        graph_path = args.graph
    elif command == "bip-check":
        spec_text = args.spec
    elif command == "sweep":
        flags["n_max"] = args.n_max
        flags["forest"] = args.forest
        flags["limit"] = args.limit if args.limit is not None else _default_oracle_limit()
        flags["params"] = (
            [p.strip() for p in args.params.split(",") if p.strip()] if args.params else None
        )

    return CommandRequest(
        subcommand=command,
        sequence_text=sequence,
        graph_path=graph_path,
        spec_text=spec_text,
        flags=flags,
    )


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        request = _request_from_args(args)
    except CliParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    code, report = run(request)
    print(report)
    return code


if __name__ == "__main__":
    sys.exit(main())
