"""Command-line front end.

Every command emits a JSON report carrying a run manifest (argument
vector, SHA-256 digests of input files, seed, tool version, timing).
Exit codes: 0 success, 1 a checked property failed, 2 usage error,
3 input/output or schema error.  Failures print a JSON error object on
stderr.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from dataclasses import asdict, dataclass, field
from datetime import datetime, timezone
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from . import __version__
from .census import knot_census, link_census, verify_doubling_counts
from .constructions import REGISTRY
from .diagram import DegenerateProjection
from .digraph import Digraph, GraphError, GraphFormatError
from .embedding import (
    EmbeddingError,
    PLEmbedding,
    contract_path_embedding,
    double_embedding,
    knot_certificate,
    linking_number,
    spatial_realize,
)
from .minors import MinorWitness, Partition, WitnessError, check_minor_witness, density_certificate

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3
VOLATILE_FIELDS = ("started_at", "duration_seconds")


class UsageError(Exception):
    pass


class InputError(Exception):
    def __init__(self, message: str, location: str | None = None):
        super().__init__(message)
        self.location = location


@dataclass
class RunManifest:
    command: str
    argv: list[str]
    inputs: dict[str, str] = field(default_factory=dict)
    seed: int = 0
    version: str = __version__
    started_at: str = ""
    duration_seconds: float = 0.0

    def add_input(self, path: str) -> bytes:
        data = _read_bytes(path)
        self.inputs[path] = hashlib.sha256(data).hexdigest()
        return data

    def verify_digests(self) -> dict[str, bool]:
        """Recompute input digests; True where the file still matches."""
        out = {}
        for p, digest in self.inputs.items():
            try:
                out[p] = hashlib.sha256(Path(p).read_bytes()).hexdigest() == digest
            except OSError:
                out[p] = False
        return out

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict) -> "RunManifest":
        try:
            return cls(**{k: data[k] for k in ("command", "argv", "inputs", "seed", "version",
                                                "started_at", "duration_seconds")})
        except (KeyError, TypeError) as exc:
            raise InputError(f"malformed manifest: {exc}") from None


def load_manifest(path: str) -> RunManifest:
    """Read a manifest (bare or inside a report) and check its input digests."""
    try:
        data = json.loads(_read_bytes(path))
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: {exc.msg}", f"{path}:line {exc.lineno} column {exc.colno}") from None
    man = RunManifest.from_dict(data.get("manifest", data) if isinstance(data, dict) else {})
    stale = [p for p, ok in man.verify_digests().items() if not ok]
    if stale:
        raise InputError(f"input digests no longer match: {stale}", path)
    return man


def _read_bytes(path: str) -> bytes:
    try:
        return Path(path).read_bytes()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror or exc}", path) from None


def _write(path: str, text: str) -> None:
    try:
        Path(path).write_text(text)
    except OSError as exc:
        raise InputError(f"cannot write {path}: {exc.strerror or exc}", path) from None


def _dump(obj) -> str:
    return json.dumps(obj, indent=1, sort_keys=True) + "\n"


def _load_graph(man: RunManifest, path: str) -> Digraph:
    text = man.add_input(path).decode()
    try:
        return Digraph.from_json(text)
    except GraphFormatError as exc:
        raise InputError(f"{path}: {exc}", f"{path}:{exc.location}") from None


def _load_embedding(man: RunManifest, path: str, graph: Digraph | None = None) -> PLEmbedding:
    text = man.add_input(path).decode()
    try:
        emb = PLEmbedding.from_json(text, graph)
        emb.validate()
    except GraphFormatError as exc:
        raise InputError(f"{path}: {exc}", f"{path}:{exc.location}") from None
    except EmbeddingError as exc:
        raise InputError(f"{path}: invalid embedding: {exc}", path) from None
    return emb


def _embedding_from_args(man: RunManifest, args) -> PLEmbedding:
    g = _load_graph(man, args.graph) if getattr(args, "graph", None) else None
    if getattr(args, "embedding", None):
        return _load_embedding(man, args.embedding, g)
    if g is None:
        raise UsageError("give --embedding, --graph, or both")
    return spatial_realize(g, args.seed)


def _cycle(emb: PLEmbedding, text: str):
    try:
        return emb.named_cycle(text)
    except GraphError as exc:
        raise UsageError(f"bad cycle {text!r}: {exc}") from None


def _direction(text: str | None):
    if text is None:
        return None
    try:
        p, q = (Fraction(x) for x in text.split(","))
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"--direction expects 'p,q' rationals, got {text!r}") from None
    return (p, q)


# -- commands -------------------------------------------------------------------

def cmd_gen(args, man: RunManifest):
    if args.name not in REGISTRY:
        raise UsageError(f"unknown construction {args.name!r}; known: {', '.join(sorted(REGISTRY))}")
    kw = {"n": args.n, "seed": args.seed}
    if args.p is not None:
        kw["p"] = args.p
    for flag in args.flag or []:
        kw[flag] = True
    try:
        made = REGISTRY[args.name](**kw)
    except (ValueError, GraphError) as exc:
        raise UsageError(f"bad parameters for {args.name}: {exc}") from None
    g, wiring = made if isinstance(made, tuple) else (made, None)
    files = {}
    if args.out:
        _write(args.out, g.to_json() + "\n")
        files["graph"] = args.out
        if wiring is not None:
            wpath = str(Path(args.out).with_suffix("")) + ".wiring.json"
            _write(wpath, _dump(wiring.to_dict()))
            files["wiring"] = wpath
    result = {"name": args.name, "vertices": len(g.vertices), "edges": len(g.edges), "files": files}
    if not args.out:
        result["graph"] = g.to_dict()
    return result, EXIT_OK


def cmd_census(args, man: RunManifest):
    emb = _embedding_from_args(man, args)
    rep = link_census(emb, args.max_n, args.max_len, args.consistent_only, keep=args.keep)
    rep.source = args.embedding or args.graph
    result = rep.to_dict()
    if args.knots:
        kr = knot_census(emb, args.max_len, args.consistent_only)
        result["knots"] = kr.to_dict()["knots"]
        result["unresolved_knots"] = kr.unresolved
        result["truncated"] = result["truncated"] or kr.truncated
    return result, EXIT_OK


def cmd_lk(args, man: RunManifest):
    emb = _embedding_from_args(man, args)
    c1, c2 = _cycle(emb, args.cycle1), _cycle(emb, args.cycle2)
    try:
        value = linking_number(emb, c1, c2, _direction(args.direction))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return {"cycle1": list(c1.vertices), "cycle2": list(c2.vertices), "lk": value}, EXIT_OK


def cmd_knot(args, man: RunManifest):
    emb = _embedding_from_args(man, args)
    c = _cycle(emb, args.cycle)
    k = knot_certificate(emb, c, _direction(args.direction))
    return {"cycle": list(c.vertices), "determinant": k.determinant, "arf": k.arf,
            "crossings": k.crossing_count, "status": k.status}, EXIT_OK


def cmd_double(args, man: RunManifest):
    emb = _embedding_from_args(man, args)
    out = double_embedding(emb)
    if args.out:
        _write(args.out, out.to_json() + "\n")
    result = {"vertices": len(out.graph.vertices), "edges": len(out.graph.edges), "out": args.out}
    if args.verify:
        r = verify_doubling_counts(emb, args.max_len, args.max_n)
        result["doubling"] = r.to_dict()
        return result, EXIT_OK if r.ok else EXIT_FAIL
    if not args.out:
        result["embedding"] = out.to_dict()
    return result, EXIT_OK


def cmd_contract(args, man: RunManifest):
    emb = _embedding_from_args(man, args)
    path = [p for p in args.path.split(",") if p] if args.path else []
    try:
        out = contract_path_embedding(emb, path)
    except GraphError as exc:
        raise UsageError(f"bad path: {exc}") from None
    if args.out:
        _write(args.out, out.to_json() + "\n")
    result = {"vertices": len(out.graph.vertices), "edges": len(out.graph.edges), "out": args.out}
    if not args.out:
        result["embedding"] = out.to_dict()
    return result, EXIT_OK


def cmd_minor(args, man: RunManifest):
    g = _load_graph(man, args.graph)
    pat = _load_graph(man, args.pattern)
    text = man.add_input(args.partition).decode()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{args.partition}: {exc.msg}", f"{args.partition}:line {exc.lineno} column {exc.colno}") from None
    try:
        part = Partition.from_dict(data)
    except GraphFormatError as exc:
        raise InputError(f"{args.partition}: {exc}", f"{args.partition}:{exc.location}") from None
    real = data.get("edge_realization", {}) if isinstance(data, dict) else {}
    try:
        res = check_minor_witness(g, MinorWitness(part, pat, dict(real)), args.mode)
    except WitnessError as exc:
        raise InputError(f"malformed witness: {exc}", args.partition) from None
    result = {
        "mode": res.mode, "ok": res.ok, "failure": res.failure, "edge_realization": res.realization,
        "hamiltonian_cycles": {str(i): list(c.vertices) for i, c in res.hamiltonian.items()},
    }
    return result, EXIT_OK if res.ok else EXIT_FAIL


def cmd_density(args, man: RunManifest):
    g = _load_graph(man, args.graph)
    return density_certificate(g).to_dict(), EXIT_OK


def cmd_verify(args, man: RunManifest):
    from .verify import SUITES, run_suite

    names = sorted(SUITES, key=lambda s: SUITES[s][0]) if args.suite == "all" else [args.suite]
    for s in names:
        if s not in SUITES:
            raise UsageError(f"unknown suite {s!r}; known: all, {', '.join(sorted(SUITES))}")
    results = [run_suite(s, args.seed) for s in names]
    ok = all(r.ok for r in results)
    return {"ok": ok, "suites": [r.to_dict() for r in results]}, EXIT_OK if ok else EXIT_FAIL


# -- parser ---------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="seed for every random choice (default 0)")
    common.add_argument("--out", help="output file for generated graphs or embeddings")
    common.add_argument("--report", help="write the JSON report here instead of stdout")
    common.add_argument("--max-len", type=int, default=None, help="cycle length cap")
    common.add_argument("--max-n", type=int, default=2, help="largest link component count")

    p = _Parser(prog="spatialdigraph", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    s = sub.add_parser("gen", parents=[common], help="write a constructed digraph")
    s.add_argument("name")
    s.add_argument("--n", type=int)
    s.add_argument("--p", type=float, help="arc probability for random_digraph")
    s.add_argument("--flag", action="append", choices=["prime", "narrow", "a45_both"])
    s.set_defaults(func=cmd_gen)

    def emb_args(sp):
        sp.add_argument("--graph", help="graph JSON (realized on the moment curve when no embedding is given)")
        sp.add_argument("--embedding", help="embedding JSON")

    s = sub.add_parser("census", parents=[common], help="linking census of an embedding")
    emb_args(s)
    s.add_argument("--consistent-only", action="store_true")
    s.add_argument("--knots", action="store_true", help="also run the knot census")
    s.add_argument("--keep", type=int, default=None, help="store at most this many links per size")
    s.set_defaults(func=cmd_census)

    s = sub.add_parser("lk", parents=[common], help="linking number of two cycles")
    emb_args(s)
    s.add_argument("--cycle1", required=True, help="named cycle or comma-separated arc ids, '-' marks backward")
    s.add_argument("--cycle2", required=True)
    s.add_argument("--direction", help="projection direction as 'p,q' for (p, q, 1)")
    s.set_defaults(func=cmd_lk)

    s = sub.add_parser("knot", parents=[common], help="knot determinant and Arf invariant of a cycle")
    emb_args(s)
    s.add_argument("--cycle", required=True)
    s.add_argument("--direction")
    s.set_defaults(func=cmd_knot)

    s = sub.add_parser("double", parents=[common], help="embed the symmetric double")
    emb_args(s)
    s.add_argument("--verify", action="store_true", help="check the doubling counts")
    s.set_defaults(func=cmd_double)

    s = sub.add_parser("contract", parents=[common], help="contract a directed path in an embedding")
    emb_args(s)
    s.add_argument("--path", required=True, help="comma-separated arc ids along the path")
    s.set_defaults(func=cmd_contract)

    s = sub.add_parser("minor", parents=[common], help="check a witnessed subcontraction")
    s.add_argument("action", choices=["check"])
    s.add_argument("--graph", required=True)
    s.add_argument("--pattern", required=True)
    s.add_argument("--partition", required=True)
    s.add_argument("--mode", choices=["weak", "strong", "hcyclic"], default="weak")
    s.set_defaults(func=cmd_minor)

    s = sub.add_parser("density", parents=[common], help="edge-density certificate")
    s.add_argument("--graph", required=True)
    s.set_defaults(func=cmd_density)

    s = sub.add_parser("verify", parents=[common], help="run an acceptance suite")
    s.add_argument("suite")
    s.set_defaults(func=cmd_verify)
    return p


def _error(kind: str, message: str, code: int, location: str | None = None) -> int:
    err = {"error": {"type": kind, "message": message, "exit_code": code}}
    if location:
        err["error"]["location"] = location
    sys.stderr.write(json.dumps(err, sort_keys=True) + "\n")
    return code


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = build_parser().parse_args(argv)
        if not getattr(args, "command", None):
            raise UsageError("no command given")
        man = RunManifest(args.command, argv, seed=args.seed,
                          started_at=datetime.now(timezone.utc).isoformat(timespec="seconds"))
        t0 = time.perf_counter()
        result, code = args.func(args, man)
        man.duration_seconds = round(time.perf_counter() - t0, 3)
        report = {"manifest": man.to_dict(), "result": result}
        if args.report:
            _write(args.report, _dump(report))
        elif args.out and args.command in ("gen", "double", "contract"):
            _write(str(Path(args.out).with_suffix("")) + ".manifest.json", _dump(man.to_dict()))
        if args.command == "lk" and not args.report:
            print(result["lk"])
        elif not args.report:
            sys.stdout.write(_dump(report))
        return code
    except UsageError as exc:
        return _error("usage", str(exc), EXIT_USAGE)
    except InputError as exc:
        return _error("input", str(exc), EXIT_IO, exc.location)
    except (DegenerateProjection, EmbeddingError) as exc:
        return _error("geometry", str(exc), EXIT_FAIL)
    except GraphError as exc:
        return _error("graph", str(exc), EXIT_IO)
    except AssertionError as exc:
        return _error("assertion", str(exc), EXIT_FAIL)


if __name__ == "__main__":
    raise SystemExit(main())
