"""Command-line front end: enumerate, multiply, giambelli, presentation, gysin.

Schubert classes are addressed either by minimized word ("3,2,1"), by a
length.index pair ("4.2"), or by "wN" as shorthand for the one-letter word
(N,).  Exit codes: 1 = could not parse the invocation, 2 = a mathematical
precondition failed (bad node, degree mismatch, class not in the table),
3 = a resource cap was exceeded.

Coset tables are cached (binary) under --cache-dir, or under the directory
named by the SCHUBERT_CACHE_DIR environment variable when the flag is
absent; with neither set, nothing is persisted.  All output is
deterministic for fixed inputs, so repeated runs (cached or not) emit
byte-identical JSON.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from dataclasses import dataclass, field
from pathlib import Path

from .cartan import LieType
from .characteristics import SchubertClass, expand_product
from .cohomology import (
    minimal_generators,
    minimal_relations,
    giambelli,
    gysin_analysis,
)
from .weyl import (
    DEFAULT_MAX_ELEMENTS,
    CosetTable,
    EnumerationLimit,
    enumerate_cosets,
)

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_DOMAIN = 2
EXIT_RESOURCE = 3

CACHE_ENV = "SCHUBERT_CACHE_DIR"

COMMANDS = ("enumerate", "multiply", "giambelli", "presentation", "gysin")
FORMATS = ("json", "table", "text")

_WORD_TOKEN = re.compile(r"\d+(,\d+)*$")
_PAIR_TOKEN = re.compile(r"(\d+)\.(\d+)$")
_SHORT_TOKEN = re.compile(r"[wW](\d+)$")


class CliParseError(ValueError):
    """Invocation that cannot be interpreted (exit code 1)."""


class _ArgumentParser(argparse.ArgumentParser):
    """argparse exits with status 2 on bad usage; the contract wants 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        raise CliParseError(message)


@dataclass(frozen=True)
class JobSpec:
    """One validated CLI job; `run` executes it."""

    command: str
    lie_type: LieType
    K: tuple[int, ...]
    arguments: tuple[str, ...] = ()
    fmt: str = "json"
    degree: int | None = None
    cache_dir: Path | None = None
    threads: int = 1
    max_elements: int = DEFAULT_MAX_ELEMENTS

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise CliParseError(f"unknown command {self.command!r}")
        if self.fmt not in FORMATS:
            raise CliParseError(f"unknown format {self.fmt!r}")
        if self.threads < 1:
            raise CliParseError("--threads must be at least 1")
        if self.max_elements < 1:
            raise CliParseError("--max-elements must be at least 1")
        n = self.lie_type.rank
        for node in self.K:
            if not 1 <= node <= n:
                raise ValueError(f"node {node} outside 1..{n} for {self.lie_type}")
        if len(set(self.K)) != len(self.K):
            raise CliParseError(f"repeated node in K={list(self.K)}")
        if self.command == "multiply" and not self.arguments:
            raise CliParseError("multiply needs at least one class argument")
        if self.command in ("giambelli", "gysin") and self.degree is None:
            raise CliParseError(f"{self.command} needs --degree")
        if self.command == "gysin" and len(self.K) != 1:
            raise CliParseError("gysin needs a single excluded node (--K i)")
        if self.degree is not None and self.degree < 0:
            raise CliParseError("--degree must be nonnegative")


def parse_node_list(text: str, rank: int) -> tuple[int, ...]:
    """Parse "--K 1,3"; "all" or "" gives every node (full flag)."""
    body = text.strip()
    if body.lower() in ("", "all"):
        return tuple(range(1, rank + 1))
    try:
        return tuple(int(p) for p in body.split(","))
    except ValueError:
        raise CliParseError(f"cannot parse node list {text!r}") from None


def parse_class_token(table: CosetTable, token: str) -> SchubertClass:
    """Resolve "3,2,1" / "4.2" / "w3" against the table (domain errors)."""
    tok = token.strip()
    m = _SHORT_TOKEN.match(tok)
    if m:
        word = (int(m.group(1)),)
    elif _PAIR_TOKEN.match(tok):
        r, i = (int(g) for g in _PAIR_TOKEN.match(tok).groups())
        table.element(r, i)  # raises KeyError when absent
        return SchubertClass(r, i)
    elif _WORD_TOKEN.match(tok):
        word = tuple(int(p) for p in tok.split(","))
    else:
        raise CliParseError(
            f"cannot parse class {token!r} (use a word '3,2,1', a pair '4.2', or 'wN')"
        )
    rank = table.lie_type.rank
    bad = [a for a in word if not 1 <= a <= rank]
    if bad:
        raise ValueError(f"{token!r}: letter {bad[0]} outside 1..{rank}")
    try:
        return SchubertClass(*table.class_of_word(word))
    except KeyError:
        raise ValueError(
            f"{token!r}: word {list(word)} is not a minimal representative of the table"
        ) from None


def _cache_path(cache_dir: Path, lie_type: LieType, K) -> Path:
    return cache_dir / f"{lie_type}-K{'_'.join(str(k) for k in sorted(K))}.table"


def load_table(spec: JobSpec) -> CosetTable:
    """Enumerate (or load from cache) the coset table of the job."""
    path = None
    if spec.cache_dir is not None:
        path = _cache_path(spec.cache_dir, spec.lie_type, spec.K)
        if path.exists():
            table = CosetTable.load_binary(path)
            if table.lie_type != spec.lie_type or set(table.K) != set(spec.K):
                raise ValueError(
                    f"cache file {path} holds {table.lie_type} K={sorted(table.K)}, "
                    f"not {spec.lie_type} K={sorted(spec.K)}"
                )
            return table
    table = enumerate_cosets(spec.lie_type, spec.K, max_elements=spec.max_elements)
    if path is not None:
        path.parent.mkdir(parents=True, exist_ok=True)
        table.save_binary(path)
    return table


# -- per-command execution -----------------------------------------------------


def _class_obj(table: CosetTable, cls: SchubertClass) -> dict:
    return {
        "r": cls.r,
        "i": cls.i,
        "word": list(table.element(cls.r, cls.i).word),
    }


def _run_enumerate(spec: JobSpec, table: CosetTable):
    obj = table.json_obj()
    obj["count"] = table.total
    if spec.fmt == "json":
        return obj
    rows = [(str(e["r"]), str(e["i"]), ",".join(str(x) for x in e["word"]) or "-")
            for e in obj["elements"]]
    if spec.fmt == "table":
        return _columns(["r", "i", "word"], rows)
    lines = [f"{obj['lie_type']} K={obj['K']}: {obj['count']} classes"]
    lines += [f"  s[{r},{i}] = [{w}]" for r, i, w in rows]
    return "\n".join(lines)


def _run_multiply(spec: JobSpec, table: CosetTable):
    factors = [parse_class_token(table, tok) for tok in spec.arguments]
    exp = expand_product(table, factors, threads=spec.threads)
    if spec.fmt == "json":
        return {
            "lie_type": str(spec.lie_type),
            "K": sorted(spec.K),
            "factors": [_class_obj(table, f) for f in factors],
            "degree": exp.degree,
            "terms": [
                {**_class_obj(table, c), "coeff": v} for c, v in exp.items()
            ],
        }
    rows = [
        (str(c.r), str(c.i), str(v), ",".join(map(str, table.element(c.r, c.i).word)))
        for c, v in exp.items()
    ]
    if spec.fmt == "table":
        return _columns(["r", "i", "coeff", "word"], rows)
    return str(exp)


def _generators_for(spec: JobSpec, table: CosetTable):
    up_to = spec.degree if not table.complete else None
    return minimal_generators(table, up_to=up_to)


def _run_giambelli(spec: JobSpec, table: CosetTable):
    gens = _generators_for(spec, table)
    polys = giambelli(table, gens, spec.degree)
    entries = [
        {**_class_obj(table, SchubertClass(spec.degree, j)), "polynomial": str(p)}
        for j, p in enumerate(polys, start=1)
    ]
    if spec.fmt == "json":
        return {
            "lie_type": str(spec.lie_type),
            "K": sorted(spec.K),
            "degree": spec.degree,
            "generators": [{"name": g.name, "degree": g.degree} for g in gens],
            "classes": entries,
        }
    rows = [(str(e["r"]), str(e["i"]), e["polynomial"]) for e in entries]
    if spec.fmt == "table":
        return _columns(["r", "i", "polynomial"], rows)
    return "\n".join(f"s[{e['r']},{e['i']}] = {e['polynomial']}" for e in entries)


def _run_presentation(spec: JobSpec, table: CosetTable):
    up_to = spec.degree if spec.degree is not None else table.lmax
    gens = minimal_generators(table, up_to=spec.degree)
    pres = minimal_relations(table, gens, up_to)
    if spec.fmt == "json":
        return {
            "lie_type": str(spec.lie_type),
            "K": sorted(spec.K),
            "up_to": up_to,
            "generators": [
                {"name": g.name, "degree": g.degree, "word": list(g.word)}
                for g in pres.generators
            ],
            "relations": [str(r) for r in pres.relations],
            "relation_degrees": list(pres.relation_degrees()),
        }
    if spec.fmt == "table":
        rows = [(g.name, str(g.degree), ",".join(map(str, g.word))) for g in pres.generators]
        head = _columns(["generator", "degree", "word"], rows)
        rows2 = [(str(r.degree()), str(r)) for r in pres.relations]
        return head + "\n\n" + _columns(["degree", "relation"], rows2)
    return pres.text()


def _run_gysin(spec: JobSpec, table: CosetTable):
    i = spec.K[0]
    top_r = (spec.degree + 1) // 2
    gysin = gysin_analysis(table, i, top_r)
    groups = [(k, gysin.group(k)) for k in range(spec.degree + 1)]
    if spec.fmt == "json":
        return {
            "lie_type": str(spec.lie_type),
            "node": i,
            "up_to_degree": spec.degree,
            "groups": [
                {
                    "degree": k,
                    "free_rank": g.free_rank,
                    "torsion": list(g.torsion),
                    "name": str(g),
                }
                for k, g in groups
            ],
        }
    rows = [(str(k), str(g)) for k, g in groups if not g.is_trivial()]
    if spec.fmt == "table":
        return _columns(["degree", "group"], rows)
    lines = [f"circle bundle over {spec.lie_type}/P, node {i}"]
    lines += [f"  H^{k} = {g}" for k, g in rows]
    return "\n".join(lines)


def _columns(header, rows) -> str:
    widths = [len(h) for h in header]
    for row in rows:
        for j, cell in enumerate(row):
            widths[j] = max(widths[j], len(cell))
    fmt = "  ".join(f"{{:<{w}}}" for w in widths)
    out = [fmt.format(*header), fmt.format(*("-" * w for w in widths))]
    out += [fmt.format(*row) for row in rows]
    return "\n".join(out)


_RUNNERS = {
    "enumerate": _run_enumerate,
    "multiply": _run_multiply,
    "giambelli": _run_giambelli,
    "presentation": _run_presentation,
    "gysin": _run_gysin,
}


def run(spec: JobSpec, out=None) -> int:
    """Execute one job; writes serialized output, returns the exit status."""
    out = out if out is not None else sys.stdout
    try:
        table = load_table(spec)
        result = _RUNNERS[spec.command](spec, table)
    except CliParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except EnumerationLimit as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (ValueError, KeyError) as exc:
        msg = exc.args[0] if exc.args else exc
        print(f"domain error: {msg}", file=sys.stderr)
        return EXIT_DOMAIN
    if spec.fmt == "json":
        out.write(json.dumps(result, indent=1, sort_keys=True) + "\n")
    else:
        out.write(str(result) + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(
        prog="schubert",
        description="Exact Schubert calculus on flag manifolds G/P.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_degree=False):
        p.add_argument("lie_type", help="Lie type, e.g. A3, F4, E6")
        p.add_argument(
            "--K",
            default="all",
            help="comma-separated nodes excluded from the parabolic (default: all)",
        )
        if with_degree:
            p.add_argument("--degree", type=int, default=None)
        p.add_argument("--format", choices=FORMATS, default="json")
        p.add_argument("--cache-dir", default=None)
        p.add_argument("--threads", type=int, default=1)
        p.add_argument("--max-elements", type=int, default=DEFAULT_MAX_ELEMENTS)

    common(sub.add_parser("enumerate", help="list the Schubert classes of G/P"))
    p_mult = sub.add_parser("multiply", help="expand a product of Schubert classes")
    common(p_mult)
    p_mult.add_argument("classes", nargs="+", help="classes: '3,2,1', '4.2', or 'wN'")
    common(sub.add_parser("giambelli", help="polynomials hitting each class of one degree"),
           with_degree=True)
    common(sub.add_parser("presentation", help="generators and minimal relations"),
           with_degree=True)
    common(sub.add_parser("gysin", help="cohomology of the circle bundle over G/P"),
           with_degree=True)
    return parser


def spec_from_args(argv) -> JobSpec:
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        lie_type = LieType.parse(ns.lie_type)
    except ValueError as exc:
        raise CliParseError(str(exc)) from None
    cache = ns.cache_dir if ns.cache_dir is not None else os.environ.get(CACHE_ENV)
    return JobSpec(
        command=ns.command,
        lie_type=lie_type,
        K=parse_node_list(ns.K, lie_type.rank),
        arguments=tuple(getattr(ns, "classes", ())),
        fmt=ns.format,
        degree=getattr(ns, "degree", None),
        cache_dir=Path(cache) if cache else None,
        threads=ns.threads,
        max_elements=ns.max_elements,
    )


def main(argv=None) -> int:
    try:
        spec = spec_from_args(sys.argv[1:] if argv is None else argv)
    except CliParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except SystemExit as exc:  # argparse --help and explicit exits
        return exc.code or 0
    except ValueError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    return run(spec)


if __name__ == "__main__":
    sys.exit(main())
