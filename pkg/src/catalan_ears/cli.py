"""Command-line entry point: ``catalan-ears <command> [options]``.

Exit status is 0 on success, 1 when a verification fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Sequence
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, TextIO

from catalan_ears import bijections, enumeration, identities, oeis
from catalan_ears.enumeration import ENUMERATION_CAP, Provenance, Stat, StatTable
from catalan_ears.structures import (
    InvalidStructureError,
    binary_to_json,
    count_ddu,
    parse,
    parse_path,
    serialize,
)

COMMANDS = ("table", "enumerate", "map", "count-ddu", "verify", "oeis-check")
FORMATS = ("json", "csv", "text")


class UsageError(Exception):
    pass


@dataclass
class CliConfig:
    command: str
    n: Optional[int] = None
    nmax: Optional[int] = None
    stat: str = "u"
    provenance: str = "brute"
    identity: str = "main"
    to: Optional[str] = None
    path: Optional[str] = None
    input: Optional[str] = None
    format: str = "text"
    bfile: Optional[Path] = None
    allow_network: bool = False
    seq: Optional[str] = None
    workers: int = 1

    def fetch_config(self) -> oeis.FetchConfig:
        bfile = self.bfile
        if bfile is None and not self.allow_network and self.seq:
            bfile = oeis.bundled_bfile(self.seq)
        return oeis.FetchConfig(bfile=bfile, allow_network=self.allow_network)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="catalan-ears",
        description="Ear statistics of polygon triangulations and the Catalan identities they refine.",
    )
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--n", type=int)
    p.add_argument("--nmax", type=int)
    p.add_argument("--stat", choices=("u", "v"), default="u")
    p.add_argument("--provenance", choices=[x.value for x in Provenance], default="brute")
    p.add_argument(
        "--identity", choices=(*identities.IDENTITIES, "relation"), default="main"
    )
    p.add_argument("--to", choices=("binary", "ordered", "dyck", "dissection"))
    p.add_argument("--path", help="Dyck path over U/D, e.g. UUDDUD")
    p.add_argument("--input", help="dissection JSON file, or - for stdin")
    p.add_argument("--format", choices=FORMATS, default="text")
    p.add_argument("--bfile", type=Path, help="local OEIS b-file to use instead of the bundled one")
    p.add_argument("--allow-network", action="store_true", help="fetch b-files from oeis.org if not cached")
    p.add_argument("--seq", help="OEIS id for oeis-check (A007054 or A091894)")
    p.add_argument("--workers", type=int, default=1, help="processes for brute-force tables")
    return p


def _emit_json(obj: object, out: TextIO) -> None:
    out.write(json.dumps(obj, indent=2) + "\n")


def _bounded(value: Optional[int], default: int, lo: int, hi: int, name: str) -> int:
    value = default if value is None else value
    if not lo <= value <= hi:
        raise UsageError(f"--{name} must be in {lo}..{hi}, got {value}")
    return value


def format_table_text(table: StatTable) -> str:
    ns = table.ns()
    ks = sorted({k for _, k in table.entries})
    cells = {key: str(v) for key, v in table.entries.items()}
    width = max([len(c) for c in cells.values()] + [len(str(k)) for k in ks] + [1])
    nwidth = max([len(str(n)) for n in ns] + [3])
    head = "n\\k".ljust(nwidth) + " |" + "".join(f" {k:>{width}}" for k in ks)
    lines = [head, "-" * len(head)]
    for n in ns:
        lines.append(f"{n:<{nwidth}} |" + "".join(f" {cells.get((n, k), ''):>{width}}" for k in ks).rstrip())
    return "\n".join(lines) + "\n"


def cmd_table(cfg: CliConfig, out: TextIO) -> int:
    if cfg.provenance == "brute":
        cap = ENUMERATION_CAP
    else:
        cap = identities.IDENTITY_CAP
    nmax = _bounded(cfg.nmax if cfg.n is None else cfg.n, 9, 1, cap, "nmax")
    # The u statistic is only meaningful from n = 2 on.
    nmin = cfg.n if cfg.n is not None else (2 if cfg.stat == "u" else 1)
    table = enumeration.build_table(cfg.stat, nmax, cfg.provenance, cfg.workers).restrict(nmin, nmax)
    if cfg.format == "csv":
        out.write(table.to_csv())
    elif cfg.format == "json":
        _emit_json(table.to_json(), out)
    else:
        out.write(format_table_text(table))
    return 0


def _render(obj: object, to: str) -> object:
    if to == "dyck":
        return str(obj)
    if to == "binary":
        return binary_to_json(obj)  # type: ignore[arg-type]
    if to == "ordered":
        return obj.to_json()  # type: ignore[attr-defined]
    return json.loads(serialize(obj))  # type: ignore[arg-type]


def _line(obj: object, to: str) -> str:
    rendered = _render(obj, to)
    return rendered if isinstance(rendered, str) else json.dumps(rendered, separators=(",", ":"))


def _from_dissection(d, to: str) -> object:
    b = bijections.dissection_to_binary(d)
    if to == "binary":
        return b
    t = bijections.binary_to_ordered(b)
    if to == "ordered":
        return t
    if to == "dyck":
        return bijections.ordered_to_dyck(t)
    return d


def cmd_enumerate(cfg: CliConfig, out: TextIO) -> int:
    if cfg.n is None:
        raise UsageError("enumerate needs --n")
    n = _bounded(cfg.n, 1, 1, ENUMERATION_CAP, "n")
    to = cfg.to or "dissection"
    images = (_from_dissection(d, to) for d in enumeration.enumerate_dissections(n))
    if cfg.format == "json":
        _emit_json([_render(x, to) for x in images], out)
    else:
        for x in images:
            out.write(_line(x, to) + "\n")
    return 0


def _read_input(spec: str) -> str:
    if spec == "-":
        return sys.stdin.read()
    try:
        return Path(spec).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {spec}: {exc}") from exc


def cmd_map(cfg: CliConfig, out: TextIO) -> int:
    if (cfg.path is None) == (cfg.input is None):
        raise UsageError("map needs exactly one of --path (Dyck path) or --input (dissection JSON)")
    if cfg.to is None:
        raise UsageError("map needs --to")
    if cfg.path is not None:
        p = parse_path(cfg.path)
        t = bijections.dyck_to_ordered(p)
        if cfg.to == "ordered":
            result: object = t
        elif cfg.to == "binary":
            result = bijections.ordered_to_binary(t)
        elif cfg.to == "dissection":
            result = bijections.dyck_to_dissection(p)
        else:
            result = p
    else:
        result = _from_dissection(parse(_read_input(cfg.input).strip()), cfg.to)  # type: ignore[arg-type]
    out.write(_line(result, cfg.to) + "\n")
    return 0


def cmd_count_ddu(cfg: CliConfig, out: TextIO) -> int:
    if cfg.path is None:
        raise UsageError("count-ddu needs --path")
    out.write(f"{count_ddu(parse_path(cfg.path))}\n")
    return 0


def cmd_verify(cfg: CliConfig, out: TextIO) -> int:
    if cfg.identity == "relation":
        cap = ENUMERATION_CAP if cfg.provenance == "brute" else identities.IDENTITY_CAP
        nmax = _bounded(cfg.nmax, 12, 1, cap, "nmax")
        if cfg.provenance == "brute":
            u, v = enumeration.brute_tables(nmax, cfg.workers)
        else:
            u = enumeration.build_table(Stat.U, nmax, cfg.provenance)
            v = enumeration.build_table(Stat.V, nmax, cfg.provenance)
        report: object = enumeration.relation_check(u, v, nmax)
    else:
        nmax = _bounded(cfg.nmax, 50, 0, identities.IDENTITY_CAP, "nmax")
        report = identities.verify(cfg.identity, nmax)
    _emit_json(report.to_json(), out)  # type: ignore[attr-defined]
    return 0 if report.passed else 1  # type: ignore[attr-defined]


def cmd_oeis_check(cfg: CliConfig, out: TextIO) -> int:
    if cfg.seq not in oeis.SEQUENCES:
        raise UsageError(f"oeis-check needs --seq, one of {', '.join(oeis.SEQUENCES)}")
    default = 50 if cfg.seq == "A007054" else 8
    cap = identities.IDENTITY_CAP if cfg.seq == "A007054" else ENUMERATION_CAP
    nmax = _bounded(cfg.nmax, default, 1, cap, "nmax")
    report = oeis.oeis_check(cfg.seq, nmax, cfg.fetch_config())
    _emit_json(report.to_json(), out)
    return 0 if report.passed else 1


HANDLERS = {
    "table": cmd_table,
    "enumerate": cmd_enumerate,
    "map": cmd_map,
    "count-ddu": cmd_count_ddu,
    "verify": cmd_verify,
    "oeis-check": cmd_oeis_check,
}


def main(argv: Optional[Sequence[str]] = None, out: Optional[TextIO] = None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    cfg = CliConfig(**vars(args))
    try:
        return HANDLERS[cfg.command](cfg, out)
    except (UsageError, InvalidStructureError, oeis.ConfigurationError, oeis.BFileParseError) as exc:
        parser.print_usage(sys.stderr)
        print(f"catalan-ears {cfg.command}: error: {exc}", file=sys.stderr)
        return 2
    except oeis.TransportError as exc:
        print(f"catalan-ears {cfg.command}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
