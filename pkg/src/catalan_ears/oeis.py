"""OEIS b-file reading, offline-first fetching, and sequence cross-checks.

Two sequences are checked: A007054 (super ballot numbers) against
``super_ballot``, and A091894 (Dyck paths by number of DDUs) against the DDU
distribution obtained by enumerating paths. Offsets are never assumed; the
check slides our terms over the b-file and reports where they line up.
"""

from __future__ import annotations

import os
import re
import tempfile
import urllib.error
import urllib.request
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Optional

from catalan_ears.bijections import ddu_triangle
from catalan_ears.identities import super_ballot

CACHE_ENV = "CATALAN_EARS_CACHE"
MAX_OFFSET = 3
ALIGN_TERMS = 5
SEQUENCES = ("A007054", "A091894")

_SEQ_RE = re.compile(r"^A\d{6}$")


class BFileParseError(ValueError):
    def __init__(self, lineno: int, line: str, reason: str):
        super().__init__(f"line {lineno}: {reason}: {line!r}")
        self.lineno = lineno


class ConfigurationError(RuntimeError):
    """No fixture or cache entry is available and network access is off."""


class TransportError(RuntimeError):
    pass


@dataclass(frozen=True)
class BFile:
    seq_id: str
    entries: tuple[tuple[int, int], ...] = ()

    @property
    def values(self) -> list[int]:
        return [v for _, v in self.entries]


def parse_bfile(text: str, seq_id: str = "") -> BFile:
    entries: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise BFileParseError(lineno, raw, "expected 'index value'")
        try:
            index, value = int(parts[0]), int(parts[1])
        except ValueError:
            raise BFileParseError(lineno, raw, "index and value must be integers") from None
        if value < 0:
            raise BFileParseError(lineno, raw, "negative value")
        if entries and index <= entries[-1][0]:
            raise BFileParseError(lineno, raw, "indices must be strictly increasing")
        entries.append((index, value))
    return BFile(seq_id, tuple(entries))


def _check_seq_id(seq_id: str) -> str:
    if not _SEQ_RE.match(seq_id):
        raise ValueError(f"not an OEIS id: {seq_id!r}")
    return seq_id


def bfile_name(seq_id: str) -> str:
    return f"b{_check_seq_id(seq_id)[1:]}.txt"


def bundled_bfile(seq_id: str) -> Optional[Path]:
    """Path of the b-file shipped with the package, if there is one."""
    path = resources.files("catalan_ears") / "data" / bfile_name(seq_id)
    return Path(str(path)) if path.is_file() else None


def default_cache_dir() -> Path:
    env = os.environ.get(CACHE_ENV)
    return Path(env) if env else Path.home() / ".cache" / "catalan-ears"


@dataclass
class FetchConfig:
    bfile: Optional[Path] = None
    allow_network: bool = False
    cache_dir: Optional[Path] = None
    timeout: float = 30.0


def _atomic_write(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        os.unlink(tmp)
        raise


def _download(seq_id: str, timeout: float) -> str:
    url = f"https://oeis.org/{seq_id}/{bfile_name(seq_id)}"
    try:
        with urllib.request.urlopen(url, timeout=timeout) as resp:
            return resp.read().decode("utf-8")
    except (urllib.error.URLError, OSError) as exc:
        raise TransportError(f"fetching {url} failed: {exc}") from exc


def fetch_bfile(seq_id: str, config: FetchConfig) -> BFile:
    """Load a b-file from the explicit fixture, else the cache, else (opt-in) the network."""
    name = bfile_name(seq_id)
    if config.bfile is not None:
        return parse_bfile(Path(config.bfile).read_text(encoding="utf-8"), seq_id)
    cache_dir = config.cache_dir or default_cache_dir()
    cached = cache_dir / name
    if cached.is_file():
        return parse_bfile(cached.read_text(encoding="utf-8"), seq_id)
    if not config.allow_network:
        raise ConfigurationError(
            f"no b-file for {seq_id}: pass a fixture path, populate {cached}, or allow network access"
        )
    text = _download(seq_id, config.timeout)
    bfile = parse_bfile(text, seq_id)
    _atomic_write(cached, text)
    return bfile


@dataclass
class OeisReport:
    seq_id: str
    nmax: int
    terms: int
    offset: Optional[int] = None
    first_index: Optional[int] = None
    compared: int = 0
    divergence: Optional[dict] = None
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.offset is not None and self.divergence is None and self.compared == self.terms

    def to_json(self) -> dict:
        return {
            "seq": self.seq_id,
            "nmax": self.nmax,
            "pass": self.passed,
            "offset": self.offset,
            "first_bfile_index": self.first_index,
            "terms": self.terms,
            "compared": self.compared,
            "divergence": self.divergence,
            "notes": self.notes,
        }


def our_terms(seq_id: str, nmax: int) -> tuple[list[int], str]:
    """Our version of the sequence, plus a note on how it is laid out."""
    if seq_id == "A007054":
        return [super_ballot(n) for n in range(nmax + 1)], f"super_ballot(n) for n = 0..{nmax}"
    if seq_id == "A091894":
        return ddu_triangle(nmax), f"DDU distribution rows n = 1..{nmax}, k ascending, by path enumeration"
    raise ValueError(f"no cross-check defined for {seq_id}; choose from {SEQUENCES}")


def align(ours: list[int], bfile: BFile) -> Optional[int]:
    """Smallest shift s in 0..3 with b-file values[s:s+5] equal to our first 5 terms."""
    theirs = bfile.values
    need = min(ALIGN_TERMS, len(ours))
    for shift in range(MAX_OFFSET + 1):
        if len(theirs) >= shift + need and theirs[shift : shift + need] == ours[:need]:
            return shift
    return None


def compare(seq_id: str, ours: list[int], bfile: BFile, nmax: int) -> OeisReport:
    report = OeisReport(seq_id, nmax, len(ours))
    shift = align(ours, bfile)
    if shift is None:
        report.notes.append(f"no shift in 0..{MAX_OFFSET} matches the first {ALIGN_TERMS} terms")
        return report
    report.offset = shift
    report.first_index = bfile.entries[shift][0]
    for t, value in enumerate(ours):
        pos = t + shift
        if pos >= len(bfile.entries):
            report.notes.append(f"b-file ends after {report.compared} aligned terms")
            break
        index, expected = bfile.entries[pos]
        if expected != value:
            report.divergence = {"term": t, "bfile_index": index, "bfile": str(expected), "ours": str(value)}
            break
        report.compared += 1
    return report


def oeis_check(seq_id: str, nmax: int, config: FetchConfig) -> OeisReport:
    ours, layout = our_terms(seq_id, nmax)
    report = compare(seq_id, ours, fetch_bfile(seq_id, config), nmax)
    report.notes.insert(0, layout)
    return report
