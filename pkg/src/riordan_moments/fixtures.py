"""Golden OEIS data: embedded b-files, a b-file parser, and a cached fetcher.

Embedded fixtures live under ``data/`` inside the package and are read-only.
:func:`oeis_fetch` extends them from the network into a separate
content-addressed cache (``$RIORDAN_MOMENTS_CACHE``, default
``~/.cache/riordan_moments``).  Network access is refused when
``RIORDAN_MOMENTS_OFFLINE`` is set to a non-empty value other than ``0``.
"""

from __future__ import annotations

import hashlib
import json
import os
import re
import tempfile
import urllib.error
import urllib.request
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Callable, Sequence

from .errors import (
    MalformedLine,
    NetworkDisabled,
    NonContiguousIndex,
    NotFound,
    ParseError,
)

_ID_RE = re.compile(r"^A[0-9]{6}$")

CACHE_ENV = "RIORDAN_MOMENTS_CACHE"
URL_ENV = "RIORDAN_MOMENTS_OEIS_URL"
OFFLINE_ENV = "RIORDAN_MOMENTS_OFFLINE"
DEFAULT_URL = "https://oeis.org/{id}/b{digits}.txt"


@dataclass(frozen=True)
class SequenceFixture:
    oeis_id: str
    offset: int
    terms: tuple[int, ...]
    description: str = ""
    kind: str = "ogf"

    def __post_init__(self):
        if not _ID_RE.match(self.oeis_id):
            raise ValueError(f"bad OEIS id {self.oeis_id!r}")
        if not self.terms:
            raise ValueError(f"{self.oeis_id}: fixture has no terms")
        object.__setattr__(self, "terms", tuple(int(t) for t in self.terms))

    def __len__(self) -> int:
        return len(self.terms)


@dataclass(frozen=True)
class TriangleFixture:
    name: str
    rows: tuple[tuple[int, ...], ...]
    oeis_id: str | None = None
    description: str = ""

    def __post_init__(self):
        rows = tuple(tuple(int(c) for c in r) for r in self.rows)
        for n, r in enumerate(rows):
            if len(r) != n + 1:
                raise ValueError(f"{self.name}: row {n} has {len(r)} entries")
        object.__setattr__(self, "rows", rows)


# b-file format -----------------------------------------------------------

def parse_bfile_lines(text: str | bytes) -> tuple[int, list[int], list[str]]:
    """Return ``(offset, terms, comment_lines)``."""
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    offset = None
    terms: list[int] = []
    comments: list[str] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            comments.append(line[1:].strip())
            continue
        parts = line.split()
        if len(parts) != 2:
            raise MalformedLine(lineno, raw)
        try:
            idx, val = int(parts[0]), int(parts[1])
        except ValueError:
            raise MalformedLine(lineno, raw) from None
        if offset is None:
            offset = idx
        expected = offset + len(terms)
        if idx != expected:
            raise NonContiguousIndex(lineno, expected, idx)
        terms.append(val)
    return (offset if offset is not None else 0), terms, comments


def parse_bfile(text: str | bytes) -> list[int]:
    """Terms of a b-file; ``#`` comments and blank lines are skipped."""
    return parse_bfile_lines(text)[1]


def fixture_from_bfile(oeis_id: str, text: str | bytes) -> SequenceFixture:
    offset, terms, comments = parse_bfile_lines(text)
    if not terms:
        raise ParseError(f"{oeis_id}: b-file contains no terms")
    kind, desc = "ogf", ""
    for c in comments:
        if c.startswith("kind:"):
            kind = c.split(":", 1)[1].strip()
        elif c.startswith(oeis_id):
            desc = c[len(oeis_id):].strip()
    return SequenceFixture(oeis_id, offset, tuple(terms), desc, kind)


def serialize_bfile(fx: SequenceFixture) -> str:
    lines = []
    if fx.description:
        lines.append(f"# {fx.oeis_id} {fx.description}")
    lines.append(f"# kind: {fx.kind}")
    lines += [f"{fx.offset + i} {t}" for i, t in enumerate(fx.terms)]
    return "\n".join(lines) + "\n"


# embedded store ----------------------------------------------------------

def _data_dir():
    return resources.files("riordan_moments") / "data"


@lru_cache(maxsize=None)
def load_fixture(oeis_id: str) -> SequenceFixture:
    """Embedded sequence fixture by OEIS id."""
    if not _ID_RE.match(oeis_id):
        raise NotFound(f"bad OEIS id {oeis_id!r}")
    path = _data_dir() / "bfiles" / f"b{oeis_id[1:]}.txt"
    if not path.is_file():
        raise NotFound(f"no embedded fixture for {oeis_id}")
    return fixture_from_bfile(oeis_id, path.read_text())


def fixture_ids() -> list[str]:
    names = [p.name for p in (_data_dir() / "bfiles").iterdir() if p.name.endswith(".txt")]
    return sorted("A" + n[1:7] for n in names)


@lru_cache(maxsize=None)
def _triangles() -> dict[str, TriangleFixture]:
    raw = json.loads((_data_dir() / "triangles.json").read_text())
    out = {}
    for name, entry in raw.items():
        oeis_id = entry.get("oeis_id", name)
        out[name] = TriangleFixture(name, entry["rows"], oeis_id, entry.get("description", ""))
    return out


def load_triangle(name: str) -> TriangleFixture:
    try:
        return _triangles()[name]
    except KeyError:
        raise NotFound(f"no embedded triangle {name!r}") from None


def triangle_names() -> list[str]:
    return list(_triangles())


# verification ------------------------------------------------------------

@dataclass(frozen=True)
class VerifyReport:
    oeis_id: str
    compared: int
    first_mismatch: int | None = None
    expected: object = None
    got: object = None

    @property
    def ok(self) -> bool:
        return self.first_mismatch is None and self.compared > 0

    def __bool__(self) -> bool:
        return self.ok

    def __str__(self) -> str:
        if self.ok:
            return f"{self.oeis_id}: {self.compared} terms match"
        if self.compared == 0:
            return f"{self.oeis_id}: nothing to compare"
        return (
            f"{self.oeis_id}: mismatch at index {self.first_mismatch}: "
            f"expected {self.expected}, got {self.got}"
        )


def computed_terms(computed) -> list:
    """Sequence terms of an OGF/EGF series (EGFs are factorial-scaled)."""
    from .transforms import EgfSeries, OgfSeries

    if isinstance(computed, (EgfSeries, OgfSeries)):
        return computed.terms()
    return list(computed)


def verify_sequence(computed, fixture: SequenceFixture, skip: int = 0) -> VerifyReport:
    """Compare term by term; ``skip`` drops leading fixture terms first."""
    got = computed_terms(computed)
    want = fixture.terms[skip:]
    n = min(len(got), len(want))
    for i in range(n):
        if got[i] != want[i]:
            return VerifyReport(fixture.oeis_id, n, i, want[i], got[i])
    return VerifyReport(fixture.oeis_id, n)


# fetcher -----------------------------------------------------------------

@dataclass
class FetchConfig:
    cache_dir: Path = field(default_factory=lambda: Path(
        os.environ.get(CACHE_ENV) or Path.home() / ".cache" / "riordan_moments"
    ))
    url_template: str = field(default_factory=lambda: os.environ.get(URL_ENV, DEFAULT_URL))
    allow_network: bool = field(
        default_factory=lambda: os.environ.get(OFFLINE_ENV, "") in ("", "0")
    )
    timeout: float = 20.0


def _default_opener(url: str, timeout: float) -> bytes:
    try:
        with urllib.request.urlopen(url, timeout=timeout) as resp:
            return resp.read()
    except urllib.error.HTTPError as err:
        if err.code == 404:
            raise NotFound(f"{url}: not found") from err
        raise


def _atomic_write(path: Path, data: bytes) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=".tmp-")
    try:
        with os.fdopen(fd, "wb") as fh:
            fh.write(data)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _cache_lookup(cache: Path, oeis_id: str) -> bytes | None:
    ref = cache / "refs" / oeis_id
    if not ref.is_file():
        return None
    digest = ref.read_text().strip()
    obj = cache / "objects" / f"{digest}.txt"
    if not obj.is_file():
        return None
    data = obj.read_bytes()
    if hashlib.sha256(data).hexdigest() != digest:
        return None
    return data


def cache_store(cache: Path, oeis_id: str, data: bytes) -> str:
    digest = hashlib.sha256(data).hexdigest()
    _atomic_write(cache / "objects" / f"{digest}.txt", data)
    _atomic_write(cache / "refs" / oeis_id, digest.encode())
    return digest


def oeis_fetch(
    oeis_id: str,
    config: FetchConfig | None = None,
    opener: Callable[[str, float], bytes] | None = None,
) -> SequenceFixture:
    """b-file for ``oeis_id`` from the cache, else over HTTPS if allowed."""
    if not _ID_RE.match(oeis_id):
        raise NotFound(f"bad OEIS id {oeis_id!r}")
    cfg = config or FetchConfig()
    data = _cache_lookup(cfg.cache_dir, oeis_id)
    if data is None:
        if not cfg.allow_network:
            raise NetworkDisabled(f"{oeis_id} is not cached and network access is disabled")
        url = cfg.url_template.format(id=oeis_id, digits=oeis_id[1:])
        data = (opener or _default_opener)(url, cfg.timeout)
        try:
            fx = fixture_from_bfile(oeis_id, data)
        except (MalformedLine, NonContiguousIndex) as err:
            raise ParseError(f"{oeis_id}: {err}") from err
        cache_store(cfg.cache_dir, oeis_id, data)
        return fx
    try:
        return fixture_from_bfile(oeis_id, data)
    except (MalformedLine, NonContiguousIndex) as err:
        raise ParseError(f"{oeis_id}: cached b-file is corrupt: {err}") from err


def fixtures_for(ids: Sequence[str]) -> dict[str, SequenceFixture]:
    return {i: load_fixture(i) for i in ids}
