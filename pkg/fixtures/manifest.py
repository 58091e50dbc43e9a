"""
fixtures.manifest
~~~~~~~~~~~~~~~~~

Bundled assets and their checksum manifest.

``data/MANIFEST.tsv`` holds one line per asset::

    name<TAB>kind<TAB>sha-256<TAB>path

Paths are relative to the data directory. Blank lines and ``#`` comments
are ignored.
"""

from __future__ import annotations

import enum
import hashlib
import logging
from pathlib import Path

from pydantic import BaseModel, ConfigDict

logger = logging.getLogger(__name__)

DATA_DIR = Path(__file__).resolve().parent / "data"
MANIFEST_NAME = "MANIFEST.tsv"


class FixtureKind(str, enum.Enum):
    ONTOLOGY = "Ontology"
    SHAPES = "Shapes"
    AAS_XML = "AasXml"
    GOLDEN_RDF = "GoldenRdf"
    GOLDEN_REPORT = "GoldenReport"
    ORACLE_OUTPUT = "OracleOutput"


class FixtureEntry(BaseModel):
    model_config = ConfigDict(frozen=True)

    name: str
    kind: FixtureKind
    checksum: str
    path: str


class FixtureManifest(BaseModel):
    model_config = ConfigDict(frozen=True)

    root: Path
    entries: tuple[FixtureEntry, ...] = ()

    def entry(self, name: str) -> FixtureEntry:
        for entry in self.entries:
            if entry.name == name:
                return entry
        raise KeyError(f"No fixture named {name!r} in the manifest")


def bundled_path(relative: str) -> Path:
    """Absolute path of a bundled asset, e.g. ``bundled_path("ontology/rami.ttl")``."""
    return DATA_DIR / relative


def read_manifest(path: str | Path | None = None) -> FixtureManifest:
    """Read a manifest file; the bundled one by default.

    Raises:
        ValueError: On lines without four tab-separated fields or with an
            unknown kind.
    """
    path = Path(path) if path is not None else DATA_DIR / MANIFEST_NAME
    entries = []
    for number, line in enumerate(path.read_text(encoding="utf-8").splitlines(), start=1):
        if not line.strip() or line.startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) != 4:
            raise ValueError(f"{path}:{number}: expected 4 tab-separated fields, got {len(fields)}")
        name, kind, checksum, relative = fields
        try:
            entries.append(FixtureEntry(name=name, kind=FixtureKind(kind), checksum=checksum.lower(), path=relative))
        except ValueError as e:
            raise ValueError(f"{path}:{number}: {e}") from e
    return FixtureManifest(root=path.parent, entries=tuple(entries))


def _sha256(path: Path) -> str:
    digest = hashlib.sha256()
    with path.open("rb") as handle:
        for chunk in iter(lambda: handle.read(65536), b""):
            digest.update(chunk)
    return digest.hexdigest()


def verify_fixtures(manifest: FixtureManifest | None = None) -> list[str]:
    """Recompute every checksum; return one message per divergence (empty when all match)."""
    manifest = manifest or read_manifest()
    mismatches = []
    for entry in manifest.entries:
        target = manifest.root / entry.path
        if not target.is_file():
            mismatches.append(f"{entry.kind.value} {entry.name}: missing file {entry.path}")
        elif _sha256(target) != entry.checksum:
            mismatches.append(f"{entry.kind.value} {entry.name}: checksum mismatch for {entry.path}")

    for message in mismatches:
        logger.warning("Fixture check: %s", message)
    return mismatches
