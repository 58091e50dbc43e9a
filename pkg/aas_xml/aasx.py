"""Extraction of aasenv documents from AASX (ZIP) containers."""

from __future__ import annotations

import io
import logging
import zipfile
from pathlib import Path

from lxml import etree

from library import read_bytes
from .exceptions import NoEnvironmentFound, NotAnArchive

logger = logging.getLogger(__name__)


def _is_environment(doc: bytes) -> bool:
    """True if the root element of *doc* has local name ``aasenv``."""
    events = etree.iterparse(io.BytesIO(doc), events=("start",), resolve_entities=False, no_network=True)
    try:
        for _, element in events:
            return etree.QName(element).localname == "aasenv"
    except etree.XMLSyntaxError:
        return False
    return False


def extract_aasx(archive: bytes) -> list[tuple[str, bytes]]:
    """Return ``(entry name, XML bytes)`` for every aasenv entry, in archive order.

    Entries are selected by name suffix ``.xml`` and by sniffing the root
    element; relationship parts of the package are not interpreted.

    Raises:
        NotAnArchive: If *archive* is not a ZIP container.
        NoEnvironmentFound: If no entry holds an aasenv document.
    """
    try:
        container = zipfile.ZipFile(io.BytesIO(archive))
    except zipfile.BadZipFile as exc:
        raise NotAnArchive(f"Not a ZIP container: {exc}") from exc

    found = []
    with container:
        for info in container.infolist():
            if info.is_dir() or not info.filename.lower().endswith(".xml"):
                continue
            doc = container.read(info)
            if _is_environment(doc):
                logger.debug("AASX entry %s holds an aasenv document", info.filename)
                found.append((info.filename, doc))

    if not found:
        raise NoEnvironmentFound("AASX container holds no aasenv XML entry")
    return found


def load_environments(path: str | Path) -> list[tuple[str, bytes]]:
    """Read ``.xml`` files as-is and unpack ``.aasx`` containers."""
    path = Path(path)
    data = read_bytes(path)
    if path.suffix.lower() == ".aasx":
        return extract_aasx(data)
    return [(path.name, data)]
