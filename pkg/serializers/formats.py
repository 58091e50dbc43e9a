import enum
from pathlib import Path


class SerializationFormat(enum.Enum):
    """Output formats with their command-line flag, file extension and rdflib plugin."""

    NTRIPLES = ("nt", ".nt", "nt")
    NQUADS = ("nq", ".nq", "nt")
    TURTLE = ("ttl", ".ttl", "turtle")
    RDFXML = ("rdfxml", ".rdf", "xml")
    JSONLD = ("jsonld", ".jsonld", "json-ld")

    def __init__(self, flag: str, extension: str, plugin: str) -> None:
        self.flag = flag
        self.extension = extension
        self.plugin = plugin

    @property
    def parsable(self) -> bool:
        return self in (SerializationFormat.NTRIPLES, SerializationFormat.NQUADS, SerializationFormat.TURTLE)

    @classmethod
    def from_flag(cls, flag: str) -> "SerializationFormat":
        for fmt in cls:
            if fmt.flag == flag:
                return fmt
        raise ValueError(f"Unknown format flag {flag!r}; expected one of {[f.flag for f in cls]}")


def format_for_path(path: str | Path) -> SerializationFormat:
    """Pick the format from the file extension (``.nt``, ``.nq``, ``.ttl``, ...)."""
    suffix = Path(path).suffix.lower()
    for fmt in SerializationFormat:
        if fmt.extension == suffix:
            return fmt
    raise ValueError(f"Cannot infer an RDF format from extension {suffix!r}")
