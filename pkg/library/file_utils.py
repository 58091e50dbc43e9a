from pathlib import Path


def read_bytes(path: str | Path) -> bytes:
    """Read a whole file; raises OSError with the path in the message."""
    try:
        return Path(path).read_bytes()
    except OSError as e:
        raise OSError(f"Cannot read {path}: {e.strerror or e}") from e


def write_bytes(path: str | Path, data: bytes) -> Path:
    """Write *data* to *path*, creating parent directories."""
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_bytes(data)
    return target


def write_text(path: str | Path, text: str) -> Path:
    """Write *text* as UTF-8 with LF line endings regardless of platform."""
    return write_bytes(path, text.replace("\r\n", "\n").encode("utf-8"))
