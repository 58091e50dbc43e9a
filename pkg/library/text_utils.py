import re


def clean_text(text: str | None) -> str | None:
    """Strip surrounding whitespace; empty or missing text becomes None."""
    if text is None:
        return None
    text = text.strip()
    return text or None


def camel_case(name: str) -> str:
    """
    Turn an attribute name into a lower camel-case local name.

    Example:
        >>> camel_case("Preferred Name")
        'preferredName'
        >>> camel_case("unitId")
        'unitId'
    """
    parts = [p for p in re.split(r"[^A-Za-z0-9]+", name) if p]
    if not parts:
        return ""
    head, *tail = parts
    return head[:1].lower() + head[1:] + "".join(p[:1].upper() + p[1:] for p in tail)
