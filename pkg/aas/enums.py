import enum


# -------------------------------------------------------------------
# Identifier kinds as written in the idType attribute
# -------------------------------------------------------------------
class IdType(str, enum.Enum):
    URI = "URI"
    IRDI = "IRDI"
    CUSTOM = "Custom"

    @classmethod
    def from_attribute(cls, value: str | None) -> "IdType":
        """Map an idType attribute; anything other than URI or IRDI is Custom."""
        text = (value or "").strip()
        if text == "URI":
            return cls.URI
        if text == "IRDI":
            return cls.IRDI
        return cls.CUSTOM


# -------------------------------------------------------------------
# Global identifiers are resolvable anywhere, local ones only inside
# their enclosing environment.
# -------------------------------------------------------------------
class Scope(str, enum.Enum):
    GLOBAL = "Global"
    LOCAL = "Local"


class Kind(str, enum.Enum):
    INSTANCE = "Instance"
    TYPE = "Type"

    @classmethod
    def from_text(cls, value: str) -> "Kind":
        """Parse a kind value case-insensitively.

        Raises:
            ValueError: If the value is neither Instance nor Type.
        """
        text = value.strip().lower()
        for kind in cls:
            if kind.value.lower() == text:
                return kind
        raise ValueError(f"kind must be Instance or Type, got {value!r}")
