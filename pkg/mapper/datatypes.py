from __future__ import annotations

import logging

from rdflib import Literal
from rdflib.namespace import XSD

from rdfcore import make_literal

logger = logging.getLogger(__name__)

# AAS valueType -> XSD datatype
VALUE_TYPES = {
    "int": XSD.integer,
    "integer": XSD.integer,
    "string": XSD.string,
    "boolean": XSD.boolean,
    "double": XSD.double,
    "date": XSD.date,
}


def typed_literal(value: str, value_type: str | None) -> tuple[Literal, str | None]:
    """Literal for a property value plus a warning when the value type is unknown.

    Unknown value types fall back to a plain string literal.
    """
    if not value_type:
        return make_literal(value), None

    key = value_type.strip().lower()
    for prefix in ("xsd:", "xs:"):
        if key.startswith(prefix):
            key = key[len(prefix):]

    datatype = VALUE_TYPES.get(key)
    if datatype is None:
        warning = f"unknown value type {value_type!r}, mapped as plain string"
        logger.warning("%s", warning)
        return make_literal(value), warning
    return make_literal(value, datatype=datatype), None
