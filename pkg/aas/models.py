"""Typed, immutable model of an AAS environment.

Pydantic models mirror the parts of the AAS data model the mapping works on:
shells, assets, submodels with their elements, and concept descriptions.
Anything else found in a document is kept in each entity's opaque ``extras``
bag rather than rejected.
"""

from __future__ import annotations

from typing import Annotated, Literal, Union

from pydantic import BaseModel, ConfigDict, Field, model_validator

from rdfcore.terms import iri_violation
from .enums import IdType, Kind, Scope

# (language tag, text)
LangString = tuple[str, str]


class AasModel(BaseModel):
    model_config = ConfigDict(frozen=True)


class Identifier(AasModel):
    """Identification of an Identifiable.

    URI and IRDI identifiers are global; custom identifiers are local to the
    environment that ships them.
    """

    value: str
    id_type: IdType
    scope: Scope

    @model_validator(mode="before")
    @classmethod
    def _default_scope(cls, data):
        if isinstance(data, dict) and data.get("scope") is None:
            id_type = IdType(data.get("id_type", IdType.CUSTOM))
            data = {**data, "scope": Scope.LOCAL if id_type is IdType.CUSTOM else Scope.GLOBAL}
        return data

    def uri_violation(self) -> str | None:
        """Why a URI-typed value is not an absolute IRI, or ``None``.

        Such identifiers are kept as parsed; the mapper skips the entity.
        """
        if self.id_type is not IdType.URI:
            return None
        return iri_violation(self.value)


class Key(AasModel):
    key_type: str = Field(min_length=1)
    local: bool = False
    id_type: IdType = IdType.CUSTOM
    value: str = Field(min_length=1)


class Reference(AasModel):
    keys: tuple[Key, ...] = Field(min_length=1)

    @property
    def target(self) -> Key:
        """The last key denotes the referenced entity."""
        return self.keys[-1]


class Referable(AasModel):
    id_short: str = ""
    descriptions: tuple[LangString, ...] = ()
    extras: dict[str, str] = Field(default_factory=dict)


class Identifiable(Referable):
    identification: Identifier


# -------------------------------------------------------------------
# Submodel elements
# -------------------------------------------------------------------
class ElementBase(Referable):
    semantic_id: Reference | None = None


class PropertyElement(ElementBase):
    element_type: Literal["Property"] = "Property"
    value: str | None = None
    value_type: str | None = None


class CollectionElement(ElementBase):
    element_type: Literal["Collection"] = "Collection"
    children: tuple["SubmodelElement", ...] = ()


class FileElement(ElementBase):
    element_type: Literal["File"] = "File"
    mime_type: str = ""
    path: str | None = None


class BlobElement(ElementBase):
    element_type: Literal["Blob"] = "Blob"
    mime_type: str = ""
    value: str | None = None


class ReferenceElement(ElementBase):
    element_type: Literal["ReferenceElement"] = "ReferenceElement"
    target: Reference | None = None


class OperationElement(ElementBase):
    """Parsed for completeness; operations carry no invocation semantics."""

    element_type: Literal["Operation"] = "Operation"
    in_params: tuple["SubmodelElement", ...] = ()
    out_params: tuple["SubmodelElement", ...] = ()


SubmodelElement = Annotated[
    Union[PropertyElement, CollectionElement, FileElement, BlobElement, ReferenceElement, OperationElement],
    Field(discriminator="element_type"),
]

CollectionElement.model_rebuild()
OperationElement.model_rebuild()


# -------------------------------------------------------------------
# Identifiables
# -------------------------------------------------------------------
class AdministrationShell(Identifiable):
    asset_refs: tuple[Reference, ...] = ()
    submodel_refs: tuple[Reference, ...] = ()


class Asset(Identifiable):
    kind: Kind


class Submodel(Identifiable):
    kind: Kind = Kind.INSTANCE
    elements: tuple[SubmodelElement, ...] = ()


class ConceptDescription(Identifiable):
    definitions: tuple[LangString, ...] = ()
    attributes: dict[str, str] = Field(default_factory=dict)


class AasEnvironment(AasModel):
    shells: tuple[AdministrationShell, ...] = ()
    assets: tuple[Asset, ...] = ()
    submodels: tuple[Submodel, ...] = ()
    concept_descriptions: tuple[ConceptDescription, ...] = ()


class EnvironmentCensus(AasModel):
    """Entity counts of an environment; ``elements`` counts collections and their children."""

    shells: int = 0
    assets: int = 0
    submodels: int = 0
    elements: int = 0
    concept_descriptions: int = 0

    @property
    def total(self) -> int:
        return self.shells + self.assets + self.submodels + self.elements + self.concept_descriptions
