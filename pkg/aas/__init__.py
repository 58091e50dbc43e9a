from .enums import IdType, Kind, Scope
from .exceptions import AasModelError, AmbiguousReference
from .models import (
    AasEnvironment,
    AdministrationShell,
    Asset,
    BlobElement,
    CollectionElement,
    ConceptDescription,
    EnvironmentCensus,
    FileElement,
    Identifiable,
    Identifier,
    Key,
    OperationElement,
    PropertyElement,
    Reference,
    ReferenceElement,
    Submodel,
    SubmodelElement,
)
from .environment import check_environment, environment_census, iter_elements, resolve_local
