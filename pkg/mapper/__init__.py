from .config import IdentifierPolicy, MappingConfig, PolicyKind
from .report import MappingReport, SkippedEntity
from .identifiers import Skip, resolve_identifier
from .datatypes import VALUE_TYPES, typed_literal
from .mapper import map_asset, map_concept_description, map_environment, map_shell, map_submodel
