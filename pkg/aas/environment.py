"""Queries over a parsed ``AasEnvironment``."""

from __future__ import annotations

import logging
from collections import Counter
from typing import Iterable, Iterator

from .exceptions import AmbiguousReference
from .models import (
    AasEnvironment,
    CollectionElement,
    EnvironmentCensus,
    Identifiable,
    Reference,
    SubmodelElement,
)

logger = logging.getLogger(__name__)

# key type -> environment member holding entities of that type
_KEY_TYPE_MEMBERS = {
    "assetadministrationshell": "shells",
    "asset": "assets",
    "submodel": "submodels",
    "conceptdescription": "concept_descriptions",
}


def iter_elements(elements: Iterable[SubmodelElement]) -> Iterator[SubmodelElement]:
    """Yield every element depth-first, collections before their children."""
    for element in elements:
        yield element
        if isinstance(element, CollectionElement):
            yield from iter_elements(element.children)


def resolve_local(env: AasEnvironment, ref: Reference) -> Identifiable | None:
    """Return the entity the reference's last key points to, or ``None``.

    The entity must be of the kind named by the key type and carry the key
    value as its identification.

    Raises:
        AmbiguousReference: If two entities of that kind share the identifier.
    """
    key = ref.target
    member = _KEY_TYPE_MEMBERS.get(key.key_type.strip().lower())
    if member is None:
        return None

    matches = [entity for entity in getattr(env, member) if entity.identification.value == key.value]
    if len(matches) > 1:
        raise AmbiguousReference(key.value, len(matches))
    return matches[0] if matches else None


def environment_census(env: AasEnvironment) -> EnvironmentCensus:
    """Count the entities of *env*; collections count as elements themselves."""
    elements = sum(1 for submodel in env.submodels for _ in iter_elements(submodel.elements))
    return EnvironmentCensus(
        shells=len(env.shells),
        assets=len(env.assets),
        submodels=len(env.submodels),
        elements=elements,
        concept_descriptions=len(env.concept_descriptions),
    )


def _duplicate_id_shorts(scope: str, id_shorts: Iterable[str]) -> list[str]:
    counts = Counter(s for s in id_shorts if s)
    return [f"{scope}: idShort {name!r} used {count} times" for name, count in sorted(counts.items()) if count > 1]


def check_environment(env: AasEnvironment) -> list[str]:
    """Return consistency warnings for *env*; none of them is fatal.

    Checks that URI-typed identifications are absolute IRIs, that every
    local reference of a shell resolves inside the environment and that
    sibling idShorts are unique.
    """
    warnings: list[str] = []

    members = (env.shells, env.assets, env.submodels, env.concept_descriptions)
    for scope, entities in zip(("shells", "assets", "submodels", "conceptDescriptions"), members):
        for index, entity in enumerate(entities):
            reason = entity.identification.uri_violation()
            if reason is not None:
                value = entity.identification.value
                warnings.append(f"{scope}[{index}]: idType URI but {value!r} is not an absolute IRI ({reason})")

    for index, shell in enumerate(env.shells):
        for ref in (*shell.asset_refs, *shell.submodel_refs):
            if not ref.target.local:
                continue
            try:
                target = resolve_local(env, ref)
            except AmbiguousReference as exc:
                warnings.append(f"shells[{index}]: {exc}")
                continue
            if target is None:
                warnings.append(f"shells[{index}]: local {ref.target.key_type} reference {ref.target.value!r} does not resolve")

    warnings += _duplicate_id_shorts("shells", (s.id_short for s in env.shells))
    warnings += _duplicate_id_shorts("assets", (a.id_short for a in env.assets))
    warnings += _duplicate_id_shorts("submodels", (s.id_short for s in env.submodels))
    warnings += _duplicate_id_shorts("conceptDescriptions", (c.id_short for c in env.concept_descriptions))

    def _walk(scope: str, elements) -> None:
        warnings.extend(_duplicate_id_shorts(scope, (e.id_short for e in elements)))
        for element in elements:
            if isinstance(element, CollectionElement):
                _walk(f"{scope}/{element.id_short}", element.children)

    for index, submodel in enumerate(env.submodels):
        _walk(f"submodels[{index}]", submodel.elements)

    for warning in warnings:
        logger.warning("Environment check: %s", warning)
    return warnings
