"""
Runtime settings from the process environment.

A ``.env`` file in the working directory is loaded first without overriding
variables that are already set. Command-line flags take precedence over
everything read here.
"""

import os
from pathlib import Path

from dotenv import load_dotenv
from pydantic import BaseModel, ConfigDict, Field

from fixtures import bundled_path
from reasoner import DEFAULT_MAX_TRIPLES

ENV_PREFIX = "SAAS_"


class Settings(BaseModel):
    model_config = ConfigDict(frozen=True)

    ontology: Path | None = None
    shapes: Path = Field(default_factory=lambda: bundled_path("shapes"))
    policy: str = "strict"
    log_level: str = "WARNING"
    max_triples: int = Field(default=DEFAULT_MAX_TRIPLES, gt=0)


def get_settings() -> Settings:
    """Return settings from ``SAAS_*`` variables (after loading ``.env``)."""
    load_dotenv(".env", override=False)

    values = {}
    for field in Settings.model_fields:
        raw = os.environ.get(f"{ENV_PREFIX}{field.upper()}")
        if raw is not None and raw.strip():
            values[field] = raw.strip()
    return Settings(**values)
