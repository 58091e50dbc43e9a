from .manifest import (
    DATA_DIR,
    FixtureEntry,
    FixtureKind,
    FixtureManifest,
    bundled_path,
    read_manifest,
    verify_fixtures,
)
