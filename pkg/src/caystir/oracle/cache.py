"""
On-disk cache of seed rows, one JSON document per (class, kind) key.
"""

from pathlib import Path

import structlog
from pydantic import ValidationError

from caystir.oracle.seeds import SeedRow
from caystir.schemas import SeedRowDocument

logger = structlog.get_logger(__name__)


class SeedCache:
    def __init__(self, directory: Path) -> None:
        self.directory = Path(directory).expanduser()
        self.logger = logger.bind(service="seed_cache", directory=str(self.directory))

    def _path(self, key: str) -> Path:
        return self.directory / f"{key}.json"

    def get(self, key: str) -> SeedRow | None:
        path = self._path(key)
        if not path.is_file():
            return None
        try:
            document = SeedRowDocument.model_validate_json(path.read_text(encoding="utf-8"))
        except ValidationError as e:
            self.logger.warning("seed_cache_corrupt", key=key, error=str(e))
            return None
        self.logger.debug("seed_cache_hit", key=key)
        return SeedRow.from_document(document)

    def put(self, row: SeedRow) -> Path:
        self.directory.mkdir(parents=True, exist_ok=True)
        path = self._path(row.key)
        path.write_text(row.to_document().model_dump_json(indent=2), encoding="utf-8")
        self.logger.debug("seed_cache_store", key=row.key)
        return path

    def keys(self) -> list[str]:
        if not self.directory.is_dir():
            return []
        return sorted(path.stem for path in self.directory.glob("*.json"))

    def clear(self) -> int:
        removed = 0
        for key in self.keys():
            self._path(key).unlink(missing_ok=True)
            removed += 1
        self.logger.info("seed_cache_cleared", removed=removed)
        return removed
