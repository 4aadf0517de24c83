import hashlib
import json
import logging
import os
import tempfile

from collections import OrderedDict
from typing import Any

from .errors import CheckpointError, CheckpointNotFoundError

logger = logging.getLogger(__name__)

CHECKPOINT_FORMAT = "palindromic-checkpoint"
CHECKPOINT_VERSION = 1


class CheckpointStore:
    """Resumable progress records kept on disk

    Records are JSON values stored under string keys. Keys are hashed into a
    fixed number of bucket files inside one directory; each bucket carries a
    versioned header and is replaced atomically on every write
    """

    def __init__(self, directory: str, buckets_count: int = 16, max_cached_buckets: int = 2):
        """Open or create a checkpoint directory

        Args:
            directory (str): Directory holding the bucket files
            buckets_count (int): Number of bucket files (default: 16)
            max_cached_buckets (int): Number of buckets kept in memory (default: 2)

        Raises:
            ValueError: If directory is empty/whitespace, buckets_count <= 0, or max_cached_buckets <= 0
            CheckpointError: If directory exists and is not a directory
        """

        if not directory or not directory.strip():
            raise ValueError("Invalid checkpoint directory")

        if buckets_count <= 0:
            raise ValueError("Invalid buckets count")

        if max_cached_buckets <= 0:
            raise ValueError("Invalid max cached buckets count")

        self.directory = directory
        self.buckets_count = buckets_count
        self.max_cached_buckets = max_cached_buckets

        if os.path.exists(directory) and not os.path.isdir(directory):
            raise CheckpointError(f"{directory} exists and is not a directory")
        os.makedirs(directory, exist_ok=True)

        self.bucket_cache: OrderedDict[int, dict[str, Any]] = OrderedDict()

    def _bucket_path(self, bucket_id: int) -> str:
        return os.path.join(self.directory, f"bucket_{bucket_id}.json")

    def _get_bucket_id(self, key: str) -> int:
        digest = hashlib.sha256(key.encode("utf-8")).hexdigest()
        return int(digest, 16) % self.buckets_count

    def _read_bucket(self, bucket_id: int) -> dict[str, Any]:
        path = self._bucket_path(bucket_id)
        if not os.path.exists(path):
            return {}

        try:
            with open(path, "r", encoding="utf-8") as f:
                document = json.load(f)
        except (OSError, json.JSONDecodeError) as e:
            logger.warning("Ignoring unreadable checkpoint bucket %s: %s", path, e)
            return {}

        if (
            not isinstance(document, dict)
            or document.get("format") != CHECKPOINT_FORMAT
            or document.get("version") != CHECKPOINT_VERSION
            or not isinstance(document.get("entries"), dict)
        ):
            logger.warning("Ignoring checkpoint bucket %s with unknown header", path)
            return {}
        return document["entries"]

    def _load_bucket(self, bucket_id: int) -> dict[str, Any]:
        if bucket_id in self.bucket_cache:
            self.bucket_cache.move_to_end(bucket_id)
            return self.bucket_cache[bucket_id]

        if len(self.bucket_cache) >= self.max_cached_buckets:
            # every write is already on disk, so evicted buckets need no save
            self.bucket_cache.popitem(last=False)

        entries = self._read_bucket(bucket_id)
        self.bucket_cache[bucket_id] = entries
        return entries

    def _save_bucket(self, bucket_id: int) -> None:
        document = {
            "format": CHECKPOINT_FORMAT,
            "version": CHECKPOINT_VERSION,
            "entries": self.bucket_cache.get(bucket_id, {}),
        }
        fd, temp_path = tempfile.mkstemp(dir=self.directory, prefix=".bucket_", suffix=".tmp")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as f:
                json.dump(document, f, ensure_ascii=False, indent=2)
            os.replace(temp_path, self._bucket_path(bucket_id))
        except OSError as e:
            if os.path.exists(temp_path):
                os.remove(temp_path)
            raise CheckpointError(f"Cannot write checkpoint bucket {bucket_id}: {e}") from e

    def set(self, key: str, value: Any) -> None:
        """Store a JSON value under key

        Raises:
            ValueError: If the key is empty or whitespace
            CheckpointError: If the bucket file cannot be written
        """

        if not isinstance(key, str) or not key.strip():
            raise ValueError("Invalid key")

        bucket_id = self._get_bucket_id(key)
        bucket = self._load_bucket(bucket_id)
        bucket[key] = value
        self._save_bucket(bucket_id)

    def get(self, key: str) -> Any:
        """Value stored under key

        Raises:
            CheckpointNotFoundError: If nothing is stored under key
        """

        bucket = self._load_bucket(self._get_bucket_id(key))
        if key not in bucket:
            raise CheckpointNotFoundError(f"No checkpoint for {key}")
        return bucket[key]

    def delete(self, key: str) -> Any:
        """Remove key and return its value, None when absent"""

        bucket_id = self._get_bucket_id(key)
        bucket = self._load_bucket(bucket_id)
        value = bucket.pop(key, None)
        self._save_bucket(bucket_id)
        return value

    def exists(self, key: str) -> bool:
        return key in self._load_bucket(self._get_bucket_id(key))
