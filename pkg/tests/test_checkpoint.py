import json
import os
import tempfile

import pytest

from palindromic.checkpoint import CHECKPOINT_FORMAT, CHECKPOINT_VERSION, CheckpointStore
from palindromic.errors import CheckpointError, CheckpointNotFoundError


@pytest.fixture
def temp_dir():
    with tempfile.TemporaryDirectory() as tmpdir:
        yield tmpdir


@pytest.fixture
def store(temp_dir):
    return CheckpointStore(temp_dir)


class TestCheckpointStoreInit:
    """Test CheckpointStore initialization"""

    def test_init_creates_directory(self, temp_dir):
        path = os.path.join(temp_dir, "survey")
        CheckpointStore(path)
        assert os.path.isdir(path)

    def test_init_invalid_directory_empty(self):
        with pytest.raises(ValueError, match="Invalid checkpoint directory"):
            CheckpointStore("")

    def test_init_invalid_directory_whitespace(self):
        with pytest.raises(ValueError, match="Invalid checkpoint directory"):
            CheckpointStore("   ")

    def test_init_invalid_buckets_count(self, temp_dir):
        with pytest.raises(ValueError, match="Invalid buckets count"):
            CheckpointStore(temp_dir, buckets_count=0)

    def test_init_invalid_max_cached_buckets(self, temp_dir):
        with pytest.raises(ValueError, match="Invalid max cached buckets count"):
            CheckpointStore(temp_dir, max_cached_buckets=0)

    def test_init_existing_file_not_directory(self, temp_dir):
        path = os.path.join(temp_dir, "not_a_directory")
        with open(path, "w") as f:
            f.write("test")
        with pytest.raises(CheckpointError):
            CheckpointStore(path)


class TestCheckpointStoreOperations:
    """Test set/get/delete/exists"""

    def test_set_and_get(self, store):
        store.set("survey:n=6", {"next_chunk": 1})
        assert store.get("survey:n=6") == {"next_chunk": 1}

    def test_set_overwrite(self, store):
        store.set("key", 1)
        store.set("key", 2)
        assert store.get("key") == 2

    def test_get_missing_key(self, store):
        with pytest.raises(CheckpointNotFoundError):
            store.get("missing")

    def test_delete(self, store):
        store.set("key", [1, 2, 3])
        assert store.delete("key") == [1, 2, 3]
        assert store.exists("key") is False

    def test_delete_missing_key(self, store):
        assert store.delete("missing") is None

    def test_set_invalid_key(self, store):
        with pytest.raises(ValueError, match="Invalid key"):
            store.set("  ", "value")

    def test_cache_eviction(self, temp_dir):
        store = CheckpointStore(temp_dir, buckets_count=16, max_cached_buckets=2)
        for i in range(20):
            store.set(f"key_{i}", i)
        for i in range(20):
            assert store.get(f"key_{i}") == i


class TestCheckpointStoreFiles:
    """Test the on-disk bucket format"""

    def test_persistence_across_instances(self, temp_dir):
        CheckpointStore(temp_dir).set("key", {"report": {"order": 8}})
        assert CheckpointStore(temp_dir).get("key") == {"report": {"order": 8}}

    def test_bucket_header(self, temp_dir):
        store = CheckpointStore(temp_dir, buckets_count=1)
        store.set("key", "value")
        with open(os.path.join(temp_dir, "bucket_0.json"), encoding="utf-8") as f:
            document = json.load(f)
        assert document == {"format": CHECKPOINT_FORMAT, "version": CHECKPOINT_VERSION, "entries": {"key": "value"}}

    def test_no_temporary_files_left(self, temp_dir):
        store = CheckpointStore(temp_dir, buckets_count=1)
        store.set("key", "value")
        assert os.listdir(temp_dir) == ["bucket_0.json"]

    def test_corrupt_bucket_is_ignored(self, temp_dir):
        with open(os.path.join(temp_dir, "bucket_0.json"), "w", encoding="utf-8") as f:
            f.write("{not json")
        store = CheckpointStore(temp_dir, buckets_count=1)
        assert store.exists("key") is False

    def test_unknown_version_is_ignored(self, temp_dir):
        with open(os.path.join(temp_dir, "bucket_0.json"), "w", encoding="utf-8") as f:
            json.dump({"format": CHECKPOINT_FORMAT, "version": 99, "entries": {"key": 1}}, f)
        store = CheckpointStore(temp_dir, buckets_count=1)
        with pytest.raises(CheckpointNotFoundError):
            store.get("key")
