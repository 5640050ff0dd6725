import json

from wittlab import memo


def test_disk_cache_round_trip(tmp_path, monkeypatch):
    monkeypatch.delenv("WITTLAB_CACHE", raising=False)
    calls = []

    @memo.persistent()
    def square(n):
        calls.append(n)
        return n * n

    memo.configure(str(tmp_path))
    try:
        assert square(7) == 49
        files = list(tmp_path.glob("*.json"))
        assert len(files) == 1 and json.loads(files[0].read_text()) == 49
        square.cache_clear()
        assert square(7) == 49 and calls == [7]      # served from disk
        files[0].unlink()
        square.cache_clear()
        assert square(7) == 49 and calls == [7, 7]   # safe to delete
    finally:
        memo.configure(None)


def test_environment_wins(tmp_path, monkeypatch):
    monkeypatch.setenv("WITTLAB_CACHE", str(tmp_path / "env"))
    try:
        memo.configure(str(tmp_path / "flag"))
        assert memo.cache_dir() == tmp_path / "env"
    finally:
        monkeypatch.delenv("WITTLAB_CACHE")
        memo.configure(None)
    assert memo.cache_dir() is None


def test_corrupt_file_is_recomputed(tmp_path, monkeypatch):
    monkeypatch.delenv("WITTLAB_CACHE", raising=False)

    @memo.persistent(encode=list, decode=tuple)
    def pair(n):
        return (n, n)

    memo.configure(str(tmp_path))
    try:
        pair(3)
        path = next(tmp_path.glob("*.json"))
        path.write_text("{not json")
        pair.cache_clear()
        assert pair(3) == (3, 3)
    finally:
        memo.configure(None)
