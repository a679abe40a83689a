import json

from misiurewicz.cache import CACHE_FORMAT, Cache, entry_key


def test_put_get_and_stale(tmp_path):
    c = Cache(tmp_path)
    c.put("G", 3, 2, "full", [1, -1, 1, 1])
    assert c.get("G", 3, 2, "full") == [1, -1, 1, 1]
    assert c.get("G", 3, 2, "leading(1)") is None
    # an entry written by an older format is ignored and collected
    path = next(tmp_path.glob("*/*.json"))
    doc = json.loads(path.read_text())
    doc["format"] = CACHE_FORMAT - 1
    path.write_text(json.dumps(doc))
    assert c.get("G", 3, 2, "full") is None
    assert c.list()[0]["stale"]
    assert c.gc() == [str(path)]
    assert c.list() == []


def test_keys_depend_on_version():
    assert entry_key("P", 2, 2, "full", 1) != entry_key("P", 2, 2, "full", 2)
