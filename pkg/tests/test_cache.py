from app.services.cache import MemoPool, MemoTable, TTLCache


def test_ttl_cache_expires(monkeypatch):
    c = TTLCache()
    now = [1000.0]
    monkeypatch.setattr(c, "_now", lambda: now[0])
    c.set("specht:3:default", {"pass": True}, ttl_seconds=60)
    assert c.get("specht:3:default") == {"pass": True}
    now[0] += 61
    assert c.get("specht:3:default") is None
    assert len(c) == 0


def test_memo_table_computes_once():
    calls = []
    table = MemoTable("t")

    def compute():
        calls.append(1)
        return 42

    assert table.get_or_compute("k", compute) == 42
    assert table.get_or_compute("k", compute) == 42
    assert len(calls) == 1 and len(table) == 1


def test_memo_pool_evicts_least_recent_unpinned():
    pool = MemoPool("p", capacity=2, pinned=("generic",))
    pool.table("generic").get_or_compute("x", lambda: 1)
    for ns in ("a", "b", "a", "c"):
        pool.table(ns).get_or_compute("x", lambda: 1)
    # b was the least recently used when c arrived
    assert set(pool.namespaces()) == {"generic", "a", "c"}
    assert len(pool) == 3
    pool.clear()
    assert len(pool) == 0 and pool.namespaces() == ()
