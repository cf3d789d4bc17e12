from collections import OrderedDict
from threading import Lock
from time import time
from typing import Any, Callable, Dict, Hashable, Iterable, Tuple


class TTLCache:
    def __init__(self):
        self._store: Dict[str, Tuple[float, Any]] = {}

    def _now(self) -> float:
        return time()

    def get(self, key: str) -> Any:
        item = self._store.get(key)
        if not item:
            return None
        expires_at, value = item
        if self._now() > expires_at:
            # expired
            self._store.pop(key, None)
            return None
        return value

    def set(self, key: str, value: Any, ttl_seconds: int = 60) -> None:
        self._store[key] = (self._now() + max(1, ttl_seconds), value)

    def clear(self) -> None:
        self._store.clear()

    def __len__(self) -> int:
        return len(self._store)


class MemoTable:
    """Deterministic memo: lock-free reads, writes under a lock.

    Values must be pure functions of their key, so a racing double
    computation stores the same value twice.
    """

    def __init__(self, name: str):
        self.name = name
        self._store: Dict[Hashable, Any] = {}
        self._lock = Lock()

    def get_or_compute(self, key: Hashable, compute: Callable[[], Any]) -> Any:
        try:
            return self._store[key]
        except KeyError:
            pass
        value = compute()
        with self._lock:
            return self._store.setdefault(key, value)

    def clear(self) -> None:
        with self._lock:
            self._store.clear()

    def __len__(self) -> int:
        return len(self._store)


class MemoPool:
    """One MemoTable per namespace.

    Pinned namespaces are never dropped; of the others at most `capacity`
    are kept, and the least recently used one goes first.
    """

    def __init__(self, name: str, capacity: int, pinned: Iterable[Hashable] = ()):
        self.name = name
        self.capacity = max(0, capacity)
        self.pinned = frozenset(pinned)
        self._tables: "OrderedDict[Hashable, MemoTable]" = OrderedDict()
        self._lock = Lock()

    def table(self, namespace: Hashable) -> MemoTable:
        with self._lock:
            table = self._tables.get(namespace)
            if table is None:
                table = self._tables[namespace] = MemoTable(f"{self.name}:{namespace}")
            self._tables.move_to_end(namespace)
            evictable = [ns for ns in self._tables if ns not in self.pinned]
            for ns in evictable[: max(0, len(evictable) - self.capacity)]:
                if ns != namespace:
                    del self._tables[ns]
            return table

    def namespaces(self) -> Tuple[Hashable, ...]:
        return tuple(self._tables)

    def clear(self) -> None:
        with self._lock:
            self._tables.clear()

    def __len__(self) -> int:
        return sum(len(t) for t in list(self._tables.values()))


# Singleton cache for app-wide use
cache = TTLCache()
