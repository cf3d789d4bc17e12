from typing import Any, Callable, Optional

from fastapi import HTTPException

from app.config import settings
from app.services.cache import cache
from app.services.errors import EngineError, GuardError
from logging_config import logger


def run_report(compute: Callable[[], Any], cache_key: Optional[str] = None) -> Any:
    """Serve a report from the TTL cache or compute it, mapping engine errors to HTTP codes."""
    if cache_key:
        cached = cache.get(cache_key)
        if cached:
            return cached
    try:
        res = compute()
    except GuardError as e:
        raise HTTPException(status_code=413, detail=str(e))
    except EngineError as e:
        raise HTTPException(status_code=400, detail=str(e))
    except Exception as e:
        logger.exception("report %s failed: %s", cache_key or "<uncached>", e)
        raise HTTPException(status_code=500, detail="internal error")
    if cache_key:
        cache.set(cache_key, res, ttl_seconds=settings.CACHE_TTL_SECONDS)
    return res
