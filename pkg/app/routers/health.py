from fastapi import APIRouter

from app.services.algebra.product import structure_constant_count
from app.services.cache import cache
from app.tasks.scheduler import sched

router = APIRouter(prefix="/health", tags=["Health"])


@router.get("/app")
def app_health():
    return {
        "scheduler_running": bool(getattr(sched, "running", False)),
        "cached_reports": len(cache),
        "structure_constants": structure_constant_count(),
    }
