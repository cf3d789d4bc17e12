# app/tasks/scheduler.py
from apscheduler.schedulers.background import BackgroundScheduler

from app.config import settings
from app.services.algebra.product import clear_structure_constants, structure_constant_count
from app.services.cache import cache
from app.services.engine_service import get_engine_service
from logging_config import logger

svc = get_engine_service()
sched = BackgroundScheduler()

# warm-up results outlive the request cache until the nightly refresh
WARMUP_TTL_SECONDS = 24 * 3600


def job_warm_classification():
    logger.info("Scheduler: warming classification reports for n in %s", settings.warmup_sizes)
    for n in settings.warmup_sizes:
        try:
            res = svc.specht(n)
            cache.set(f"specht:{n}:default", res, ttl_seconds=WARMUP_TTL_SECONDS)
            logger.info("Scheduler: classification n=%d cached (sum of squares %s)", n, res["sumSquares"])
        except Exception as e:
            logger.exception("Scheduler warm-up for n=%d failed: %s", n, e)


def job_nightly_refresh():
    logger.info("Scheduler: dropping %d memoised structure constants", structure_constant_count())
    clear_structure_constants()
    job_warm_classification()


# one shot on startup, then nightly at 03:00
sched.add_job(job_warm_classification, id="warmup")
sched.add_job(job_nightly_refresh, "cron", hour=3, minute=0, id="nightly_refresh")


def start_scheduler():
    if not sched.running:
        logger.info("Starting APScheduler")
        sched.start()


def shutdown_scheduler():
    if sched.running:
        logger.info("Shutting down APScheduler")
        sched.shutdown()
