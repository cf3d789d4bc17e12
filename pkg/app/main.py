from fastapi import FastAPI

from app.routers import algebra, health, specht, tensor
from app.tasks.scheduler import shutdown_scheduler, start_scheduler
from logging_config import logger

app = FastAPI(title="Braids-and-Ties Algebra API", version="0.1")


@app.on_event("startup")
def on_startup():
    # start scheduler in background
    try:
        start_scheduler()
    except Exception as e:
        logger.exception("Scheduler failed to start: %s", e)


@app.on_event("shutdown")
def on_shutdown():
    try:
        shutdown_scheduler()
    except Exception:
        pass


app.include_router(algebra.router)
app.include_router(tensor.router)
app.include_router(specht.router)
app.include_router(health.router)


@app.get("/")
def root():
    return {"service": "Braids-and-Ties Algebra API", "docs": "/docs"}
