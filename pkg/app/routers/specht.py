from typing import Optional

from fastapi import APIRouter, Query

from app.routers.common import run_report
from app.services.engine_service import get_engine_service

router = APIRouter(prefix="/specht", tags=["Specht modules"])
svc = get_engine_service()


@router.get("/labels", summary="Specht labels of size n")
def labels(n: int = Query(..., ge=1), dims: bool = False, force: bool = False):
    return run_report(lambda: svc.labels(n, with_dims=dims, force=force), f"labels:{n}:{dims}")


@router.get("/classification", summary="Dimensions of all Specht modules and the sum of squares")
def classification(n: int = Query(..., ge=1), exact: Optional[bool] = None, seed: Optional[int] = None, force: bool = False):
    # the warm-up job fills "specht:{n}:default"
    mode = "default" if exact is None and seed is None else f"{exact}:{seed}"
    return run_report(lambda: svc.specht(n, exact=exact, seed=seed, force=force), f"specht:{n}:{mode}")


@router.get("/module", summary="Dimension of one Specht module by label index")
def module(n: int = Query(..., ge=1), label: int = Query(..., ge=0), exact: Optional[bool] = None, force: bool = False):
    return run_report(lambda: svc.specht(n, label=label, exact=exact, force=force), f"specht:{n}:label:{label}:{exact}")


@router.get("/diagnostics", summary="E-action lemma, projection witness and tensor-form invariance")
def diagnostics(n: int = Query(..., ge=1), seed: Optional[int] = None, force: bool = False):
    return run_report(lambda: svc.diagnostics(n, seed=seed, force=force), f"diagnostics:{n}:{seed}")
