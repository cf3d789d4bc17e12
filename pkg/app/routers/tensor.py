from typing import List, Optional

from fastapi import APIRouter, Query
from pydantic import BaseModel, Field, field_validator

from app.routers.common import run_report
from app.services.engine_service import get_engine_service

router = APIRouter(prefix="/tensor", tags=["Tensor space"])
svc = get_engine_service()


class ActRequest(BaseModel):
    n: int = Field(..., ge=1)
    expr: str = Field(..., min_length=1)
    # one (lower, upper) pair per tensor factor
    tensor: List[List[int]]
    force: bool = False

    @field_validator("tensor")
    @classmethod
    def pairs(cls, v: List[List[int]]) -> List[List[int]]:
        if any(len(p) != 2 for p in v):
            raise ValueError("each tensor factor is a [lower, upper] pair")
        return v


@router.get("/faithful", summary="Faithfulness certificate of the tensor representation")
def faithful(
    n: int = Query(..., ge=1),
    points: Optional[int] = Query(None, ge=0),
    seed: Optional[int] = None,
    exact: bool = False,
    force: bool = False,
):
    key = f"faithful:{n}:{points}:{seed}:{exact}"
    return run_report(lambda: svc.faithful(n, points=points, seed=seed, exact=exact, force=force), key)


@router.get("/quotient", summary="Hecke and symmetric-group quotients inside the tensor space")
def quotient(n: int = Query(..., ge=1), force: bool = False):
    return run_report(lambda: svc.quotient(n, force=force), f"quotient:{n}")


@router.post("/act", summary="Apply an expression to a pure tensor")
def act(req: ActRequest):
    return run_report(lambda: svc.act(req.n, req.expr, req.tensor, force=req.force))
