from fractions import Fraction
from typing import Optional

from fastapi import APIRouter, HTTPException, Query

from app.routers.common import run_report
from app.services.engine_service import get_engine_service

router = APIRouter(prefix="/algebra", tags=["Algebra"])
svc = get_engine_service()


@router.get("/dim", summary="Dimension n! B_n of the algebra")
def dim(n: int = Query(..., ge=1), force: bool = False):
    return run_report(lambda: svc.dim(n, force=force))


@router.get("/basis", summary="Normal-form basis E_A T_w")
def basis(n: int = Query(..., ge=1), force: bool = False):
    return run_report(lambda: svc.basis(n, force=force), f"basis:{n}")


@router.get("/eval", summary="Normal form of an expression")
def evaluate(n: int = Query(..., ge=1), expr: str = Query(..., min_length=1), force: bool = False):
    return run_report(lambda: svc.eval(n, expr, force=force))


@router.get("/form", summary="Bilinear form <x, y> = epsilon(x* y)")
def bilinear_form(
    n: int = Query(..., ge=1),
    left: str = Query(..., min_length=1),
    right: str = Query(..., min_length=1),
    force: bool = False,
):
    return run_report(lambda: svc.form(n, left, right, force=force))


@router.get("/verify", summary="Defining relations and structural identities")
def verify(n: int = Query(..., ge=1), tensor: bool = False, seed: Optional[int] = None, force: bool = False):
    key = f"verify:{n}:{'tensor' if tensor else 'symbolic'}:{seed}"
    return run_report(lambda: svc.verify(n, tensor=tensor, seed=seed, force=force), key)


@router.get("/gram", summary="Rank of the Gram matrix of the form at u = q")
def gram(n: int = Query(..., ge=1), at: str = Query("1", description="rational p/q"), force: bool = False):
    try:
        q = Fraction(at)
    except (ValueError, ZeroDivisionError):
        raise HTTPException(status_code=400, detail=f"not a rational number: {at!r}")
    return run_report(lambda: svc.gram(n, q, force=force), f"gram:{n}:{q}")


@router.get("/moebius", summary="Coefficient of E_top against the lattice Moebius function")
def moebius(n: int = Query(..., ge=1), force: bool = False):
    return run_report(lambda: svc.moebius(n, force=force), f"moebius:{n}")
