# app/services/engine_service.py
"""One entry point per report, shared by the CLI, the routers and the scheduler."""
from fractions import Fraction
from functools import wraps
from math import factorial
from time import perf_counter
from typing import Any, Callable, Dict, Optional

from app.config import settings
from app.services.algebra import (
    basis_keys,
    form,
    gram_report,
    iota_injectivity,
    moebius_report,
    parse_word,
    verify_relations,
)
from app.services.algebra.identities import structural_report
from app.services.combinatorics import bell_number, enumerate_labels
from app.services.errors import GuardError, InvalidLabelError
from app.services.specht import (
    classification_report,
    diagnostics_report,
    pullback_labels,
    specht_dimension,
)
from app.services.tensor import (
    TensorVector,
    act,
    faithfulness_certificate,
    module_axiom,
    projection_law,
    quotient_checks,
    verify_tensor_relations,
)
from logging_config import logger


def _timed(name: str) -> Callable:
    def deco(fn: Callable) -> Callable:
        @wraps(fn)
        def inner(self, n: int, *args, **kwargs):
            started = perf_counter()
            try:
                result = fn(self, n, *args, **kwargs)
            except Exception:
                logger.info("%s n=%d failed after %.2fs", name, n, perf_counter() - started)
                raise
            outcome = result.get("pass", "ok") if isinstance(result, dict) else "ok"
            logger.info("%s n=%d finished in %.2fs (%s)", name, n, perf_counter() - started, outcome)
            return result

        return inner

    return deco


class EngineService:
    def _guard(self, n: int, limit: int, force: bool) -> None:
        if n < 1:
            raise GuardError("n must be at least 1")
        if n > limit and not force:
            raise GuardError(f"n={n} exceeds the limit {limit}; pass force to override")

    def _symbolic(self, n: int, force: bool) -> None:
        self._guard(n, settings.MAX_N_SYMBOLIC, force)

    def _tensor(self, n: int, force: bool) -> None:
        self._guard(n, settings.MAX_N_TENSOR, force)

    # -------------------------------
    # ALGEBRA
    # -------------------------------
    def dim(self, n: int, force: bool = False) -> Dict[str, Any]:
        self._symbolic(n, force)
        count = len(basis_keys(n))
        return {"n": n, "dim": count, "formula": factorial(n) * bell_number(n)}

    def basis(self, n: int, force: bool = False) -> Dict[str, Any]:
        self._symbolic(n, force)
        keys = basis_keys(n)
        return {"n": n, "dim": len(keys), "basis": [dict(k.to_json(), monomial=k.monomial_str()) for k in keys]}

    def eval(self, n: int, expr: str, force: bool = False) -> Dict[str, Any]:
        self._symbolic(n, force)
        x = parse_word(expr, n)
        return {"n": n, "expr": expr, "result": str(x), "terms": x.to_json()}

    def form(self, n: int, left: str, right: str, force: bool = False) -> Dict[str, Any]:
        self._symbolic(n, force)
        value = form(parse_word(left, n), parse_word(right, n))
        return {"n": n, "left": left, "right": right, "form": str(value)}

    @_timed("verify")
    def verify(self, n: int, tensor: bool = False, seed: Optional[int] = None, force: bool = False) -> Dict[str, Any]:
        seed = settings.DEFAULT_SEED if seed is None else seed
        if tensor:
            self._tensor(n, force)
            report = verify_tensor_relations(n, seed=seed)
            report["module_axiom"] = module_axiom(n, seed)
            if n <= 3:
                report["projection_law"] = projection_law(n)
            report["pass"] = report["pass"] and all(
                report[k]["pass"] for k in ("module_axiom", "projection_law") if k in report
            )
            return report
        self._symbolic(n, force)
        relations = verify_relations(n)
        structure = structural_report(n, seed, exhaustive=n <= 4)
        return {"n": n, "seed": seed, "relations": relations, "structure": structure, "pass": relations["pass"] and structure["pass"]}

    @_timed("gram")
    def gram(self, n: int, q: Any = 1, force: bool = False) -> Dict[str, Any]:
        self._symbolic(n, force)
        report = gram_report(n, Fraction(q))
        if Fraction(q) == 1:
            report["iota_injectivity"] = iota_injectivity(n)
            report["pass"] = report["pass"] and report["iota_injectivity"]["pass"]
        return report

    @_timed("moebius")
    def moebius(self, n: int, force: bool = False) -> Dict[str, Any]:
        self._symbolic(n, force)
        return moebius_report(n)

    # -------------------------------
    # TENSOR SPACE
    # -------------------------------
    @_timed("faithful")
    def faithful(self, n: int, points: Optional[int] = None, seed: Optional[int] = None, exact: bool = False, force: bool = False) -> Dict[str, Any]:
        self._tensor(n, force)
        return faithfulness_certificate(n, points=points, seed=seed, exact=exact)

    @_timed("quotient")
    def quotient(self, n: int, force: bool = False) -> Dict[str, Any]:
        self._tensor(n, force)
        return quotient_checks(n)

    def act(self, n: int, expr: str, pairs, force: bool = False) -> Dict[str, Any]:
        self._tensor(n, force)
        v = TensorVector.pure(pairs, n)
        result = act(parse_word(expr, n), v)
        return {"n": n, "expr": expr, "vector": str(v), "result": str(result), "terms": result.to_json()}

    # -------------------------------
    # SPECHT MODULES
    # -------------------------------
    def labels(self, n: int, with_dims: bool = False, force: bool = False) -> Dict[str, Any]:
        if with_dims:
            self._tensor(n, force)
            report = self.specht(n, force=force)
            return {"n": n, "labels": report["labels"], "dims": report["dims"]}
        self._symbolic(n, force)
        labels = enumerate_labels(n)
        return {"n": n, "count": len(labels), "labels": [lab.to_json() for lab in labels]}

    @_timed("specht")
    def specht(self, n: int, label: Optional[int] = None, exact: Optional[bool] = None, seed: Optional[int] = None, force: bool = False) -> Dict[str, Any]:
        self._tensor(n, force)
        if label is None:
            report = classification_report(n, exact=exact, seed=seed)
            report["pullbacks"] = pullback_labels(n)
            return report
        labels = enumerate_labels(n)
        if not 0 <= label < len(labels):
            raise InvalidLabelError(f"label index {label} out of range 0..{len(labels) - 1}")
        lab = labels[label]
        exact = n <= 3 if exact is None else exact
        result = specht_dimension(lab, exact=exact, seed=seed)
        return {"n": n, "index": label, "label": lab.to_json(), "dim": result["dim"], "mode": result["mode"]}

    @_timed("diagnostics")
    def diagnostics(self, n: int, seed: Optional[int] = None, force: bool = False) -> Dict[str, Any]:
        self._tensor(n, force)
        return diagnostics_report(n, seed)


_engine_service: Optional[EngineService] = None


def get_engine_service() -> EngineService:
    global _engine_service
    if _engine_service is None:
        _engine_service = EngineService()
    return _engine_service
