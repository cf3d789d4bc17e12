# app/services/algebra/relations.py
"""Defining relations (E1)-(E9) as data, and their check through the product."""
from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Tuple

from app.services.algebra.element import AlgebraElement
from app.services.algebra.words import GeneratorWord, Letter
from app.services.exactmath import QU, CoefficientField, RatFunc
from logging_config import logger

# a side is a linear combination of words
Side = Tuple[Tuple[RatFunc, GeneratorWord], ...]


@dataclass(frozen=True)
class RelationInstance:
    name: str
    label: str
    sides: Tuple[Side, ...]


def _w(n: int, *letters: Tuple[str, int]) -> Side:
    return ((RatFunc.constant(1), GeneratorWord(n, tuple(Letter(k, i) for k, i in letters))),)


def relation_instances(n: int) -> List[RelationInstance]:
    out: List[RelationInstance] = []
    idx = range(1, n)
    far = [(i, j) for i in idx for j in idx if abs(i - j) > 1]
    near = [(i, j) for i in idx for j in idx if abs(i - j) == 1]
    for i, j in far:
        if i < j:
            out.append(RelationInstance("E1", f"T{i}T{j}=T{j}T{i}", (_w(n, ("T", i), ("T", j)), _w(n, ("T", j), ("T", i)))))
    for i in idx:
        for j in idx:
            if i < j:
                out.append(RelationInstance("E2", f"E{i}E{j}=E{j}E{i}", (_w(n, ("E", i), ("E", j)), _w(n, ("E", j), ("E", i)))))
    for i, j in far:
        out.append(RelationInstance("E3", f"E{i}T{j}=T{j}E{i}", (_w(n, ("E", i), ("T", j)), _w(n, ("T", j), ("E", i)))))
    for i in idx:
        out.append(RelationInstance("E4", f"E{i}^2=E{i}", (_w(n, ("E", i), ("E", i)), _w(n, ("E", i)))))
        out.append(RelationInstance("E5", f"E{i}T{i}=T{i}E{i}", (_w(n, ("E", i), ("T", i)), _w(n, ("T", i), ("E", i)))))
    for i, j in near:
        out.append(
            RelationInstance(
                "E6", f"T{i}T{j}T{i}=T{j}T{i}T{j}", (_w(n, ("T", i), ("T", j), ("T", i)), _w(n, ("T", j), ("T", i), ("T", j)))
            )
        )
        out.append(
            RelationInstance(
                "E7", f"E{j}T{i}T{j}=T{i}T{j}E{i}", (_w(n, ("E", j), ("T", i), ("T", j)), _w(n, ("T", i), ("T", j), ("E", i)))
            )
        )
        out.append(
            RelationInstance(
                "E8",
                f"E{i}E{j}T{j}=E{i}T{j}E{i}=T{j}E{i}E{j}",
                (
                    _w(n, ("E", i), ("E", j), ("T", j)),
                    _w(n, ("E", i), ("T", j), ("E", i)),
                    _w(n, ("T", j), ("E", i), ("E", j)),
                ),
            )
        )
    um1 = RatFunc.u() - 1
    one = RatFunc.constant(1)
    for i in idx:
        rhs: Side = (
            (one, GeneratorWord(n, ())),
            (um1, GeneratorWord(n, (Letter("E", i),))),
            (um1, GeneratorWord(n, (Letter("E", i), Letter("T", i)))),
        )
        out.append(RelationInstance("E9", f"T{i}^2=1+(u-1)E{i}(1+T{i})", (_w(n, ("T", i), ("T", i)), rhs)))
        out.append(RelationInstance("inverse", f"T{i}T{i}^-1=1", (_w(n, ("T", i), ("Tinv", i)), _w(n))))
    return out


def evaluate_side(side: Side, n: int, field: CoefficientField = QU) -> AlgebraElement:
    acc = AlgebraElement.zero(n, field)
    for c, word in side:
        acc = acc + word.evaluate(field).scale(c)
    return acc


def check_instances(
    instances: List[RelationInstance], holds: Callable[[RelationInstance], bool], context: str
) -> Dict[str, Any]:
    groups: Dict[str, Dict[str, Any]] = {}
    for inst in instances:
        g = groups.setdefault(inst.name, {"instances": 0, "failures": []})
        g["instances"] += 1
        if not holds(inst):
            g["failures"].append(inst.label)
            logger.warning("%s: relation %s fails", context, inst.label)
    for g in groups.values():
        g["pass"] = not g["failures"]
    return {"relations": groups, "pass": all(g["pass"] for g in groups.values())}


def verify_relations(n: int, field: CoefficientField = QU) -> Dict[str, Any]:
    """All instances of (E1)-(E9), plus T_i T_i^-1 = 1, evaluated through the product."""

    def holds(inst: RelationInstance) -> bool:
        values = [evaluate_side(s, n, field) for s in inst.sides]
        return all(v == values[0] for v in values[1:])

    report = check_instances(relation_instances(n), holds, f"algebra n={n}")
    report["n"] = n
    report["mode"] = "symbolic"
    return report
