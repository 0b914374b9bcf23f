"""Bound reports: a computed quantity checked against a theoretical bound.

Every number is an exact :class:`~fractions.Fraction`, serialised as
``{"num": int, "den": int}``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

PASS, FAIL, SKIPPED = "PASS", "FAIL", "SKIPPED"
RELATIONS = (">=", "<=", "=")


def holds(computed: Fraction, relation: str, bound: Fraction) -> bool:
    if relation == ">=":
        return computed >= bound
    if relation == "<=":
        return computed <= bound
    if relation == "=":
        return computed == bound
    raise ValueError(f"unknown relation {relation!r}")


def slack(computed: Fraction, relation: str, bound: Fraction) -> Fraction:
    """Margin by which the relation holds; negative when it fails."""
    if relation == ">=":
        return computed - bound
    if relation == "<=":
        return bound - computed
    return -abs(computed - bound)


@dataclass(frozen=True)
class BoundReport:
    quantity: str
    computed: Fraction | None
    bound: Fraction | None
    relation: str
    verdict: str
    witness: tuple[int, ...] | None = None
    timing_ms: Fraction = Fraction(0)
    tight: bool = False
    check: str = ""
    note: str = ""

    @classmethod
    def judge(cls, quantity, computed, relation, bound, **kw) -> "BoundReport":
        computed, bound = Fraction(computed), Fraction(bound)
        verdict = PASS if holds(computed, relation, bound) else FAIL
        return cls(quantity, computed, bound, relation, verdict,
                   tight=computed == bound, **kw)

    @classmethod
    def skipped(cls, quantity, relation, note, **kw) -> "BoundReport":
        return cls(quantity, None, None, relation, SKIPPED, note=note, **kw)

    @property
    def slack(self) -> Fraction | None:
        if self.computed is None or self.bound is None:
            return None
        return slack(self.computed, self.relation, self.bound)

    def to_dict(self) -> dict:
        return {
            "check": self.check,
            "quantity": self.quantity,
            "computed": _rat(self.computed),
            "bound": _rat(self.bound),
            "relation": self.relation,
            "verdict": self.verdict,
            "tight": self.tight,
            "witness": None if self.witness is None else list(self.witness),
            "timing_ms": _rat(self.timing_ms),
            "note": self.note,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "BoundReport":
        return cls(
            quantity=d["quantity"],
            computed=_unrat(d["computed"]),
            bound=_unrat(d["bound"]),
            relation=d["relation"],
            verdict=d["verdict"],
            witness=None if d.get("witness") is None else tuple(d["witness"]),
            timing_ms=_unrat(d.get("timing_ms")) or Fraction(0),
            tight=bool(d.get("tight", False)),
            check=d.get("check", ""),
            note=d.get("note", ""),
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False, sort_keys=True)

    @classmethod
    def from_json(cls, line: str) -> "BoundReport":
        return cls.from_dict(json.loads(line))


def _rat(x: Fraction | None):
    if x is None:
        return None
    x = Fraction(x)
    return {"num": x.numerator, "den": x.denominator}


def _unrat(d):
    if d is None:
        return None
    return Fraction(int(d["num"]), int(d["den"]))


def fmt(x: Fraction | None) -> str:
    if x is None:
        return "-"
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
