"""Machine-readable output records.

Every command produces one OutputRecord.  Rationals are written as strings
("3/2", "-1"), tuples as lists, and keys in a fixed order so that identical
invocations give byte-identical JSON.  The layout is described by the JSON
Schema shipped as hodgerep/fixtures/output.schema.json; bump SCHEMA_VERSION
whenever it changes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources

from .enumerator import ClassifiedTuple
from .errors import UsageError
from .hodgecore import AlgebraFactor, HodgeDescriptor, HodgeTuple, RealityType
from .rootdata import SimpleType

SCHEMA_VERSION = "1.0"


@dataclass(frozen=True)
class OutputRecord:
    command: str
    inputs: dict
    results: list = field(default_factory=list)
    notes: list = field(default_factory=list)
    schema_version: str = SCHEMA_VERSION

    def to_dict(self) -> dict:
        return {
            "schema_version": self.schema_version,
            "command": self.command,
            "inputs": self.inputs,
            "results": self.results,
            "notes": list(self.notes),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> OutputRecord:
        data = json.loads(text)
        return cls(
            command=data["command"],
            inputs=data["inputs"],
            results=data["results"],
            notes=data["notes"],
            schema_version=data["schema_version"],
        )


def output_schema() -> dict:
    return json.loads((resources.files("hodgerep") / "fixtures" / "output.schema.json").read_text())


def fraction_text(x: Fraction) -> str:
    return str(Fraction(x))


def parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"bad rational {text!r}; expected p or p/q") from None


def factor_to_dict(f: AlgebraFactor) -> dict:
    return {"type": str(f.type), "e": list(f.e), "mu": list(f.mu)}


def factor_from_dict(data: dict) -> AlgebraFactor:
    return AlgebraFactor(SimpleType.parse(data["type"]), tuple(data["e"]), tuple(data["mu"]))


def tuple_to_dict(t: HodgeTuple) -> dict:
    return {"factors": [factor_to_dict(f) for f in t.factors], "c": fraction_text(t.c)}


def tuple_from_dict(data: dict) -> HodgeTuple:
    return HodgeTuple(tuple(factor_from_dict(f) for f in data["factors"]), parse_fraction(data["c"]))


def descriptor_to_dict(d: HodgeDescriptor) -> dict:
    return {
        "level": d.level,
        "hodge_numbers": list(d.hodge_numbers),
        "reality": d.reality.value,
        "dim_v": d.dim_v,
        "horizontal": d.horizontal,
        "contact": d.contact,
        "period_domain": d.period_domain,
        "cy_type": d.cy_type,
        "adjoint_grading": [list(g) for g in d.adjoint_grading],
        "depth": d.depth,
        "compact_dim": d.compact_dim,
        "real_form": d.real_form,
        "notes": list(d.notes),
    }


def descriptor_from_dict(data: dict) -> HodgeDescriptor:
    return HodgeDescriptor(
        level=data["level"],
        hodge_numbers=tuple(data["hodge_numbers"]),
        reality=RealityType(data["reality"]),
        dim_v=data["dim_v"],
        horizontal=data["horizontal"],
        contact=data["contact"],
        period_domain=data["period_domain"],
        cy_type=data["cy_type"],
        adjoint_grading=tuple(tuple(g) for g in data["adjoint_grading"]),
        depth=data["depth"],
        compact_dim=data["compact_dim"],
        real_form=data["real_form"],
        notes=tuple(data["notes"]),
    )


def classified_to_dict(x: ClassifiedTuple) -> dict:
    return {
        "tuple": tuple_to_dict(x.tuple),
        "text": str(x.tuple),
        "descriptor": descriptor_to_dict(x.descriptor),
        "notes": list(x.notes),
    }


def classified_from_dict(data: dict) -> ClassifiedTuple:
    return ClassifiedTuple(
        tuple_from_dict(data["tuple"]), descriptor_from_dict(data["descriptor"]), tuple(data["notes"])
    )
