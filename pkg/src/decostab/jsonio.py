"""JSON encoding/decoding for every document the library exchanges.

Rationals always travel as strings "p" or "p/q"; floats are rejected so the
exactness contract survives a round trip.  Decoders carry a JSON pointer and
report schema violations against it.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .cones import Cone, StateFan
from .errors import SchemaError
from .rep import (
    DetPow,
    DirectSum,
    Dual,
    RepExpr,
    StateSet,
    Std,
    Sym,
    Tensor,
    Trivial,
    Wedge,
)
from .stability import (
    FiltrationData,
    StabilityCondition,
    StabilityParams,
    SupportSpec,
    Verdict,
)
from .weights import WeightVector


# --- rationals ---------------------------------------------------------------

def encode_fraction(x: Fraction | int) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_fraction(doc: Any, ptr: str) -> Fraction:
    if isinstance(doc, bool):
        raise SchemaError(ptr, "expected a rational, got a boolean")
    if isinstance(doc, int):
        return Fraction(doc)
    if isinstance(doc, str):
        try:
            return Fraction(doc)
        except (ValueError, ZeroDivisionError):
            raise SchemaError(ptr, f"not a rational literal: {doc!r}") from None
    raise SchemaError(ptr, f"expected int or 'p/q' string, got {type(doc).__name__}")


def parse_int(doc: Any, ptr: str) -> int:
    if isinstance(doc, bool) or not isinstance(doc, int):
        raise SchemaError(ptr, f"expected an integer, got {doc!r}")
    return doc


def parse_bool(doc: Any, ptr: str) -> bool:
    if not isinstance(doc, bool):
        raise SchemaError(ptr, f"expected a boolean, got {doc!r}")
    return doc


def parse_list(doc: Any, ptr: str) -> list:
    if not isinstance(doc, list):
        raise SchemaError(ptr, f"expected an array, got {type(doc).__name__}")
    return doc


def _field(doc: Any, key: str, ptr: str) -> Any:
    if not isinstance(doc, dict):
        raise SchemaError(ptr, f"expected an object, got {type(doc).__name__}")
    if key not in doc:
        raise SchemaError(f"{ptr}/{key}", "missing field")
    return doc[key]


# --- representation expressions ----------------------------------------------

def encode_rep(rep: RepExpr) -> Any:
    if isinstance(rep, Std):
        return {"std": rep.r}
    if isinstance(rep, Trivial):
        return {"trivial": rep.r}
    if isinstance(rep, Dual):
        return {"dual": encode_rep(rep.inner)}
    if isinstance(rep, Tensor):
        return {"tensor": [encode_rep(rep.left), encode_rep(rep.right)]}
    if isinstance(rep, Sym):
        return {"sym": [rep.k, encode_rep(rep.inner)]}
    if isinstance(rep, Wedge):
        return {"wedge": [rep.k, encode_rep(rep.inner)]}
    if isinstance(rep, DirectSum):
        return {"dsum": [encode_rep(s) for s in rep.summands]}
    if isinstance(rep, DetPow):
        return {"det": [rep.r, rep.b]}
    raise TypeError(f"unknown representation node {rep!r}")


def parse_rep(doc: Any, ptr: str = "") -> RepExpr:
    if not isinstance(doc, dict) or len(doc) != 1:
        raise SchemaError(ptr, "expected an object with exactly one constructor key")
    key, value = next(iter(doc.items()))
    if key == "std":
        return Std(parse_int(value, f"{ptr}/std"))
    if key == "trivial":
        return Trivial(parse_int(value, f"{ptr}/trivial"))
    if key == "dual":
        return Dual(parse_rep(value, f"{ptr}/dual"))
    if key == "tensor":
        items = parse_list(value, f"{ptr}/tensor")
        if len(items) != 2:
            raise SchemaError(f"{ptr}/tensor", "expected exactly two factors")
        return Tensor(parse_rep(items[0], f"{ptr}/tensor/0"),
                      parse_rep(items[1], f"{ptr}/tensor/1"))
    if key == "sym":
        items = parse_list(value, f"{ptr}/sym")
        if len(items) != 2:
            raise SchemaError(f"{ptr}/sym", "expected [k, expr]")
        return Sym(parse_int(items[0], f"{ptr}/sym/0"),
                   parse_rep(items[1], f"{ptr}/sym/1"))
    if key == "wedge":
        items = parse_list(value, f"{ptr}/wedge")
        if len(items) != 2:
            raise SchemaError(f"{ptr}/wedge", "expected [k, expr]")
        return Wedge(parse_int(items[0], f"{ptr}/wedge/0"),
                     parse_rep(items[1], f"{ptr}/wedge/1"))
    if key == "dsum":
        items = parse_list(value, f"{ptr}/dsum")
        if not items:
            raise SchemaError(f"{ptr}/dsum", "expected at least one summand")
        return DirectSum([parse_rep(x, f"{ptr}/dsum/{i}") for i, x in enumerate(items)])
    if key == "det":
        items = parse_list(value, f"{ptr}/det")
        if len(items) != 2:
            raise SchemaError(f"{ptr}/det", "expected [rank, power]")
        return DetPow(parse_int(items[0], f"{ptr}/det/0"),
                      parse_int(items[1], f"{ptr}/det/1"))
    raise SchemaError(ptr, f"unknown constructor {key!r}")


# --- states, weights, supports -------------------------------------------------

def encode_states(states: StateSet) -> list:
    return [{"chi": list(chi), "mult": m} for chi, m in states]


def parse_weight(doc: Any, ptr: str) -> tuple[int, ...]:
    return tuple(parse_int(x, f"{ptr}/{i}") for i, x in enumerate(parse_list(doc, ptr)))


def parse_weight_list(doc: Any, ptr: str) -> list[tuple[int, ...]]:
    return [parse_weight(x, f"{ptr}/{i}") for i, x in enumerate(parse_list(doc, ptr))]


def encode_weight_vector(gamma) -> list[str]:
    return [encode_fraction(x) for x in gamma]


def parse_weight_vector(doc: Any, ptr: str) -> WeightVector:
    items = parse_list(doc, ptr)
    return WeightVector([parse_fraction(x, f"{ptr}/{i}") for i, x in enumerate(items)])


# --- cones and fans ------------------------------------------------------------

def encode_cone(cone: Cone) -> dict:
    return {
        "rays": [list(ray) for ray in cone.rays],
        "halfspaces": [list(n) for n in cone.halfspaces],
    }


def parse_cone(doc: Any, ptr: str = "") -> Cone:
    rays = parse_weight_list(_field(doc, "rays", ptr), f"{ptr}/rays")
    halfspaces = parse_weight_list(_field(doc, "halfspaces", ptr), f"{ptr}/halfspaces")
    if not rays and not halfspaces:
        raise SchemaError(ptr, "cone needs rays or halfspaces")
    r = len((halfspaces or rays)[0])
    cone = Cone(r=r, rays=tuple(sorted(rays)), halfspaces=tuple(sorted(halfspaces)))
    cone.validate()
    return cone


def _chi_key(chi) -> str:
    return ",".join(str(c) for c in chi)


def encode_fan(fan: StateFan) -> dict:
    return {
        "A": [list(chi) for chi in fan.A],
        "cells": {_chi_key(chi): encode_cone(cone) for chi, cone in fan.cells.items()},
        "K": [list(g) for g in fan.K_A],
        "critical": fan.is_critical,
    }


# --- filtration documents -------------------------------------------------------

def parse_filtration(doc: Any, ptr: str = "") -> FiltrationData:
    r = parse_int(_field(doc, "r", ptr), f"{ptr}/r")
    d = parse_int(_field(doc, "d", ptr), f"{ptr}/d")
    steps_doc = parse_list(_field(doc, "steps", ptr), f"{ptr}/steps")
    steps = []
    for i, step in enumerate(steps_doc):
        pair = parse_list(step, f"{ptr}/steps/{i}")
        if len(pair) != 2:
            raise SchemaError(f"{ptr}/steps/{i}", "expected [rank, degree]")
        steps.append((parse_int(pair[0], f"{ptr}/steps/{i}/0"),
                      parse_int(pair[1], f"{ptr}/steps/{i}/1")))
    alpha_doc = parse_list(_field(doc, "alpha", ptr), f"{ptr}/alpha")
    alpha = [parse_fraction(a, f"{ptr}/alpha/{i}") for i, a in enumerate(alpha_doc)]
    return FiltrationData(r=r, d=d, steps=steps, alpha=alpha)


def parse_support(doc: Any, ptr: str) -> SupportSpec:
    return SupportSpec(parse_weight_list(doc, ptr))


def parse_params(doc: Any, ptr: str = "") -> StabilityParams:
    delta = parse_fraction(_field(doc, "delta", ptr), f"{ptr}/delta")
    strict = parse_bool(doc.get("strict", False), f"{ptr}/strict")
    return StabilityParams(delta=delta, strict=strict)


def encode_verdict(v: Verdict) -> dict:
    return {"value": encode_fraction(v.value), "passes": v.passes, "boundary": v.boundary}


def encode_conditions(conditions: list[StabilityCondition]) -> list:
    return [
        {
            "kind": c.kind,
            "gamma": list(c.gamma),
            "ranks": list(c.ranks),
            "alpha": list(c.alpha),
        }
        for c in conditions
    ]


# --- top level -----------------------------------------------------------------

def dumps(doc: Any, canonical: bool = False) -> str:
    if canonical:
        return json.dumps(doc, sort_keys=True, separators=(",", ":"))
    return json.dumps(doc, sort_keys=True, indent=2)


def loads(text: str, ptr: str = "") -> Any:
    try:
        return json.loads(text, parse_float=_reject_float)
    except json.JSONDecodeError as exc:
        raise SchemaError(ptr, f"invalid JSON: {exc}") from None


def _reject_float(text: str):
    raise SchemaError("", f"float literal {text!r} not allowed; use 'p/q' strings")
