"""JSON input and output; all malformed input surfaces as InputError."""
from __future__ import annotations

import json
import os
from fractions import Fraction
from pathlib import Path

from .errors import InputError
from .geometry.polytope import GeometryError, RationalPolytope, from_json
from .realization import MDPInput


def read_json(path) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            obj = json.load(fh)
    except FileNotFoundError:
        raise InputError(f"no such file: {path}") from None
    except json.JSONDecodeError as e:
        raise InputError(f"malformed JSON in {path}: {e}") from None
    if not isinstance(obj, dict):
        raise InputError(f"{path}: top level must be an object")
    return obj


def dumps(obj) -> str:
    """Stable serialization; reports are built with deterministic key order."""
    return json.dumps(obj, indent=2, ensure_ascii=True) + "\n"


def write_text(text: str, path=None):
    if path is None:
        import sys
        sys.stdout.write(text)
        return
    p = Path(path)
    if p.parent and not p.parent.exists():
        p.parent.mkdir(parents=True)
    tmp = p.with_suffix(p.suffix + ".tmp")
    tmp.write_text(text, encoding="utf-8")
    os.replace(tmp, p)


def polytope_from_obj(obj) -> RationalPolytope:
    try:
        return from_json(obj)
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as e:
        if isinstance(e, GeometryError):
            raise InputError(f"invalid polytope: {e}") from None
        raise InputError(f"invalid polytope JSON: {e!r}") from None


def mdp_from_obj(obj) -> MDPInput:
    try:
        P = polytope_from_obj(obj["P_minus"])
        coeffs = []
        for c in obj["plus_coeffs"]:
            b = Fraction(c["b"])
            if b.denominator != 1:
                raise InputError("plus coefficients must be integers")
            coeffs.append((tuple(int(x) for x in c["ray"]), int(b)))
    except InputError:
        raise
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as e:
        raise InputError(f"invalid MDP JSON: {e!r}") from None
    rays = [r for r, _ in coeffs]
    if len(set(rays)) != len(rays):
        raise InputError("duplicate ray in plus_coeffs")
    return MDPInput(P, tuple(sorted(coeffs)), obj.get("name", ""))


def parse_vector(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(",") if x != "")
    except ValueError:
        raise InputError(f"not an integer vector: {text!r}") from None


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise InputError(f"not a rational number: {text!r}") from None
