"""The shipped fixture library and path resolution for fixture files."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from .errors import InputError
from .geometry.polytope import RationalPolytope
from .io import mdp_from_obj, polytope_from_obj, read_json
from .realization import MDPInput

FIXTURE_DIR = Path(__file__).parent / "fixtures"
GOLDEN_DIR = FIXTURE_DIR / "golden"

# library order; reports over the whole library follow it
FIXTURE_NAMES = (
    "segment", "square", "simplex3", "simplex3_112", "truncated_simplex3",
    "pyramid", "cube", "p2_identity", "segment_identity", "flop",
)
POLYTOPE_FIXTURES = FIXTURE_NAMES[:7]
MDP_FIXTURES = FIXTURE_NAMES[7:]


@dataclass(frozen=True)
class Fixture:
    name: str
    kind: str                                 # polytope | mdp
    polytope: RationalPolytope | None = None
    v: tuple[int, ...] | None = None
    mdp: MDPInput | None = None
    prune: tuple[tuple[Fraction, Fraction], ...] = ()
    alphas: tuple[tuple[int, int], ...] = ()
    expect: dict = field(default_factory=dict, compare=False)
    role: str = ""
    description: str = ""


def resolve(path) -> Path:
    """A path relative to the working directory, else a shipped fixture by basename."""
    p = Path(path)
    if p.exists():
        return p
    name = p.name if p.suffix == ".json" else p.name + ".json"
    q = FIXTURE_DIR / name
    if q.exists():
        return q
    raise InputError(f"no such file or fixture: {path}")


def fixture_from_obj(obj, default_name: str = "") -> Fixture:
    name = obj.get("name", default_name)
    if "mdp" in obj or "P_minus" in obj:
        mdp = mdp_from_obj(obj.get("mdp", obj))
        alphas = tuple(tuple(int(x) for x in a) for a in obj.get("alpha", [[1, 1]]))
        return Fixture(name, "mdp", mdp=MDPInput(mdp.p_minus, mdp.plus_coeffs, name),
                       alphas=alphas, expect=obj.get("expect", {}), role=obj.get("role", ""),
                       description=obj.get("description", ""))
    P = polytope_from_obj(obj.get("polytope", obj))
    v = obj.get("v")
    try:
        v = tuple(int(x) for x in v) if v is not None else None
        prune = tuple((Fraction(p["rho_minus"]), Fraction(p["rho_plus"]))
                      for p in obj.get("prune", []))
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as e:
        raise InputError(f"invalid fixture: {e!r}") from None
    return Fixture(name, "polytope", polytope=P, v=v, prune=prune,
                   expect=obj.get("expect", {}), role=obj.get("role", ""),
                   description=obj.get("description", ""))


def load(path) -> Fixture:
    p = resolve(path)
    return fixture_from_obj(read_json(p), p.stem)


def library() -> list[Fixture]:
    return [load(FIXTURE_DIR / f"{n}.json") for n in FIXTURE_NAMES]


def golden_path(name: str) -> Path:
    return GOLDEN_DIR / f"{name}.json"
