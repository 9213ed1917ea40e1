"""Geometry input files (TOML).

General structure::

    alpha_deg = 80
    beta_deg = 115
    zeta = 1
    A = [[-1, 2, -1], [-1, -1, 1], [2, 0, 2]]   # base anchors, rows A1..A3
    B = [[-1, 1, 0], [0, -1, 1], [1, -1, 1]]    # platform anchors, rows B1..B3
    L = [3, 4, 5]

Tricept structure (type-II; a ``[tricept1]`` table is recognised and refused)::

    [tricept2]
    r_base = 4
    r_platform = 3
    L = [6, 7, 7]
"""
import sys

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

from .errors import GeometryError
from .geometry import MechanismGeometry
from .tricept import TriceptType1Geometry, TriceptType2Geometry

GENERAL_KEYS = ("alpha_deg", "beta_deg", "zeta", "A", "B", "L")
TRICEPT_KEYS = ("r_base", "r_platform", "L")


class DocumentError(ValueError):
    pass


def _number(value, name):
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise DocumentError(f"{name} must be a number")
    return float(value)


def _vector(value, n, name):
    if not isinstance(value, list) or len(value) != n:
        raise DocumentError(f"{name} must be a list of {n} numbers")
    return [_number(v, f"{name}[{i}]") for i, v in enumerate(value)]


def parse_geometry(data):
    """Build a geometry object from a parsed document mapping."""
    tricept = [k for k in ("tricept1", "tricept2") if k in data]
    general = [k for k in GENERAL_KEYS if k in data]
    if tricept and general or len(tricept) > 1:
        raise DocumentError("give exactly one of the general keys or a tricept table")
    try:
        if tricept:
            block = data[tricept[0]]
            missing = [k for k in TRICEPT_KEYS if k not in block]
            if missing:
                raise DocumentError(f"[{tricept[0]}] is missing {', '.join(missing)}")
            cls = TriceptType2Geometry if tricept[0] == "tricept2" else TriceptType1Geometry
            return cls(_number(block["r_base"], "r_base"),
                       _number(block["r_platform"], "r_platform"),
                       tuple(_vector(block["L"], 3, "L")))
        missing = [k for k in GENERAL_KEYS if k not in data]
        if missing:
            raise DocumentError(f"missing keys: {', '.join(missing)}")
        A = [_vector(row, 3, f"A[{i}]") for i, row in enumerate(data["A"])]
        B = [_vector(row, 3, f"B[{i}]") for i, row in enumerate(data["B"])]
        if len(A) != 3 or len(B) != 3:
            raise DocumentError("A and B must each hold three points")
        return MechanismGeometry.from_degrees(
            _number(data["alpha_deg"], "alpha_deg"), _number(data["beta_deg"], "beta_deg"),
            _number(data["zeta"], "zeta"), A, B, _vector(data["L"], 3, "L"))
    except GeometryError as exc:
        raise DocumentError(str(exc)) from exc


def loads(text):
    try:
        data = tomllib.loads(text)
    except tomllib.TOMLDecodeError as exc:
        raise DocumentError(f"not a valid TOML document: {exc}") from exc
    return parse_geometry(data)


def load(path):
    with open(path, "rb") as fh:
        raw = fh.read()
    try:
        return loads(raw.decode("utf-8"))
    except UnicodeDecodeError as exc:
        raise DocumentError("geometry file must be UTF-8") from exc
