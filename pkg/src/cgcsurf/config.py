"""Flat key-value job configuration.

Grammar: one `key = value` pair per line; `#` starts a comment. Values are
parsed as JSON (numbers, strings, booleans, nested lists for complex pairs).
Complex numbers appear as `[re, im]` pairs; Q coefficients as a list of such
pairs, lowest degree first.
"""

import json
from dataclasses import dataclass, field

from .errors import ParseError, ValidationError
from .qdiff import PLANE, UNIT_DISK, QDiff


@dataclass
class JobConfig:
    K: float = -0.75
    q_coeffs: tuple = ((0.0, 0.0),)
    domain: str = UNIT_DISK
    x_min: float = -0.5
    x_max: float = 0.5
    y_min: float = -0.5
    y_max: float = 0.5
    n: int = 65
    ny: int = 0  # 0 means same as n
    lambdas: tuple = ((1.0, 0.0),)
    at_lambda0: bool = False
    bc_mode: str = "heuristic"  # umbilic-exact | heuristic | file
    bc_file: str = ""
    out_dir: str = "out"
    gauss_tol: float = 1e-10

    def qdiff(self):
        return QDiff(tuple(complex(re, im) for re, im in self.q_coeffs), self.domain)

    def lambda_values(self):
        return [complex(re, im) for re, im in self.lambdas]


_FIELD_PARSERS = {
    "K": ("K", float),
    "Q": ("q_coeffs", lambda v: tuple((float(a), float(b)) for a, b in v)),
    "domain": ("domain", str),
    "x_min": ("x_min", float),
    "x_max": ("x_max", float),
    "y_min": ("y_min", float),
    "y_max": ("y_max", float),
    "r": (None, None),  # shorthand for a centered square
    "N": ("n", int),
    "Ny": ("ny", int),
    "lambdas": ("lambdas", lambda v: tuple((float(a), float(b)) for a, b in v)),
    "at_lambda0": ("at_lambda0", bool),
    "bc_mode": ("bc_mode", str),
    "bc_file": ("bc_file", str),
    "out_dir": ("out_dir", str),
    "gauss_tol": ("gauss_tol", float),
}


def parse_config(text):
    """Parse and validate a flat key-value config; raise with key paths."""
    cfg = JobConfig()
    errors = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ParseError(f"line {lineno}: expected 'key = value', got {raw!r}")
        key, _, val = line.partition("=")
        key = key.strip()
        val = val.strip()
        if key not in _FIELD_PARSERS:
            errors.append(f"{key}: unknown key")
            continue
        try:
            parsed = json.loads(val)
        except json.JSONDecodeError as exc:
            raise ParseError(f"line {lineno}: bad value for {key}: {exc}") from exc
        if key == "r":
            # centered square inscribed in the radius-r disk (corner radius r)
            a = float(parsed) / 2.0**0.5
            cfg.x_min = cfg.y_min = -a
            cfg.x_max = cfg.y_max = a
            continue
        attr, conv = _FIELD_PARSERS[key]
        try:
            setattr(cfg, attr, conv(parsed))
        except (TypeError, ValueError) as exc:
            errors.append(f"{key}: {exc}")
    errors.extend(validate(cfg))
    if errors:
        raise ValidationError(errors[0].split(":")[0], "; ".join(errors))
    return cfg


def validate(cfg):
    errors = []
    if not (-1.0 < cfg.K < 0.0 or cfg.K > 0.0):
        errors.append("K: must lie in (-1,0) or (0,inf)")
    if cfg.n < 9:
        errors.append("N: must be >= 9")
    elif cfg.n % 2 == 0:
        errors.append("N: must be odd")
    if cfg.ny and (cfg.ny < 9 or cfg.ny % 2 == 0):
        errors.append("Ny: must be odd and >= 9")
    if cfg.domain not in (UNIT_DISK, PLANE):
        errors.append("domain: must be 'unit-disk' or 'plane'")
    if cfg.domain == UNIT_DISK:
        corner = max(
            (x**2 + y**2) ** 0.5
            for x in (cfg.x_min, cfg.x_max)
            for y in (cfg.y_min, cfg.y_max)
        )
        if corner >= 1.0:
            errors.append("r: rectangle must lie strictly inside the unit disk")
    if cfg.bc_mode not in ("umbilic-exact", "heuristic", "file"):
        errors.append("bc_mode: must be umbilic-exact, heuristic or file")
    if cfg.bc_mode == "umbilic-exact" and not (-1.0 < cfg.K < 0.0):
        errors.append("bc_mode: umbilic-exact requires -1 < K < 0")
    if cfg.bc_mode == "file" and not cfg.bc_file:
        errors.append("bc_file: required when bc_mode = file")
    if any(abs(complex(a, b)) == 0 for a, b in cfg.lambdas):
        errors.append("lambdas: spectral parameter must be nonzero")
    return errors
