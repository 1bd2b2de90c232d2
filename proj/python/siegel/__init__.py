"""Hardy space checks on quadric Siegel domains."""

import json

from . import _core
from ._core import (
    ArgumentError,
    ConfigError,
    DomainError,
    PreconditionError,
    base_point,
    boundary_residual,
    catalog_keys,
    dims,
    in_omega,
    lp_norm,
    phi,
    psi,
)

__all__ = [
    "ArgumentError",
    "ConfigError",
    "DomainError",
    "PreconditionError",
    "base_point",
    "boundary_residual",
    "catalog_keys",
    "dims",
    "domain_metadata",
    "in_omega",
    "lp_norm",
    "membership",
    "phi",
    "psi",
    "run",
]


def _domain(spec):
    return spec if isinstance(spec, str) else json.dumps(spec)


def domain_metadata(key):
    return json.loads(_core.domain_metadata(key))


def membership(domain, h):
    return json.loads(_core.membership(_domain(domain), list(h)))


def run(command, config=None, fmt="csv"):
    """Runs one report; returns (name, text, violations)."""
    cfg = "" if config is None else json.dumps(config)
    if command == "verify-monotonicity":
        return _core.run_monotonicity(cfg, fmt)
    if command == "disc-check":
        return _core.run_disc_check(cfg, fmt)
    if command == "cone-report":
        return _core.run_cone_report(cfg)
    if command == "corollary-check":
        return _core.run_corollary(cfg, fmt)
    if command == "example-catalog":
        return _core.run_catalog()
    raise ValueError(f"unknown command {command!r}")
