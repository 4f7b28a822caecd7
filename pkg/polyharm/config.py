"""Run configuration for the polyharmonic toolkit."""

from __future__ import annotations

import logging
import os
from collections.abc import Mapping
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

import voluptuous as vol

from .const import (
    CONF_FORMAT,
    CONF_P_MAX,
    CONF_SEED,
    CONF_TERM_CAP,
    CONF_TOL,
    CONF_TRIALS,
    DEFAULT_FORMAT,
    DEFAULT_P_MAX,
    DEFAULT_SEED,
    DEFAULT_TERM_CAP,
    DEFAULT_TOL,
    DEFAULT_TRIALS,
    ENV_TERM_CAP,
    MIN_TERM_CAP,
    OUTPUT_FORMATS,
)
from .errors import InvalidConfig, ParseError
from .symcalc.gaussrat import parse_fraction

_LOGGER = logging.getLogger(__name__)


def _rational(value: Any) -> Fraction:
    try:
        return parse_fraction(value)
    except ParseError as err:
        raise vol.Invalid(str(err)) from err


def _positive(value: Any) -> Any:
    if value <= 0:
        raise vol.Invalid(f"{value} must be positive")
    return value


RUN_CONFIG_SCHEMA = vol.Schema(
    {
        vol.Required(CONF_SEED, default=DEFAULT_SEED): vol.All(
            vol.Coerce(int), vol.Range(min=0, max=2**64 - 1)
        ),
        vol.Required(CONF_TOL, default=DEFAULT_TOL): vol.All(vol.Coerce(float), _positive),
        vol.Required(CONF_P_MAX, default=DEFAULT_P_MAX): vol.All(_rational, _positive),
        vol.Required(CONF_FORMAT, default=DEFAULT_FORMAT): vol.In(OUTPUT_FORMATS),
        vol.Required(CONF_TERM_CAP, default=DEFAULT_TERM_CAP): vol.All(
            vol.Coerce(int), vol.Range(min=MIN_TERM_CAP)
        ),
        vol.Required(CONF_TRIALS, default=DEFAULT_TRIALS): vol.All(
            vol.Coerce(int), vol.Range(min=1)
        ),
    }
)


@dataclass(frozen=True)
class RunConfig:
    """Validated settings shared by every command."""

    seed: int
    tol: float
    p_max: Fraction
    output_format: str
    term_cap: int
    trials: int


def load_run_config(
    options: Mapping[str, Any] | None = None, environ: Mapping[str, str] | None = None
) -> RunConfig:
    """Validate options, applying the term cap environment override."""
    data = {k: v for k, v in (options or {}).items() if v is not None}
    env = os.environ if environ is None else environ
    if ENV_TERM_CAP in env:
        data[CONF_TERM_CAP] = env[ENV_TERM_CAP]
        _LOGGER.debug(f"load_run_config: term cap from {ENV_TERM_CAP}={env[ENV_TERM_CAP]}")
    try:
        valid = RUN_CONFIG_SCHEMA(data)
    except vol.Invalid as err:
        _LOGGER.debug(f"load_run_config (ERROR): {err}")
        raise InvalidConfig(f"invalid configuration: {err}") from err
    _LOGGER.debug(f"load_run_config: {valid}")
    return RunConfig(
        seed=valid[CONF_SEED],
        tol=valid[CONF_TOL],
        p_max=valid[CONF_P_MAX],
        output_format=valid[CONF_FORMAT],
        term_cap=valid[CONF_TERM_CAP],
        trials=valid[CONF_TRIALS],
    )
