"""
chainscope - Run Configuration

Precedence, lowest first: field defaults, a ``.env`` file, ``CHAINSCOPE_*``
environment variables, command-line flags. Variables mirror the flag names
(``--wordlen`` is ``CHAINSCOPE_WORDLEN``, ``--no-cache`` is
``CHAINSCOPE_NO_CACHE``).
"""

import os
from typing import Any, Dict, Optional

from dotenv import find_dotenv, load_dotenv
from pydantic import BaseModel, Field, ValidationError, field_validator

from chains.chain import ChainLimits
from database.connection import DEFAULT_CACHE_DIR
from utils.errors import InputFormatError

ENV_PREFIX = "CHAINSCOPE_"

# Variables are named after the command-line flags; the rest use field names.
ENV_NAMES = {
    "output_format": "FORMAT",
    "word_length": "WORDLEN",
}
NEGATED_ENV = {"use_cache": "NO_CACHE"}
TRUE_VALUES = {"1", "true", "yes", "on"}
FALSE_VALUES = {"0", "false", "no", "off"}

DEFAULT_DEPTH = 6


class RunConfig(BaseModel):
    depth: Optional[int] = Field(None, ge=0)
    max_level: int = Field(10, gt=0)
    point_cap: int = Field(2 ** 14, gt=0)
    enum_cap: int = Field(10 ** 7, gt=0)
    word_length: int = Field(6, gt=0)
    identity_cap: int = Field(10 ** 6, gt=0)
    state_cap: int = Field(10 ** 6, gt=0)
    word_cap: int = Field(10 ** 6, gt=0)
    lookahead: int = Field(2, ge=0)
    trailing_window: int = Field(3, gt=0)
    min_strict_levels: int = Field(3, gt=0)
    output_format: str = Field("json", pattern="^(json|text)$")
    cache_dir: str = DEFAULT_CACHE_DIR
    use_cache: bool = True

    @field_validator("cache_dir")
    @classmethod
    def _expand(cls, value: str) -> str:
        return os.path.expanduser(value)

    def to_limits(self) -> ChainLimits:
        return ChainLimits(
            point_cap=self.point_cap,
            enum_cap=self.enum_cap,
            identity_cap=self.identity_cap,
            state_cap=self.state_cap,
            word_cap=self.word_cap,
        )


def env_name(field_name: str) -> str:
    return ENV_PREFIX + NEGATED_ENV.get(field_name, ENV_NAMES.get(field_name, field_name.upper()))


def env_overrides(environ: Dict[str, str] = None) -> Dict[str, Any]:
    environ = os.environ if environ is None else environ
    out = {}
    for name in RunConfig.model_fields:
        value = environ.get(env_name(name))
        if value is None or value == "":
            continue
        if name in NEGATED_ENV:
            flag = value.strip().lower()
            if flag not in TRUE_VALUES | FALSE_VALUES:
                raise InputFormatError(f"invalid configuration: {env_name(name)}: expected a boolean, got {value!r}")
            value = flag in FALSE_VALUES
        out[name] = value
    return out


def load_config(overrides: Optional[Dict[str, Any]] = None, env_file: Optional[str] = None,
                environ: Dict[str, str] = None) -> RunConfig:
    """Build a ``RunConfig``; ``overrides`` (from flags) win over the environment.

    Raises
    ------
    InputFormatError
        A value fails validation.
    """
    if environ is None:
        load_dotenv(env_file or find_dotenv(usecwd=True), override=False)
    values = env_overrides(environ)
    values.update({k: v for k, v in (overrides or {}).items() if v is not None})
    try:
        return RunConfig(**values)
    except ValidationError as exc:
        raise InputFormatError(f"invalid configuration: {exc.errors()[0]['loc'][0]}: {exc.errors()[0]['msg']}") from None
