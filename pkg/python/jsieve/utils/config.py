"""Run configuration loading.

Precedence, highest first: explicit overrides (command-line flags),
``JSIEVE_*`` environment variables, a dotenv-format config file, model
defaults. A ``.env`` in the working directory is loaded into the environment
without overriding variables that are already set.
"""

import logging
import os
from pathlib import Path
from typing import Any, Dict, Mapping, Optional, Union

from dotenv import dotenv_values, find_dotenv, load_dotenv
from jsieve.exceptions import InputError
from jsieve.models.config import RunConfig
from pydantic import ValidationError

logger = logging.getLogger(__name__)

ENV_PREFIX = "JSIEVE_"


def _prefixed(values: Mapping[str, Optional[str]]) -> Dict[str, str]:
    """Lower-cased ``RunConfig`` field names from ``JSIEVE_*`` keys."""
    fields = set(RunConfig.model_fields)
    found = {}
    for key, value in values.items():
        if not key.upper().startswith(ENV_PREFIX) or value is None:
            continue
        name = key[len(ENV_PREFIX) :].lower()
        if name in fields:
            found[name] = value
        else:
            logger.debug(f"Ignoring unknown setting {key}")
    return found


def load_run_config(
    config_file: Optional[Union[str, Path]] = None,
    overrides: Optional[Mapping[str, Any]] = None,
    environ: Optional[Mapping[str, str]] = None,
    use_dotenv: bool = True,
) -> RunConfig:
    """Build a ``RunConfig`` from every configuration source.

    Args:
        config_file: Optional dotenv-format file with ``JSIEVE_*`` keys.
        overrides: Values from command-line flags; ``None`` entries are skipped.
        environ: Environment to read; defaults to ``os.environ``.
        use_dotenv: Load ``.env`` from the working directory first.

    Returns:
        The validated configuration.

    Raises:
        InputError: A value fails validation or the config file is missing.
    """
    if use_dotenv and environ is None:
        load_dotenv(find_dotenv(usecwd=True), override=False)
    merged: Dict[str, Any] = {}
    if config_file is not None:
        path = Path(config_file)
        if not path.is_file():
            raise InputError("Config file not found", str(path))
        merged.update(_prefixed(dotenv_values(path)))
    merged.update(_prefixed(os.environ if environ is None else environ))
    merged.update({k: v for k, v in (overrides or {}).items() if v is not None})
    try:
        config = RunConfig.model_validate(merged)
    except ValidationError as e:
        raise InputError("Invalid configuration", str(e)) from None
    logger.debug(f"Run configuration: {config.model_dump()}")
    return config
