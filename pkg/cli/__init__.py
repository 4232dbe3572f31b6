"""chainscope - Command-Line Package"""

from .config import RunConfig, load_config, env_overrides, ENV_PREFIX
from .render import render, render_json, render_text, to_data
from .main import build_parser, main, exit_code_for

__all__ = [
    "RunConfig", "load_config", "env_overrides", "ENV_PREFIX",
    "render", "render_json", "render_text", "to_data",
    "build_parser", "main", "exit_code_for",
]
