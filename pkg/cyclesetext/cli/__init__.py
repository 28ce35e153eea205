from __future__ import absolute_import

from .commands import SUBCOMMANDS
from .config import COMMANDS, RunConfig, config_from_flags
from .main import execute, main, render_text, run
