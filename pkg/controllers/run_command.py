import argparse
import logging
import sys

from pydantic import ValidationError

from rdfcore import SaasError
from settings import Settings, get_settings
from .exit_codes import ExitCode
from .get_handlers import get_command_function

logger = logging.getLogger(__name__)


def run_command(command: str, args: argparse.Namespace, settings: Settings | None = None) -> int:
    """
    Run one subcommand and map its outcome to an exit code.

    Args:
        command (str): Subcommand name ('map', 'reason', 'validate' or 'stats').
        args (argparse.Namespace): Parsed command-line arguments.
        settings (Settings): Environment settings; read from SAAS_* variables if omitted.

    Returns:
        int: 0 clean, 2 mapped with skips, 3 validation violations, 1 fatal.
    """
    handler = get_command_function(command)
    try:
        settings = settings or get_settings()
        return int(handler(args, settings))
    except (SaasError, OSError, ValidationError, ValueError) as exc:
        logger.debug("%s failed", command, exc_info=True)
        print(f"saas {command}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return int(ExitCode.FATAL)
