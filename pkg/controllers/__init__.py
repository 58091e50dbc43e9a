from .get_all_commands import get_all_commands
from .get_handlers import get_command_function
from .exit_codes import ExitCode
from .pipeline_stats import PipelineStats
from .run_command import run_command
