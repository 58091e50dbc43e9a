from .commands import cmd_map, cmd_reason, cmd_stats, cmd_validate


def get_command_function(command: str):
    mapping = {
        "map": cmd_map,
        "reason": cmd_reason,
        "validate": cmd_validate,
        "stats": cmd_stats,
    }
    return mapping[command]
