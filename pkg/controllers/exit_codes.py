import enum


class ExitCode(enum.IntEnum):
    OK = 0
    FATAL = 1
    SKIPPED = 2
    VIOLATIONS = 3
