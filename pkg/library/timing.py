import time


class Stopwatch:
    """Wall-clock timer reporting whole milliseconds."""

    def __init__(self):
        self._start = time.perf_counter()
        self._stop = None

    def __enter__(self) -> "Stopwatch":
        self._start = time.perf_counter()
        self._stop = None
        return self

    def __exit__(self, *_) -> None:
        self._stop = time.perf_counter()

    @property
    def ms(self) -> int:
        end = self._stop if self._stop is not None else time.perf_counter()
        return int(round((end - self._start) * 1000))
