from .text_utils import clean_text, camel_case
from .timing import Stopwatch
from .file_utils import read_bytes, write_bytes, write_text
