from .exceptions import RdfSyntaxError, SerializerError, UnserializableTerm
from .formats import SerializationFormat, format_for_path
from .serialize import serialize, serialized_sizes
from .parse import parse, parse_file
