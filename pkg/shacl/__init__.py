from .exceptions import MalformedShape, ShaclError, UnknownShapeTarget
from .model import NodeKind, PropertyConstraint, Severity, Shape, ShapeSet, ValidationReport, ValidationResult
from .loader import load_shapes, load_shapes_dir
from .validator import validate, validate_single_class
from .contract import shape_as_interface_contract
