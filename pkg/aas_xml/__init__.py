from .exceptions import AasXmlError, NoEnvironmentFound, NotAnArchive, SchemaViolation, XmlSyntax
from .parser import parse_environment, parse_xml
from .aasx import extract_aasx, load_environments
from .metrics import XmlMetrics, xml_metrics
from .writer import write_environment
