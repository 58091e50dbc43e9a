from .exceptions import OntologyFetchError, ReasonerError, RuleSyntax, SaturationLimitExceeded, UnsafeRule
from .patterns import Rule, RuleSet, RuleSetName, SaturationStats, format_stats
from .builtin import builtin_ruleset
from .rules_parser import load_rules
from .engine import DEFAULT_MAX_TRIPLES, ontology_axioms, saturate
from .ontology import (
    BUNDLED_ONTOLOGY,
    abstract_classes,
    fetch_ontology,
    load_ontology,
    ontology_properties,
    rami_namespace,
    superclasses,
)
