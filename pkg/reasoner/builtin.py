from rdflib.namespace import OWL, RDF, RDFS
from rdflib.term import Variable

from rdfcore import TriplePattern
from .patterns import Rule, RuleSet, RuleSetName

_a, _b, _c, _d, _e = (Variable(n) for n in "abcde")
_x, _s, _p, _o = Variable("x"), Variable("s"), Variable("p"), Variable("o")

SUB_CLASS_OF_RULES = (
    Rule(
        premises=(TriplePattern(_c, RDFS.subClassOf, _d), TriplePattern(_x, RDF.type, _c)),
        conclusions=(TriplePattern(_x, RDF.type, _d),),
        name="rdfs9",
    ),
    Rule(
        premises=(TriplePattern(_c, RDFS.subClassOf, _d), TriplePattern(_d, RDFS.subClassOf, _e)),
        conclusions=(TriplePattern(_c, RDFS.subClassOf, _e),),
        name="rdfs11",
    ),
)

# replaceability is split into subject and object propagation; the
# predicate position is never rewritten
SAME_AS_RULES = (
    Rule(
        premises=(TriplePattern(_a, OWL.sameAs, _b),),
        conclusions=(TriplePattern(_b, OWL.sameAs, _a),),
        name="sameas-symmetry",
    ),
    Rule(
        premises=(TriplePattern(_a, OWL.sameAs, _b), TriplePattern(_b, OWL.sameAs, _c)),
        conclusions=(TriplePattern(_a, OWL.sameAs, _c),),
        name="sameas-transitivity",
    ),
    Rule(
        premises=(TriplePattern(_a, OWL.sameAs, _b), TriplePattern(_a, _p, _o)),
        conclusions=(TriplePattern(_b, _p, _o),),
        name="sameas-replace-subject",
    ),
    Rule(
        premises=(TriplePattern(_a, OWL.sameAs, _b), TriplePattern(_s, _p, _a)),
        conclusions=(TriplePattern(_s, _p, _b),),
        name="sameas-replace-object",
    ),
)


def builtin_ruleset(name: RuleSetName | str) -> RuleSet:
    """Return one of the built-in rule sets (``sameas``, ``subclass`` or ``both``)."""
    name = RuleSetName(name)
    if name is RuleSetName.SAME_AS:
        return RuleSet(name, SAME_AS_RULES)
    if name is RuleSetName.SUB_CLASS_OF:
        return RuleSet(name, SUB_CLASS_OF_RULES)
    if name is RuleSetName.BOTH:
        return RuleSet(name, SAME_AS_RULES + SUB_CLASS_OF_RULES)
    raise ValueError("Custom rule sets are loaded from a rule file, see load_rules")
