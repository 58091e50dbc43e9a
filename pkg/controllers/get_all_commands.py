def get_all_commands():
    # Returns all valid (command, help) pairs, in pipeline order
    return [
        ("map", "Map an AAS XML or AASX file into SAAS RDF"),
        ("reason", "Saturate an RDF graph with sameAs / subClassOf rules"),
        ("validate", "Validate an RDF graph against SHACL shapes"),
        ("stats", "Print XML, triple and serialization size metrics for an AAS file"),
    ]
