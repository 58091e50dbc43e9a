import argparse
import logging
import sys

from controllers import get_all_commands, run_command
from reasoner import RuleSetName
from serializers import SerializationFormat
from settings import get_settings

FORMAT_FLAGS = [fmt.flag for fmt in SerializationFormat]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="saas", description="Map, reason over and validate AAS data as RDF")
    parser.add_argument(
        "--log-level",
        default=None,
        help="Logging level (default: SAAS_LOG_LEVEL or WARNING)"
    )

    helps = dict(get_all_commands())
    sub = parser.add_subparsers(dest="command", required=True)

    # map
    p = sub.add_parser("map", help=helps["map"])
    p.add_argument("input", help="AAS XML (.xml) or AASX (.aasx) file")
    p.add_argument("--format", action="append", choices=FORMAT_FLAGS, help="Output format; repeat for several (default: ttl)")
    p.add_argument("--policy", default=None, help="'strict' or 'mint:<base IRI>' (default: SAAS_POLICY or strict)")
    p.add_argument("--out", default=None, help="Output directory (default: next to the input)")

    # reason
    p = sub.add_parser("reason", help=helps["reason"])
    p.add_argument("input", help="Graph in N-Triples, N-Quads or Turtle")
    p.add_argument("--rules", choices=[n.value for n in RuleSetName if n is not RuleSetName.CUSTOM], default="both")
    p.add_argument("--rules-file", default=None, help="Custom rule file; overrides --rules")
    source = p.add_mutually_exclusive_group()
    source.add_argument("--ontology", default=None, help="Ontology file (default: SAAS_ONTOLOGY or bundled)")
    source.add_argument("--ontology-url", default=None, help="Fetch the ontology from this IRI")
    p.add_argument("--out", default=None, help="Write the saturated graph here (.nt/.nq: N-Triples, else Turtle)")
    p.add_argument("--max-triples", type=int, default=None, help="Abort above this many triples")

    # validate
    p = sub.add_parser("validate", help=helps["validate"])
    p.add_argument("data", nargs="?", default=None, help="Graph in N-Triples, N-Quads or Turtle")
    p.add_argument("--shapes", default=None, help="Directory of shape files (default: SAAS_SHAPES or bundled)")
    p.add_argument("--class", dest="target_class", default=None, help="Validate only this class (IRI or rami:Name)")
    p.add_argument("--contract", action="store_true", help="Print the interface contract of --class instead")

    # stats
    p = sub.add_parser("stats", help=helps["stats"])
    p.add_argument("input", help="AAS XML (.xml) or AASX (.aasx) file")
    p.add_argument("--formats", nargs="+", choices=FORMAT_FLAGS, default=None, help="Formats to measure (default: all)")
    p.add_argument("--policy", default=None, help="'strict' or 'mint:<base IRI>'")

    return parser


def main(argv: list[str] | None = None) -> int:
    """
    Parse command-line arguments and run the requested subcommand.

    Usage:
      python main.py [--log-level LEVEL] {map,reason,validate,stats} ...
    """
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.command == "validate" and not args.contract and args.data is None:
        parser.error("validate needs a data file unless --contract is given")

    level = args.log_level or get_settings().log_level
    logging.basicConfig(
        level=level.upper(),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )

    return run_command(args.command, args)


if __name__ == "__main__":
    sys.exit(main())
