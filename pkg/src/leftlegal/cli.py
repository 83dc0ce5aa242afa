"""Command line front end.

Exit status is 0 on success, 1 on domain errors (bad words, non-associative
tables, size bounds, unreadable files) and 2 on usage errors.
"""

import argparse
import sys

from . import congruences, structure
from .errors import LeftLegalError
from .finite import (
    basic_predicates,
    format_cayley,
    is_zero_semigroup,
    read_cayley,
    rees_quotient,
    require_associative,
    satisfies_identity,
    square_ideal,
)
from .varieties import enumerate_semigroups, variety_membership
from .words import are_equivalent, circ, format_word, free_semigroup, normalize, parse_word

REPORT_IDENTITIES = (
    "aba=ab", "ab=aab", "ab=ac", "aab=aa", "abc=acb",
    "ab=ba", "aa=a", "ab=a", "aaa=aa", "ab=abb",
)


def _word(tokens):
    if len(tokens) == 1:
        return parse_word(tokens[0])
    return tuple(tokens)


def _bool(x):
    return "true" if x else "false"


def _letters(text):
    if "," in text:
        letters = [x.strip() for x in text.split(",") if x.strip()]
    else:
        letters = list(text.strip())
    if not letters:
        raise argparse.ArgumentTypeError("no letters given")
    return letters


def cmd_normalize(args, out):
    out.write(format_word(normalize(_word(args.word))) + "\n")


def cmd_mult(args, out):
    out.write(format_word(circ(parse_word(args.w1), parse_word(args.w2))) + "\n")


def cmd_equiv(args, out):
    out.write(_bool(are_equivalent(parse_word(args.w1), parse_word(args.w2))) + "\n")


def cmd_free_table(args, out):
    _, table = free_semigroup(args.letters, max_letters=args.max_letters)
    out.write(format_cayley(table))


def analyze_report(t, congruence_limit=None):
    """The plain-text report printed by ``analyze``."""
    require_associative(t)
    names = t.names
    lines = [f"order: {t.order}", "elements: " + " ".join(names), "associative: true"]
    for key, value in basic_predicates(t).items():
        lines.append(f"{key.removeprefix('is_')}: {_bool(value)}")
    for ident in REPORT_IDENTITIES:
        lines.append(f"{ident}: {_bool(satisfies_identity(t, ident))}")

    subset, _ = square_ideal(t)
    lines.append("square_ideal: {" + " ".join(names[i] for i in subset) + "}")
    lines.append(f"square_quotient_is_zero_semigroup: {_bool(is_zero_semigroup(rees_quotient(t, subset)))}")
    r = structure.square_retract_check(t)
    lines.append(
        f"square_retract: onto={_bool(r.is_onto)} fixes_ideal={_bool(r.fixes_ideal)} "
        f"homomorphism={_bool(r.is_homomorphism)} retract={_bool(r.is_retract)}"
    )

    left_legal = satisfies_identity(t, "aba=ab")
    if left_legal:
        eta = structure.eta_relation(t)
        lines.append(f"eta: {eta.relation.format(names)}")
        lines.append(f"components: {structure.semilattice_components(t).format(names)}")
    else:
        lines.append("eta: n/a (not left legal)")
        lines.append("components: n/a (not left legal)")
    for label, dual in (("tau", False), ("sigma", True)):
        rep = structure.tau_relation(t, dual=dual)
        lines.append(f"{label}: {rep.relation.format(names)} congruence={_bool(rep.is_congruence)}")

    for key, value in structure.separativity(t).items():
        lines.append(f"{key}: {_bool(value)}")
    lines.append(f"putcha: {_bool(structure.is_putcha(t))}")
    lines.append("varieties: " + " ".join(variety_membership(t)))

    limit = congruences.MAX_CONGRUENCE_ORDER if congruence_limit is None else congruence_limit
    if t.order <= limit:
        cons = congruences.enumerate_congruences(t, limit)
        lines.append(f"congruences: {len(cons)}")
        eta_c = congruences.least_semilattice_congruence(t, limit)
        lines.append(f"least_semilattice_congruence: {eta_c.format(names)}")
        lines.append(f"subdirectly_irreducible: {_bool(congruences.is_subdirectly_irreducible(t, limit))}")
    else:
        skipped = f"n/a (order {t.order} > {limit})"
        lines += [f"congruences: {skipped}", f"least_semilattice_congruence: {skipped}",
                  f"subdirectly_irreducible: {skipped}"]

    audit = structure.theorem_audit(t)
    lines.append("audit:")
    lines.extend("  " + c.line() for c in audit.clauses)
    return "\n".join(lines) + "\n"


def cmd_analyze(args, out):
    out.write(analyze_report(read_cayley(args.file), args.max_congruence_order))


def cmd_enumerate(args, out):
    tables = enumerate_semigroups(
        args.order, args.identity, left_legal=args.left_legal, up_to_iso=args.up_to_iso
    )
    out.write(f"# count: {len(tables)}\n")
    out.write("\n".join(format_cayley(t) for t in tables))


def cmd_congruences(args, out):
    t = require_associative(read_cayley(args.file))
    for c in congruences.enumerate_congruences(t, args.max_order):
        out.write(c.format(t.names) + "\n")


def build_parser():
    parser = argparse.ArgumentParser(prog="leftlegal", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True, metavar="verb")

    p = sub.add_parser("normalize", help="normal form of a word")
    p.add_argument("word", nargs="+", help="a packed word like xxyz, or one letter per argument")
    p.set_defaults(func=cmd_normalize)

    p = sub.add_parser("mult", help="product of two normal forms")
    p.add_argument("w1")
    p.add_argument("w2")
    p.set_defaults(func=cmd_mult)

    p = sub.add_parser("equiv", help="decide equality in every left legal semigroup")
    p.add_argument("w1")
    p.add_argument("w2")
    p.set_defaults(func=cmd_equiv)

    p = sub.add_parser("free-table", help="Cayley table of a free left legal semigroup")
    p.add_argument("--letters", type=_letters, required=True,
                   help="packed single-character letters (xy) or a comma-separated list")
    p.add_argument("--max-letters", type=int, default=4)
    p.set_defaults(func=cmd_free_table)

    p = sub.add_parser("analyze", help="structure report for a Cayley table file")
    p.add_argument("file")
    p.add_argument("--max-congruence-order", type=int, default=None)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("enumerate", help="census of small semigroups")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--identity", action="append", default=[], metavar="LHS=RHS")
    p.add_argument("--left-legal", action="store_true")
    p.add_argument("--up-to-iso", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("congruences", help="list all congruences of a Cayley table file")
    p.add_argument("file")
    p.add_argument("--max-order", type=int, default=None)
    p.set_defaults(func=cmd_congruences)
    return parser


def main(argv=None, out=None):
    out = sys.stdout if out is None else out
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code
    try:
        args.func(args, out)
    except BrokenPipeError:
        # reader went away, e.g. piped into head
        sys.stderr.close()
        return 1
    except (LeftLegalError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
