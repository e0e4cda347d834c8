#!/usr/bin/env python3
# -*- coding: utf-8 -*-

import argparse
import json
import logging
import sys

from matroids.errors import BergmanError, InvalidInputError, ResourceLimitError
from matroids.fan import FLAG_BUDGET, coarse_cells, export_complex, order_complex_fine
from matroids.io import family_to_json, lattice_to_json, matroid_from_json, weights_from_json
from matroids.lattice import FLAT_BUDGET, lattice_of_flats, mobius_hat
from matroids.matroid import ENUMERATION_BUDGET
from matroids.weights import in_bergman_fan, min_bases_greedy
from trees.equidistant import to_newick, tree_from_json, tree_to_json, tree_to_ultrametric, ultrametric_to_tree
from trees.ultrametric import delta_from_json, delta_to_json, is_ultrametric, ultrametric_witness

import suites


TITLE = "Bergman complexes of matroids and spaces of equidistant trees"

DEBUG_LOG = False

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_INPUT = 2
EXIT_RESOURCE = 3

STDIO = "-"

logger = logging.getLogger("bergman")


def parse_args(argv=None):
    p = argparse.ArgumentParser(prog="bergman", description=TITLE)
    sub = p.add_subparsers(dest="command", required=True)

    def command(name, help, formats=("json",), weights=False):
        c = sub.add_parser(name, help=help)
        c.add_argument("input", nargs="?", default=STDIO, help="input JSON file, - for stdin")
        c.add_argument("-o", "--out", default=STDIO, help="output file, - for stdout")
        c.add_argument("-f", "--format", choices=formats, default=formats[0], help="output format")
        c.add_argument("--budget", type=int, default=None, help="enumeration budget")
        c.add_argument("--debug", default=DEBUG_LOG, action="store_true", help="debug")
        if weights:
            c.add_argument("-w", "--weights", required=True, help='weight vector as a JSON array, e.g. ["0","1/2"]')
        return c

    command("flats", "lattice of flats with its covering relations", formats=("json", "dot"))
    command("fine", "fine subdivision of the Bergman complex", formats=("json", "dot"))
    command("coarse", "coarse subdivision of the Bergman complex", formats=("json", "dot"))
    command("mobius", "Moebius number of the lattice of flats")
    command("minbases", "minimum-weight bases", weights=True)
    command("member", "is the weight vector in the Bergman fan", weights=True)
    command("tree-to-dist", "ultrametric of an equidistant tree")
    command("dist-to-tree", "equidistant tree of an ultrametric", formats=("json", "newick"))
    command("check-ultrametric", "is the distance matrix an ultrametric")

    v = sub.add_parser("verify", help="run the property suites")
    v.add_argument("-s", "--suite", choices=suites.get_names(), default=suites.ALL, help="suite")
    v.add_argument("-n", "--n", type=int, default=None, help="number of leaves")
    v.add_argument("--max-n", type=int, default=None, help="largest size")
    v.add_argument("--samples", type=int, default=suites.common.DEFAULT_SAMPLES, help="random samples")
    v.add_argument("--seed", type=int, default=suites.common.DEFAULT_SEED, help="random seed")
    v.add_argument("-o", "--out", default=STDIO, help="output file, - for stdout")
    v.add_argument("--debug", default=DEBUG_LOG, action="store_true", help="debug")

    return p.parse_args(argv)


def read_json(path):
    try:
        if path == STDIO:
            return json.load(sys.stdin)
        with open(path) as f:
            return json.load(f)
    except json.JSONDecodeError as ex:
        raise InvalidInputError("{} is not valid JSON: {}".format(path, ex)) from ex
    except OSError as ex:
        raise InvalidInputError("cannot read {}: {}".format(path, ex.strerror)) from ex


def write(path, text):
    if path == STDIO:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    with open(path, "w") as f:
        f.write(text)


def dump(doc):
    return json.dumps(doc, indent=2) + "\n"


def boolean(value):
    return "true\n" if value else "false\n"


def budget(args, default):
    return args.budget if args.budget is not None else default


def read_weights(args, n):
    try:
        values = json.loads(args.weights)
    except json.JSONDecodeError as ex:
        raise InvalidInputError("--weights is not valid JSON: {}".format(ex)) from ex
    return weights_from_json(values, n)


def flats_dot(L):
    ids = {F: k for k, F in enumerate(L.flats)}
    lines = ["digraph flats {"]
    for F in L.flats:
        lines.append('  {} [label="{}"];'.format(ids[F], ",".join(str(e) for e in sorted(F))))
    for F, G in sorted((ids[F], ids[G]) for F, G in L.hasse.edges):
        lines.append("  {} -> {};".format(F, G))
    lines.append("}")
    return "\n".join(lines) + "\n"


def cmd_flats(args):
    L = lattice_of_flats(matroid_from_json(read_json(args.input)), budget(args, FLAT_BUDGET))
    return flats_dot(L) if args.format == "dot" else dump(lattice_to_json(L))


def cmd_fine(args):
    M = matroid_from_json(read_json(args.input))
    L = lattice_of_flats(M, budget(args, FLAT_BUDGET))
    return export_complex(order_complex_fine(M, L), args.format).decode()


def cmd_coarse(args):
    M = matroid_from_json(read_json(args.input))
    L = lattice_of_flats(M, budget(args, FLAT_BUDGET))
    cells = coarse_cells(M, L, budget(args, FLAG_BUDGET))
    return export_complex(order_complex_fine(M, L), args.format, cells=cells).decode()


def cmd_mobius(args):
    L = lattice_of_flats(matroid_from_json(read_json(args.input)), budget(args, FLAT_BUDGET))
    return "{}\n".format(mobius_hat(L))


def cmd_minbases(args):
    M = matroid_from_json(read_json(args.input))
    return dump(family_to_json(min_bases_greedy(M, read_weights(args, M.n), budget(args, ENUMERATION_BUDGET))))


def cmd_member(args):
    M = matroid_from_json(read_json(args.input))
    return boolean(in_bergman_fan(M, read_weights(args, M.n)))


def cmd_tree_to_dist(args):
    return dump(delta_to_json(tree_to_ultrametric(tree_from_json(read_json(args.input)))))


def cmd_dist_to_tree(args):
    T = ultrametric_to_tree(delta_from_json(read_json(args.input)))
    return to_newick(T) + "\n" if args.format == "newick" else dump(tree_to_json(T))


def cmd_check_ultrametric(args):
    delta = delta_from_json(read_json(args.input))
    if not is_ultrametric(delta):
        logger.info("witness triple %s", ultrametric_witness(delta))
        return boolean(False)
    return boolean(True)


COMMANDS = {
    "flats": cmd_flats,
    "fine": cmd_fine,
    "coarse": cmd_coarse,
    "mobius": cmd_mobius,
    "minbases": cmd_minbases,
    "member": cmd_member,
    "tree-to-dist": cmd_tree_to_dist,
    "dist-to-tree": cmd_dist_to_tree,
    "check-ultrametric": cmd_check_ultrametric,
}


def verify(args):
    params = {"n": args.n, "max_n": args.max_n, "samples": args.samples, "seed": args.seed}
    report = suites.run_suites(args.suite, params)
    write(args.out, dump(report))
    return EXIT_OK if report["passed"] else EXIT_DOMAIN


def run(argv=None):
    args = parse_args(argv)

    logging.basicConfig(
        stream=sys.stderr,
        level=logging.DEBUG if args.debug else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )

    try:
        if args.command == "verify":
            return verify(args)
        write(args.out, COMMANDS[args.command](args))
    except InvalidInputError as ex:
        print("error: {}".format(ex), file=sys.stderr)
        return EXIT_INPUT
    except ResourceLimitError as ex:
        print("error: {}".format(ex), file=sys.stderr)
        return EXIT_RESOURCE
    except BergmanError as ex:
        print("error: {}".format(ex), file=sys.stderr)
        return EXIT_DOMAIN
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(run())
