# -*- coding: utf-8 -*-
# Copyright (c) 2018 Richard Hull
# See LICENSE.md for details.

"""
Command line front end::

    knotforge nodes --n1 3 --n2 5 --phi 0.01 --json
    knotforge build --n1 3 --n2 7 --n3 44 --signs @signs.txt

Exit status is 0 on success, 1 on a domain error (reported as JSON on
standard error) and 2 on a usage error.
"""

import argparse
import json
import logging
import sys

import numpy as np

import knotforge.constants as constants
from knotforge import config, emit
from knotforge.curve import FourierKnot, FourierKnot112, lissajous_knot, sample_curve, torus_knot_112
from knotforge.deformation import eps0, nodal_curve
from knotforge.diagram import extract_diagram, parse_gauss, parse_pd, reduce_kinks
from knotforge.errors import KnotforgeError
from knotforge.height import DIRECT, SCREEN, SignAssignment, kronecker_search, verify_signs
from knotforge.invariants import invariants
from knotforge.lissajous import FrequencySet, admissible_frequencies, couple_nodes, enumerate_nodes
from knotforge.pipeline import build_knot, deformed_nodes
from knotforge.relations import rational_relation_search
from knotforge.svg import render_svg
from knotforge.wronskian import certify

logger = logging.getLogger(__name__)

COMMANDS = ["nodes", "pairs", "frequencies", "deform", "wronskian", "indep",
            "height", "build", "invariants", "plot", "sample"]


def _frequency(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def _positive_float(text):
    value = float(text)
    if not value > 0:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def _psi(text):
    if text == "auto":
        return None
    return float(text)


def _add_shadow(parser, n3=False):
    parser.add_argument("--n1", type=_frequency, required=True, help="x frequency")
    parser.add_argument("--n2", type=_frequency, required=True, help="y frequency")
    parser.add_argument("--phi", type=float, default=None, help="y phase in cycles, default 1/(8 n1 n2)")
    if n3:
        parser.add_argument("--n3", type=_frequency, required=True, help="deformation frequency")
        parser.add_argument("--psi", type=_psi, default=None,
                            help="deformation phase in cycles, or 'auto' for 1/(8 n3)")


def _add_output(parser, formats=("json",)):
    parser.add_argument("-o", "--output", default=None, help="output file, default standard output")
    group = parser.add_mutually_exclusive_group()
    for fmt in formats:
        group.add_argument("--" + fmt, dest="format", action="store_const", const=fmt,
                           help="write {0}".format(fmt.upper()))
    parser.set_defaults(format=formats[0])


def _add_knot_source(parser):
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--torus", type=_frequency, nargs=2, metavar=("P", "Q"),
                       help="the torus knot T(P, Q) as a (1,1,2) Fourier knot")
    group.add_argument("--lissajous", type=float, nargs=5, metavar=("NX", "NY", "NZ", "PX", "PY"),
                       help="Lissajous knot, phases in radians")
    group.add_argument("--knot", metavar="FILE", help="knot JSON written by 'knotforge build'")


def build_parser():
    parser = argparse.ArgumentParser(prog="knotforge",
                                     description="Fourier knots of type (1,1,2) from Lissajous shadows.")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG")
    parser.add_argument("--precision", type=int, default=None,
                        help="mantissa bits for extended precision (env KNOTFORGE_PRECISION)")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    p = sub.add_parser("nodes", help="enumerate the nodes of L(n1, n2, phi)")
    _add_shadow(p)
    _add_output(p, ("json", "csv"))

    p = sub.add_parser("pairs", help="couple the nodes by the shadow symmetries")
    _add_shadow(p)
    _add_output(p)

    p = sub.add_parser("frequencies", help="admissible (n2, n3) for an odd prime n1")
    p.add_argument("--n1", type=_frequency, required=True)
    p.add_argument("--count", type=_frequency, default=3)
    _add_output(p)

    p = sub.add_parser("deform", help="node parameters of the deformed shadow")
    _add_shadow(p, n3=True)
    p.add_argument("--eps", type=_positive_float, nargs="+", default=None,
                   help="amplitudes, default half the validated radius")
    p.add_argument("--order", type=_frequency, default=None, help="series order")
    _add_output(p, ("json", "csv"))

    p = sub.add_parser("wronskian", help="certify the skewness of the nodal curve")
    _add_shadow(p, n3=True)
    p.add_argument("--order", type=_frequency, default=None)
    _add_output(p)

    p = sub.add_parser("indep", help="search integer relations among deformed node parameters")
    _add_shadow(p, n3=True)
    p.add_argument("--eps", type=_positive_float, nargs="+", default=None)
    p.add_argument("--max-coeff", type=_frequency, default=20)
    p.add_argument("--width", type=_frequency, default=2, help="most non-zero coefficients")
    p.add_argument("--tol", type=_positive_float, default=1e-9)
    _add_output(p)

    for name, text in (("height", "search a height function for given signs"),
                       ("build", "build a knot with given crossing signs")):
        p = sub.add_parser(name, help=text)
        _add_shadow(p, n3=True)
        p.add_argument("--eps", type=_positive_float, default=None)
        p.add_argument("--signs", required=True, help="'+'/'-' per node in (k,l) order, or @FILE")
        p.add_argument("--n-max", type=_frequency, default=constants.N_MAX)
        p.add_argument("--strategy", choices=[DIRECT, SCREEN], default=DIRECT)
        p.add_argument("--workers", type=_frequency, default=1)
        if name == "build":
            p.add_argument("--certify", action="store_true", help="run the Wronskian certificate first")
        _add_output(p)

    p = sub.add_parser("invariants", help="determinant, Alexander and Jones polynomials")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--pd", metavar="FILE", help="PD code file")
    group.add_argument("--gauss", metavar="FILE", help="Gauss code file")
    group.add_argument("--torus", type=_frequency, nargs=2, metavar=("P", "Q"))
    group.add_argument("--lissajous", type=float, nargs=5, metavar=("NX", "NY", "NZ", "PX", "PY"))
    group.add_argument("--knot", metavar="FILE")
    p.add_argument("--reduce", action="store_true", help="remove Reidemeister I loops first")
    _add_output(p)

    p = sub.add_parser("plot", help="SVG of the shadow with over/under gaps")
    _add_knot_source(p)
    p.add_argument("--size", type=_frequency, default=400)
    _add_output(p, ("svg",))

    p = sub.add_parser("sample", help="sample the curve as (t, x, y, z) rows")
    _add_knot_source(p)
    p.add_argument("--count", type=_frequency, default=1024)
    _add_output(p, ("csv", "json"))
    return parser


def _freq(args):
    n3 = getattr(args, "n3", None)
    psi = getattr(args, "psi", None)
    return FrequencySet(args.n1, args.n2, n3=n3, phi=args.phi, psi=psi)


def read_signs(text):
    """
    :param text: a sign string, or ``@path`` naming a file holding one.
    """
    if text.startswith("@"):
        with emit.input_descriptor(text[1:]) as fp:
            text = fp.read()
    return SignAssignment.from_string(text)


def _load_knot(args):
    if args.torus:
        return torus_knot_112(*args.torus)
    if args.lissajous:
        nx, ny, nz, px, py = args.lissajous
        return lissajous_knot(int(nx), int(ny), int(nz), px, py)
    with emit.input_descriptor(args.knot) as fp:
        data = json.load(fp)
    data = data.get("knot", data)
    if "freq" in data:
        return FourierKnot112.from_dict(data)
    return FourierKnot.from_dict(data)


def _check_sign_count(parser, args, signs, count):
    if len(signs) != count:
        parser.error("argument --signs: expected {0} signs, got {1}".format(count, len(signs)))


def cmd_nodes(parser, args):
    table = enumerate_nodes(_freq(args))
    if args.format == "csv":
        emit.write_csv(["k", "l", "type", "t", "s", "x", "y"], table.nodes, args.output)
    else:
        emit.write_json(table.to_dict(), args.output)


def cmd_pairs(parser, args):
    emit.write_json(couple_nodes(enumerate_nodes(_freq(args))).to_dict(), args.output)


def cmd_frequencies(parser, args):
    pairs = admissible_frequencies(args.n1, args.count)
    emit.write_json({"n1": args.n1, "frequencies": [{"n2": n2, "n3": n3} for n2, n3 in pairs]}, args.output)


def cmd_deform(parser, args):
    freq = _freq(args)
    radius = eps0(freq)
    eps_grid = args.eps or [0.5 * radius]
    curve = nodal_curve(freq, eps_grid, order=args.order)
    if args.format == "csv":
        rows = []
        for eps in eps_grid:
            t, s = curve.parameters(eps)
            rows.extend((entry.node.k, entry.node.l, float(eps), ti, si)
                        for entry, ti, si in zip(curve, t, s))
        emit.write_csv(["k", "l", "eps", "t", "s"], rows, args.output)
    else:
        d = curve.to_dict()
        d["eps0"] = radius
        emit.write_json(d, args.output)


def cmd_wronskian(parser, args):
    freq = _freq(args)
    report = certify(freq.n1, freq.n2, freq.n3, phi=freq.phi, psi=freq.psi, order=args.order)
    emit.write_json(report.to_dict(), args.output)


def cmd_indep(parser, args):
    freq = _freq(args)
    radius = eps0(freq)
    eps_grid = args.eps or [radius * f for f in (0.25, 0.5, 0.75)]
    curve = nodal_curve(freq, eps_grid, order=1)
    results = []
    for eps in eps_grid:
        t, _ = curve.parameters(eps)
        relation = rational_relation_search(t, args.max_coeff, tol=args.tol, width=args.width)
        results.append({"eps": eps, "relation": None if relation is None else list(relation)})
    emit.write_json({"max_coeff": args.max_coeff, "width": args.width, "results": results}, args.output)


def cmd_height(parser, args):
    freq = _freq(args)
    signs = read_signs(args.signs)
    _check_sign_count(parser, args, signs, len(enumerate_nodes(freq)))
    freq, nodes = deformed_nodes(freq, args.eps)
    solution = kronecker_search(nodes, signs, freq.n1, n_max=args.n_max, strategy=args.strategy,
                                workers=args.workers)
    result = verify_signs(freq.with_height(solution.n4, solution.tau), nodes, signs)
    emit.write_json({"solution": solution, "eps": freq.eps, "verified": result.ok,
                     "margin": result.margin}, args.output)


def cmd_build(parser, args):
    freq = _freq(args)
    signs = read_signs(args.signs)
    _check_sign_count(parser, args, signs, len(enumerate_nodes(freq)))
    knot = build_knot(freq, signs, eps=args.eps, certified=args.certify, n_max=args.n_max,
                      strategy=args.strategy, workers=args.workers)
    code = extract_diagram(knot)
    emit.write_json({"knot": knot, "n4": knot.freq.n4, "tau": knot.freq.tau, "eps": knot.freq.eps,
                     "signs": code.height_signs().to_string(), "diagram": code}, args.output)


def cmd_invariants(parser, args):
    if args.pd or args.gauss:
        with emit.input_descriptor(args.pd or args.gauss) as fp:
            text = fp.read()
        code = parse_pd(text) if args.pd else parse_gauss(text)
    else:
        code = extract_diagram(_load_knot(args))
    if args.reduce:
        code = reduce_kinks(code)
    emit.write_json(invariants(code), args.output)


def cmd_plot(parser, args):
    knot = _load_knot(args)
    emit.write_text(render_svg(knot, extract_diagram(knot), size=args.size), args.output)


def cmd_sample(parser, args):
    rows = sample_curve(_load_knot(args), args.count)
    if args.format == "json":
        emit.write_json({"samples": rows}, args.output)
    else:
        emit.write_csv(["t", "x", "y", "z"], [[float(v) for v in row] for row in rows], args.output)


def setup_logging(verbosity):
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity > 1:
        level = logging.DEBUG
    logging.basicConfig(level=level, format="%(asctime)s %(name)s %(levelname)s: %(message)s")


def dispatch(parser, args):
    """
    Run one subcommand.

    :returns: the exit status.
    """
    assert args.command in COMMANDS
    if args.precision is not None:
        if args.precision < 53:
            parser.error("argument --precision: must be at least 53")
        config.setprecision(args.precision)
    for flag in ("n1", "n2"):
        if getattr(args, flag, 2) < 2:
            parser.error("argument --{0}: must be at least 2".format(flag))
    if getattr(args, "phi", None) is not None and not np.isfinite(args.phi):
        parser.error("argument --phi: must be finite")

    handler = globals()["cmd_" + args.command]
    try:
        handler(parser, args)
    except KnotforgeError as ex:
        logger.debug("%s failed", args.command, exc_info=True)
        sys.stderr.write(emit.dumps(ex.to_dict(), indent=0).replace("\n", "") + "\n")
        return 1
    return 0


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    setup_logging(args.verbose)
    return dispatch(parser, args)


if __name__ == "__main__":
    sys.exit(main())
