# -*- coding: utf-8 -*-
# ----------------------------------------------------------------------------
# Copyright © 2026, subtuple-pvalue developers. All rights reserved.
#
# The full license is in the file LICENSE.txt, distributed with this software.
# ----------------------------------------------------------------------------
"""The ``enrich`` command: how surprising are the regulators in a filtered edge list."""
import json
from collections import OrderedDict

from subtuple_pvalue import ingest
from subtuple_pvalue.commands import instance_args
from subtuple_pvalue.commands.console_utils import EXIT_OK, print_warning, run_guarded
from subtuple_pvalue.report import compute_report


def add_enrich_args(preset):
    """Add the input files and the ingest policy flags."""
    preset.add_argument('--edges', metavar='EDGES_FILE', required=True, help="File of 'SOURCE -> TARGET' lines")
    preset.add_argument('--regulators',
                        metavar='REGULATORS_FILE',
                        required=True,
                        help="File of known regulator identifiers, one per line")
    preset.add_argument('--universe',
                        metavar='UNIVERSE_FILE',
                        default=None,
                        help="File of all gene identifiers; inferred from the other files if omitted")
    preset.add_argument('--dedupe', action='store_true', default=False, help="Merge duplicate edges")
    preset.add_argument('--allow-unknown',
                        action='store_true',
                        default=False,
                        help="Drop regulators and edges not in the universe")
    preset.add_argument('--allow-self-loops-drop',
                        action='store_true',
                        default=False,
                        help="Drop A -> A edges")


def _derived_dict(network, inst):
    derived = OrderedDict((name, str(getattr(inst, name))) for name in ('n', 'x', 'y', 'z'))
    derived['universe_inferred'] = network.universe_inferred
    derived['observed_regulators'] = list(network.observed_regulators)
    derived['warnings'] = network.warnings
    return derived


def enrich(args):
    """Load the files, derive the instance and report its tail probability.

    Returns:
        exit code
    """
    settings = instance_args.resolve_computation_settings(args)
    edges = ingest.load_edge_list(args.edges)
    regulators = ingest.load_identifier_list(args.regulators)
    universe = None
    if args.universe is not None:
        universe = ingest.load_identifier_list(args.universe)

    (network, inst) = ingest.derive_instance(edges,
                                             regulators,
                                             universe=universe,
                                             dedupe=args.dedupe,
                                             allow_unknown=args.allow_unknown,
                                             drop_self_loops=args.allow_self_loops_drop)
    for message in network.warnings:
        print_warning(message)

    report = compute_report(inst,
                            mode=settings.mode,
                            remainder_mode=settings.remainder_mode,
                            precision=settings.precision,
                            budget=settings.budget,
                            samples=settings.samples,
                            seed=settings.seed)
    instance_args.report_diagnostics(report)

    if args.format == instance_args.FORMAT_JSON:
        print(json.dumps(OrderedDict([('derived', _derived_dict(network, inst)), ('report', report.to_json_dict())])))
    else:
        inferred = " (universe inferred)" if network.universe_inferred else ""
        print("derived: n=%d x=%d y=%d z=%d%s" % (inst.n, inst.x, inst.y, inst.z, inferred))
        if args.format == instance_args.FORMAT_RATIONAL:
            print("p = %s" % report.p_rational)
        else:
            print("p = %s" % report.p_decimal)
    return EXIT_OK


def main(args):
    """Start the enrich command and return exit status code."""
    return run_guarded(lambda: enrich(args))
