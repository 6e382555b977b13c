# -*- coding: utf-8 -*-
# ----------------------------------------------------------------------------
# Copyright © 2026, subtuple-pvalue developers. All rights reserved.
#
# The full license is in the file LICENSE.txt, distributed with this software.
# ----------------------------------------------------------------------------
import json
import os

from subtuple_pvalue.commands.main import _parse_args_and_run_subcommand
from subtuple_pvalue.internal.test.tmpfile_utils import with_directory_contents


def _run_in(capsys, dirname, *args):
    argv = ['subtuple-pvalue', 'enrich', '--edges', os.path.join(dirname, 'edges.txt'), '--regulators',
            os.path.join(dirname, 'regulators.txt')]
    if os.path.exists(os.path.join(dirname, 'universe.txt')):
        argv.extend(['--universe', os.path.join(dirname, 'universe.txt')])
    code = _parse_args_and_run_subcommand(argv + list(args))
    out, err = capsys.readouterr()
    return (code, out, err)


def test_enrich_example_network(capsys):
    def check(dirname):
        (code, out, err) = _run_in(capsys, dirname)
        assert 0 == code
        assert "" == err
        parsed = json.loads(out)
        assert ["derived", "report"] == list(parsed.keys())
        derived = parsed['derived']
        assert dict(n="4", x="3", y="2", z="1") == dict((k, derived[k]) for k in ('n', 'x', 'y', 'z'))
        assert derived['universe_inferred'] is False
        assert ["A"] == derived['observed_regulators']
        assert [] == derived['warnings']
        assert "10/11" == parsed['report']['p_rational']
        assert "200" == parsed['report']['favorable_count']
        assert "220" == parsed['report']['total_count']

    with_directory_contents(
        {
            'edges.txt': "# filtered\nA -> B\nA -> C\nB -> C\n",
            'regulators.txt': "A\nD\n",
            'universe.txt': "A\nB\nC\nD\n"
        }, check)


def test_enrich_text_output(capsys):
    def check(dirname):
        (code, out, err) = _run_in(capsys, dirname, '--format', 'rational')
        assert 0 == code
        assert "derived: n=4 x=3 y=2 z=1\np = 10/11\n" == out

        (code, out, err) = _run_in(capsys, dirname, '--format', 'decimal', '--precision', '3')
        assert 0 == code
        assert "derived: n=4 x=3 y=2 z=1\np = 0.909\n" == out

    with_directory_contents(
        {
            'edges.txt': "A -> B\nA -> C\nB -> C\n",
            'regulators.txt': "A\nD\n",
            'universe.txt': "A\nB\nC\nD\n"
        }, check)


def test_enrich_empty_edges_is_certain(capsys):
    def check(dirname):
        (code, out, err) = _run_in(capsys, dirname, '--format', 'rational')
        assert 0 == code
        assert "derived: n=2 x=0 y=1 z=0\np = 1/1\n" == out

    with_directory_contents({'edges.txt': "", 'regulators.txt': "A\n", 'universe.txt': "A\nB\n"}, check)


def test_enrich_inferred_universe_is_noted(capsys):
    def check(dirname):
        (code, out, err) = _run_in(capsys, dirname, '--format', 'rational')
        assert 0 == code
        assert "derived: n=3 x=2 y=1 z=1 (universe inferred)\n" == out.splitlines(True)[0]
        assert err.startswith("Warning: universe inferred from edges and regulators (3 genes)")

    with_directory_contents({'edges.txt': "A -> B\nB -> C\n", 'regulators.txt': "A\n"}, check)


def test_enrich_self_loop_is_rejected(capsys):
    def check(dirname):
        (code, out, err) = _run_in(capsys, dirname)
        assert 2 == code
        assert "" == out
        assert err.startswith("Error: " + os.path.join(dirname, 'edges.txt') +
                              ", line 1: self-loop A -> A is not a possible regulation (line was 'A -> A')")

        (code, out, err) = _run_in(capsys, dirname, '--allow-self-loops-drop', '--format', 'rational')
        assert 0 == code
        assert "Warning: dropped self-loop A -> A\n" == err
        assert out.startswith("derived: n=2 x=1 y=1 z=1\n")

    contents = {'edges.txt': "A -> A\nA -> B\n", 'regulators.txt': "A\n", 'universe.txt': "A\nB\n"}
    with_directory_contents(contents, check)


def test_enrich_malformed_line_is_reported(capsys):
    def check(dirname):
        (code, out, err) = _run_in(capsys, dirname)
        assert 2 == code
        assert "" == out
        edges = os.path.join(dirname, 'edges.txt')
        assert err.startswith("Error: " + edges + ", line 2: expected 'SOURCE -> TARGET'")

    contents = {'edges.txt': "A -> B\nA B\n", 'regulators.txt': "A\n", 'universe.txt': "A\nB\n"}
    with_directory_contents(contents, check)


def test_enrich_dedupe_and_unknown(capsys):
    def check(dirname):
        (code, out, err) = _run_in(capsys, dirname)
        assert 2 == code
        assert "duplicate edge A -> B" in err

        (code, out, err) = _run_in(capsys, dirname, '--dedupe')
        assert 2 == code
        assert "regulator Z is not in the universe" in err

        (code, out, err) = _run_in(capsys, dirname, '--dedupe', '--allow-unknown', '--format', 'rational')
        assert 0 == code
        assert out.startswith("derived: n=3 x=1 y=1 z=1\n")
        assert ("Warning: merged duplicate edge A -> B\n"
                "Warning: dropped regulator Z, which is not in the universe\n") == err

    with_directory_contents(
        {
            'edges.txt': "A -> B\nA -> B\n",
            'regulators.txt': "A\nZ\n",
            'universe.txt': "A\nB\nC\n"
        }, check)


def test_enrich_missing_file(capsys):
    code = _parse_args_and_run_subcommand(['subtuple-pvalue', 'enrich', '--edges', 'no/such/edges.txt',
                                           '--regulators', 'no/such/regulators.txt'])
    out, err = capsys.readouterr()
    assert 2 == code
    assert err.startswith("Error: no/such/edges.txt: could not read file")
