# -*- coding: utf-8 -*-
# ----------------------------------------------------------------------------
# Copyright © 2026, subtuple-pvalue developers. All rights reserved.
#
# The full license is in the file LICENSE.txt, distributed with this software.
# ----------------------------------------------------------------------------
"""Turn a filtered regulation list into a tail query.

A universe of n genes has n(n - 1) possible regulations ``A -> B`` with
A != B. The source gene is the element type and each of its n - 1
possible targets is one occurrence, so the filtered edges are the drawn
positions, the known regulators are the designated types, and z counts
the regulators that appear as the source of at least one edge.

Identifiers are compared exactly; there is no case folding.
"""
import codecs
import re

from subtuple_pvalue import verbose
from subtuple_pvalue.exact_engine import ProblemInstance

_EDGE_LINE = re.compile(r'^\s*(?P<source>\S*?)\s*->\s*(?P<target>\S*)\s*$')
_ARROW = "->"


class IngestError(ValueError):
    def __init__(self, message, line_number=None, line=None, filename=None):
        where = []
        if filename is not None:
            where.append(filename)
        if line_number is not None:
            where.append("line %d" % line_number)
        if line is not None:
            message = "%s (line was %r)" % (message, line)
        if where:
            message = "%s: %s" % (", ".join(where), message)
        super(IngestError, self).__init__(message)
        self.line_number = line_number
        self.line = line
        self.filename = filename


def _content_lines(text):
    for number, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if stripped == "" or stripped.startswith("#"):
            continue
        yield number, line


def _valid_identifier(token):
    return token != "" and _ARROW not in token and not any(c.isspace() for c in token)


class EdgeList(list):
    """A list of (source, target) tuples that remembers the line each came from."""

    def __init__(self, edges=(), line_numbers=(), lines=(), filename=None):
        super(EdgeList, self).__init__(edges)
        self.line_numbers = list(line_numbers)
        self.lines = list(lines)
        self.filename = filename

    def origin(self, index):
        """Keyword args locating edge ``index`` for an ``IngestError``."""
        if index >= len(self.line_numbers):
            return dict(filename=self.filename)
        return dict(line_number=self.line_numbers[index], line=self.lines[index], filename=self.filename)


def _origin(edges, index):
    if isinstance(edges, EdgeList):
        return edges.origin(index)
    return dict()


def parse_edge_list(text, filename=None):
    """Parse ``SOURCE -> TARGET`` lines.

    Blank lines and lines starting with ``#`` are skipped. Duplicates are
    kept, in file order, so ``derive_instance`` can report them.

    Returns:
        ``EdgeList`` of (source, target) tuples

    Raises:
        IngestError: naming the line number and content of a malformed line
    """
    edges = EdgeList(filename=filename)
    for number, line in _content_lines(text):
        match = _EDGE_LINE.match(line)
        if match is None:
            raise IngestError("expected 'SOURCE -> TARGET'", number, line, filename)
        source = match.group('source')
        target = match.group('target')
        if not _valid_identifier(source):
            raise IngestError("missing or malformed source identifier", number, line, filename)
        if not _valid_identifier(target):
            raise IngestError("missing or malformed target identifier", number, line, filename)
        edges.append((source, target))
        edges.line_numbers.append(number)
        edges.lines.append(line)
    return edges


def parse_identifier_list(text, filename=None):
    """Parse one identifier per line, skipping blanks and ``#`` comments.

    Returns:
        list of identifiers in file order, duplicates kept
    """
    identifiers = []
    for number, line in _content_lines(text):
        token = line.strip()
        if not _valid_identifier(token):
            raise IngestError("expected a single identifier", number, line, filename)
        identifiers.append(token)
    return identifiers


def _read_text(filename):
    try:
        with codecs.open(filename, 'r', 'utf-8') as f:
            return f.read()
    except (IOError, OSError) as e:
        raise IngestError("could not read file: %s" % (e.strerror or str(e)), filename=filename)
    except UnicodeDecodeError as e:
        raise IngestError("file is not valid UTF-8: %s" % str(e), filename=filename)


def load_edge_list(filename):
    """Read and parse an edge-list file."""
    return parse_edge_list(_read_text(filename), filename=filename)


def load_identifier_list(filename):
    """Read and parse a regulator or universe file."""
    return parse_identifier_list(_read_text(filename), filename=filename)


def _unique(items):
    seen = set()
    result = []
    for item in items:
        if item not in seen:
            seen.add(item)
            result.append(item)
    return result


class RegulatoryNetwork(object):
    """A validated edge set, regulator set and universe.

    ``universe`` and ``edges`` keep first-seen order for display; equality
    ignores order.
    """

    def __init__(self, universe, edges, regulators, universe_inferred=False, warnings=()):
        self._universe = tuple(universe)
        self._edges = tuple(edges)
        self._regulators = tuple(regulators)
        self._universe_inferred = universe_inferred
        self._warnings = tuple(warnings)

    @property
    def universe(self):
        """All gene identifiers that could regulate (n of them)."""
        return self._universe

    @property
    def edges(self):
        """Distinct (source, target) regulations (x of them)."""
        return self._edges

    @property
    def regulators(self):
        """Distinct known regulators (y of them)."""
        return self._regulators

    @property
    def universe_inferred(self):
        """True if the universe came from the edges and regulators, not a universe file."""
        return self._universe_inferred

    @property
    def warnings(self):
        """Messages about anything dropped or merged on the way in."""
        return list(self._warnings)

    @property
    def observed_regulators(self):
        """Regulators appearing as the source of at least one edge, in regulator order."""
        sources = set(source for source, _ in self._edges)
        return tuple(r for r in self._regulators if r in sources)

    def __eq__(self, other):
        if not isinstance(other, RegulatoryNetwork):
            return NotImplemented
        return (set(self._universe) == set(other._universe) and set(self._edges) == set(other._edges) and
                set(self._regulators) == set(other._regulators))

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((frozenset(self._universe), frozenset(self._edges), frozenset(self._regulators)))

    def __repr__(self):
        return "RegulatoryNetwork(n=%d, x=%d, y=%d)" % (len(self._universe), len(self._edges), len(self._regulators))


def format_edge_list(network):
    """Serialize the network's edges back to edge-list text."""
    return "".join("%s -> %s\n" % edge for edge in network.edges)


def derive_instance(edges,
                    regulators,
                    universe=None,
                    dedupe=False,
                    allow_unknown=False,
                    drop_self_loops=False):
    """Build the network and the tail query with the observed z.

    Args:
        edges (list of (str, str)): parsed regulations
        regulators (list of str): known regulators, duplicates allowed
        universe (list of str or None): all genes; inferred from edges and regulators if None
        dedupe (bool): merge duplicate edges instead of failing
        allow_unknown (bool): drop regulators and edges outside an explicit universe instead of failing
        drop_self_loops (bool): drop ``A -> A`` instead of failing

    Returns:
        tuple of (``RegulatoryNetwork``, ``ProblemInstance``) where the
        instance's z is the observed count

    Raises:
        IngestError: for self-loops, duplicates or unknown identifiers the flags don't allow
        InvalidInstanceError: if the resulting (n, x, y, z) is not a valid instance
    """
    log = verbose._verbose_logger()
    warnings = []

    def warn(message):
        log.warning(message)
        warnings.append(message)

    kept_edges = []
    # index into ``edges`` of each kept edge, for error locations
    kept_origins = []
    seen_edges = set()
    for index, (source, target) in enumerate(edges):
        if source == target:
            if drop_self_loops:
                warn("dropped self-loop %s -> %s" % (source, target))
                continue
            raise IngestError("self-loop %s -> %s is not a possible regulation" % (source, target),
                              **_origin(edges, index))
        if (source, target) in seen_edges:
            if dedupe:
                warn("merged duplicate edge %s -> %s" % (source, target))
                continue
            raise IngestError("duplicate edge %s -> %s" % (source, target), **_origin(edges, index))
        seen_edges.add((source, target))
        kept_edges.append((source, target))
        kept_origins.append(index)

    kept_regulators = _unique(regulators)

    if universe is None:
        inferred = []
        for source, target in kept_edges:
            inferred.extend((source, target))
        inferred.extend(kept_regulators)
        universe_members = _unique(inferred)
        universe_inferred = True
        warn("universe inferred from edges and regulators (%d genes); pass a universe file to fix n" %
             len(universe_members))
    else:
        universe_members = _unique(universe)
        universe_inferred = False
        members = set(universe_members)

        checked_regulators = []
        for regulator in kept_regulators:
            if regulator in members:
                checked_regulators.append(regulator)
            elif allow_unknown:
                warn("dropped regulator %s, which is not in the universe" % regulator)
            else:
                raise IngestError("regulator %s is not in the universe" % regulator)
        kept_regulators = checked_regulators

        checked_edges = []
        for (source, target), index in zip(kept_edges, kept_origins):
            unknown = [gene for gene in (source, target) if gene not in members]
            if not unknown:
                checked_edges.append((source, target))
            elif allow_unknown:
                warn("dropped edge %s -> %s, %s not in the universe" % (source, target, ", ".join(unknown)))
            else:
                raise IngestError("edge %s -> %s uses %s, not in the universe" % (source, target, ", ".join(unknown)),
                                  **_origin(edges, index))
        kept_edges = checked_edges

    network = RegulatoryNetwork(universe_members,
                                kept_edges,
                                kept_regulators,
                                universe_inferred=universe_inferred,
                                warnings=warnings)
    n = len(network.universe)
    x = len(network.edges)
    if x > n * (n - 1):
        raise AssertionError("internal consistency error: %d distinct edges among %d genes" % (x, n))
    instance = ProblemInstance(n, x, len(network.regulators), len(network.observed_regulators))
    log.debug("derived %r from %r", instance, network)
    return (network, instance)
