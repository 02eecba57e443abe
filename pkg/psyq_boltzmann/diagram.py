"""
Oriented singular-link and pseudoknot diagrams as crossing codes.

A crossing line ``<kind> a b c d`` names four semiarcs. For ``X+`` and ``S``
the right-hand pair is the image of the left-hand pair, (c, d) = S(a, b) or
S'(a, b); for ``X-`` the relation runs the other way, (a, b) = S(c, d).
Strands continue a → d and c → b through ``X+``/``S`` and b → c and d → a
through ``X-``.
"""

import enum
import logging
from collections import Counter
from dataclasses import dataclass

from .exceptions import IncidenceError, ParseError

logger = logging.getLogger(__name__)


class CrossingKind(enum.Enum):
    POSITIVE = "X+"
    NEGATIVE = "X-"
    SINGULAR = "S"

    @property
    def is_classical(self):
        return self is not CrossingKind.SINGULAR


@dataclass(frozen=True)
class Crossing:
    kind: CrossingKind
    in_first: int
    in_second: int
    out_first: int
    out_second: int

    @property
    def slots(self):
        return self.in_first, self.in_second, self.out_first, self.out_second

    def incoming(self):
        """The two semiarcs that run into this crossing along their orientation."""
        a, b, c, d = self.slots
        return (b, d) if self.kind is CrossingKind.NEGATIVE else (a, c)

    def outgoing(self):
        a, b, c, d = self.slots
        return (c, a) if self.kind is CrossingKind.NEGATIVE else (d, b)

    def weight_arguments(self):
        """The (x, y) pair the crossing's φ or ψ contribution is evaluated at."""
        if self.kind is CrossingKind.NEGATIVE:
            return self.out_first, self.out_second
        return self.in_first, self.in_second

    def weight_sign(self):
        return -1 if self.kind is CrossingKind.NEGATIVE else 1

    def to_line(self):
        return f"{self.kind.value} {self.in_first} {self.in_second} {self.out_first} {self.out_second}"


@dataclass(frozen=True)
class CrossingRelation:
    """target = left <op> right, with ``op`` one of the four table names."""

    target: int
    op: str
    left: int
    right: int


@dataclass(frozen=True)
class DiagramCode:
    semiarc_count: int
    crossings: tuple = ()
    loops: tuple = ()
    name: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "crossings", tuple(self.crossings))
        object.__setattr__(self, "loops", tuple(self.loops))
        _check_incidence(self)

    @property
    def crossing_count(self):
        return len(self.crossings)

    def kind_counts(self):
        counts = Counter(c.kind for c in self.crossings)
        return {kind: counts.get(kind, 0) for kind in CrossingKind}

    def successors(self):
        """semiarc → the semiarc that follows it along its strand."""
        following = {}
        for crossing in self.crossings:
            for entering, leaving in zip(crossing.incoming(), crossing.outgoing(), strict=True):
                following[entering] = leaving
        for loop in self.loops:
            following[loop] = loop
        return following

    @property
    def components(self):
        """Link components as tuples of semiarcs in strand order, each starting at its smallest id."""
        following = self.successors()
        seen = set()
        found = []
        for start in range(self.semiarc_count):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            current = following[start]
            while current != start:
                cycle.append(current)
                seen.add(current)
                current = following[current]
            found.append(tuple(cycle))
        return tuple(found)

def _check_incidence(d):
    if d.semiarc_count < 1:
        raise IncidenceError("a diagram needs at least one semiarc")
    incoming = Counter()
    outgoing = Counter()
    for crossing in d.crossings:
        for semiarc in crossing.slots:
            if not 0 <= semiarc < d.semiarc_count:
                raise IncidenceError(f"semiarc {semiarc} is outside 0..{d.semiarc_count - 1}")
        incoming.update(crossing.incoming())
        outgoing.update(crossing.outgoing())
    loops = set(d.loops)
    if len(loops) != len(d.loops):
        raise IncidenceError("a loop is declared twice")
    for loop in loops:
        if not 0 <= loop < d.semiarc_count:
            raise IncidenceError(f"loop {loop} is outside 0..{d.semiarc_count - 1}")
    for semiarc in range(d.semiarc_count):
        uses = incoming[semiarc] + outgoing[semiarc]
        if semiarc in loops:
            if uses:
                raise IncidenceError(f"semiarc {semiarc} is declared as a loop but touches a crossing")
            continue
        if uses != 2:
            raise IncidenceError(f"semiarc {semiarc} is used {uses} times, expected 2")
        if incoming[semiarc] != 1:
            raise IncidenceError(f"semiarc {semiarc} enters {incoming[semiarc]} crossings, expected 1")


def parse_diagram(text, name=None):
    """
    Parse a diagram code.

    Lines are ``arcs <m>``, ``loop <id>`` or ``<kind> a b c d`` with kind one
    of ``X+``, ``X-``, ``S``. Without ``arcs`` the count is one more than the
    largest id used.
    """
    declared = None
    crossings = []
    loops = []
    kinds = {kind.value: kind for kind in CrossingKind}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, *rest = line.split()
        try:
            values = [int(token) for token in rest]
        except ValueError:
            raise ParseError(f"non-integer semiarc in {line!r}", lineno)
        if head == "arcs":
            if declared is not None or len(values) != 1:
                raise ParseError("expected a single 'arcs <m>' line", lineno)
            declared = values[0]
        elif head == "loop":
            if len(values) != 1:
                raise ParseError("expected 'loop <id>'", lineno)
            loops.append(values[0])
        elif head in kinds:
            if len(values) != 4:
                raise ParseError(f"a crossing needs 4 semiarcs, found {len(values)}", lineno)
            crossings.append(Crossing(kinds[head], *values))
        else:
            raise ParseError(f"unknown line kind {head!r}", lineno)

    used = [s for crossing in crossings for s in crossing.slots] + loops
    if declared is None:
        if not used:
            raise ParseError("empty diagram code")
        declared = max(used) + 1
    d = DiagramCode(declared, crossings, loops, name)
    logger.debug("parsed diagram %s: %s crossings, %s components", name, d.crossing_count, len(d.components))
    return d


def serialize_diagram(d):
    lines = []
    if d.name:
        lines.append(f"# {d.name}")
    lines.append(f"arcs {d.semiarc_count}")
    lines.extend(f"loop {loop}" for loop in d.loops)
    lines.extend(crossing.to_line() for crossing in d.crossings)
    return "\n".join(lines) + "\n"


def crossing_relations(crossing):
    a, b, c, d = crossing.slots
    if crossing.kind is CrossingKind.POSITIVE:
        relations = [CrossingRelation(c, "over_tri", b, a), CrossingRelation(d, "under_tri", a, b)]
    elif crossing.kind is CrossingKind.SINGULAR:
        relations = [CrossingRelation(c, "over_dot", b, a), CrossingRelation(d, "under_dot", a, b)]
    else:
        relations = [CrossingRelation(a, "over_tri", d, c), CrossingRelation(b, "under_tri", c, d)]
    return sorted(relations, key=lambda r: r.target)


def generate_constraints(d):
    """Two relations per crossing, crossing by crossing, each pair ordered by target semiarc."""
    return [relation for crossing in d.crossings for relation in crossing_relations(crossing)]
