"""Built-in diagrams: the two singular links K1 and K2, small classical links and move variants."""

import logging
import re
from dataclasses import dataclass

from .diagram import Crossing, CrossingKind, DiagramCode, parse_diagram
from .exceptions import ParseError, UnknownDiagramError

logger = logging.getLogger(__name__)

_LETTER = re.compile(r"^(-?)([st])(\d+)$")

# slot orders fixed so the generated relations list the Alexander coloring
# systems row for row
K1_CODE = """
arcs 4
S 0 1 3 2
S 1 0 2 3
"""

K2_CODE = """
arcs 4
S 0 1 3 2
X+ 1 0 2 3
"""


def _parse_word(word):
    tokens = word.split() if isinstance(word, str) else list(word)
    letters = []
    for token in tokens:
        match = _LETTER.match(token)
        if not match:
            raise ParseError(f"bad braid letter {token!r}")
        inverse, generator, index = match.groups()
        if inverse and generator == "t":
            raise ParseError("singular generators have no inverse")
        letters.append((generator, int(index), bool(inverse)))
    return letters


def braid_closure(word, strands, name=None):
    """
    Closure of a singular braid word.

    Letters are ``s<i>`` (σᵢ), ``-s<i>`` (σᵢ⁻¹) and ``t<i>`` (the singular
    generator τᵢ), read bottom to top, 1 ≤ i < strands.
    """
    letters = _parse_word(word)
    current = list(range(strands))
    next_id = strands
    crossings = []
    for generator, index, inverse in letters:
        if not 1 <= index < strands:
            raise ParseError(f"generator index {index} needs 1 ≤ i < {strands}")
        p = index - 1
        left, right = current[p], current[p + 1]
        top_left, top_right = next_id, next_id + 1
        next_id += 2
        if generator == "t":
            crossings.append((CrossingKind.SINGULAR, right, top_right, left, top_left))
        elif inverse:
            crossings.append((CrossingKind.NEGATIVE, top_left, left, top_right, right))
        else:
            crossings.append((CrossingKind.POSITIVE, right, top_right, left, top_left))
        current[p], current[p + 1] = top_left, top_right

    # the top of each position is glued to its bottom
    glue = {top: bottom for bottom, top in enumerate(current) if top != bottom}
    loops = [p for p, top in enumerate(current) if top == p]
    used = sorted({glue.get(s, s) for _, *slots in crossings for s in slots} | set(loops))
    renumber = {old: new for new, old in enumerate(used)}

    def relabel(s):
        return renumber[glue.get(s, s)]

    return DiagramCode(
        len(used),
        [Crossing(kind, *(relabel(s) for s in slots)) for kind, *slots in crossings],
        [renumber[p] for p in loops],
        name,
    )


@dataclass(frozen=True)
class MovePair:
    variant: str
    base: str
    move: str
    pseudoknot_only: bool = False


_BRAIDS = {
    "trefoil+": ("s1 s1 s1", 2),
    "trefoil-": ("-s1 -s1 -s1", 2),
    "hopf+": ("s1 s1", 2),
    "hopf-": ("-s1 -s1", 2),
    "figure8": ("s1 -s2 s1 -s2", 3),
    "trefoil+_r1": ("s1 s1 s1 s2", 3),
    "trefoil+_r1n": ("s1 s1 s1 -s2", 3),
    "trefoil+_r2": ("s1 s1 s1 s1 -s1", 2),
    "trefoil+_r3": ("s2 s1 s2 s2", 3),
    "hopf+_r2": ("s1 -s1 s1 s1", 2),
    "figure8_r1": ("s1 -s2 s1 -s2 -s3", 4),
    "K1_r1_variant": ("t1 t1 s2", 3),
    "K1_r2_variant": ("t1 s1 -s1 t1", 2),
    "K2_r2_variant": ("t1 s1 s1 -s1", 2),
    "K2_r3_variant": ("t1 s2 s1 s2 -s1", 3),
    "K2_r4_variant": ("t2 s1 s2", 3),
    "K1_pr1_variant": ("t1 t1 t2", 3),
}

_MOVES = (
    MovePair("trefoil+_r1", "trefoil+", "R1"),
    MovePair("trefoil+_r1n", "trefoil+", "R1"),
    MovePair("trefoil+_r2", "trefoil+", "R2"),
    MovePair("trefoil+_r3", "trefoil+", "R3"),
    MovePair("hopf+_r2", "hopf+", "R2"),
    MovePair("figure8_r1", "figure8", "R1"),
    MovePair("K1_r1_variant", "K1", "R1"),
    MovePair("K1_r2_variant", "K1", "R2"),
    MovePair("K2_r2_variant", "K2", "R2"),
    MovePair("K2_r3_variant", "K2", "R3"),
    MovePair("K2_r4_variant", "K2", "R4"),
    MovePair("K1_pr1_variant", "K1", "PR1", pseudoknot_only=True),
)


def catalog_names():
    return ["unknot", "K1", "K2", *_BRAIDS]


def catalog(name):
    if name == "unknot":
        return DiagramCode(1, (), (0,), "unknot")
    if name == "K1":
        return parse_diagram(K1_CODE, name="K1")
    if name == "K2":
        return parse_diagram(K2_CODE, name="K2")
    if name not in _BRAIDS:
        raise UnknownDiagramError(f"no built-in diagram named {name!r}")
    word, strands = _BRAIDS[name]
    return braid_closure(word, strands, name=name)


def move_pairs(include_pseudoknot=True):
    """Catalog pairs that differ by one diagram move (plus stabilisation where needed)."""
    return [pair for pair in _MOVES if include_pseudoknot or not pair.pseudoknot_only]
