"""
Finite psyquandles: operation tables, axiom verification and constructors.

Elements are 0..n-1 internally. Files use the 1-indexed n×4n block matrix
with blocks ordered ▷̱, ▷̄, •̱, •̄; row = left operand, column = right operand.
"""

import hashlib
import itertools
import logging
import math
from dataclasses import dataclass, field

from .exceptions import NotABiquandleError, ParameterError, ParseError, TableShapeError

logger = logging.getLogger(__name__)

TABLE_NAMES = ("under_tri", "over_tri", "under_dot", "over_dot")


@dataclass(frozen=True)
class AlexanderParameters:
    modulus: int
    t: int
    s: int
    a: int
    b: int

    def coefficients(self, op):
        """(left, right) coefficients of the linear operation ``op`` over Z_n."""
        n, t, s, a, b = self.modulus, self.t, self.s, self.a, self.b
        return {
            "under_tri": (t % n, (s - t) % n),
            "over_tri": (s % n, 0),
            "under_dot": (a % n, (s - a) % n),
            "over_dot": (b % n, (s - b) % n),
        }[op]


@dataclass(frozen=True)
class Violation:
    label: str
    witness: tuple


@dataclass(frozen=True)
class AxiomReport:
    violations: tuple = ()
    pI_adequate: bool = False

    @property
    def valid(self):
        return not self.violations

    def failed_axioms(self):
        return [v.label for v in self.violations]


def _normalize_table(name, table, order):
    rows = tuple(tuple(int(v) for v in row) for row in table)
    if len(rows) != order or any(len(row) != order for row in rows):
        raise TableShapeError(f"{name} is not {order}×{order}")
    for x, row in enumerate(rows):
        for y, v in enumerate(row):
            if not 0 <= v < order:
                raise TableShapeError(f"{name}[{x}][{y}] = {v} is outside 0..{order - 1}")
    return rows


def _column_inverse(table, order):
    """Right-inverse table of ``table``, or None if some column is not a permutation."""
    inverse = [[None] * order for _ in range(order)]
    for y in range(order):
        for x in range(order):
            value = table[x][y]
            if inverse[value][y] is not None:
                return None
            inverse[value][y] = x
    return tuple(tuple(row) for row in inverse)


def _pair_inverse(pair_map, order):
    image = {}
    for x, y in itertools.product(range(order), repeat=2):
        target = pair_map(x, y)
        if target in image:
            return None
        image[target] = (x, y)
    return image


@dataclass(frozen=True)
class FinitePsyquandle:
    """
    Four n×n operation tables on {0, ..., n-1}.

    The constructor only checks shapes; use :func:`check_axioms` (or
    :meth:`report`) to decide whether the tables form a psyquandle.
    """

    under_tri: tuple
    over_tri: tuple
    under_dot: tuple
    over_dot: tuple
    alexander: AlexanderParameters | None = field(default=None, compare=False)
    _inverses: dict = field(init=False, repr=False, compare=False)
    _pair_inverses: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        order = len(self.under_tri)
        if order == 0:
            raise TableShapeError("a psyquandle needs at least one element")
        for name in TABLE_NAMES:
            object.__setattr__(self, name, _normalize_table(name, getattr(self, name), order))
        inverses = {name: _column_inverse(getattr(self, name), order) for name in TABLE_NAMES}
        object.__setattr__(self, "_inverses", inverses)
        object.__setattr__(self, "_pair_inverses", {})

    @property
    def order(self):
        return len(self.under_tri)

    @property
    def elements(self):
        return range(self.order)

    def tables(self):
        return tuple(getattr(self, name) for name in TABLE_NAMES)

    def op(self, name, x, y):
        return getattr(self, name)[x][y]

    def inv(self, name, x, y):
        """x ∘⁻¹ y for the operation ``name``."""
        table = self._inverses[name]
        if table is None:
            raise TableShapeError(f"{name} is not right-invertible")
        return table[x][y]

    # the crossing maps
    def S(self, x, y):
        return self.over_tri[y][x], self.under_tri[x][y]

    def S_prime(self, x, y):
        return self.over_dot[y][x], self.under_dot[x][y]

    def _pair_inverse_table(self, key):
        if key not in self._pair_inverses:
            pair_map = self.S if key == "S" else self.S_prime
            self._pair_inverses[key] = _pair_inverse(pair_map, self.order)
        table = self._pair_inverses[key]
        if table is None:
            raise TableShapeError(f"{key} is not a bijection")
        return table

    def S_inverse(self, x, y):
        return self._pair_inverse_table("S")[(x, y)]

    def S_prime_inverse(self, x, y):
        return self._pair_inverse_table("S_prime")[(x, y)]

    def is_pI_adequate(self):
        return all(self.under_dot[x][x] == self.over_dot[x][x] for x in self.elements)

    def is_biquandle_like(self):
        """True when the •-tables coincide with the ▷-tables."""
        return self.under_dot == self.under_tri and self.over_dot == self.over_tri

    def restrict_to_biquandle(self):
        """The ▷-part of this psyquandle, promoted back to a psyquandle."""
        return FinitePsyquandle(self.under_tri, self.over_tri, self.under_tri, self.over_tri)

    def report(self):
        return check_axioms(*self.tables())

    def fingerprint(self):
        return hashlib.sha256(serialize_psyquandle_matrix(self).encode()).hexdigest()[:16]


def _axiom_zero(tables, order, violations):
    for name, table in zip(TABLE_NAMES, tables, strict=True):
        for y in range(order):
            column = [table[x][y] for x in range(order)]
            if len(set(column)) != order:
                violations.append(Violation(f"(0) {name}", (y,)))
                break


def _pair_map_violation(pair_map, order):
    seen = set()
    first = {}
    for x, y in itertools.product(range(order), repeat=2):
        image = pair_map(x, y)
        if image in seen:
            return first[image]
        seen.add(image)
        first[image] = (x, y)
    return None


def check_axioms(under_tri, over_tri, under_dot, over_dot):
    """
    Exhaustively test the psyquandle axioms and report every failing identity.

    Each violation carries the lexicographically smallest witness. Axiom (iv)
    needs the •̄ and •̱ inverses and is skipped when axiom (0) already fails.
    """
    order = len(under_tri)
    if order == 0:
        raise TableShapeError("a psyquandle needs at least one element")
    tables = tuple(
        _normalize_table(name, table, order)
        for name, table in zip(TABLE_NAMES, (under_tri, over_tri, under_dot, over_dot), strict=True)
    )
    ut, ot, ud, od = tables
    n = range(order)
    violations = []

    _axiom_zero(tables, order, violations)

    for x in n:
        if ut[x][x] != ot[x][x]:
            violations.append(Violation("(i)", (x,)))
            break

    for label, pair_map in (
        ("(ii) S", lambda x, y: (ot[y][x], ut[x][y])),
        ("(ii) S'", lambda x, y: (od[y][x], ud[x][y])),
    ):
        witness = _pair_map_violation(pair_map, order)
        if witness is not None:
            violations.append(Violation(label, witness))

    ternary = {
        "(iii.1)": lambda x, y, z: ut[ut[x][y]][ut[z][y]] == ut[ut[x][z]][ot[y][z]],
        "(iii.2)": lambda x, y, z: ot[ut[x][y]][ut[z][y]] == ut[ot[x][z]][ot[y][z]],
        "(iii.3)": lambda x, y, z: ot[ot[x][y]][ot[z][y]] == ot[ot[x][z]][ut[y][z]],
        "(v.1)": lambda x, y, z: ot[ot[x][y]][od[z][y]] == ot[ot[x][z]][ud[y][z]],
        "(v.2)": lambda x, y, z: ut[ut[x][y]][od[z][y]] == ut[ut[x][z]][ud[y][z]],
        "(v.3)": lambda x, y, z: od[ot[x][y]][ot[z][y]] == ot[od[x][z]][ut[y][z]],
        "(v.4)": lambda x, y, z: ud[ut[x][y]][ut[z][y]] == ut[ud[x][z]][ot[y][z]],
        "(v.5)": lambda x, y, z: ud[ot[x][y]][ot[z][y]] == ot[ud[x][z]][ut[y][z]],
        "(v.6)": lambda x, y, z: od[ut[x][y]][ut[z][y]] == ut[od[x][z]][ot[y][z]],
    }

    od_inv = _column_inverse(od, order)
    ud_inv = _column_inverse(ud, order)
    if od_inv is not None and ud_inv is not None:
        binary = {
            "(iv.1)": lambda x, y: (
                ud[x][od_inv[ot[y][x]][x]] == ot[od_inv[ut[x][y]][y]][od_inv[ot[y][x]][x]]
            ),
            "(iv.2)": lambda x, y: (
                ud[y][od_inv[ut[x][y]][y]] == ut[od_inv[ot[y][x]][x]][od_inv[ut[x][y]][y]]
            ),
        }
        for label, identity in binary.items():
            witness = next((w for w in itertools.product(n, repeat=2) if not identity(*w)), None)
            if witness is not None:
                violations.append(Violation(label, witness))
    else:
        logger.debug("skipping axiom (iv): a •-operation is not right-invertible")

    for label, identity in ternary.items():
        witness = next((w for w in itertools.product(n, repeat=3) if not identity(*w)), None)
        if witness is not None:
            violations.append(Violation(label, witness))

    pI_adequate = all(ud[x][x] == od[x][x] for x in n)
    return AxiomReport(violations=tuple(violations), pI_adequate=pI_adequate)


def promote_biquandle(under_tri, over_tri):
    """Every biquandle is a psyquandle with •̄ = ▷̄ and •̱ = ▷̱."""
    report = check_axioms(under_tri, over_tri, under_tri, over_tri)
    if not report.valid:
        raise NotABiquandleError(
            "tables fail the biquandle axioms: " + ", ".join(report.failed_axioms())
        )
    return FinitePsyquandle(under_tri, over_tri, under_tri, over_tri)


def alexander_psyquandle(n, t, s, a, b):
    """
    Alexander psyquandle over Z_n.

    x ▷̱ y = tx + (s-t)y, x ▷̄ y = sx, x •̱ y = ax + (s-a)y, x •̄ y = bx + (s-b)y.
    """
    if n < 1:
        raise ParameterError(f"modulus must be positive, got {n}")
    for name, value in (("t", t), ("s", s), ("a", a), ("b", b)):
        if math.gcd(value, n) != 1:
            raise ParameterError(f"{name} = {value} is not a unit mod {n}")
    if (t + s - a - b) % n != 0:
        raise ParameterError(f"t + s - a - b = {t + s - a - b} is not 0 mod {n}")
    params = AlexanderParameters(n, t % n, s % n, a % n, b % n)

    def table(op):
        left, right = params.coefficients(op)
        return [[(left * x + right * y) % n for y in range(n)] for x in range(n)]

    return FinitePsyquandle(*(table(op) for op in TABLE_NAMES), alexander=params)


def alexander_parameter_sweep(n):
    """All (t, s, a, b) of units mod n with t + s - a - b = 0."""
    units = [u for u in range(n) if math.gcd(u, n) == 1]
    unit_set = set(units)
    for t, s, a in itertools.product(units, repeat=3):
        b = (t + s - a) % n
        if b in unit_set:
            yield t, s, a, b


def _tokens(line):
    return line.replace("|", " ").split()


def parse_psyquandle_matrix(text):
    """Parse the 1-indexed n×4n block matrix format."""
    declared = None
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.replace(" ", "").startswith("n="):
            if declared is not None or rows:
                raise ParseError("order declaration must come first", lineno)
            try:
                declared = int(line.split("=", 1)[1])
            except ValueError:
                raise ParseError(f"bad order declaration {line!r}", lineno)
            continue
        try:
            rows.append((lineno, [int(token) for token in _tokens(line)]))
        except ValueError:
            raise ParseError(f"non-integer token in {line!r}", lineno)

    order = declared if declared is not None else len(rows)
    if order < 1 or len(rows) != order:
        raise ParseError(f"expected {order} rows, found {len(rows)}")
    for lineno, row in rows:
        if len(row) != 4 * order:
            raise ParseError(f"expected {4 * order} entries, found {len(row)}", lineno)
        for value in row:
            if not 1 <= value <= order:
                raise ParseError(f"entry {value} is outside 1..{order}", lineno)

    tables = [
        [[row[k * order + y] - 1 for y in range(order)] for _, row in rows] for k in range(4)
    ]
    return FinitePsyquandle(*tables)


def serialize_psyquandle_matrix(X):
    lines = [f"n = {X.order}"]
    for x in X.elements:
        blocks = [" ".join(str(table[x][y] + 1) for y in X.elements) for table in X.tables()]
        lines.append(" | ".join(blocks))
    return "\n".join(lines) + "\n"
