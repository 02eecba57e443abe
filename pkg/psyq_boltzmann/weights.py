"""
Boltzmann weights (φ, ψ) with values in Z_N.

Every condition is a signed sum of φ/ψ values that must vanish mod N. The
same term lists drive both validation and the linear system whose kernel is
the space of all valid weight pairs, with unknowns ordered φ₀₀..φ_{n-1,n-1}
then ψ₀₀..ψ_{n-1,n-1}.
"""

import itertools
import logging
from dataclasses import dataclass

from .algebra import Violation
from .exceptions import OrderMismatchError, ParseError, TableShapeError
from .modlinalg import ModMatrix, SolutionSpace, solve_homogeneous

logger = logging.getLogger(__name__)

PHI, PSI = "phi", "psi"

CORE_CONDITIONS = ("(i)", "(ii)", "(iii.1)", "(iii.2)", "(iii.3)")
PI_CONDITIONS = ("(v)",)
STRONG_CONDITIONS = ("(vi.a)", "(vi.b)")


@dataclass(frozen=True)
class WeightPair:
    modulus: int
    phi: tuple
    psi: tuple

    def __post_init__(self):
        if self.modulus < 2:
            raise TableShapeError(f"weight modulus must be at least 2, got {self.modulus}")
        order = len(self.phi)
        for name in (PHI, PSI):
            rows = tuple(tuple(int(v) % self.modulus for v in row) for row in getattr(self, name))
            if len(rows) != order or any(len(row) != order for row in rows):
                raise TableShapeError(f"{name} is not {order}×{order}")
            object.__setattr__(self, name, rows)

    @classmethod
    def zero(cls, order, modulus):
        table = [[0] * order for _ in range(order)]
        return cls(modulus, table, table)

    @classmethod
    def from_vector(cls, vector, order, modulus):
        half = order * order
        phi = [vector[r * order : (r + 1) * order] for r in range(order)]
        psi = [vector[half + r * order : half + (r + 1) * order] for r in range(order)]
        return cls(modulus, phi, psi)

    @property
    def order(self):
        return len(self.phi)

    def value(self, kind, x, y):
        return (self.phi if kind == PHI else self.psi)[x][y]

    def to_vector(self):
        return tuple(itertools.chain(*self.phi, *self.psi))

    def __add__(self, other):
        if self.modulus != other.modulus or self.order != other.order:
            raise OrderMismatchError("weight pairs differ in order or modulus")
        return WeightPair.from_vector(
            [a + b for a, b in zip(self.to_vector(), other.to_vector(), strict=True)],
            self.order,
            self.modulus,
        )

    def scale(self, factor):
        return WeightPair.from_vector([factor * a for a in self.to_vector()], self.order, self.modulus)


@dataclass(frozen=True)
class WeightReport:
    violations: tuple = ()

    def _clean(self, labels):
        return not any(v.label in labels for v in self.violations)

    @property
    def satisfies_core(self):
        return self._clean(CORE_CONDITIONS)

    @property
    def pI_adequate(self):
        return self._clean(PI_CONDITIONS)

    @property
    def strongly_compatible(self):
        return self._clean(STRONG_CONDITIONS)


@dataclass(frozen=True)
class CocycleReport:
    violations: tuple = ()

    @property
    def valid(self):
        return not self.violations


def condition_terms(X, labels=None):
    """
    Yield (label, witness, terms) for every instance of the weight conditions.

    ``terms`` is a list of (sign, kind, x, y); the instance holds when the
    signed sum of the named φ/ψ values is 0 mod N. Instances come grouped by
    label and, within a label, in lexicographic witness order.
    """
    ut, ot, ud, od = X.tables()
    n = X.order
    wanted = set(labels) if labels is not None else None

    def active(label):
        return wanted is None or label in wanted

    if active("(i)"):
        for x in range(n):
            yield "(i)", (x,), [(1, PHI, x, x)]

    if active("(ii)"):
        for x, y in itertools.product(range(n), repeat=2):
            v = X.inv("over_dot", ut[x][y], y)
            w = X.inv("over_dot", ot[y][x], x)
            yield "(ii)", (x, y), [(1, PHI, x, y), (1, PSI, y, v), (-1, PHI, w, v), (-1, PSI, x, w)]

    ternary = {
        "(iii.1)": lambda x, y, z: [
            (1, PHI, x, y),
            (1, PHI, y, z),
            (1, PHI, ut[x][y], ot[z][y]),
            (-1, PHI, ut[x][z], ut[y][z]),
            (-1, PHI, x, z),
            (-1, PHI, ot[y][x], ot[z][x]),
        ],
        "(iii.2)": lambda x, y, z: [
            (1, PSI, x, y),
            (1, PHI, y, z),
            (1, PHI, ud[x][y], ot[z][y]),
            (-1, PSI, ut[x][z], ut[y][z]),
            (-1, PHI, x, z),
            (-1, PHI, od[y][x], ot[z][x]),
        ],
        "(iii.3)": lambda x, y, z: [
            (1, PSI, z, y),
            (-1, PHI, x, y),
            (-1, PHI, ut[x][y], ud[z][y]),
            (-1, PSI, ot[z][x], ot[y][x]),
            (1, PHI, x, z),
            (1, PHI, ut[x][z], od[y][z]),
        ],
    }
    for label, terms in ternary.items():
        if active(label):
            for x, y, z in itertools.product(range(n), repeat=3):
                yield label, (x, y, z), terms(x, y, z)

    if active("(v)"):
        for x in range(n):
            yield "(v)", (x,), [(1, PSI, x, x)]

    strong = {
        "(vi.a)": lambda x, y, z: [(1, PSI, x, y), (-1, PSI, ut[x][z], ut[y][z])],
        "(vi.b)": lambda x, y, z: [(1, PSI, z, y), (-1, PSI, ot[z][x], ot[y][x])],
    }
    for label, terms in strong.items():
        if active(label):
            for x, y, z in itertools.product(range(n), repeat=3):
                yield label, (x, y, z), terms(x, y, z)


def _evaluate(terms, w):
    return sum(sign * w.value(kind, x, y) for sign, kind, x, y in terms) % w.modulus


def validate_weight_pair(X, w):
    """Check conditions (i)-(iii), (v) and (vi); report the first failing witness of each."""
    if w.order != X.order:
        raise OrderMismatchError(f"weight pair has order {w.order}, psyquandle has order {X.order}")
    violations = []
    failed = set()
    for label, witness, terms in condition_terms(X):
        if label not in failed and _evaluate(terms, w):
            failed.add(label)
            violations.append(Violation(label, witness))
    return WeightReport(violations=tuple(violations))


def check_biquandle_cocycle(B, phi, modulus):
    """
    Biquandle 2-cocycle conditions for ``phi`` on the ▷-tables of ``B``.

    (i) φ(x,x) = 0 and (ii) the six-term identity, both mod ``modulus``.
    """
    ut, ot = B.under_tri, B.over_tri
    n = B.order
    if len(phi) != n or any(len(row) != n for row in phi):
        raise TableShapeError(f"φ is not {n}×{n}")
    violations = []
    for x in range(n):
        if phi[x][x] % modulus:
            violations.append(Violation("(i)", (x,)))
            break
    for x, y, z in itertools.product(range(n), repeat=3):
        total = (
            phi[x][y]
            - phi[ut[x][z]][ut[y][z]]
            - phi[x][z]
            + phi[ut[x][y]][ot[z][y]]
            + phi[y][z]
            - phi[ot[y][x]][ot[z][x]]
        )
        if total % modulus:
            violations.append(Violation("(ii)", (x, y, z)))
            break
    return CocycleReport(violations=tuple(violations))


def selected_conditions(require_pI=False, require_strong=False):
    labels = list(CORE_CONDITIONS)
    if require_pI:
        labels.extend(PI_CONDITIONS)
    if require_strong:
        labels.extend(STRONG_CONDITIONS)
    return tuple(labels)


def condition_matrix(X, modulus, labels):
    """Coefficient matrix over Z_N of the selected conditions, duplicate and zero rows dropped."""
    n = X.order
    offsets = {PHI: 0, PSI: n * n}
    rows = {}
    for _, _, terms in condition_terms(X, labels):
        row = [0] * (2 * n * n)
        for sign, kind, x, y in terms:
            index = offsets[kind] + x * n + y
            row[index] = (row[index] + sign) % modulus
        key = tuple(row)
        if any(key):
            rows.setdefault(key, None)
    logger.debug("weight system for order %s mod %s: %s distinct rows", n, modulus, len(rows))
    return ModMatrix.from_rows(list(rows), modulus, cols=2 * n * n)


@dataclass(frozen=True)
class WeightSpace:
    order: int
    modulus: int
    labels: tuple
    matrix: ModMatrix
    kernel: SolutionSpace

    @property
    def count(self):
        return self.kernel.count

    @property
    def factors(self):
        return self.kernel.factors

    @property
    def generators(self):
        return tuple(WeightPair.from_vector(g, self.order, self.modulus) for g in self.kernel.generators)

    def __contains__(self, w):
        return w.order == self.order and w.modulus == self.modulus and not any(self.matrix.apply(w.to_vector()))

    def combine(self, coefficients):
        """The pair Σ kᵢ·gᵢ over the generators."""
        total = WeightPair.zero(self.order, self.modulus)
        for k, generator in zip(coefficients, self.generators, strict=True):
            total = total + generator.scale(k)
        return total

    def pairs(self, cap=None):
        """Every weight pair in the space, the zero pair first."""
        return [WeightPair.from_vector(v, self.order, self.modulus) for v in self.kernel.enumerate(cap)]


def weight_solution_space(X, modulus, require_pI=False, require_strong=False):
    """The Z_N-module of weight pairs satisfying the selected conditions."""
    labels = selected_conditions(require_pI, require_strong)
    matrix = condition_matrix(X, modulus, labels)
    return WeightSpace(X.order, modulus, labels, matrix, solve_homogeneous(matrix))


def parse_weight_pair(text, order=None):
    """
    Read a weight file: a ``mod <N>`` header, n rows for φ, a blank line, n rows for ψ.

    Without ``order`` the size is taken from the number of φ rows.
    """
    modulus = None
    blocks = [[]]
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if modulus is None:
            if not line:
                continue
            head, _, value = line.partition(" ")
            if head != "mod":
                raise ParseError("expected a 'mod <N>' header", lineno)
            try:
                modulus = int(value)
            except ValueError:
                raise ParseError(f"bad modulus {value!r}", lineno)
            if modulus < 2:
                raise ParseError(f"modulus must be at least 2, got {modulus}", lineno)
            continue
        if not line:
            if blocks[-1]:
                blocks.append([])
            continue
        try:
            blocks[-1].append((lineno, [int(token) for token in line.replace(",", " ").split()]))
        except ValueError:
            raise ParseError(f"non-integer entry in {line!r}", lineno)
    if modulus is None:
        raise ParseError("missing 'mod <N>' header")
    blocks = [block for block in blocks if block]
    if len(blocks) != 2:
        raise ParseError(f"expected a φ block and a ψ block, found {len(blocks)} block(s)")
    size = order if order is not None else len(blocks[0])
    for block, name in zip(blocks, (PHI, PSI), strict=True):
        if len(block) != size:
            raise ParseError(f"{name} has {len(block)} rows, expected {size}", block[0][0])
        for lineno, row in block:
            if len(row) != size:
                raise ParseError(f"{name} row has {len(row)} entries, expected {size}", lineno)
    phi, psi = ([row for _, row in block] for block in blocks)
    return WeightPair(modulus, phi, psi)


def serialize_weight_pair(w):
    lines = [f"mod {w.modulus}"]
    lines.extend(" ".join(str(v) for v in row) for row in w.phi)
    lines.append("")
    lines.extend(" ".join(str(v) for v in row) for row in w.psi)
    return "\n".join(lines) + "\n"
