"""
Exact linear algebra over Z_n.

``rref_mod`` is only defined for prime moduli; everything else goes through
``smith_normal_form``, which works over any Z_n because Z_n is a principal
ideal ring.
"""

import itertools
import logging
import math

import numpy as np
from sympy import ZZ, Matrix, igcd, mod_inverse
from sympy.ntheory import isprime
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import hermite_normal_form, smith_normal_decomp

from .config import get_enum_cap
from .exceptions import CompositeModulusError, EnumerationCapExceeded, ParseError

logger = logging.getLogger(__name__)


class ModMatrix:
    """A dense rows×cols matrix of residues mod ``modulus``."""

    __slots__ = ("entries", "modulus")

    def __init__(self, entries, modulus):
        if modulus < 2:
            raise ValueError(f"modulus must be at least 2, got {modulus}")
        self.modulus = int(modulus)
        array = np.asarray(entries, dtype=np.int64)
        if array.ndim != 2:
            raise ValueError("entries must be two-dimensional")
        self.entries = np.mod(array, self.modulus)

    @classmethod
    def from_rows(cls, rows, modulus, cols=None):
        rows = [list(row) for row in rows]
        if not rows:
            return cls(np.zeros((0, cols or 0), dtype=np.int64), modulus)
        return cls(rows, modulus)

    @classmethod
    def identity(cls, size, modulus):
        return cls(np.eye(size, dtype=np.int64), modulus)

    @classmethod
    def zeros(cls, rows, cols, modulus):
        return cls(np.zeros((rows, cols), dtype=np.int64), modulus)

    @property
    def rows(self):
        return self.entries.shape[0]

    @property
    def cols(self):
        return self.entries.shape[1]

    @property
    def shape(self):
        return self.entries.shape

    def tolist(self):
        return self.entries.tolist()

    def __matmul__(self, other):
        if self.modulus != other.modulus:
            raise ValueError("moduli differ")
        return ModMatrix(_matmul(self.entries, other.entries, self.modulus), self.modulus)

    def apply(self, vector):
        """m·v mod n as a tuple."""
        v = np.asarray(vector, dtype=np.int64)
        return tuple(int(x) for x in _matmul(self.entries, v.reshape(-1, 1), self.modulus).ravel())

    def __eq__(self, other):
        if not isinstance(other, ModMatrix):
            return NotImplemented
        return (
            self.modulus == other.modulus
            and self.shape == other.shape
            and bool(np.array_equal(self.entries, other.entries))
        )

    def __hash__(self):
        return hash((self.modulus, self.shape, self.entries.tobytes()))

    def __repr__(self):
        return f"ModMatrix({self.tolist()}, modulus={self.modulus})"


def _matmul(a, b, n):
    # reduce after every product so int64 never sees more than n² · cols
    out = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    for k in range(a.shape[1]):
        out = (out + np.outer(a[:, k], b[k, :]) % n) % n
    return out


def parse_mod_matrix(text):
    """Read a ``mod <n>`` header followed by rows of comma-separated integers."""
    modulus = None
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if modulus is None:
            head, _, value = line.partition(" ")
            if head != "mod":
                raise ParseError("expected a 'mod <n>' header", lineno)
            try:
                modulus = int(value)
            except ValueError:
                raise ParseError(f"bad modulus {value!r}", lineno)
            if modulus < 2:
                raise ParseError(f"modulus must be at least 2, got {modulus}", lineno)
            continue
        try:
            row = [int(token) for token in line.replace(",", " ").split()]
        except ValueError:
            raise ParseError(f"non-integer entry in {line!r}", lineno)
        if rows and len(row) != len(rows[0]):
            raise ParseError(f"expected {len(rows[0])} entries, found {len(row)}", lineno)
        rows.append(row)
    if modulus is None:
        raise ParseError("missing 'mod <n>' header")
    return ModMatrix.from_rows(rows, modulus)


def rref_mod(m):
    """Reduced row echelon form over the field Z_p."""
    p = m.modulus
    if not isprime(p):
        raise CompositeModulusError(f"row reduction needs a prime modulus, got {p}")
    a = m.entries.copy()
    pivot_row = 0
    for col in range(m.cols):
        if pivot_row == m.rows:
            break
        nonzero = np.flatnonzero(a[pivot_row:, col])
        if nonzero.size == 0:
            continue
        r = pivot_row + int(nonzero[0])
        if r != pivot_row:
            a[[pivot_row, r]] = a[[r, pivot_row]]
        a[pivot_row] = a[pivot_row] * pow(int(a[pivot_row, col]), -1, p) % p
        for other in range(m.rows):
            if other != pivot_row and a[other, col]:
                a[other] = (a[other] - a[other, col] * a[pivot_row]) % p
        pivot_row += 1
    return ModMatrix(a, p)


def rank_mod(m):
    reduced = rref_mod(m)
    return int(np.count_nonzero(reduced.entries.any(axis=1)))


def _unit_for(value, n):
    """A unit u with u·value ≡ gcd(value, n) (mod n)."""
    g = igcd(value, n)
    if g == n:
        return 1
    reduced, modulus = value // g, n // g
    u = mod_inverse(reduced, modulus)
    while igcd(u, n) != 1:
        u += modulus
    return u % n


def _domain_matrix(rows, shape):
    return DomainMatrix([[ZZ(int(value)) for value in row] for row in rows], shape, ZZ)


def _residues(matrix, n):
    return np.array([[int(value) % n for value in row] for row in matrix.to_list()], dtype=np.int64)


def smith_normal_form(m):
    """
    Return (D, U, V) with U·m·V = D mod n.

    The decomposition is taken over the integers and reduced mod n; each
    diagonal entry is then scaled by a unit to the divisor of n it generates
    (0 for n). The entries keep the integer divisibility chain; U and V have
    unit determinant mod n.
    """
    n = m.modulus
    if 0 in m.shape or not m.entries.any():
        return ModMatrix.zeros(m.rows, m.cols, n), ModMatrix.identity(m.rows, n), ModMatrix.identity(m.cols, n)

    diagonal, left, right = smith_normal_decomp(_domain_matrix(m.tolist(), m.shape))
    d, u, v = (_residues(part, n) for part in (diagonal, left, right))
    for t in range(min(m.shape)):
        unit = _unit_for(int(d[t, t]), n)
        if unit != 1:
            d[t] = d[t] * unit % n
            u[t] = u[t] * unit % n
    logger.debug("smith form of %s×%s matrix mod %s: %s", m.rows, m.cols, n, np.diag(d).tolist())
    return ModMatrix(d, n), ModMatrix(u, n), ModMatrix(v, n)


def _square_system(m):
    """
    A cols×cols matrix with the same kernel mod n as ``m``.

    Its rows are the Hermite basis of the lattice spanned by the rows of m
    together with n·Z^cols; that lattice has determinant dividing n^cols.
    """
    n = m.modulus
    lattice = [
        [int(m.entries[r, c]) for r in range(m.rows)] + [n if k == c else 0 for k in range(m.cols)]
        for c in range(m.cols)
    ]
    basis = hermite_normal_form(_domain_matrix(lattice, (m.cols, m.rows + m.cols)), D=ZZ(n**m.cols)).to_list()
    return ModMatrix([[int(basis[i][j]) for i in range(m.cols)] for j in range(m.cols)], n)


def inverse_mod(m):
    """Inverse of a square matrix whose determinant is a unit mod n."""
    inverse = Matrix(m.tolist()).inv_mod(m.modulus)
    return ModMatrix(np.array(inverse.tolist(), dtype=np.int64), m.modulus)


class SolutionSpace:
    """
    The solution set of m·x ≡ 0 (mod n).

    ``factors`` holds the cardinalities of the cyclic pieces the kernel splits
    into; ``generators`` holds one generator per piece, in the same order.
    """

    def __init__(self, modulus, dimension, factors, generators, solutions=None):
        self.modulus = modulus
        self.dimension = dimension
        self.factors = tuple(factors)
        self.generators = tuple(generators)
        self.solutions = solutions

    @property
    def particular(self):
        return (0,) * self.dimension

    @property
    def count(self):
        return math.prod(self.factors)

    def enumerate(self, cap=None):
        if self.solutions is not None:
            return self.solutions
        cap = get_enum_cap() if cap is None else cap
        if self.count > cap:
            raise EnumerationCapExceeded(self.count, cap)
        n = self.modulus
        found = set()
        for coefficients in itertools.product(*(range(f) for f in self.factors)):
            vector = [0] * self.dimension
            for k, generator in zip(coefficients, self.generators, strict=True):
                if k:
                    vector = [(a + k * b) % n for a, b in zip(vector, generator, strict=True)]
            found.add(tuple(vector))
        self.solutions = sorted(found)
        return self.solutions

    def __repr__(self):
        return f"SolutionSpace(modulus={self.modulus}, count={self.count}, factors={self.factors})"


def solve_homogeneous(m, enumerate=False, cap=None):
    """
    Kernel of ``m`` over Z_n, counted through its Smith normal form.

    With ``enumerate=True`` the solutions are listed too; that raises
    EnumerationCapExceeded when there are more than ``cap`` of them.
    """
    n = m.modulus
    system = _square_system(m) if m.rows > m.cols > 0 else m
    diagonal, _, v = smith_normal_form(system)
    factors, generators = [], []
    for j in range(m.cols):
        entry = int(diagonal.entries[j, j]) if j < system.rows else 0
        g = math.gcd(entry, n)
        if g == 1:
            continue
        step = n // g
        factors.append(g)
        generators.append(tuple(int(x) * step % n for x in v.entries[:, j]))
    space = SolutionSpace(n, m.cols, factors, generators)
    if enumerate:
        space.enumerate(cap)
    return space
