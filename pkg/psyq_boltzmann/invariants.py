"""
Colorings, the counting invariant and the Boltzmann-enhanced polynomials.
"""

import enum
import itertools
import logging
from collections import Counter
from dataclasses import dataclass

from .diagram import CrossingKind, generate_constraints
from .exceptions import (
    AdequacyError,
    AxiomError,
    CompatibilityError,
    InvalidColoringError,
    OrderMismatchError,
    ParameterError,
    WeightError,
)
from .modlinalg import ModMatrix, solve_homogeneous
from .weights import CORE_CONDITIONS, PHI, PSI, validate_weight_pair

logger = logging.getLogger(__name__)


class Mode(enum.Enum):
    SINGLE = "single"
    TWO = "two"


@dataclass(frozen=True)
class Coloring:
    """Element assigned to each semiarc, indexed by semiarc id."""

    assignment: tuple

    def __getitem__(self, semiarc):
        return self.assignment[semiarc]

    def __len__(self):
        return len(self.assignment)


@dataclass(frozen=True)
class BoltzmannWeight:
    total: int
    phi: int
    psi: int


class _CrossingMap:
    """One crossing as outputs = pair_map(inputs), with the pair inverse for back-propagation."""

    __slots__ = ("inputs", "outputs", "forward", "backward")

    def __init__(self, crossing, X):
        a, b, c, d = crossing.slots
        if crossing.kind is CrossingKind.SINGULAR:
            self.forward, self.backward = X.S_prime, X.S_prime_inverse
        else:
            self.forward, self.backward = X.S, X.S_inverse
        if crossing.kind is CrossingKind.NEGATIVE:
            self.inputs, self.outputs = (c, d), (a, b)
        else:
            self.inputs, self.outputs = (a, b), (c, d)

    @property
    def semiarcs(self):
        return self.inputs + self.outputs


def _search_order(d):
    # strand by strand, each strand from its lowest semiarc
    return [s for component in d.components for s in component]


def enumerate_colorings(d, X):
    """
    Every X-coloring of ``d``.

    Free semiarcs are assigned in strand order; each assignment is pushed
    through the crossings, forward when both inputs are known and backward
    through the pair inverse when both outputs are.
    """
    maps = [_CrossingMap(crossing, X) for crossing in d.crossings]
    touching = {s: [] for s in range(d.semiarc_count)}
    for index, crossing_map in enumerate(maps):
        for s in set(crossing_map.semiarcs):
            touching[s].append(index)
    order = _search_order(d)
    values = [None] * d.semiarc_count
    found = []

    def assign(semiarc, value, trail, pending):
        current = values[semiarc]
        if current is None:
            values[semiarc] = value
            trail.append(semiarc)
            pending.append(semiarc)
            return True
        return current == value

    def propagate(start, trail):
        pending = [start]
        while pending:
            semiarc = pending.pop()
            for index in touching[semiarc]:
                crossing_map = maps[index]
                p, q = (values[s] for s in crossing_map.inputs)
                r, s = (values[t] for t in crossing_map.outputs)
                if p is not None and q is not None:
                    image = crossing_map.forward(p, q)
                    targets = crossing_map.outputs
                elif r is not None and s is not None:
                    image = crossing_map.backward(r, s)
                    targets = crossing_map.inputs
                else:
                    continue
                for target, value in zip(targets, image, strict=True):
                    if not assign(target, value, trail, pending):
                        return False
        return True

    def search(position):
        while position < len(order) and values[order[position]] is not None:
            position += 1
        if position == len(order):
            found.append(Coloring(tuple(values)))
            return
        semiarc = order[position]
        for value in X.elements:
            trail = [semiarc]
            values[semiarc] = value
            if propagate(semiarc, trail):
                search(position + 1)
            for assigned in trail:
                values[assigned] = None

    search(0)
    found.sort(key=lambda c: c.assignment)
    logger.debug("%s: %s colorings by psyquandle of order %s", d.name, len(found), X.order)
    return found


def _satisfies(relations, X, assignment):
    return all(
        assignment[r.target] == X.op(r.op, assignment[r.left], assignment[r.right]) for r in relations
    )


def enumerate_colorings_bruteforce(d, X):
    """All n^m assignments filtered through the crossing relations."""
    relations = generate_constraints(d)
    return [
        Coloring(assignment)
        for assignment in itertools.product(X.elements, repeat=d.semiarc_count)
        if _satisfies(relations, X, assignment)
    ]


def counting_invariant(d, X):
    return len(enumerate_colorings(d, X))


def coloring_matrix(d, X):
    """The coloring relations of ``d`` as a linear system over Z_n; X must be an Alexander psyquandle."""
    params = X.alexander
    if params is None:
        raise ParameterError("coloring matrices need an Alexander psyquandle")
    rows = []
    for relation in generate_constraints(d):
        row = [0] * d.semiarc_count
        left, right = params.coefficients(relation.op)
        row[relation.left] += left
        row[relation.right] += right
        row[relation.target] -= 1
        rows.append(row)
    return ModMatrix.from_rows(rows, params.modulus, cols=d.semiarc_count)


def counting_invariant_linear(d, X):
    return solve_homogeneous(coloring_matrix(d, X)).count


def boltzmann_weight(c, w, d, X):
    """Total and partial Boltzmann weights of one coloring."""
    if not _satisfies(generate_constraints(d), X, c.assignment):
        raise InvalidColoringError(f"{c.assignment} is not an X-coloring of {d.name or 'the diagram'}")
    parts = {PHI: 0, PSI: 0}
    for crossing in d.crossings:
        x, y = (c[s] for s in crossing.weight_arguments())
        kind = PHI if crossing.kind.is_classical else PSI
        parts[kind] += crossing.weight_sign() * w.value(kind, x, y)
    n = w.modulus
    phi, psi = parts[PHI] % n, parts[PSI] % n
    return BoltzmannWeight((phi + psi) % n, phi, psi)


@dataclass(frozen=True)
class WeightPolynomial:
    """
    Multiset of Boltzmann weights written as a polynomial with exponents in Z_N.

    ``terms`` is a sorted tuple of (exponent, coefficient); two-variable
    exponents are (u, v) pairs.
    """

    modulus: int
    mode: Mode
    terms: tuple

    @classmethod
    def from_counter(cls, modulus, mode, counter):
        return cls(modulus, mode, tuple(sorted((e, c) for e, c in counter.items() if c)))

    def coefficient_sum(self):
        return sum(c for _, c in self.terms)

    def specialize(self):
        """Value at w = 1 (or u = v = 1): the number of colorings."""
        return self.coefficient_sum()

    def collapse(self):
        """u^a v^b ↦ w^(a+b)."""
        if self.mode is Mode.SINGLE:
            return self
        counter = Counter()
        for (a, b), c in self.terms:
            counter[(a + b) % self.modulus] += c
        return WeightPolynomial.from_counter(self.modulus, Mode.SINGLE, counter)

    def to_json(self):
        return [
            {"exp": list(e) if self.mode is Mode.TWO else e, "coeff": c}
            for e, c in self.terms
        ]

    @classmethod
    def from_json(cls, modulus, mode, terms):
        mode = Mode(mode)
        counter = Counter()
        for term in terms:
            e = tuple(term["exp"]) if mode is Mode.TWO else term["exp"]
            counter[e] += term["coeff"]
        return cls.from_counter(modulus, mode, counter)

    def __str__(self):
        return polynomial_to_string(self)


def _power(variable, exponent):
    if exponent == 0:
        return ""
    if exponent == 1:
        return variable
    return f"{variable}^{exponent}"


def polynomial_to_string(p):
    pieces = []
    for exponent, coeff in p.terms:
        if p.mode is Mode.TWO:
            monomial = _power("u", exponent[0]) + _power("v", exponent[1])
        else:
            monomial = _power("w", exponent)
        if not monomial:
            pieces.append(str(coeff))
        else:
            pieces.append(monomial if coeff == 1 else f"{coeff}{monomial}")
    return " + ".join(pieces) if pieces else "0"


def check_psyquandle(X):
    report = X.report()
    if not report.valid:
        raise AxiomError("not a psyquandle: " + ", ".join(report.failed_axioms()) + " fail")


def check_invariant_flags(X, w, mode, pseudoknot):
    """
    Reject inputs the invariant is not defined for.

    The psyquandle axioms come first, then the flag requirements, then the
    core weight conditions.
    """
    if w.order != X.order:
        raise OrderMismatchError(f"weight pair has order {w.order}, psyquandle has order {X.order}")
    check_psyquandle(X)
    report = validate_weight_pair(X, w)
    if pseudoknot:
        if not X.is_pI_adequate():
            raise AdequacyError("the psyquandle is not pI-adequate")
        if not report.pI_adequate:
            raise AdequacyError("the weight pair is not pI-adequate: ψ(x,x) ≠ 0")
    if mode is Mode.TWO and not report.strongly_compatible:
        raise CompatibilityError("the two-variable invariant needs strongly compatible φ and ψ")
    if not report.satisfies_core:
        failed = [v.label for v in report.violations if v.label in CORE_CONDITIONS]
        raise WeightError("not a Boltzmann weight: " + ", ".join(failed) + " fail")


def enhanced_polynomial(d, X, w, mode=Mode.SINGLE, pseudoknot=False, colorings=None):
    """
    Boltzmann-enhanced polynomial of ``d``.

    ``pseudoknot`` reads singular crossings as precrossings and only adds the
    pI-adequacy requirement. Pass ``colorings`` to reuse an enumeration.
    """
    mode = Mode(mode)
    check_invariant_flags(X, w, mode, pseudoknot)
    if colorings is None:
        colorings = enumerate_colorings(d, X)
    counter = Counter()
    for coloring in colorings:
        weight = boltzmann_weight(coloring, w, d, X)
        counter[weight.total if mode is Mode.SINGLE else (weight.phi, weight.psi)] += 1
    return WeightPolynomial.from_counter(w.modulus, mode, counter)


def result_json(d, X, polynomial):
    return {
        "diagram": d.name,
        "psyquandle_hash": X.fingerprint(),
        "modulus": polynomial.modulus,
        "mode": polynomial.mode.value,
        "counting_invariant": polynomial.coefficient_sum(),
        "terms": polynomial.to_json(),
        "rendered": polynomial_to_string(polynomial),
    }
