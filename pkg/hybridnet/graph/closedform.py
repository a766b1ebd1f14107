#!/usr/bin/env python

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .bounds import resource_bound
from .errors import DegenerateInputError
from .generator import DegreeClassRow

HAND_COUNTS = {0: (4, 4), 1: (10, 12), 2: (28, 40)}
ROW_LITERAL_DELTA = {1: 2, 2: 0, 3: 8, 4: 8}
ROW_LITERAL_THETA = {1: 0, 2: 4, 3: 4, 4: 12}
AVERAGE_DEGREE_LIMIT = Fraction(56, 17)
THETA_CONVENTIONS = ('general', 'row-literal')


@dataclass(frozen=True)
class FibSpec:
    tau: int
    seeds: tuple

    def __post_init__(self):
        object.__setattr__(self, 'seeds', tuple(self.seeds))
        if not isinstance(self.tau, int) or self.tau < 2:
            raise ValueError(f'invalid tau: {self.tau}')
        elif len(self.seeds) != self.tau:
            raise ValueError(f'seeds must have {self.tau} terms: {self.seeds}')
        elif not all(isinstance(s, int) for s in self.seeds):
            raise ValueError(f'seeds must be integers: {self.seeds}')


@dataclass(frozen=True)
class CountPrediction:
    t: int
    n_vertices: int
    n_edges: int
    pendant: int
    delta_general: int
    delta_row_literal: int
    theta_general: int
    theta_row_literal: int
    source: str

    @property
    def delta_conflict(self):
        return self.delta_general != self.delta_row_literal

    @property
    def theta_conflict(self):
        return self.theta_general != self.theta_row_literal

    def theta(self, convention='general'):
        return _pick_convention(
            self.theta_general, self.theta_row_literal, convention
        )

    def delta(self, convention='general'):
        return _pick_convention(
            self.delta_general, self.delta_row_literal, convention
        )


@dataclass(frozen=True)
class DegreeTablePrediction:
    t: int
    rows: list
    degree_mass: int
    vertex_sum: int
    n_vertices: int
    n_edges: int

    @property
    def mass_consistent(self):
        return self.degree_mass == 2 * self.n_edges


@dataclass(frozen=True)
class ClusteringPrediction:
    t: int
    c1: Fraction
    c2: Fraction
    average: Fraction
    empty_ranges: tuple

    @property
    def degenerate(self):
        return bool(self.empty_ranges)


@dataclass(frozen=True)
class MobiusRecurrence:
    p: Fraction
    q: Fraction
    r: Fraction
    s: Fraction
    a1: Fraction

    def __post_init__(self):
        for k in ['p', 'q', 'r', 's', 'a1']:
            object.__setattr__(self, k, Fraction(getattr(self, k)))
        if self.r == 0:
            raise DegenerateInputError('r must be nonzero')
        elif self.p * self.s - self.q * self.r == 0:
            raise DegenerateInputError('ps - qr must be nonzero')

    def step(self, a):
        denominator = self.r * a + self.s
        if denominator == 0:
            raise DegenerateInputError(f'orbit hits the pole at {a}')
        return (self.p * a + self.q) / denominator


class PowerProduct(object):
    """Exact positive integer kept as {base: exponent}."""

    def __init__(self, factors=None):
        self.factors = dict()
        for b, e in (factors or dict()).items():
            self._add(b, e)

    def _add(self, base, exponent):
        if base < 1 or exponent < 0:
            raise ValueError(f'invalid factor: {base}^{exponent}')
        elif base != 1 and exponent != 0:
            self.factors[base] = self.factors.get(base, 0) + exponent

    def __mul__(self, other):
        p = PowerProduct(self.factors)
        for b, e in other.factors.items():
            p._add(b, e)
        return p

    def __pow__(self, n):
        return PowerProduct({b: e * n for b, e in self.factors.items()})

    def __eq__(self, other):
        return (
            isinstance(other, PowerProduct) and self.factors == other.factors
        )

    def __repr__(self):
        return 'PowerProduct({})'.format(
            dict(sorted(self.factors.items()))
        )

    @property
    def log2(self):
        return sum(e * math.log2(b) for b, e in self.factors.items())

    def to_int(self):
        v = 1
        for b, e in sorted(self.factors.items()):
            v *= b ** e
        return v

    def materialize(self, bit_bound=None):
        bound = resource_bound('log2_bit_bound', override=bit_bound)
        return (self.to_int() if self.log2 < bound else self)

    def to_dict(self):
        return {str(b): e for b, e in sorted(self.factors.items())}


@dataclass(frozen=True)
class SpanningPredictions:
    t: int
    s1: object
    q: object
    spanning: object
    max_leaves: int
    mls_count: object
    theta_convention: str
    flags: tuple = field(default_factory=tuple)


def _pick_convention(general, row_literal, convention):
    if convention == 'general':
        return general
    elif convention == 'row-literal':
        return row_literal
    else:
        raise ValueError(f'invalid convention: {convention}')


def fibonacci(spec, n):
    if n < 1:
        raise ValueError(f'invalid n: {n}')
    terms = list(spec.seeds[:n])
    while len(terms) < n:
        terms.append(sum(terms[-spec.tau:]))
    return terms


def alpha_beta(t, adjusted=True):
    if t < 1:
        raise ValueError(f'invalid t: {t}')
    alpha = [1]
    beta = [1 if adjusted else 0]
    for _ in range(2, t + 1):
        alpha.append(sum(beta))
        beta.append(alpha[-2])
    return alpha, beta


def pendant_count(t):
    if t < 0:
        raise ValueError(f'invalid t: {t}')
    elif t == 0:
        return 0
    elif t == 1:
        return 4
    else:
        return (4 ** t - 4) // 3


def predict_counts(t):
    if t < 0:
        raise ValueError(f'invalid t: {t}')
    elif t in HAND_COUNTS:
        n_vertices, n_edges = HAND_COUNTS[t]
        source = 'hand-count'
    else:
        v = 17 * 4 ** (t - 1) - 3 ** t - 11
        e = 28 * 4 ** (t - 1) - 6 * 3 ** (t - 1) - 22
        assert v % 3 == 0 and e % 3 == 0, (v, e)
        n_vertices, n_edges = v // 3, e // 3
        source = 'closed-form'
    previous_pendant = (pendant_count(t - 1) if t > 0 else 0)
    delta_general = 2 * previous_pendant
    theta_general = previous_pendant
    return CountPrediction(
        t=t, n_vertices=n_vertices, n_edges=n_edges,
        pendant=pendant_count(t), delta_general=delta_general,
        delta_row_literal=ROW_LITERAL_DELTA.get(
            t, (0 if t == 0 else delta_general)
        ),
        theta_general=theta_general,
        theta_row_literal=ROW_LITERAL_THETA.get(
            t, (0 if t == 0 else theta_general)
        ),
        source=source
    )


def predict_average_degree(t):
    c = predict_counts(t)
    return Fraction(2 * c.n_edges, c.n_vertices)


def predict_n1(t):
    if t < 1:
        raise ValueError(f'invalid t: {t}')
    return (3 ** t + 3) // 2, 3 ** t


def predict_degree_table(t):
    if t < 3:
        raise ValueError(f'degree table needs t >= 3: {t}')
    v = {k: predict_counts(k).n_vertices for k in range(2, t + 1)}
    pairs = [(2 ** (t + 1), 4), (2 ** t, 2), (2 ** (t - 1), 18)]
    for ti in range(t - 2, 0, -1):
        pairs.append((
            2 ** ti,
            v[t + 1 - ti] - v[t - ti] - pendant_count(t + 1 - ti)
            + 2 * pendant_count(t - ti)
        ))
    pairs.append((1, pendant_count(t)))
    rows = [
        DegreeClassRow(rank=i, degree=k, count=n)
        for i, (k, n) in enumerate(pairs, start=1)
    ]
    c = predict_counts(t)
    return DegreeTablePrediction(
        t=t, rows=rows, degree_mass=sum(r.degree * r.count for r in rows),
        vertex_sum=sum(r.count for r in rows), n_vertices=c.n_vertices,
        n_edges=c.n_edges
    )


def _triangle_block(n):
    return Fraction(6 ** (n + 1) - 1, 5 * 2 ** n)


def _rectangle_block(m, alpha):
    return (
        sum(2 ** i for i in range(m + 1))
        + sum(
            alpha[i - 1] * (Fraction(2) ** (m - 1) - Fraction(2) ** (i - 1))
            for i in range(1, m)
        )
    )


def predict_clustering(t, delta_convention='row-literal'):
    if t < 1:
        raise ValueError(f'invalid t: {t}')
    empty_ranges = list()
    deltas = {
        j: predict_counts(j).delta(delta_convention)
        for j in [1, *range(3, t + 1)]
    }
    if t < 3:
        empty_ranges.append('triangle-sum')
    c1 = deltas[1] * _triangle_block(t - 1) + sum(
        deltas[j] * _triangle_block(t - j) for j in range(3, t + 1)
    )
    alpha, _ = alpha_beta(t, adjusted=True)
    terms = [
        Fraction(4) * _rectangle_block(t - 1, alpha)
        / (2 ** t * (2 ** (t + 1) - 1))
    ]
    if t >= 3:
        terms.append(
            Fraction(12) * _rectangle_block(t - 3, alpha)
            / (2 ** (t - 1) * (2 ** t - 1))
        )
    else:
        empty_ranges.append('young-rectangle-term')
    if t >= 6:
        terms.extend(
            Fraction(4 ** s - 4) * _rectangle_block(t - s - 2, alpha)
            / (2 ** (t - s - 1) * (2 ** (t - s) - 1))
            for s in range(2, t - 3)
        )
    else:
        empty_ranges.append('rectangle-sum')
    if t >= 4:
        terms.append(Fraction(3 * (4 ** (t - 3) - 4), 28))
        terms.append(Fraction(4 ** (t - 2) - 4, 6))
    else:
        empty_ranges.append('hub-terms')
    c2 = sum(terms)
    return ClusteringPrediction(
        t=t, c1=c1, c2=c2,
        average=((c1 + c2) / predict_counts(t).n_vertices),
        empty_ranges=tuple(empty_ranges)
    )


def _roots(rec):
    discriminant = (rec.s - rec.p) ** 2 + 4 * rec.r * rec.q
    if discriminant >= 0:
        num = math.isqrt(discriminant.numerator)
        den = math.isqrt(discriminant.denominator)
        if num * num == discriminant.numerator \
                and den * den == discriminant.denominator:
            root = Fraction(num, den)
            return (
                discriminant, (rec.p - rec.s + root) / (2 * rec.r),
                (rec.p - rec.s - root) / (2 * rec.r)
            )
    root = cmath.sqrt(float(discriminant))
    return (
        discriminant, (float(rec.p - rec.s) + root) / (2 * float(rec.r)),
        (float(rec.p - rec.s) - root) / (2 * float(rec.r))
    )


def _as_real(value):
    if isinstance(value, complex):
        if abs(value.imag) <= 1e-9 * max(1.0, abs(value.real)):
            return value.real
    return value


def iterate_moebius(rec, n):
    if n < 1:
        raise ValueError(f'invalid n: {n}')
    a = rec.a1
    for _ in range(n - 1):
        a = rec.step(a)
    return a


def solve_moebius(rec, n):
    if n < 1:
        raise ValueError(f'invalid n: {n}')
    discriminant, lam, mu = _roots(rec)
    a1 = (rec.a1 if isinstance(lam, Fraction) else float(rec.a1))
    if discriminant == 0:
        if a1 == lam:
            return lam
        c = 2 * rec.r / (rec.p + rec.s)
        denominator = 1 + (n - 1) * c * (a1 - lam)
        if denominator == 0:
            raise DegenerateInputError(f'closed form has a pole at n={n}')
        return lam + (a1 - lam) / denominator
    elif a1 == mu:
        raise DegenerateInputError(f'a1 equals the root mu: {mu}')
    if isinstance(lam, Fraction):
        k = (rec.p - lam * rec.r) / (rec.p - mu * rec.r)
    else:
        k = (float(rec.p) - lam * float(rec.r)) \
            / (float(rec.p) - mu * float(rec.r))
    kn = k ** (n - 1)
    denominator = (a1 - lam) * kn - (a1 - mu)
    if denominator == 0:
        raise DegenerateInputError(f'closed form has a pole at n={n}')
    return _as_real((mu * (a1 - lam) * kn - lam * (a1 - mu)) / denominator)


def _unit_exponents(t):
    a = (3 ** t - 1) // 2
    b = sum(3 ** i * (t - 1 - i) for i in range(t - 1))
    return a, b


def triangle_unit_count(t):
    if t < 1:
        raise ValueError(f'invalid t: {t}')
    a_prev = (3 ** (t - 1) - 1) // 2
    _, b = _unit_exponents(t)
    return PowerProduct({2: 3 ** (t - 1) - t + a_prev - b, 3: t + b})


def rectangle_unit_count(t):
    if t < 0:
        raise ValueError(f'invalid t: {t}')
    a, b = _unit_exponents(t)
    return PowerProduct({2: 1 + 2 * a - 2 * b - 2 * t, 3: 2 * b + t}) \
        * PowerProduct({2 ** t + 3 ** t: 1})


def _theta(t, convention):
    return (predict_counts(t).theta(convention) if t >= 0 else 0)


def spanning_tree_prediction(t, theta_convention='general'):
    if t < 0:
        raise ValueError(f'invalid t: {t}')
    flags = list()
    p = PowerProduct({4: _theta(t, theta_convention)})
    p = p * rectangle_unit_count(t)
    if t >= 2:
        p = p * rectangle_unit_count(t - 2) ** 4
    else:
        flags.append('empty-product:Q(t-2)')
    if t >= 4:
        for i in range(1, t - 2):
            p = p * rectangle_unit_count(i) ** _theta(t - i, theta_convention)
    else:
        flags.append('empty-product:Q(i)')
    return p, tuple(flags)


def _leaf_sum(t):
    return sum(
        3 ** (t - 1 - i) * (2 * (4 ** (i - 1) - 4) // 3) for i in range(3, t)
    )


def predict_max_leaves(t):
    if t < 3:
        return None
    return 17 * 4 ** (t - 2) + _leaf_sum(t)


def predict_spanning(t, theta_convention='general', bit_bound=None):
    if t < 0:
        raise ValueError(f'invalid t: {t}')
    flags = list()
    spanning, spanning_flags = spanning_tree_prediction(t, theta_convention)
    flags.extend(spanning_flags)
    if t >= 3:
        previous, _ = spanning_tree_prediction(t - 2, theta_convention)
        mls = PowerProduct(
            {3: (4 ** (t - 1) - 4) // 3, 2: _leaf_sum(t)}
        ) * previous
    else:
        mls = None
        flags.append('domain:max-leaves')
    return SpanningPredictions(
        t=t,
        s1=(
            triangle_unit_count(t).materialize(bit_bound) if t >= 1 else None
        ),
        q=rectangle_unit_count(t).materialize(bit_bound),
        spanning=spanning.materialize(bit_bound),
        max_leaves=predict_max_leaves(t),
        mls_count=(mls.materialize(bit_bound) if mls else None),
        theta_convention=theta_convention, flags=tuple(flags)
    )
