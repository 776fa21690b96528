# -*- coding: utf-8 -*-
# vim: tabstop=4 shiftwidth=4 softtabstop=4
"""
Periodic orbits of F_q.

A cycle is stored canonically, rotated to start at its minimum x0; its
parity vector then starts with a one and ends with a zero. Cycles are
found two ways:

    * orbit search: follow T_q from every seed n <= n_max (Brent's cycle
      detection, abandoning orbits that drop below their seed);
    * parity enumeration: solve the first periodicity condition
      x0 = sum_j 2^j q^{|A|_j^{p-1}} / (2^p - q^{P_p}) for every admissible
      vector A of length p <= p_max.

Search kernels take and return JSON-able values so that `qcollatz.tasks`
can ship them to workers; a SearchReport absorbs their results in chunk
order.
"""

import itertools
import math

import mpmath

from qcollatz import flags
from qcollatz import logs
from qcollatz import maps
from qcollatz import parity
from qcollatz.job import ChunkSplitter
from qcollatz.maps import CqInt, DomainError, Multiplier
from qcollatz.parity import ParityVector

LOG = logs.SEARCH_LOG

ORBIT = 'orbit'
PARITY_ENUM = 'parity'
CLASS_SCAN = 'class'
METHODS = (ORBIT, PARITY_ENUM, CLASS_SCAN)


class NoAdmissibleClass(DomainError):
    """The congruence for a cycle seed falls in the residue class zero."""


class GFunction(object):
    """g(0) > g(1) > ... > g(P-1) = 0: the positions of the ones of a cycle
    vector read from the right."""

    def __init__(self, values, period):
        values = tuple(values)
        if not values:
            raise DomainError("g is defined for vectors with ones")
        if any(b >= a for a, b in zip(values, values[1:])):
            raise DomainError("g must be strictly decreasing: %r" % (values,))
        if values[-1] < 0 or values[0] > period - 2:
            raise DomainError("g values lie in [0, %s]: %r" % (
                    period - 2, values))
        self.values = values
        self.period = period

    @property
    def s(self):
        """One past the last one of the vector."""
        return self.values[0] + 1

    def vector(self):
        bits = [0] * self.period
        for position in self.values:
            bits[position] = 1
        return ParityVector(bits)

    def __len__(self):
        return len(self.values)

    def __getitem__(self, index):
        return self.values[index]

    def __eq__(self, other):
        return isinstance(other, GFunction) and \
            (self.values, self.period) == (other.values, other.period)

    def __repr__(self):
        return "GFunction(%r)" % (self.values,)


def g_function(A):
    """Positions of the ones of A scanned from the right."""
    if A.total < 1:
        raise DomainError("g needs a vector with at least one one: %s" % A)
    if A[len(A) - 1] != 0:
        raise DomainError("a cycle vector ends with a zero: %s" % A)
    return GFunction(reversed(A.ones()), len(A))


class Cycle(object):
    """A periodic orbit of F_q rotated to start at its minimum."""

    def __init__(self, q, orbit):
        self.q = Multiplier.of(q)
        orbit = [int(x) for x in orbit]
        if not orbit:
            raise DomainError("empty orbit")
        for x in orbit:
            maps.check_member(self.q, x)
        start = orbit.index(min(orbit))
        orbit = orbit[start:] + orbit[:start]
        for j, x in enumerate(orbit):
            _, nxt = maps.f_step(self.q, x)
            if nxt != orbit[(j + 1) % len(orbit)]:
                raise DomainError("not an orbit of F_%s at %s" % (self.q.q, x))
        self.orbit = tuple(orbit)
        if len(set(self.orbit)) != len(self.orbit):
            raise DomainError("orbit repeats before closing: period is not "
                              "prime")
        self.parity = ParityVector(
            1 if (x - 1) % self.q.four_qm1 else 0 for x in self.orbit)

    @classmethod
    def from_seed(cls, q, x0, max_period):
        """Follow F_q from x0 until it returns, at most max_period steps."""
        q = Multiplier.of(q)
        maps.check_member(q, x0)
        orbit = [int(x0)]
        x = int(x0)
        for _ in range(max_period):
            _, x = maps.f_step(q, x)
            if x == orbit[0]:
                return cls(q, orbit)
            orbit.append(x)
        raise DomainError("%s does not return within %s steps of F_%s" % (
                x0, max_period, q.q))

    @classmethod
    def from_n_orbit(cls, q, orbit):
        q = Multiplier.of(q)
        return cls(q, [q.two_qm1 * n + 1 for n in orbit])

    @property
    def min_seed_x(self):
        return CqInt(self.q, self.orbit[0])

    @property
    def min_seed_n(self):
        return (self.orbit[0] - 1) // self.q.two_qm1

    @property
    def period(self):
        return len(self.orbit)

    @property
    def total_parity(self):
        return self.parity.total

    @property
    def coefficient(self):
        return self.parity.coefficient

    @property
    def s(self):
        return self.parity.ones()[-1] + 1

    @property
    def class_h(self):
        return self.min_seed_n % self.q.q

    @property
    def lam(self):
        return self.min_seed_n // self.q.q

    @property
    def key(self):
        return (self.q.q, self.min_seed_n)

    def n_orbit(self):
        return [(x - 1) // self.q.two_qm1 for x in self.orbit]

    def invariant_failures(self):
        """Names of the structural properties this cycle fails."""
        failures = []
        if self.parity[0] != 1 or self.parity[self.period - 1] != 0:
            failures.append('tail')
        if self.period < 2:
            failures.append('period')
        if not 1 <= self.class_h <= self.q.q - 1:
            failures.append('class')
        elif self.class_h % 2 == self.lam % 2:
            failures.append('lambda_parity')
        if math.gcd(self.total_parity, self.period) != 1:
            failures.append('coprime')
        return failures

    def to_dict(self):
        return {'q': self.q.q,
                'n0': self.min_seed_n,
                'x0': self.orbit[0],
                'p': self.period,
                'P_p': self.total_parity,
                's': self.s,
                'h': self.class_h,
                'lambda': self.lam,
                'parity': str(self.parity)}

    @classmethod
    def from_dict(cls, row):
        """Rebuild a cycle from a catalog row by following F_q from its x0
        for p steps; the remaining fields are left for `mismatches`."""
        return cls.from_seed(row['q'], row['x0'], row['p'])

    def mismatches(self, row):
        """Fields of a catalog row that disagree with this cycle."""
        expected = self.to_dict()
        return sorted(name for name in expected
                      if name in row and row[name] != expected[name])

    def __eq__(self, other):
        return isinstance(other, Cycle) and \
            (self.q, self.orbit) == (other.q, other.orbit)

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return "<Cycle q=%s n0=%s p=%s P=%s>" % (
            self.q.q, self.min_seed_n, self.period, self.total_parity)


def first_periodicity_solve(q, A):
    """x0 = sum_j 2^j q^{|A|_j^{p-1}} / (2^p - q^{P_p}) when that is a member
    of Z_cq with parity vector A; None otherwise."""
    q = Multiplier.of(q)
    p = len(A)
    if p < 2 or A[0] != 1 or A[p - 1] != 0:
        raise DomainError("cycle vectors start with 1 and end with 0: %s" % A)
    denominator = (1 << p) - q.q ** A.total
    if denominator <= 0:
        return None
    x0, remainder = divmod(parity.power_sum(q, A), denominator)
    if remainder or not maps.is_member(q, x0):
        return None
    if parity.parity_vector(q, x0, p) != A:
        return None
    return CqInt(q, x0)


def second_periodicity_check(q, n0, A):
    """(2^p - q^{P_p}) n0 == sum_j 2^{g(j)} q^j."""
    q = Multiplier.of(q)
    p = len(A)
    if p < 2 or A[0] != 1 or A[p - 1] != 0:
        raise DomainError("cycle vectors start with 1 and end with 0: %s" % A)
    g = g_function(A)
    right = sum(q.q ** j << g_j for j, g_j in enumerate(g.values))
    return ((1 << p) - q.q ** A.total) * n0 == right


def cycle_congruence_solve(q, p, s):
    """Solve 2^p n - q m = 2^{s-1}: the class h = n mod q and the particular
    solution m0 belonging to n = h."""
    q = Multiplier.of(q)
    if not 1 <= s <= p - 1:
        raise DomainError("need 1 <= s <= p - 1, got s=%s p=%s" % (s, p))
    inverse = maps.mod_inverse(pow(2, p, q.q), q.q)
    h = pow(2, s - 1, q.q) * inverse % q.q
    if h == 0:
        raise NoAdmissibleClass("q=%s p=%s s=%s falls in class 0" % (
                q.q, p, s))
    m0, remainder = divmod((h << p) - (1 << (s - 1)), q.q)
    assert remainder == 0
    return {'h': h, 'm0': m0}


def class_exclusions(q):
    """Classes h = m d (d a proper divisor of q, m d <= q - 1) that hold no
    cycle. Empty for prime q."""
    q = Multiplier.of(q)
    excluded = set()
    for d in maps.nontrivial_divisors(q.q):
        excluded.update(range(d, q.q, d))
    return excluded


def divisor_condition(q, c):
    """q divides h 2^{p - g(0)} - 1."""
    q = Multiplier.of(q)
    g = g_function(c.parity)
    k = c.period - g.values[0]
    return (c.class_h * 2 ** k - 1) % q.q == 0


def bounds_detail(q, c):
    """The parity-coefficient conditions of a cycle, each decided exactly.

    log_identity: q^P = prod_j 2x_j/(x_j+1)
    min_ratio:    (2q-1)/q <= 2x_m/(x_m+1)
    sandwich:     (2x_m/(x_m+1))^p < q^P < (2x_M/(x_M+1))^p
    margin:       0 < 2 - q^{P/p} < 1/q
    """
    q = Multiplier.of(q)
    p, P = c.period, c.total_parity
    q_P = q.q ** P
    numerator = denominator = 1
    for x in c.orbit:
        numerator *= 2 * x
        denominator *= x + 1
    x_m, x_M = min(c.orbit), max(c.orbit)
    return {
        'log_identity': q_P * denominator == numerator,
        'min_ratio': (2 * q.q - 1) * (x_m + 1) <= 2 * q.q * x_m,
        'sandwich': ((2 * x_m) ** p < q_P * (x_m + 1) ** p and
                     q_P * (x_M + 1) ** p < (2 * x_M) ** p),
        'margin': ((1 << p) > q_P and
                   q.q ** (P + p) > (2 * q.q - 1) ** p),
    }


def parity_coeff_bounds_check(q, c):
    return all(bounds_detail(q, c).values())


def cycle_margin(c, dps=30, max_dps=960):
    """Certified enclosure of 2 - q^{P/p}, refined until its width is below
    a millionth of its lower end. Returns nstr'd endpoints and 1/q."""
    q, P, p = c.q.q, c.total_parity, c.period
    iv = mpmath.iv
    saved = iv.prec
    try:
        while True:
            iv.dps = dps
            value = 2 - iv.exp(iv.log(iv.mpf(q)) * P / p)
            with mpmath.workprec(iv.prec):
                low, high = mpmath.mpf(value.a), mpmath.mpf(value.b)
            if (low > 0 and high - low < low * mpmath.mpf('1e-6')) or \
                    dps >= max_dps:
                break
            dps *= 2
        return {'low': mpmath.nstr(low, 12), 'high': mpmath.nstr(high, 12),
                'inverse_q': mpmath.nstr(mpmath.mpf(1) / q, 12), 'dps': dps}
    finally:
        iv.prec = saved


def mersenne_trivial_cycle(p):
    """The trivial cycle of q = 2^p - 1: n-orbit 1, 2^{p-1}, ..., 2."""
    if p < 2:
        raise DomainError("Mersenne exponent must be >= 2, got %s" % p)
    q = Multiplier((1 << p) - 1)
    cycle = Cycle.from_seed(q, q.trivial_seed, p)
    if cycle.period != p or \
            not second_periodicity_check(q, 1, cycle.parity):
        raise DomainError("trivial cycle of q=%s fails the periodicity "
                          "condition" % q.q)
    return cycle


def orbit_outcome(q, n0, step_cap, size_cap_bits):
    """Follow T_q from n0 with Brent's cycle detection.

    Returns ('descended', None) once the orbit drops below n0,
    ('cycled', n) with n on the cycle reached, or ('undetermined', None)
    when a cap is hit first."""
    qv = q.q
    tortoise = n0
    hare = (qv * n0 + 1) >> 1 if n0 & 1 else n0 >> 1
    power = lam = 1
    steps = 1
    while hare != tortoise:
        if hare < n0:
            return 'descended', None
        if steps >= step_cap or hare.bit_length() > size_cap_bits:
            return 'undetermined', None
        if power == lam:
            tortoise = hare
            power *= 2
            lam = 0
        hare = (qv * hare + 1) >> 1 if hare & 1 else hare >> 1
        lam += 1
        steps += 1
    return 'cycled', hare


def _n_cycle_through(q, n):
    """The n-orbit of the cycle through n, rotated to its minimum."""
    orbit = [n]
    value = maps.t_step(q, n)[1]
    while value != n:
        orbit.append(value)
        value = maps.t_step(q, value)[1]
    start = orbit.index(min(orbit))
    return orbit[start:] + orbit[:start]


def orbit_chunk(q, lo, hi, step_cap, size_cap_bits):
    """Orbit search over seeds lo..hi-1."""
    q = Multiplier.of(q)
    found = {}
    counts = {'seeds': 0, 'cycled': 0, 'descended': 0, 'undetermined': 0}
    for n0 in range(lo, hi):
        outcome, on_cycle = orbit_outcome(q, n0, step_cap, size_cap_bits)
        counts['seeds'] += 1
        counts[outcome] += 1
        if on_cycle is not None:
            orbit = _n_cycle_through(q, on_cycle)
            found.setdefault(orbit[0], orbit)
    return {'cycles': [found[key] for key in sorted(found)], 'counts': counts}


def class_lambdas(h, lam_lo, lam_hi):
    """lambda values in [lam_lo, lam_hi) of opposite parity to h."""
    first = lam_lo + ((lam_lo + h + 1) % 2)
    return range(first, lam_hi, 2)


def class_chunk(q, h, lam_lo, lam_hi, step_cap, size_cap_bits):
    """Scan seeds n = h + lambda q for lambda in [lam_lo, lam_hi), keeping
    the cycles whose minimum lies in class h."""
    q = Multiplier.of(q)
    found = {}
    counts = {'seeds': 0, 'cycled': 0, 'descended': 0, 'undetermined': 0}
    for lam in class_lambdas(h, lam_lo, lam_hi):
        n0 = h + lam * q.q
        outcome, on_cycle = orbit_outcome(q, n0, step_cap, size_cap_bits)
        counts['seeds'] += 1
        counts[outcome] += 1
        if on_cycle is not None:
            orbit = _n_cycle_through(q, on_cycle)
            if orbit[0] % q.q == h:
                found.setdefault(orbit[0], orbit)
    return {'cycles': [found[key] for key in sorted(found)], 'counts': counts}


def admissible_totals(q, p):
    """Total parities P >= 1 with 2^p > q^P."""
    q = Multiplier.of(q)
    totals = []
    P = 1
    while q.q ** P < (1 << p) and P <= p - 1:
        totals.append(P)
        P += 1
    return totals


def parity_plan(q, p_max):
    """(p, P, vector count) for every length and admissible total parity.

    Vectors have a_0 = 1 and a_{p-1} = 0, so P - 1 ones are placed among
    the p - 2 middle positions."""
    plan = []
    for p in range(2, p_max + 1):
        for P in admissible_totals(q, p):
            plan.append((p, P, math.comb(p - 2, P - 1)))
    return plan


def parity_chunk(q, p, P, start, stop):
    """First periodicity condition for the vectors of length p and total
    parity P with combination index in [start, stop)."""
    q = Multiplier.of(q)
    found = {}
    counts = {'vectors': 0, 'repetitions': 0, 'solutions': 0}
    middles = itertools.combinations(range(1, p - 1), P - 1)
    for middle in itertools.islice(middles, start, stop):
        counts['vectors'] += 1
        bits = [0] * p
        bits[0] = 1
        for position in middle:
            bits[position] = 1
        vector = ParityVector(bits)
        if vector.is_repetition():
            counts['repetitions'] += 1
            continue
        x0 = first_periodicity_solve(q, vector)
        if x0 is None:
            continue
        counts['solutions'] += 1
        cycle = Cycle.from_seed(q, x0, p)
        found.setdefault(cycle.min_seed_n, cycle.n_orbit())
    return {'cycles': [found[key] for key in sorted(found)], 'counts': counts}


class SearchReport(object):
    """Cycles found by one search, what was scanned, and whether the
    search stopped short of its bounds."""

    def __init__(self, q, method, bounds=None):
        if method not in METHODS:
            raise DomainError("unknown search method %r" % method)
        self.q = Multiplier.of(q)
        self.method = method
        self.bounds = dict(bounds or {})
        self.cycles = {}
        self.scanned = {}
        self.partial = False
        self.checkpoint = {}

    @property
    def pi_count(self):
        return len(self.cycles)

    def add_cycle(self, cycle):
        self.cycles.setdefault(cycle.min_seed_n, cycle)

    def absorb(self, result):
        """Fold in the result of one search kernel."""
        for orbit in result['cycles']:
            self.add_cycle(Cycle.from_n_orbit(self.q, orbit))
        for name, count in result['counts'].items():
            self.scanned[name] = self.scanned.get(name, 0) + count
        if result.get('partial'):
            self.partial = True
        return self

    def merge(self, other):
        if (other.q, other.method) != (self.q, self.method):
            raise DomainError("cannot merge reports of different searches")
        for cycle in other.sorted_cycles():
            self.add_cycle(cycle)
        for name, count in other.scanned.items():
            self.scanned[name] = self.scanned.get(name, 0) + count
        self.partial = self.partial or other.partial
        return self

    def sorted_cycles(self):
        return [self.cycles[key] for key in sorted(self.cycles)]

    @property
    def undetermined(self):
        return self.scanned.get('undetermined', 0)

    def to_dict(self):
        return {'q': self.q.q,
                'method': self.method,
                'bounds': dict(self.bounds),
                'cycles': [c.to_dict() for c in self.sorted_cycles()],
                'pi_count': self.pi_count,
                'scanned': dict(self.scanned),
                'partial': self.partial,
                'checkpoint': dict(self.checkpoint)}

    @classmethod
    def from_dict(cls, data):
        report = cls(data['q'], data['method'], data.get('bounds'))
        for row in data.get('cycles', ()):
            report.add_cycle(Cycle.from_dict(row))
        report.scanned = dict(data.get('scanned', {}))
        report.partial = bool(data.get('partial', False))
        report.checkpoint = dict(data.get('checkpoint', {}))
        return report


def find_cycles_orbit(q, n_max, step_cap, size_cap_bits, chunk_size=1000):
    """Orbit search over seeds 1..n_max, in process."""
    q = Multiplier.of(q)
    if n_max < 1:
        raise DomainError("n_max must be >= 1, got %s" % n_max)
    report = SearchReport(q, ORBIT, {'n_max': n_max, 'step_cap': step_cap,
                                     'size_cap_bits': size_cap_bits})
    for lo, hi in ChunkSplitter(1, n_max + 1, chunk_size):
        report.absorb(orbit_chunk(q, lo, hi, step_cap, size_cap_bits))
        LOG.debug("q=%s orbit search through %s: %s cycles", q.q, hi - 1,
                  report.pi_count)
    return report


def parity_chunks(q, p_max, budget=None, chunk_size=100000):
    """Split the parity plan into (p, P, start, stop) chunks within the
    enumeration budget. The flag is True when the budget cut the plan."""
    if budget is None:
        budget = flags.default('enumeration_budget')
    chunks, spent, cut = [], 0, False
    for p, P, count in parity_plan(q, p_max):
        if spent + count > budget:
            cut = True
            break
        spent += count
        for start in range(0, count, chunk_size):
            chunks.append((p, P, start, min(start + chunk_size, count)))
    return chunks, cut


def find_cycles_parity_enum(q, p_max, budget=None):
    """Parity enumeration for every period 2..p_max, in process."""
    q = Multiplier.of(q)
    if p_max < 2:
        raise DomainError("p_max must be >= 2, got %s" % p_max)
    report = SearchReport(q, PARITY_ENUM, {'p_max': p_max})
    chunks, cut = parity_chunks(q, p_max, budget)
    for p, P, start, stop in chunks:
        report.absorb(parity_chunk(q, p, P, start, stop))
    if cut:
        LOG.warning("q=%s parity enumeration cut by the budget", q.q)
        report.partial = True
    return report


def check_class(q, h):
    q = Multiplier.of(q)
    if not 1 <= h <= q.q - 1:
        raise DomainError("class h must lie in [1, %s], got %s" % (
                q.q - 1, h))
    if h in class_exclusions(q):
        raise DomainError("class %s of q=%s is excluded (shares a divisor "
                          "with q)" % (h, q.q))


def scan_class(q, h, lambda_max, step_cap, size_cap_bits, chunk_size=1000):
    """Look for cycles whose minimum is h + lambda q, lambda <= lambda_max.

    A bounded scan: finding nothing says nothing past lambda_max."""
    q = Multiplier.of(q)
    check_class(q, h)
    report = SearchReport(q, CLASS_SCAN, {
            'h': h, 'lambda_max': lambda_max, 'step_cap': step_cap,
            'size_cap_bits': size_cap_bits})
    for lo, hi in ChunkSplitter(0, lambda_max + 1, chunk_size):
        report.absorb(class_chunk(q, h, lo, hi, step_cap, size_cap_bits))
    return report


def count_cycles(q_values, n_max, step_cap, size_cap_bits):
    """Bounded pi(F_q) for several multipliers."""
    return dict((int(q), find_cycles_orbit(q, n_max, step_cap,
                                          size_cap_bits).pi_count)
                for q in q_values)


def _trivial_tails(q, remainder, count, top):
    """All g with top > g(0) > ... > g(count-1) = 0 and
    remainder = sum_j 2^{g(j)} q^j."""
    if count == 1:
        return [(0,)] if remainder == 1 and top > 0 else []
    tails = []
    for g0 in range(count - 1, top):
        rest = remainder - (1 << g0)
        if rest <= 0:
            break
        if rest % q == 0:
            for tail in _trivial_tails(q, rest // q, count - 1, g0):
                tails.append((g0,) + tail)
    return tails


def search_trivial_cycles(P_target, q_max, p_max):
    """Solutions (q, p, g) of 2^p = q^P + sum_j 2^{g(j)} q^j with odd
    3 <= q <= q_max, 2 <= p <= p_max and prime period p."""
    if P_target < 1:
        raise DomainError("total parity must be >= 1, got %s" % P_target)
    found = []
    for q in range(3, q_max + 1, 2):
        q_P = q ** P_target
        for p in range(2, p_max + 1):
            remainder = (1 << p) - q_P
            if remainder <= 0:
                continue
            for g in _trivial_tails(q, remainder, P_target, p - 1):
                if GFunction(g, p).vector().is_repetition():
                    continue
                found.append((q, p, g))
    LOG.debug("trivial-cycle search P=%s: %s solutions", P_target, len(found))
    return found
