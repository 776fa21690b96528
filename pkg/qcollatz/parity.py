# -*- coding: utf-8 -*-
# vim: tabstop=4 shiftwidth=4 softtabstop=4
"""
Parity-vector algebra.

A parity vector A = (a_0, ..., a_{k-1}) collects alpha_q along the first k
iterates of a seed. Partial parities |A|_i^j, the total parity P_k and the
parity coefficient mu_k = P_k/k are read off a suffix-sum cache. Seeds in
[1, 2^k] and vectors of length k are in bijection; `seed_from_parity`
inverts `parity_vector` by lifting the seed one bit per step.
"""

from fractions import Fraction

import numpy

from qcollatz import flags
from qcollatz import logs
from qcollatz import maps
from qcollatz.maps import DomainError, Multiplier

LOG = logs.LOG

DEFAULT_CHUNK = 4096


class BudgetExceeded(Exception):
    """An exhaustive enumeration larger than the configured budget."""

    def __init__(self, what, size, budget):
        super(BudgetExceeded, self).__init__(
            "%s needs %s evaluations, budget is %s" % (what, size, budget))
        self.what = what
        self.size = size
        self.budget = budget


def check_budget(what, size, budget=None):
    """Raise BudgetExceeded when size is over budget (the
    --enumeration_budget flag by default)."""
    if budget is None:
        budget = flags.default('enumeration_budget')
    if size > budget:
        raise BudgetExceeded(what, size, budget)


class ParityVector(object):
    """A finite parity vector with cached suffix sums.

    suffix_sums[j] = |A|_j^{k-1} for 0 <= j < k, and suffix_sums[k] = 0
    closes the cache so that prefix counts need no special case."""

    __slots__ = ('bits', 'suffix_sums')

    def __init__(self, bits):
        bits = tuple(int(b) for b in bits)
        if not bits:
            raise DomainError("a parity vector has length >= 1")
        if any(b not in (0, 1) for b in bits):
            raise DomainError("parity bits are 0 or 1, got %r" % (bits,))
        sums = [0] * (len(bits) + 1)
        for j in range(len(bits) - 1, -1, -1):
            sums[j] = sums[j + 1] + bits[j]
        self.bits = bits
        self.suffix_sums = tuple(sums)

    @classmethod
    def from_string(cls, text):
        """Parse a '0'/'1' string, leftmost character first."""
        text = text.strip()
        if not text or set(text) - set('01'):
            raise DomainError("not a parity bitstring: %r" % text)
        return cls(int(c) for c in text)

    @classmethod
    def from_code(cls, code, k):
        """Vector whose bit j is bit j of the integer code."""
        return cls((code >> j) & 1 for j in range(k))

    @property
    def code(self):
        """Integer with bit j equal to a_j."""
        value = 0
        for j, bit in enumerate(self.bits):
            value |= bit << j
        return value

    @property
    def total(self):
        """P_k, the number of ones."""
        return self.suffix_sums[0]

    @property
    def coefficient(self):
        """mu_k = P_k/k."""
        return Fraction(self.total, len(self.bits))

    def partial(self, i, j):
        """|A|_i^j, the number of ones among a_i..a_j."""
        if not 0 <= i <= j < len(self.bits):
            raise IndexError("partial parity needs 0 <= i <= j < %s, got "
                             "(%s, %s)" % (len(self.bits), i, j))
        return self.suffix_sums[i] - self.suffix_sums[j + 1]

    def prefix_total(self, j):
        """P_j, the ones among the first j bits."""
        return self.suffix_sums[0] - self.suffix_sums[j]

    def ones(self):
        """Positions of the ones, ascending."""
        return [j for j, bit in enumerate(self.bits) if bit]

    def primitive_period(self):
        """Least d with A equal to its first d bits repeated."""
        k = len(self.bits)
        for d in range(1, k + 1):
            if k % d == 0 and self.bits == self.bits[:d] * (k // d):
                return d
        return k

    def is_repetition(self):
        return self.primitive_period() < len(self.bits)

    def rotate(self, i):
        """The vector read from position i, cyclically."""
        i %= len(self.bits)
        return ParityVector(self.bits[i:] + self.bits[:i])

    def __len__(self):
        return len(self.bits)

    def __iter__(self):
        return iter(self.bits)

    def __getitem__(self, index):
        return self.bits[index]

    def __eq__(self, other):
        if isinstance(other, ParityVector):
            return self.bits == other.bits
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash(self.bits)

    def __reduce__(self):
        return (ParityVector, (self.bits,))

    def __str__(self):
        return ''.join(str(b) for b in self.bits)

    def __repr__(self):
        return "ParityVector('%s')" % self


def parity_vector(q, x0, k):
    """(alpha_q(F^j(x0)))_{j<k}."""
    q = Multiplier.of(q)
    maps.check_member(q, x0)
    if k < 1:
        raise DomainError("parity vector length must be >= 1, got %s" % k)
    bits = []
    x = int(x0)
    for _ in range(k):
        bit, x = maps.f_step(q, x)
        bits.append(bit)
    return ParityVector(bits)


def partial_parity(A, i, j):
    return A.partial(i, j)


def parity_coefficient(A):
    return A.coefficient


def seed_from_parity(q, A):
    """The unique n0 in [1, 2^k] whose conjugate has parity vector A.

    Bit j of the seed is forced by step j: flipping it changes T^j of the
    partial seed by q^{P_j}, an odd number, and leaves the earlier
    parities alone."""
    q = Multiplier.of(q)
    seed, value = 0, 0
    power = 1
    for j, bit in enumerate(A.bits):
        if value & 1 != bit:
            seed += 1 << j
            value += power
        if bit:
            value = (q.q * value + 1) >> 1
            power *= q.q
        else:
            value >>= 1
    return seed or 1 << len(A)


def seed_from_parity_bruteforce(q, A):
    """Scan [1, 2^k] for the seed of A; the oracle for seed_from_parity."""
    q = Multiplier.of(q)
    k = len(A)
    for n0 in range(1, 2 ** k + 1):
        if parity_vector(q, maps.conjugate(q, n0), k) == A:
            return n0
    raise DomainError("no seed in [1, 2^%s] has parity %s" % (k, A))


def fits_machine_word(q, k, n_max):
    """True when k steps of T_q from any seed <= n_max stay in int64.

    T_q(n) <= (q+1)/2 n, and q*n + 1 needs one extra bit."""
    q = Multiplier.of(q)
    growth_bits = ((q.q + 1) // 2 - 1).bit_length()
    return int(n_max).bit_length() + k * growth_bits + 1 <= 63


def seed_walk(q, k, lo, hi):
    """Parity codes and total parities of k steps for seeds lo..hi-1.

    Returns two lists, code (bit j = parity at step j) and P_k, in seed
    order. Uses vectorised int64 arithmetic when fits_machine_word proves
    it exact, Python integers otherwise."""
    q = Multiplier.of(q)
    if hi <= lo:
        return [], []
    if k <= 62 and fits_machine_word(q, k, hi - 1):
        values = numpy.arange(lo, hi, dtype=numpy.int64)
        codes = numpy.zeros(values.shape, dtype=numpy.int64)
        totals = numpy.zeros(values.shape, dtype=numpy.int64)
        for j in range(k):
            odd = values & 1
            totals += odd
            codes |= odd << j
            values = numpy.where(odd == 1, (q.q * values + 1) >> 1,
                                 values >> 1)
        return [int(c) for c in codes], [int(t) for t in totals]
    return seed_walk_exact(q, k, lo, hi)


def seed_walk_exact(q, k, lo, hi):
    """seed_walk on Python integers only."""
    q = Multiplier.of(q)
    codes, totals = [], []
    qv = q.q
    for n0 in range(lo, hi):
        n, code, ones = n0, 0, 0
        for j in range(k):
            if n & 1:
                code |= 1 << j
                ones += 1
                n = (qv * n + 1) >> 1
            else:
                n >>= 1
        codes.append(code)
        totals.append(ones)
    return codes, totals


def verify_bijection(q, k, budget=None, chunk_size=DEFAULT_CHUNK):
    """Check that the 2^k seeds of [1, 2^k] have pairwise distinct parity
    vectors of length k. Seeds are walked in chunks and merged into one
    occupancy table."""
    q = Multiplier.of(q)
    if k < 1:
        raise DomainError("vector length must be >= 1, got %s" % k)
    size = 2 ** k
    check_budget("verify_bijection(q=%s, k=%s)" % (q.q, k), size, budget)
    hits = numpy.zeros(size, dtype=numpy.int64)
    for lo in range(1, size + 1, chunk_size):
        hi = min(lo + chunk_size, size + 1)
        codes, _ = seed_walk(q, k, lo, hi)
        hits += numpy.bincount(codes, minlength=size)
    distinct = bool((hits == 1).all())
    LOG.debug("bijection q=%s k=%s distinct=%s", q.q, k, distinct)
    return {'distinct': distinct, 'count': int(hits.sum())}


def power_sum(q, A):
    """Sum over j < k of 2^j q^{|A|_j^{k-1}}, the additive term shared by the
    closed form of F^k and the periodicity condition."""
    q = Multiplier.of(q)
    total, power = 0, 1
    for j in range(len(A.bits) - 1, -1, -1):
        if A.bits[j]:
            power *= q.q
        total += power << j
    return total
