# -*- coding: utf-8 -*-
# vim: tabstop=4 shiftwidth=4 softtabstop=4
"""
The binomial model of the parity coefficient M_k.

Over the seeds n0 in [1, 2^k] every parity vector of length k occurs once,
so P_k is exactly Binomial(k, 1/2). The functions here give the exact law,
its moments, the Chebyshev lower bound for P(M_k > ln2/ln q) and the
empirical counterparts: histograms of P_k (exhaustive or sampled) and the
fraction of seeds above the divergence threshold.
"""

# pylint: disable=C0103

from fractions import Fraction

import numpy
from scipy import special
from scipy import stats as sp_stats

from qcollatz import logs
from qcollatz import maps
from qcollatz import parity
from qcollatz.job import ChunkSplitter
from qcollatz.maps import DomainError, Multiplier

LOG = logs.STATS_LOG

EXHAUSTIVE = 'exhaustive'
SAMPLED = 'sampled'
RANGE = 'range'
MODES = (EXHAUSTIVE, SAMPLED, RANGE)

WORD_BITS = 64


class MuHistogram(object):
    """Counts of P_k over a set of seeds."""

    def __init__(self, q, k, mode, counts, seed=None, seeds=None):
        self.q = Multiplier.of(q)
        self.k = k
        self.mode = mode
        self.counts = [int(c) for c in counts]
        self.seed = seed
        self.seeds = seeds
        if len(self.counts) != k + 1:
            raise DomainError("histogram of P_%s needs %s bins" % (k, k + 1))

    @property
    def total(self):
        return sum(self.counts)

    def tail(self, m_min):
        """Seeds with P_k >= m_min."""
        return sum(self.counts[m_min:])

    def expected(self):
        """Binomial(k, 1/2) expectation of each bin for this total."""
        return sp_stats.binom.pmf(numpy.arange(self.k + 1), self.k, 0.5) * \
            self.total

    def rows(self):
        return [(m, count) for m, count in enumerate(self.counts)]

    def to_dict(self):
        return {'q': self.q.q, 'k': self.k, 'mode': self.mode,
                'generator_seed': self.seed, 'seeds': self.seeds,
                'total': self.total,
                'counts': dict((str(m), c) for m, c in self.rows())}


class DensityEstimate(object):
    """Fraction of seeds whose mu_k exceeds ln2/ln q."""

    THRESHOLD_NOTE = ("strict: mu_k > ln2/ln q, decided as q^P_k > 2^k; "
                      "ln2/ln q is irrational so no seed sits on it")

    def __init__(self, histogram, t):
        self.histogram = histogram
        self.q = histogram.q
        self.k = histogram.k
        self.t = t
        self.threshold = divergence_threshold(self.q, self.k)
        self.count = histogram.tail(self.threshold)
        self.total = histogram.total
        self.fraction = Fraction(self.count, self.total) if self.total \
            else Fraction(0)

    def to_dict(self):
        data = {'q': self.q.q, 'k': self.k, 't': self.t,
                'mode': self.histogram.mode,
                'generator_seed': self.histogram.seed,
                'count': self.count, 'total': self.total,
                'fraction': self.fraction,
                'threshold_m': self.threshold,
                'threshold_note': self.THRESHOLD_NOTE}
        if self.q.q >= 5:
            data['chebyshev_bound'] = chebyshev_divergence_bound(self.q,
                                                                 self.k)
        return data


def binomial_pmf(k, m):
    """C(k, m) / 2^k."""
    if k < 0 or not 0 <= m <= k:
        raise DomainError("need 0 <= m <= k, got k=%s m=%s" % (k, m))
    return Fraction(int(special.comb(k, m, exact=True)), 2 ** k)


def mk_moments(k):
    """Mean and standard deviation of M_k = P_k/k."""
    if k < 1:
        raise DomainError("k must be >= 1, got %s" % k)
    return {'mean': Fraction(1, 2), 'sd': float(1.0 / (2.0 * numpy.sqrt(k)))}


def mk_mgf(k, t):
    """E[exp(t M_k)] = ((1 + e^{t/k}) / 2)^k."""
    if k < 1:
        raise DomainError("k must be >= 1, got %s" % k)
    return float(((1.0 + numpy.exp(t / float(k))) / 2.0) ** k)


def chebyshev_divergence_bound(q, k):
    """1 - ln^2 q / (k (2 ln^2 q - 8 ln2 (ln q - ln2))), the Chebyshev lower
    bound for P(M_k > ln2/ln q). Negative values are vacuous."""
    q = Multiplier.of(q)
    if q.q < 5:
        raise DomainError("the bound needs q >= 5 (1/2 - ln2/ln q > 0), "
                          "got q=%s" % q.q)
    if k < 1:
        raise DomainError("k must be >= 1, got %s" % k)
    ln_q, ln_2 = numpy.log(q.q), numpy.log(2.0)
    return float(1.0 - ln_q ** 2 /
                 (k * (2 * ln_q ** 2 - 8 * ln_2 * (ln_q - ln_2))))


def divergence_threshold(q, k):
    """Least m with q^m > 2^k, i.e. with m/k > ln2/ln q."""
    q = Multiplier.of(q)
    m, power, bound = 0, 1, 1 << k
    while power <= bound:
        power *= q.q
        m += 1
    return m


def divergence_probability(q, k):
    """Exact P(M_k > ln2/ln q) under Binomial(k, 1/2)."""
    threshold = divergence_threshold(q, k)
    return sum((binomial_pmf(k, m) for m in range(threshold, k + 1)),
               Fraction(0))


def hist_chunk(q, k, lo, hi):
    """Counts of P_k for seeds lo..hi-1."""
    _, totals = parity.seed_walk(q, k, lo, hi)
    if not totals:
        return [0] * (k + 1)
    return [int(c) for c in numpy.bincount(totals, minlength=k + 1)]


def sampled_seeds(k, seed, start, stop):
    """Draws start..stop-1 of the sample stream for vector length k.

    Draw i takes ceil(k/64) consecutive raw 64-bit outputs of PCG64(seed),
    the first one lowest, reduces them mod 2^k and adds one. The stream is
    advanced to draw `start` directly, so chunks agree with one long run."""
    words = -(-k // WORD_BITS)
    bit_generator = numpy.random.PCG64(seed)
    bit_generator.advance(start * words)
    raw = bit_generator.random_raw(size=(stop - start, words))
    mask = (1 << k) - 1
    seeds = []
    for row in raw:
        value = 0
        for position, word in enumerate(row):
            value |= int(word) << (WORD_BITS * position)
        seeds.append((value & mask) + 1)
    return seeds


def total_parities(q, k, seeds):
    """P_k of each seed, on Python integers."""
    q = Multiplier.of(q)
    qv = q.q
    totals = []
    for n in seeds:
        ones = 0
        for _ in range(k):
            if n & 1:
                ones += 1
                n = (qv * n + 1) >> 1
            else:
                n >>= 1
        totals.append(ones)
    return totals


def sampled_hist_chunk(q, k, seed, start, stop):
    totals = total_parities(q, k, sampled_seeds(k, seed, start, stop))
    if not totals:
        return [0] * (k + 1)
    return [int(c) for c in numpy.bincount(totals, minlength=k + 1)]


def merge_counts(left, right):
    if left is None:
        return list(right)
    return [a + b for a, b in zip(left, right)]


def mu_distribution(q, k, mode=EXHAUSTIVE, samples=None, seed=None,
                    budget=None, chunk_size=65536):
    """Histogram of P_k: over every n0 in [1, 2^k] (exhaustive) or over
    `samples` draws from PCG64(seed) (sampled)."""
    q = Multiplier.of(q)
    if k < 1:
        raise DomainError("k must be >= 1, got %s" % k)
    counts = [0] * (k + 1)
    if mode == EXHAUSTIVE:
        parity.check_budget("exhaustive histogram k=%s" % k, 2 ** k, budget)
        for lo, hi in ChunkSplitter(1, 2 ** k + 1, chunk_size):
            counts = merge_counts(counts, hist_chunk(q, k, lo, hi))
        return MuHistogram(q, k, EXHAUSTIVE, counts, seeds=2 ** k)
    if mode == SAMPLED:
        if samples is None or samples < 1 or seed is None:
            raise DomainError("sampled mode needs samples >= 1 and a seed")
        parity.check_budget("sampled histogram", samples, budget)
        for start, stop in ChunkSplitter(0, samples, chunk_size):
            counts = merge_counts(
                counts, sampled_hist_chunk(q, k, seed, start, stop))
        return MuHistogram(q, k, SAMPLED, counts, seed=seed, seeds=samples)
    raise DomainError("unknown histogram mode %r" % mode)


def range_histogram(q, k, t, budget=None, chunk_size=65536):
    """Histogram of P_k over n0 in [1, t]."""
    q = Multiplier.of(q)
    if t < 1 or k < 1:
        raise DomainError("need t >= 1 and k >= 1, got t=%s k=%s" % (t, k))
    parity.check_budget("density scan t=%s" % t, t, budget)
    counts = [0] * (k + 1)
    for lo, hi in ChunkSplitter(1, t + 1, chunk_size):
        counts = merge_counts(counts, hist_chunk(q, k, lo, hi))
    return MuHistogram(q, k, RANGE, counts, seeds=t)


def density_estimate(q, k, t, budget=None):
    """Fraction of n0 in [1, t] with mu_k above ln2/ln q."""
    q = Multiplier.of(q)
    if q.q < 5:
        raise DomainError("density of divergent seeds is defined for "
                          "q >= 5, got q=%s" % q.q)
    estimate = DensityEstimate(range_histogram(q, k, t, budget), t)
    LOG.debug("q=%s k=%s t=%s fraction=%s", q.q, k, t, estimate.fraction)
    return estimate


def sampled_density(q, k, samples, seed, budget=None):
    """density_estimate over `samples` sampled seeds of [1, 2^k]."""
    histogram = mu_distribution(q, k, SAMPLED, samples, seed, budget)
    return DensityEstimate(histogram, samples)


def equiparity_trace(x0, k_max):
    """mu_1 .. mu_{k_max} along the F_3 orbit of x0."""
    q = Multiplier(3)
    maps.check_member(q, x0)
    if k_max < 1:
        raise DomainError("k_max must be >= 1, got %s" % k_max)
    trace = []
    x, ones = int(x0), 0
    for k in range(1, k_max + 1):
        bit, x = maps.f_step(q, x)
        ones += bit
        trace.append(Fraction(ones, k))
    return trace


def post_absorption_trace(x0, extra, step_cap):
    """Parity coefficients of the F_3 orbit of x0 counted from the step it
    first reaches the trivial seed 5: entry j is the ones-ratio of the
    j + 1 steps after absorption. None when absorption takes more than
    step_cap steps."""
    q = Multiplier(3)
    maps.check_member(q, x0)
    x = int(x0)
    for _ in range(step_cap):
        if x == q.trivial_seed:
            break
        _, x = maps.f_step(q, x)
    else:
        if x != q.trivial_seed:
            return None
    trace, ones = [], 0
    for j in range(1, extra + 1):
        bit, x = maps.f_step(q, x)
        ones += bit
        trace.append(Fraction(ones, j))
    return trace
