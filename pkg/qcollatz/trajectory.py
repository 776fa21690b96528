# -*- coding: utf-8 -*-
# vim: tabstop=4 shiftwidth=4 softtabstop=4
"""
Orbits of F_q under step and size caps, the two closed forms of F^k, the
growth bounds and stopping data.

Every comparison here is made on integers or exact fractions: the lower
bound F^k(x0)/x0 > q^{P_k}/2^k is strict, and float rounding would blur it.
"""

from fractions import Fraction

from qcollatz import flags
from qcollatz import logs
from qcollatz import maps
from qcollatz import parity
from qcollatz.maps import CqInt, DomainError, Multiplier, ParityMismatch

LOG = logs.LOG


class Trajectory(object):
    """x_0 .. x_{k-1} of an orbit of F_q, their parities and F^k(x_0).

    `final` is the iterate after the last stored one, so that the closed
    forms of x_k apply to (seed, parity) directly. A trajectory cut short
    by the size cap ends with the oversized iterate as `final`."""

    def __init__(self, q, seed, iterates, final, capped=False):
        self.q = Multiplier.of(q)
        self.seed = CqInt(self.q, seed)
        self.iterates = tuple(iterates)
        self.final = final
        self.capped = capped
        self.parity = parity.ParityVector(
            1 if (x - 1) % self.q.four_qm1 else 0 for x in self.iterates)

    @property
    def k(self):
        return len(self.iterates)

    @property
    def max_value(self):
        return max(self.iterates)

    def values(self, space='x'):
        """Iterates in x-space, or their preimages under X_q for 'n'."""
        if space == 'n':
            return [(x - 1) // self.q.two_qm1 for x in self.iterates]
        return list(self.iterates)

    def __len__(self):
        return len(self.iterates)

    def __repr__(self):
        return "<Trajectory q=%s seed=%s k=%s%s>" % (
            self.q.q, int(self.seed), self.k, " capped" if self.capped else "")


def iterate(q, x0, k, size_cap_bits=None):
    """Follow F_q for k steps from x0, stopping early at the first iterate
    longer than size_cap_bits (the --size_cap_bits flag by default)."""
    q = Multiplier.of(q)
    maps.check_member(q, x0)
    if k < 1:
        raise DomainError("steps must be >= 1, got %s" % k)
    if size_cap_bits is None:
        size_cap_bits = flags.default('size_cap_bits')
    x = int(x0)
    if x.bit_length() > size_cap_bits:
        raise DomainError("seed has %s bits, over the %s bit cap" % (
                x.bit_length(), size_cap_bits))
    qv, four = q.q, q.four_qm1
    iterates = []
    capped = False
    for _ in range(k):
        iterates.append(x)
        if (x - 1) % four:
            x = (qv * (x + 1)) >> 1
        else:
            x = (x + 1) >> 1
        if x.bit_length() > size_cap_bits:
            capped = True
            LOG.debug("q=%s seed %s capped after %s steps", qv, x0,
                      len(iterates))
            break
    return Trajectory(q, x0, iterates, x, capped=capped)


def closed_form_power(q, x0, A, verify=False):
    """x_k = (q^{P_k} x0 + sum_j 2^j q^{|A|_j^{k-1}}) / 2^k.

    An inexact division proves A is not the parity vector of x0; with
    verify=True A is also compared against the actual vector."""
    q = Multiplier.of(q)
    maps.check_member(q, x0)
    k = len(A)
    numerator = q.q ** A.total * int(x0) + parity.power_sum(q, A)
    value, remainder = divmod(numerator, 1 << k)
    if remainder:
        raise ParityMismatch("%s is not the parity vector of %s" % (A, x0))
    if verify and parity.parity_vector(q, x0, k) != A:
        raise ParityMismatch("%s is not the parity vector of %s" % (A, x0))
    return CqInt(q, value)


def closed_form_product(q, traj):
    """x_k = x0 q^{P_k}/2^k prod_j (1 + 1/x_j), evaluated as one fraction."""
    q = Multiplier.of(q)
    if traj.k < 1:
        raise DomainError("empty trajectory")
    numerator = int(traj.seed) * q.q ** traj.parity.total
    denominator = 1 << traj.k
    for x in traj.iterates:
        numerator *= x + 1
        denominator *= x
    value = Fraction(numerator, denominator)
    if value.denominator != 1:
        raise DomainError("malformed trajectory: x_k = %s" % value)
    return CqInt(q, value.numerator)


def trivial_return_check(q, x0, A):
    """True iff 2^k (2q-1) = q^{P_k} x0 + sum_j 2^j q^{|A|_j^{k-1}}, that is,
    x0 with parity vector A lands on the trivial seed after k steps."""
    q = Multiplier.of(q)
    k = len(A)
    return (q.trivial_seed << k) == \
        q.q ** A.total * int(x0) + parity.power_sum(q, A)


class BoundReport(object):
    """Outcome of the growth-bound checks along one trajectory."""

    def __init__(self, k, lower_ok, lower_violations, upper_checked,
                 upper_violations, upper_equalities):
        self.k = k
        self.lower_ok = lower_ok
        self.lower_violations = lower_violations
        self.upper_checked = upper_checked
        self.upper_violations = upper_violations
        self.upper_equalities = upper_equalities

    def to_dict(self):
        return {'k': self.k,
                'lower_ok': self.lower_ok,
                'lower_violations': list(self.lower_violations),
                'upper_checked': self.upper_checked,
                'upper_violations': list(self.upper_violations),
                'upper_equalities': list(self.upper_equalities)}


def upper_bound_exponent(q):
    """(p, r) with the upper bound F^j/x0 <= q^{P_j - j r/p}, or None.

    Mersenne q = 2^p - 1 gives r = 1; q = 5 gives p = 5, r = 2."""
    q = Multiplier.of(q)
    if q.mersenne_exp is not None:
        return q.mersenne_exp, 1
    if q.q == 5:
        return 5, 2
    return None


def check_growth_bounds(q, traj):
    """Check the strict lower bound x_j 2^j > q^{P_j} x0 for j = 1..k and,
    for Mersenne q and q = 5, the upper bound. Upper-bound failures are
    recorded by step index, never raised."""
    q = Multiplier.of(q)
    x0 = int(traj.seed)
    values = list(traj.iterates[1:]) + [traj.final]
    bits = traj.parity.bits
    lower_violations = []
    ones = 0
    for j, x in enumerate(values, 1):
        ones += bits[j - 1]
        if not (x << j) > q.q ** ones * x0:
            lower_violations.append(j)

    exponent = upper_bound_exponent(q)
    upper_checked = exponent is not None and x0 != q.trivial_seed
    upper_violations, upper_equalities = [], []
    if upper_checked:
        p, r = exponent
        x0_p = x0 ** p
        ones = 0
        for j, x in enumerate(values, 1):
            ones += bits[j - 1]
            # x_j^p q^{rj} <= x0^p q^{p P_j}
            left = x ** p * q.q ** (r * j)
            right = x0_p * q.q ** (p * ones)
            if left > right:
                upper_violations.append(j)
            elif left == right:
                upper_equalities.append(j)
    if lower_violations:
        LOG.warning("q=%s seed %s breaks the lower bound at %s", q.q, x0,
                    lower_violations)
    return BoundReport(traj.k, not lower_violations, lower_violations,
                       upper_checked, upper_violations, upper_equalities)


class StopInfo(object):
    """Stopping data of one seed under a step cap."""

    def __init__(self, stopping_time, total_steps_to_trivial, cap):
        self.stopping_time = stopping_time
        self.total_steps_to_trivial = total_steps_to_trivial
        self.cap = cap

    def to_dict(self):
        return {'stopping_time': self.stopping_time,
                'total_steps_to_trivial': self.total_steps_to_trivial,
                'cap': self.cap}


def stop_info(q, x0, step_cap, size_cap_bits=None):
    """Least k >= 1 with F^k(x0) < x0 and least m >= 1 with
    F^m(x0) = 2q - 1, each when found within step_cap steps."""
    q = Multiplier.of(q)
    maps.check_member(q, x0)
    if step_cap < 1:
        raise DomainError("step cap must be >= 1, got %s" % step_cap)
    if size_cap_bits is None:
        size_cap_bits = flags.default('size_cap_bits')
    start = x = int(x0)
    stopping = trivial = None
    for m in range(1, step_cap + 1):
        _, x = maps.f_step(q, x)
        if stopping is None and x < start:
            stopping = m
        if x == q.trivial_seed:
            trivial = m
            break
        if x.bit_length() > size_cap_bits:
            break
    return StopInfo(stopping, trivial, step_cap)


def leading_ones_run(q, x0, step_cap):
    """Length of the initial run of ones in the parity sequence of x0, or
    None when the run outlasts step_cap."""
    q = Multiplier.of(q)
    maps.check_member(q, x0)
    x = int(x0)
    for run in range(step_cap):
        bit, x = maps.f_step(q, x)
        if not bit:
            return run
    return None


def convergence_scan(n_lo, n_hi, step_cap):
    """Check that every n in [n_lo, n_hi) under T_3 either is 1 or drops
    below itself within step_cap steps.

    Together over all chunks from 1 this proves every n < n_hi reaches 1.
    Returns a JSON-able partial result merged by `merge_convergence`."""
    seeds = resolved = 0
    unresolved = []
    record_time = [0, None]
    record_peak = [0, None]
    for n0 in range(max(n_lo, 1), n_hi):
        seeds += 1
        if n0 == 1:
            resolved += 1
            continue
        n, peak, steps = n0, n0, 0
        while n >= n0 and steps < step_cap:
            n = (3 * n + 1) >> 1 if n & 1 else n >> 1
            steps += 1
            if n > peak:
                peak = n
        if n < n0:
            resolved += 1
            if steps > record_time[0]:
                record_time = [steps, n0]
            if peak > record_peak[0]:
                record_peak = [peak, n0]
        else:
            unresolved.append(n0)
    return {'seeds': seeds, 'resolved': resolved, 'unresolved': unresolved,
            'max_stopping_time': record_time, 'max_excursion': record_peak}


def merge_convergence(left, right):
    """Combine two convergence_scan results; ties keep the earlier seed."""
    if left is None:
        return dict(right)
    def _best(a, b):
        if b[0] > a[0]:
            return list(b)
        return list(a)
    return {'seeds': left['seeds'] + right['seeds'],
            'resolved': left['resolved'] + right['resolved'],
            'unresolved': left['unresolved'] + right['unresolved'],
            'max_stopping_time': _best(left['max_stopping_time'],
                                       right['max_stopping_time']),
            'max_excursion': _best(left['max_excursion'],
                                   right['max_excursion'])}


MAX_LISTED_SEEDS = 100


def absorption_step(q, traj):
    """Index of the first iterate equal to 2q - 1, k when only `final` is,
    None when the trajectory never reaches it."""
    q = Multiplier.of(q)
    for j, x in enumerate(traj.iterates):
        if x == q.trivial_seed:
            return j
    if traj.final == q.trivial_seed:
        return traj.k
    return None


def bounds_chunk(q, lo, hi, k, size_cap_bits):
    """Growth-bound checks for k steps from every n0 in [lo, hi).

    Upper-bound violations are reported per seed with their step indices
    and the absorption step; `beyond_absorption` counts the violating
    steps that come after it."""
    q = Multiplier.of(q)
    result = {'seeds': 0, 'capped': 0, 'lower_violations': 0,
              'upper_checked': 0, 'upper_violations': 0,
              'beyond_absorption': 0, 'violating_seeds': []}
    for n0 in range(lo, hi):
        traj = iterate(q, maps.conjugate(q, n0), k, size_cap_bits)
        report = check_growth_bounds(q, traj)
        result['seeds'] += 1
        result['capped'] += int(traj.capped)
        result['lower_violations'] += len(report.lower_violations)
        result['upper_checked'] += int(report.upper_checked)
        if not report.upper_violations:
            continue
        absorbed = absorption_step(q, traj)
        result['upper_violations'] += len(report.upper_violations)
        if absorbed is not None:
            result['beyond_absorption'] += len(
                [j for j in report.upper_violations if j > absorbed])
        if len(result['violating_seeds']) < MAX_LISTED_SEEDS:
            result['violating_seeds'].append(
                [n0, list(report.upper_violations), absorbed])
    return result


def merge_bounds(left, right):
    """Combine two bounds_chunk results, earlier seeds listed first."""
    if left is None:
        return dict(right)
    merged = dict((name, left[name] + right[name])
                  for name in left if name != 'violating_seeds')
    merged['violating_seeds'] = (left['violating_seeds'] +
                                 right['violating_seeds'])[:MAX_LISTED_SEEDS]
    return merged
