# -*- coding: utf-8 -*-
# vim: tabstop=4 shiftwidth=4 softtabstop=4
"""
The three fundamental maps of the qn+1 system and their parity predicates.

    T_q(n) = n/2 for even n, (qn+1)/2 for odd n        (positive integers)
    X_q(n) = 2(q-1)n + 1                              (conjugacy onto Z_cq)
    F_q(x) = q^alpha_q(x) (x+1)/2                      (on Z_cq)

Z_cq is the residue class x = 1 mod 2(q-1), and X_q conjugates T_q to F_q.
All arithmetic is on Python integers, so magnitudes are unbounded.
"""

import sympy

from qcollatz import logs

LOG = logs.LOG


class DomainError(ValueError):
    """An argument outside the domain of a map or operation."""


class ParityMismatch(DomainError):
    """A parity vector that does not belong to the given seed."""


def mersenne_exponent(q):
    """Return p when q = 2^p - 1, None otherwise."""
    if q > 0 and (q + 1) & q == 0:
        return (q + 1).bit_length() - 1
    return None


def nontrivial_divisors(q):
    """Divisors of q other than 1 and q, ascending."""
    return [d for d in sympy.divisors(q) if d not in (1, q)]


def mod_inverse(value, modulus):
    """Inverse of value modulo modulus; DomainError when none exists."""
    try:
        return int(sympy.mod_inverse(value, modulus))
    except ValueError:
        raise DomainError("%s has no inverse modulo %s" % (value, modulus))


class Multiplier(object):
    """The odd multiplier q >= 3 with the constants every step needs."""

    __slots__ = ('q', 'two_qm1', 'four_qm1', 'mersenne_exp')

    def __init__(self, q):
        if isinstance(q, bool) or not isinstance(q, int):
            raise DomainError("q must be an integer, got %r" % (q,))
        if q < 3 or q % 2 == 0:
            raise DomainError("q must be odd >= 3, got %s" % q)
        self.q = q
        self.two_qm1 = 2 * (q - 1)
        self.four_qm1 = 4 * (q - 1)
        self.mersenne_exp = mersenne_exponent(q)

    @classmethod
    def of(cls, q):
        """Accept either a Multiplier or a plain integer."""
        if isinstance(q, cls):
            return q
        return cls(q)

    @property
    def trivial_seed(self):
        """X_q(1) = 2q - 1, the seed of the trivial cycle."""
        return 2 * self.q - 1

    @property
    def is_prime(self):
        return bool(sympy.isprime(self.q))

    def __int__(self):
        return self.q

    def __index__(self):
        return self.q

    def __eq__(self, other):
        if isinstance(other, Multiplier):
            return self.q == other.q
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash(('Multiplier', self.q))

    def __reduce__(self):
        return (Multiplier, (self.q,))

    def __repr__(self):
        return "Multiplier(%s)" % self.q


def is_member(q, x):
    """True when x = X_q(n) for some n >= 1."""
    q = Multiplier.of(q)
    return isinstance(x, int) and x > 1 and (x - 1) % q.two_qm1 == 0


def check_member(q, x):
    """Raise DomainError unless x is in Z_cq."""
    if not is_member(q, x):
        raise DomainError("%r is not in Z_c%s (x > 1, x = 1 mod %s)" % (
                x, int(q), Multiplier.of(q).two_qm1))


class CqInt(int):
    """An element of Z_cq; membership is checked on construction.

    Behaves as a plain int in arithmetic, which returns plain ints."""

    def __new__(cls, q, value):
        q = Multiplier.of(q)
        check_member(q, value)
        obj = super(CqInt, cls).__new__(cls, value)
        obj.q = q
        return obj

    def __reduce__(self):
        return (CqInt, (self.q, int(self)))

    def __repr__(self):
        return "CqInt(%s, %s)" % (self.q.q, int(self))

    __str__ = int.__repr__

    @property
    def n(self):
        """The positive integer this element conjugates."""
        return (int(self) - 1) // self.q.two_qm1


def t_map(q, n):
    """T_q: halve an even n, send an odd n to (qn+1)/2."""
    q = Multiplier.of(q)
    if n < 1:
        raise DomainError("T_q is defined on positive integers, got %s" % n)
    if n & 1:
        return (q.q * n + 1) >> 1
    return n >> 1


def alpha_n(n):
    """Parity of n as a bit."""
    if n < 1:
        raise DomainError("alpha_N is defined on positive integers, got %s" % n)
    return n & 1


def alpha_q(q, x):
    """Parity of x in Z_cq: 1 when x - 1 = 2(q-1) mod 4(q-1), else 0."""
    q = Multiplier.of(q)
    check_member(q, x)
    return 1 if (x - 1) % q.four_qm1 else 0


def f_map(q, x):
    """F_q(x) = q^alpha_q(x) (x+1)/2."""
    q = Multiplier.of(q)
    check_member(q, x)
    if (x - 1) % q.four_qm1:
        return CqInt(q, (q.q * (x + 1)) >> 1)
    return CqInt(q, (x + 1) >> 1)


def conjugate(q, n):
    """X_q(n) = 2(q-1)n + 1."""
    q = Multiplier.of(q)
    if n < 1:
        raise DomainError("X_q is defined on positive integers, got %s" % n)
    return CqInt(q, q.two_qm1 * n + 1)


def unconjugate(q, x):
    """The inverse of X_q on Z_cq."""
    q = Multiplier.of(q)
    check_member(q, x)
    return (x - 1) // q.two_qm1


def f_step(q, x):
    """F_q on a trusted member of Z_cq; returns (parity bit, next iterate).

    Inner loops use this form, membership is not rechecked."""
    if (x - 1) % q.four_qm1:
        return 1, (q.q * (x + 1)) >> 1
    return 0, (x + 1) >> 1


def t_step(q, n):
    """T_q on a trusted positive integer; returns (parity bit, next value)."""
    if n & 1:
        return 1, (q.q * n + 1) >> 1
    return 0, n >> 1
