"""Correction terms of lens spaces, their sums, and HJ continued fractions.

Sign convention: d(L(2,1), 0) = +1/4.  The closed-form sum below comes out
with the opposite sign to the recursive sum; both are exposed and
``recursive_sum == -closed_form`` is the checked contract.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .errors import InvariantViolation


def _check_coprime(p: int, q: int) -> None:
    if p < 1:
        raise ValueError(f"p must be positive, got {p}")
    if gcd(p, q) != 1:
        raise ValueError(f"gcd({p}, {q}) != 1")


@lru_cache(maxsize=4096)
def _table(p: int, q: int) -> tuple[Fraction, ...]:
    # 0 <= q < p, coprime; p == 1 is the base case
    if p == 1:
        return (Fraction(0),)
    inner = _table(q, p % q)
    out = []
    for i in range(p):
        v = Fraction(-1, 4) + Fraction((2 * i + 1 - p - q) ** 2, 4 * p * q) - inner[i % q]
        if (4 * p * q) % v.denominator:
            raise InvariantViolation(f"d(L({p},{q}),{i}) = {v}: denominator does not divide 4pq")
        out.append(v)
    return tuple(out)


def d_table(p: int, q: int) -> tuple[Fraction, ...]:
    """All p correction terms d(L(p,q), i), i ascending."""
    _check_coprime(p, q)
    if q < 0:
        return tuple(-v for v in d_table(p, -q))
    return _table(p, q % p)


def d_invariant(p: int, q: int, i: int) -> Fraction:
    _check_coprime(p, q)
    if not 0 <= i < p:
        raise ValueError(f"spin^c index {i} outside [0, {p})")
    return d_table(p, q)[i]


def _check_range(p: int, q: int) -> None:
    if not 0 < q < p:
        raise ValueError(f"need 0 < q < p, got p={p}, q={q}")
    _check_coprime(p, q)


def hj_expansion(p: int, q: int) -> list[int]:
    """p/q = a1 - 1/(a2 - 1/(... - 1/an)), greedy with a1 = ceil(p/q)."""
    _check_range(p, q)
    out = []
    while q:
        a = -(-p // q)
        out.append(a)
        p, q = q, a * q - p
    return out


@dataclass(frozen=True)
class DSum:
    recursive_sum: Fraction
    closed_form: Fraction
    lambda_: Fraction  # Casson-Walker invariant, recursive_sum / p


def d_sum(p: int, q: int) -> DSum:
    _check_range(p, q)
    rec = sum(d_table(p, q), Fraction(0))
    q_inv = pow(q, -1, p)
    closed = Fraction(-1, 12) * (q + q_inv + p * sum(a - 3 for a in hj_expansion(p, q)))
    return DSum(rec, closed, rec / p)


def first_q_sum(p: int, q: int) -> Fraction:
    """d(L(p,q),0) + ... + d(L(p,q),q-1)."""
    _check_range(p, q)
    return sum(d_table(p, q)[:q], Fraction(0))
