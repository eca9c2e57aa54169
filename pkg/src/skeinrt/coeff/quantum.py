"""Quantum integers and quantum binomials, division-free in any ring with s^-1."""

from __future__ import annotations

__all__ = ["quantum_integer", "quantum_factorial", "quantum_binomial"]


def quantum_integer(n: int, s):
    """[n]_q = (s^2n - s^-2n)/(s^2 - s^-2) as s^2(n-1) + s^2(n-3) + ... + s^-2(n-1)."""
    if n < 0:
        return -quantum_integer(-n, s)
    one = s.parent().one()
    total = one * 0
    if n == 0:
        return total
    s2 = s * s
    step = s2 * s2
    term = s2 ** (n - 1) if n > 1 else one
    inv_step = step ** -1
    for _ in range(n):
        total = total + term
        term = term * inv_step
    return total


def quantum_factorial(n: int, s):
    one = s.parent().one()
    out = one
    for k in range(1, n + 1):
        out = out * quantum_integer(k, s)
    return out


def quantum_binomial(n: int, k: int, s):
    """Gaussian binomial in the [.]_q normalisation, via the q-Pascal rule.

    [n choose k] = s^(2k) [n-1 choose k] + s^(-2(n-k)) [n-1 choose k-1].
    """
    one = s.parent().one()
    if k < 0 or k > n:
        return one * 0
    s2 = s * s
    s2inv = s2 ** -1
    row = [one]
    for m in range(1, n + 1):
        new = []
        for j in range(0, min(m, k) + 1):
            left = row[j] * s2 ** j if j < len(row) and j <= m - 1 else one * 0
            right = row[j - 1] * s2inv ** (m - j) if j >= 1 else one * 0
            new.append(left + right)
        row = new
    return row[k]
