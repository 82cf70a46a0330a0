"""Counting functions for hyperbinary expansions, five ways.

b(n) = |H(n)| is computed by the classical recursion, two 2x2 matrix
products over the binary digits (digit-by-digit and run-by-run), an
iterative single-pass scan, and a fold over the block decomposition of
the minimal expansion.  Also: the cyclomatic number v(n), the arc count
a(n), and Stern's diatomic sequence c(n) = b(n - 1) with its own matrix
pair.  All arithmetic is plain Python ints (arbitrary precision).
"""

from __future__ import annotations

from dataclasses import dataclass

from .blocks import BlockKind, decompose
from .iso import even_core
from .words import minimal_expansion


@dataclass(frozen=True)
class Mat2:
    m00: int
    m01: int
    m10: int
    m11: int

    def __matmul__(self, other: "Mat2") -> "Mat2":
        return Mat2(
            self.m00 * other.m00 + self.m01 * other.m10,
            self.m00 * other.m01 + self.m01 * other.m11,
            self.m10 * other.m00 + self.m11 * other.m10,
            self.m10 * other.m01 + self.m11 * other.m11,
        )

    def __pow__(self, a: int) -> "Mat2":
        result = MAT2_IDENTITY
        base = self
        while a:
            if a & 1:
                result = result @ base
            base = base @ base
            a >>= 1
        return result

    def apply(self, top: int, bottom: int) -> tuple[int, int]:
        return (self.m00 * top + self.m01 * bottom, self.m10 * top + self.m11 * bottom)


MAT2_IDENTITY = Mat2(1, 0, 0, 1)

# pair for b: column (b(n), b(n-1)) doubles via M0, odd-steps via M1
B_M0 = Mat2(1, 1, 0, 1)
B_M1 = Mat2(1, 0, 1, 1)

# pair acting directly on Stern's sequence c
C_M0 = Mat2(1, 0, 1, 1)
C_M1 = Mat2(0, 1, -1, 2)


@dataclass
class SternCounters:
    """The (h, k) accumulator pair of the block-fold formula; h >= k >= 0."""

    h: int = 1
    k: int = 1


_b_memo: dict[int, int] = {0: 1}


def b_recursive(n: int) -> int:
    """b(0)=1, b(2n+1)=b(n), b(2n+2)=b(n+1)+b(n); memoized, explicit stack."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    stack = [n]
    while stack:
        m = stack[-1]
        if m in _b_memo:
            stack.pop()
            continue
        if m % 2:
            p = (m - 1) // 2
            if p in _b_memo:
                _b_memo[m] = _b_memo[p]
                stack.pop()
            else:
                stack.append(p)
        else:
            p, q = m // 2, m // 2 - 1
            pending = [x for x in (p, q) if x not in _b_memo]
            if pending:
                stack.extend(pending)
            else:
                _b_memo[m] = _b_memo[p] + _b_memo[q]
                stack.pop()
    return _b_memo[n]


def b_matrix(n: int) -> int:
    """Top entry of M_{d0} ... M_{dt} (1, 0)^T over the binary digits of n.

    Folded right to left: the most significant digit acts on the vector
    first, so the full product is never materialized.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    top, bottom = 1, 0
    for ch in format(n, "b") if n else "":
        if ch == "0":
            top += bottom
        else:
            bottom += top
    return top


def b_matrix_blocks(n: int) -> int:
    """Same product as b_matrix, grouped over maximal runs of equal bits.

    Uses M0^a = (1 a; 0 1) and M1^a = (1 0; a 1) applied run by run.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    top, bottom = 1, 0
    bits = format(n, "b") if n else ""
    i = 0
    while i < len(bits):
        j = i
        while j < len(bits) and bits[j] == bits[i]:
            j += 1
        a = j - i
        if bits[i] == "0":
            top += a * bottom
        else:
            bottom += a * top
        i = j
    return top


def b_algorithm1(n: int) -> tuple[int, int]:
    """Single right-to-left scan of the binary digits of n.

    Returns (b(n), expensive_steps) where expensive_steps counts the
    multiplicative updates (the two else clauses); it equals the number
    of blocks in the minimal-expansion decomposition of the even core.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    bits = format(n, "b") if n else ""
    t = len(bits) - 1
    # d[l] is the coefficient of 2^l
    d = bits[::-1]
    i0 = 0
    while i0 <= t and d[i0] == "1":
        i0 += 1
    if i0 > t:
        # n == 0 or n == 2^k - 1: a single all-1s expansion
        return (1, 0)
    i0 += 1  # d[i0 - 1] is necessarily 0 here, nothing to do for it
    a1 = a2 = 0
    b, s = 1, 1
    expensive = 0
    for ell in range(i0, t + 1):
        if d[ell] == "1":
            if a1 == 0:
                a2 += 1
            else:
                s = a1 * b + s
                b = b + s
                a1 = 0
                expensive += 1
        else:
            if a2 == 0:
                a1 += 1
            else:
                b = b + a2 * s
                a2 = 0
                a1 = 1
                expensive += 1
    if a2:
        expensive += 1
    b = b + a2 * s
    return (b, expensive)


def two_factor_count(b0: int, b2: int, b_n2: int, s: int) -> int:
    """b(n) from a two-factor split: b0 * b(n2) + b2 * s.

    b0 and b2 count expansions of the first factor ending in 0 and in 2;
    s counts the short-or-empty expansions of the second factor.
    """
    if min(b0, b2, b_n2, s) < 0:
        raise ValueError("arguments must be nonnegative")
    return b0 * b_n2 + b2 * s


def _fold_blocks(n: int) -> SternCounters:
    core, _ = even_core(n)  # trailing 1s leave b unchanged
    counters = SternCounters()
    for block in reversed(decompose(minimal_expansion(core)).blocks):
        a, h, k = block.word_length, counters.h, counters.k
        if block.kind is BlockKind.TYPE1:
            counters.h, counters.k = a * h + k, (a - 1) * h + k
        else:
            counters.h, counters.k = h + a * k, k
    return counters


def b_block_formula(n: int) -> int:
    """b(n) as the final h of the right-to-left block fold."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _fold_blocks(n).h


def short_expansion_count(n: int) -> int:
    """Number of short expansions of n (the final k of the block fold)."""
    if n < 0 or n % 2:
        raise ValueError("defined here for even n only")
    if n == 0:
        return 0
    return _fold_blocks(n).k


_v_memo: dict[int, int] = {0: 0}


def v(n: int) -> int:
    """Cyclomatic number of A(n); memoized, explicit stack.

    v(0)=0, v(2n+1)=v(n), v(4n+2)=v(2n)+a(n), v(4n+4)=v(2n+2)+a(n).
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    stack = [n]
    while stack:
        m = stack[-1]
        if m in _v_memo:
            stack.pop()
            continue
        if m % 2:
            p = (m - 1) // 2
            if p in _v_memo:
                _v_memo[m] = _v_memo[p]
                stack.pop()
            else:
                stack.append(p)
        else:
            q = (m - 2) // 4 if m % 4 == 2 else (m - 4) // 4
            p = m - 2 * q - 2  # 2q for m = 4q+2, 2q+2 for m = 4q+4
            pending = [x for x in (p, q) if x not in _v_memo]
            if pending:
                stack.extend(pending)
            else:
                _v_memo[m] = _v_memo[p] + _v_memo[q] + b_recursive(q) - 1
                stack.pop()
    return _v_memo[n]


def a(n: int) -> int:
    """Arc count of A(n): v(n) + b(n) - 1 (0 for the one-vertex A(0))."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return v(n) + b_recursive(n) - 1


def c(n: int) -> int:
    """Stern's diatomic sequence: c(n) = b(n - 1), defined for n >= 1."""
    if n < 1:
        raise ValueError("c is defined for n >= 1")
    return b_recursive(n - 1)


def c_matrix(n: int) -> int:
    """c(n) as the top-right entry of C_M(d_t) ... C_M(d_0).

    Convention frozen by exhaustive search over boundary vectors and
    digit orders, validated against c(n) = b(n-1): multiply the
    c-matrices most significant digit first and read entry (0, 1).
    """
    if n < 1:
        raise ValueError("c is defined for n >= 1")
    prod = MAT2_IDENTITY
    for ch in format(n, "b"):
        prod = prod @ (C_M0 if ch == "0" else C_M1)
    return prod.m01


def v_level_set_even(level: int, max_n: int) -> list[int]:
    """All even n <= max_n with v(n) == level, from the recursion."""
    return [n for n in range(0, max_n + 1, 2) if v(n) == level]


def v1_all(max_n: int) -> list[int]:
    """All n <= max_n with v(n) == 1 (the set {(12 +- 1) 2^t - 1})."""
    return [n for n in range(max_n + 1) if v(n) == 1]
