"""Claimed closed-form expressions, transcribed exactly as stated.

Each evaluator encodes a published formula verbatim and applies no
corrections; several are knowingly wrong on parts of their stated domain.
The verify module adjudicates every one of them against the direct engine in
`indices` and records match/mismatch as data, so keeping the transcription
honest is the entire point of this module.
"""

from __future__ import annotations

from typing import Sequence


def star_irr_claimed(n: int) -> int:
    """Claimed irregularity of the star on n vertices: (n-2)(n-1)."""
    if n < 2:
        raise ValueError(f"star claim needs n >= 2, got {n}")
    return (n - 2) * (n - 1)


def caterpillar_irr_claimed(n: int, m: int) -> int:
    """Claimed irregularity of the uniform caterpillar C(n, m).

    m(m+1)n - 2m + 2 for n >= 3, and m(m+1)n - 2m for n in {1, 2}.
    """
    if n < 1 or m < 1:
        raise ValueError(f"caterpillar claim needs n, m >= 1, got ({n}, {m})")
    if n >= 3:
        return m * (m + 1) * n - 2 * m + 2
    return m * (m + 1) * n - 2 * m


def caterpillar_sigma_claimed(n: int, m: int) -> int:
    """Claimed sigma of C(n, m): 2m^3 at n=2 and 2m^3 + m - 2 for n >= 3.

    The stated branches overlap at n=2; this transcription resolves the
    boundary as n=2 vs n >= 3 (the n=2 branch is the one that is correct).
    """
    if n < 2 or m < 1:
        raise ValueError(f"caterpillar sigma claim needs n >= 2 and m >= 1, got ({n}, {m})")
    if n == 2:
        return 2 * m**3
    return 2 * m**3 + m - 2


def complete_bipartite_sigma_claimed(m: int, n: int) -> int:
    """Claimed sigma of K_{m,n}: mn(n-m)^2."""
    if m < 1 or n < 1:
        raise ValueError(f"complete bipartite claim needs m, n >= 1, got ({m}, {n})")
    return m * n * (n - m) ** 2


def double_star_sigma_claimed(r: int, k: int) -> int:
    """Claimed sigma of the double star with center degrees k and r."""
    if k < 2 or r < 1:
        raise ValueError(f"double star claim needs k >= 2 and r >= 1, got (r={r}, k={k})")
    return (k - 1) ** 3 + k**2 + (r - 1) ** 3 + r**2 - 2 * k * r


def spine_irr_claimed(degrees: Sequence[int]) -> int:
    """Claimed irregularity of a caterpillar from its spine degree sequence.

    (d_1-1)^2 + (d_k-1)^2 + sum over interior of (d_i-1)(d_i-2)
    + sum over consecutive spine pairs of |d_i - d_{i+1}|.
    """
    k = len(degrees)
    if k < 2:
        raise ValueError(f"spine claim needs length >= 2, got {k}")
    if degrees[0] < 1 or degrees[-1] < 1 or any(d < 2 for d in degrees[1:-1]):
        raise ValueError(f"spine sequence {tuple(degrees)} is unrealizable")
    total = (degrees[0] - 1) ** 2 + (degrees[-1] - 1) ** 2
    total += sum((d - 1) * (d - 2) for d in degrees[1:-1])
    total += sum(abs(degrees[i] - degrees[i + 1]) for i in range(k - 1))
    return total


def spine3_sigma_claimed(d1: int, d2: int, d3: int) -> int:
    """Claimed sigma for a three-entry spine: (d1-1)^3 + sum (di-1)(di-2) + (d3-1)^3.

    The expression is evaluated on the arguments exactly as given.  The claim
    as published carries a d3 >= d2 >= d1 ordering premise, but its own
    worked example applies the expression to an unsorted spine arrangement,
    so no ordering is enforced here; callers choose the arrangement.
    """
    if min(d1, d2, d3) < 1:
        raise ValueError(f"spine degrees must be >= 1, got ({d1}, {d2}, {d3})")
    inner = sum((d - 1) * (d - 2) for d in (d1, d2, d3))
    return (d1 - 1) ** 3 + inner + (d3 - 1) ** 3


def spine3_sigma_extremes_claimed(d1: int, d2: int, d3: int) -> tuple[int, int]:
    """Claimed (max, min) sigma over arrangements of a sorted degree triple.

    max: d1^3 - 2 d1^2 + d1 + d2^3 + d3^3 - 4 d2 d3^2
    min: d1^3 - 2 d1^2 + d1 + d2^3 + 2 d2^2 (1 - d3) + d2 d3^2
    Requires d1 <= d2 <= d3 (the premise the piecewise form is stated under).
    """
    if not 1 <= d1 <= d2 <= d3:
        raise ValueError(f"needs 1 <= d1 <= d2 <= d3, got ({d1}, {d2}, {d3})")
    head = d1**3 - 2 * d1**2 + d1
    mx = head + d2**3 + d3**3 - 4 * d2 * d3**2
    mn = head + d2**3 + 2 * d2**2 * (1 - d3) + d2 * d3**2
    return mx, mn


def seq4_sigma_claimed(d1: int, d2: int, d3: int, d4: int) -> tuple[int, bool]:
    """Claimed sigma for a four-entry degree sequence, plus its validity flag.

    Value: sum d_i^3 + 2 sum d_i^2 + sum d_i - 2(d1 d2 + d2 d3 + d3 d4).
    The claim is stated to hold exactly when d1 > 0 and each d_{i+1} = d_i + 1;
    the flag reports whether the arguments satisfy that condition.
    """
    ds = (d1, d2, d3, d4)
    value = (
        sum(d**3 for d in ds)
        + 2 * sum(d**2 for d in ds)
        + sum(ds)
        - 2 * (d1 * d2 + d2 * d3 + d3 * d4)
    )
    held = d1 > 0 and all(ds[i + 1] == ds[i] + 1 for i in range(3))
    return value, held


def seq4_irr_max_claimed(a: int, b: int, c: int, d: int) -> int:
    """Claimed maximum irregularity for the four-degree multiset {a, b, c, d}.

    sum (x-1)^2 over all four, plus (a + b - c - 3d + 2).
    """
    x = sum((t - 1) ** 2 for t in (a, b, c, d))
    return x + (a + b - c - 3 * d + 2)


def seq4_irr_min_claimed(a: int, b: int, c: int, d: int) -> int:
    """Claimed minimum irregularity for the four-degree multiset {a, b, c, d}.

    sum (x-1)^2 over all four, plus (a - b - c - d + 2).
    """
    x = sum((t - 1) ** 2 for t in (a, b, c, d))
    return x + (a - b - c - d + 2)


def seq4_irr_ordered_claimed(a: int, b: int, c: int, d: int) -> int:
    """Claimed irregularity for four degrees named so that d > a >= b >= c >= 1.

    (a-1)^2 + (b-1)^2 + (c-1)^2 + (d-a) + (d-b) + (d-c) + (d-1)(d-3).
    """
    if not (d > a >= b >= c >= 1):
        raise ValueError(f"needs d > a >= b >= c >= 1, got (a={a}, b={b}, c={c}, d={d})")
    squares = (a - 1) ** 2 + (b - 1) ** 2 + (c - 1) ** 2
    return squares + (d - a) + (d - b) + (d - c) + (d - 1) * (d - 3)


def caterpillar_nn_irr_claimed(n: int) -> int:
    """Claimed irregularity of C(n, n): n^3 + n^2 - 2n + 2 for n >= 3."""
    if n < 3:
        raise ValueError(f"C(n, n) claim needs n >= 3, got {n}")
    return n**3 + n**2 - 2 * n + 2


def tree_sigma_extremes_claimed(n: int) -> tuple[int | None, int | None]:
    """Claimed (max, min) sigma over trees of order n, as stated piecewise.

    The maximum (n-1)(n-2) is claimed for n >= 3 and the minimum 0 only at
    n = 2; outside each piece's domain the entry is None.
    """
    if n < 2:
        raise ValueError(f"tree sigma extremes need n >= 2, got {n}")
    mx = (n - 1) * (n - 2) if n >= 3 else None
    mn = 0 if n == 2 else None
    return mx, mn
