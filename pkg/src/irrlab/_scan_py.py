"""Pure-Python enumeration kernels (fallback backend).

Same contracts and the same floating-point operation order as the compiled
kernels in _scan_cy, so the two backends agree on every scan: integer columns
exactly, spectral columns to the last bit on any IEEE-conforming build.
"""

from __future__ import annotations

import math

import numpy as np

TREE_TABLE_CAP = 8
TREE_EXTREMAL_CAP = 9
GRAPH_TABLE_CAP = 6

_RAYLEIGH_TOL = 1e-12
_POWER_CAP = 10**6

TREE_COLUMNS = ("irr", "sigma", "irr_t", "sigma_t", "m2", "dmax", "dmin")
GRAPH_COLUMNS = TREE_COLUMNS + ("edges", "ncomp")


def _decode(n, code, deg):
    # Pointer-based Prufer decoding; deg holds 1 + multiplicity and is consumed.
    ptr = 0
    while deg[ptr] != 1:
        ptr += 1
    leaf = ptr
    eu = []
    ev = []
    for v in code:
        eu.append(leaf)
        ev.append(v)
        deg[v] -= 1
        if deg[v] == 1 and v < ptr:
            leaf = v
        else:
            ptr += 1
            while deg[ptr] != 1:
                ptr += 1
            leaf = ptr
    eu.append(leaf)
    ev.append(n - 1)
    return eu, ev


def _tree_stats(n, code):
    deg = [1] * n
    for a in code:
        deg[a] += 1
    eu, ev = _decode(n, code, list(deg))
    irr = 0
    sig = 0
    m2 = 0
    for i in range(n - 1):
        du = deg[eu[i]]
        dv = deg[ev[i]]
        diff = du - dv if du >= dv else dv - du
        irr += diff
        sig += diff * diff
        m2 += du * dv
    irr_t = 0
    sig_t = 0
    for i in range(n):
        for j in range(i + 1, n):
            diff = deg[i] - deg[j]
            if diff < 0:
                diff = -diff
            irr_t += diff
            sig_t += diff * diff
    return irr, sig, irr_t, sig_t, m2, max(deg), min(deg)


def _next_code(code, n):
    for j in range(len(code) - 1, -1, -1):
        if code[j] + 1 < n:
            code[j] += 1
            return
        code[j] = 0


def tree_table(n: int) -> dict[str, np.ndarray]:
    """Per-tree index table over all labeled trees on n vertices.

    Row r describes the tree with Prufer-code rank r in lexicographic order.
    """
    if not 2 <= n <= TREE_TABLE_CAP:
        raise ValueError(f"tree table supports 2 <= n <= {TREE_TABLE_CAP}, got {n}")
    count = n ** (n - 2)
    cols = {name: [0] * count for name in TREE_COLUMNS}
    code = [0] * (n - 2)
    for rank in range(count):
        stats = _tree_stats(n, code)
        for name, val in zip(TREE_COLUMNS, stats):
            cols[name][rank] = val
        _next_code(code, n)
    return {name: np.array(vals, dtype=np.int64) for name, vals in cols.items()}


def tree_extremal(n: int) -> dict[str, int]:
    """Streaming extremal scan over all labeled trees on n vertices.

    Returns max/min of irr and sigma with the Prufer rank of the first tree
    attaining each extremum.
    """
    if not 2 <= n <= TREE_EXTREMAL_CAP:
        raise ValueError(f"tree extremal scan supports 2 <= n <= {TREE_EXTREMAL_CAP}, got {n}")
    count = n ** (n - 2)
    code = [0] * (n - 2)
    out = None
    for rank in range(count):
        irr, sig = _tree_stats(n, code)[:2]
        if out is None:
            out = {
                "count": count,
                "max_irr": irr, "max_irr_rank": rank,
                "min_irr": irr, "min_irr_rank": rank,
                "max_sigma": sig, "max_sigma_rank": rank,
                "min_sigma": sig, "min_sigma_rank": rank,
            }
        else:
            if irr > out["max_irr"]:
                out["max_irr"] = irr
                out["max_irr_rank"] = rank
            if irr < out["min_irr"]:
                out["min_irr"] = irr
                out["min_irr_rank"] = rank
            if sig > out["max_sigma"]:
                out["max_sigma"] = sig
                out["max_sigma_rank"] = rank
            if sig < out["min_sigma"]:
                out["min_sigma"] = sig
                out["min_sigma_rank"] = rank
        _next_code(code, n)
    return out


def _lam(n, nbr):
    # Shifted power iteration on A + I; identical op order to the C kernel.
    inv = 1.0 / math.sqrt(n)
    v = [inv] * n
    y = [0.0] * n
    rho_prev = 0.0
    have_prev = False
    for _ in range(_POWER_CAP):
        for i in range(n):
            s = v[i]
            m = nbr[i]
            while m:
                low = m & -m
                s += v[low.bit_length() - 1]
                m ^= low
            y[i] = s
        rho = 0.0
        for i in range(n):
            rho += v[i] * y[i]
        if have_prev and abs(rho - rho_prev) < _RAYLEIGH_TOL:
            return rho - 1.0
        rho_prev = rho
        have_prev = True
        acc = 0.0
        for i in range(n):
            acc += y[i] * y[i]
        nrm = math.sqrt(acc)
        for i in range(n):
            v[i] = y[i] / nrm
    raise RuntimeError(f"power iteration did not converge within {_POWER_CAP} iterations")


def _find(parent, x):
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def graph_table(n: int) -> dict[str, np.ndarray]:
    """Per-graph index table over all labeled simple graphs on n vertices.

    Row k describes the graph whose edge-set bitmask is k (bit i switches on
    the i-th vertex pair in lexicographic order).  Includes component count,
    spectral radius ("lam") and mean degree ("dbar").
    """
    if not 1 <= n <= GRAPH_TABLE_CAP:
        raise ValueError(f"graph table supports 1 <= n <= {GRAPH_TABLE_CAP}, got {n}")
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    npairs = len(pairs)
    count = 1 << npairs
    cols = {name: [0] * count for name in GRAPH_COLUMNS}
    lam_col = [0.0] * count
    dbar_col = [0.0] * count
    for mask in range(count):
        deg = [0] * n
        nbr = [0] * n
        parent = list(range(n))
        edges = 0
        for i in range(npairs):
            if mask >> i & 1:
                u, v = pairs[i]
                deg[u] += 1
                deg[v] += 1
                nbr[u] |= 1 << v
                nbr[v] |= 1 << u
                edges += 1
                ru, rv = _find(parent, u), _find(parent, v)
                if ru != rv:
                    parent[ru] = rv
        ncomp = sum(1 for x in range(n) if _find(parent, x) == x)
        irr = 0
        sig = 0
        m2 = 0
        for i in range(npairs):
            if mask >> i & 1:
                u, v = pairs[i]
                diff = abs(deg[u] - deg[v])
                irr += diff
                sig += diff * diff
                m2 += deg[u] * deg[v]
        irr_t = 0
        sig_t = 0
        for u, v in pairs:
            diff = abs(deg[u] - deg[v])
            irr_t += diff
            sig_t += diff * diff
        row = (irr, sig, irr_t, sig_t, m2, max(deg) if n else 0, min(deg) if n else 0,
               edges, ncomp)
        for name, val in zip(GRAPH_COLUMNS, row):
            cols[name][mask] = val
        lam_col[mask] = _lam(n, nbr)
        dbar_col[mask] = (2.0 * edges) / n
    out = {name: np.array(vals, dtype=np.int64) for name, vals in cols.items()}
    out["lam"] = np.array(lam_col, dtype=np.float64)
    out["dbar"] = np.array(dbar_col, dtype=np.float64)
    return out
