# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernels (accelerated backend).

Contracts mirror _scan_py exactly, including floating-point operation order
inside the power iteration, so results agree with the fallback.
"""

from libc.math cimport fabs, sqrt

import numpy as np

TREE_TABLE_CAP = 8
TREE_EXTREMAL_CAP = 9
GRAPH_TABLE_CAP = 6

TREE_COLUMNS = ("irr", "sigma", "irr_t", "sigma_t", "m2", "dmax", "dmin")
GRAPH_COLUMNS = TREE_COLUMNS + ("edges", "ncomp")

cdef double RAYLEIGH_TOL = 1e-12
cdef long long POWER_CAP = 1000000


cdef void _decode(int n, const int* code, int* deg, int* eu, int* ev) noexcept nogil:
    # Pointer-based Prufer decoding; deg holds 1 + multiplicity and is consumed.
    cdef int ptr = 0
    cdef int leaf, v, i
    while deg[ptr] != 1:
        ptr += 1
    leaf = ptr
    for i in range(n - 2):
        v = code[i]
        eu[i] = leaf
        ev[i] = v
        deg[v] -= 1
        if deg[v] == 1 and v < ptr:
            leaf = v
        else:
            ptr += 1
            while deg[ptr] != 1:
                ptr += 1
            leaf = ptr
    eu[n - 2] = leaf
    ev[n - 2] = n - 1


cdef void _tree_stats(int n, const int* code, long long* out) noexcept nogil:
    cdef int deg[12]
    cdef int work[12]
    cdef int eu[12]
    cdef int ev[12]
    cdef int i, j, du, dv, diff, dmax, dmin
    cdef long long irr = 0, sig = 0, irr_t = 0, sig_t = 0, m2 = 0
    for i in range(n):
        deg[i] = 1
    for i in range(n - 2):
        deg[code[i]] += 1
    for i in range(n):
        work[i] = deg[i]
    _decode(n, code, work, eu, ev)
    for i in range(n - 1):
        du = deg[eu[i]]
        dv = deg[ev[i]]
        diff = du - dv if du >= dv else dv - du
        irr += diff
        sig += <long long>diff * diff
        m2 += <long long>du * dv
    for i in range(n):
        for j in range(i + 1, n):
            diff = deg[i] - deg[j]
            if diff < 0:
                diff = -diff
            irr_t += diff
            sig_t += <long long>diff * diff
    dmax = deg[0]
    dmin = deg[0]
    for i in range(1, n):
        if deg[i] > dmax:
            dmax = deg[i]
        if deg[i] < dmin:
            dmin = deg[i]
    out[0] = irr
    out[1] = sig
    out[2] = irr_t
    out[3] = sig_t
    out[4] = m2
    out[5] = dmax
    out[6] = dmin


cdef inline void _next_code(int* code, int length, int n) noexcept nogil:
    cdef int j
    for j in range(length - 1, -1, -1):
        if code[j] + 1 < n:
            code[j] += 1
            return
        code[j] = 0


def tree_table(int n):
    """Per-tree index table over all labeled trees on n vertices.

    Row r describes the tree with Prufer-code rank r in lexicographic order.
    """
    if not 2 <= n <= TREE_TABLE_CAP:
        raise ValueError(f"tree table supports 2 <= n <= {TREE_TABLE_CAP}, got {n}")
    cdef long long count = n ** (n - 2)
    arrays = {name: np.empty(count, dtype=np.int64) for name in TREE_COLUMNS}
    cdef long long[::1] c_irr = arrays["irr"]
    cdef long long[::1] c_sig = arrays["sigma"]
    cdef long long[::1] c_irr_t = arrays["irr_t"]
    cdef long long[::1] c_sig_t = arrays["sigma_t"]
    cdef long long[::1] c_m2 = arrays["m2"]
    cdef long long[::1] c_dmax = arrays["dmax"]
    cdef long long[::1] c_dmin = arrays["dmin"]
    cdef int code[12]
    cdef long long stats[7]
    cdef long long rank
    cdef int i
    for i in range(n - 2):
        code[i] = 0
    with nogil:
        for rank in range(count):
            _tree_stats(n, code, stats)
            c_irr[rank] = stats[0]
            c_sig[rank] = stats[1]
            c_irr_t[rank] = stats[2]
            c_sig_t[rank] = stats[3]
            c_m2[rank] = stats[4]
            c_dmax[rank] = stats[5]
            c_dmin[rank] = stats[6]
            _next_code(code, n - 2, n)
    return arrays


def tree_extremal(int n):
    """Streaming extremal scan over all labeled trees on n vertices.

    Returns max/min of irr and sigma with the Prufer rank of the first tree
    attaining each extremum.
    """
    if not 2 <= n <= TREE_EXTREMAL_CAP:
        raise ValueError(f"tree extremal scan supports 2 <= n <= {TREE_EXTREMAL_CAP}, got {n}")
    cdef long long count = n ** (n - 2)
    cdef int code[12]
    cdef long long stats[7]
    cdef long long rank
    cdef int i
    cdef long long max_irr = 0, min_irr = 0, max_sig = 0, min_sig = 0
    cdef long long max_irr_rank = 0, min_irr_rank = 0, max_sig_rank = 0, min_sig_rank = 0
    for i in range(n - 2):
        code[i] = 0
    with nogil:
        for rank in range(count):
            _tree_stats(n, code, stats)
            if rank == 0:
                max_irr = min_irr = stats[0]
                max_sig = min_sig = stats[1]
            else:
                if stats[0] > max_irr:
                    max_irr = stats[0]
                    max_irr_rank = rank
                if stats[0] < min_irr:
                    min_irr = stats[0]
                    min_irr_rank = rank
                if stats[1] > max_sig:
                    max_sig = stats[1]
                    max_sig_rank = rank
                if stats[1] < min_sig:
                    min_sig = stats[1]
                    min_sig_rank = rank
            _next_code(code, n - 2, n)
    return {
        "count": count,
        "max_irr": max_irr, "max_irr_rank": max_irr_rank,
        "min_irr": min_irr, "min_irr_rank": min_irr_rank,
        "max_sigma": max_sig, "max_sigma_rank": max_sig_rank,
        "min_sigma": min_sig, "min_sigma_rank": min_sig_rank,
    }


cdef int _lam(int n, const int* nbr, double* result) noexcept nogil:
    # Shifted power iteration on A + I; identical op order to the fallback.
    cdef double v[8]
    cdef double y[8]
    cdef double inv, rho, rho_prev, acc, nrm, s
    cdef long long it
    cdef int i, j, have_prev = 0
    inv = 1.0 / sqrt(<double>n)
    for i in range(n):
        v[i] = inv
    rho_prev = 0.0
    for it in range(POWER_CAP):
        for i in range(n):
            s = v[i]
            for j in range(n):
                if nbr[i] >> j & 1:
                    s += v[j]
            y[i] = s
        rho = 0.0
        for i in range(n):
            rho += v[i] * y[i]
        if have_prev and fabs(rho - rho_prev) < RAYLEIGH_TOL:
            result[0] = rho - 1.0
            return 0
        rho_prev = rho
        have_prev = 1
        acc = 0.0
        for i in range(n):
            acc += y[i] * y[i]
        nrm = sqrt(acc)
        for i in range(n):
            v[i] = y[i] / nrm
    return 1


cdef int _find(int* parent, int x) noexcept nogil:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def graph_table(int n):
    """Per-graph index table over all labeled simple graphs on n vertices.

    Row k describes the graph whose edge-set bitmask is k (bit i switches on
    the i-th vertex pair in lexicographic order).  Includes component count,
    spectral radius ("lam") and mean degree ("dbar").
    """
    if not 1 <= n <= GRAPH_TABLE_CAP:
        raise ValueError(f"graph table supports 1 <= n <= {GRAPH_TABLE_CAP}, got {n}")
    cdef int pu[15]
    cdef int pv[15]
    cdef int npairs = 0
    cdef int u, v
    for u in range(n):
        for v in range(u + 1, n):
            pu[npairs] = u
            pv[npairs] = v
            npairs += 1
    cdef long long count = (<long long>1) << npairs
    arrays = {name: np.empty(count, dtype=np.int64) for name in GRAPH_COLUMNS}
    lam_arr = np.empty(count, dtype=np.float64)
    dbar_arr = np.empty(count, dtype=np.float64)
    cdef long long[::1] c_irr = arrays["irr"]
    cdef long long[::1] c_sig = arrays["sigma"]
    cdef long long[::1] c_irr_t = arrays["irr_t"]
    cdef long long[::1] c_sig_t = arrays["sigma_t"]
    cdef long long[::1] c_m2 = arrays["m2"]
    cdef long long[::1] c_dmax = arrays["dmax"]
    cdef long long[::1] c_dmin = arrays["dmin"]
    cdef long long[::1] c_edges = arrays["edges"]
    cdef long long[::1] c_ncomp = arrays["ncomp"]
    cdef double[::1] c_lam = lam_arr
    cdef double[::1] c_dbar = dbar_arr
    cdef int deg[8]
    cdef int nbr[8]
    cdef int parent[8]
    cdef long long mask
    cdef int i, ru, rv, edges, ncomp, diff, dmax, dmin
    cdef long long irr, sig, irr_t, sig_t, m2
    cdef double lam
    cdef int failed = 0
    with nogil:
        for mask in range(count):
            for i in range(n):
                deg[i] = 0
                nbr[i] = 0
                parent[i] = i
            edges = 0
            for i in range(npairs):
                if mask >> i & 1:
                    u = pu[i]
                    v = pv[i]
                    deg[u] += 1
                    deg[v] += 1
                    nbr[u] |= 1 << v
                    nbr[v] |= 1 << u
                    edges += 1
                    ru = _find(parent, u)
                    rv = _find(parent, v)
                    if ru != rv:
                        parent[ru] = rv
            ncomp = 0
            for i in range(n):
                if _find(parent, i) == i:
                    ncomp += 1
            irr = 0
            sig = 0
            m2 = 0
            for i in range(npairs):
                if mask >> i & 1:
                    u = pu[i]
                    v = pv[i]
                    diff = deg[u] - deg[v]
                    if diff < 0:
                        diff = -diff
                    irr += diff
                    sig += <long long>diff * diff
                    m2 += <long long>deg[u] * deg[v]
            irr_t = 0
            sig_t = 0
            for i in range(npairs):
                diff = deg[pu[i]] - deg[pv[i]]
                if diff < 0:
                    diff = -diff
                irr_t += diff
                sig_t += <long long>diff * diff
            dmax = deg[0]
            dmin = deg[0]
            for i in range(1, n):
                if deg[i] > dmax:
                    dmax = deg[i]
                if deg[i] < dmin:
                    dmin = deg[i]
            if _lam(n, nbr, &lam):
                failed = 1
                break
            c_irr[mask] = irr
            c_sig[mask] = sig
            c_irr_t[mask] = irr_t
            c_sig_t[mask] = sig_t
            c_m2[mask] = m2
            c_dmax[mask] = dmax
            c_dmin[mask] = dmin
            c_edges[mask] = edges
            c_ncomp[mask] = ncomp
            c_lam[mask] = lam
            c_dbar[mask] = (2.0 * edges) / n
    if failed:
        raise RuntimeError(f"power iteration did not converge within {POWER_CAP} iterations")
    arrays["lam"] = lam_arr
    arrays["dbar"] = dbar_arr
    return arrays
