"""Hot kernels for exhaustive verification.

Everything here works on flat int64 arrays so the same code runs two
ways: compiled with numba's ``@njit`` (the default) or as plain Python
over numpy arrays.  The backend is chosen once at import time from the
``SHIPARK_BACKEND`` environment variable:

    SHIPARK_BACKEND=numba    force numba (ImportError if unavailable)
    SHIPARK_BACKEND=numpy    force the pure-Python/numpy fallback
    unset or "auto"          numba when importable, else fallback

The compiled kernels release the GIL, so the verification driver can
fan word chunks out to a thread pool.  ``benchmarks/bench_verify.py``
compares the two backends.

Labels are encoded in mixed radix: a function f on {1..n} becomes
``sum((f(i) - 1) * n**(i-1))``, an index into a byte table of size n**n.
"""

from __future__ import annotations

import os


def _resolve_backend() -> str:
    env = os.environ.get("SHIPARK_BACKEND", "auto").strip().lower()
    if env in ("numpy", "python", "nojit"):
        return "numpy"
    if env == "numba":
        import numba  # noqa: F401  -- explicit request, let ImportError surface

        return "numba"
    if env in ("", "auto"):
        try:
            import numba  # noqa: F401

            return "numba"
        except ImportError:
            return "numpy"
    raise ValueError(f"unrecognized SHIPARK_BACKEND={env!r}; use 'numba' or 'numpy'")


BACKEND = _resolve_backend()

if BACKEND == "numba":
    from numba import njit

    def _jit(fn):
        return njit(cache=True, nogil=True)(fn)

else:

    def _jit(fn):
        return fn


import numpy as np  # noqa: E402


@_jit
def _label_code(w, n, arc_o, arc_c, depth, fval, powers):
    """Label the pair (w, arcs) and return the label's mixed-radix code.

    For the letter at position j the value is j minus the number of larger
    letters between the least covering arc's opener (or j itself when
    uncovered) and j.  ``fval`` receives the value of letter i+1 at index i.
    """
    for j in range(1, n + 1):
        opener = j
        for t in range(depth):
            if arc_o[t] <= j <= arc_c[t]:
                opener = arc_o[t]
                break
        letter = w[j - 1]
        larger = 0
        for t in range(opener, j):
            if w[t - 1] > letter:
                larger += 1
        fval[letter - 1] = j - larger
    code = 0
    for i in range(n):
        code += (fval[i] - 1) * powers[i]
    return code


@_jit
def _invert_arrays(dom0, f0, m, scratch):
    """Recover the pair of a parking function given as parallel arrays.

    Returns (ok, arc_count); the word lands in ``out_letters`` and the arcs
    in ``out_o``/``out_c``.  ``ok`` is False when any structural invariant
    of the peeling breaks, which a correct labeling never triggers.
    """
    (
        cur_dom,
        cur_f,
        nxt_dom,
        nxt_f,
        member,
        zdom,
        zval,
        prefix,
        inv_o,
        inv_c,
        mx_o,
        mx_c,
        pend,
        out_letters,
        out_o,
        out_c,
    ) = scratch
    for i in range(m):
        cur_dom[i] = dom0[i]
        cur_f[i] = f0[i]
    cm = m
    delta = 0
    lpos = 0
    apos = 0
    npend = 0
    while True:
        # greedy center membership
        zc = 0
        for i in range(cm):
            if cur_f[i] < 1:
                return False, apos
            if cur_f[i] <= zc + 1:
                member[i] = 1
                zdom[zc] = cur_dom[i]
                zval[zc] = cur_f[i]
                zc += 1
            else:
                member[i] = 0
        # letters promised to this center by the previous peel
        for t in range(npend):
            x = pend[t]
            found = False
            for i in range(zc):
                if zdom[i] == x:
                    found = True
                    break
            if not found:
                return False, apos
        # s-park the central restriction into the prefix
        for i in range(zc):
            slot = zval[i]
            for t in range(i, slot - 1, -1):
                prefix[t] = prefix[t - 1]
            prefix[slot - 1] = zdom[i]
        # maximal inversion intervals of the prefix, in lex order
        ninv = 0
        for i in range(1, zc + 1):
            for j in range(i + 1, zc + 1):
                if prefix[i - 1] > prefix[j - 1]:
                    inv_o[ninv] = i
                    inv_c[ninv] = j
                    ninv += 1
        nmx = 0
        for t in range(ninv):
            is_max = True
            for u in range(ninv):
                if u != t and inv_o[u] <= inv_o[t] and inv_c[t] <= inv_c[u]:
                    is_max = False
                    break
            if is_max:
                mx_o[nmx] = inv_o[t]
                mx_c[nmx] = inv_c[t]
                nmx += 1
        if zc == cm:
            for t in range(nmx):
                go = mx_o[t] + delta
                gc = mx_c[t] + delta
                if apos > 0 and (go <= out_o[apos - 1] or gc <= out_c[apos - 1]):
                    return False, apos
                out_o[apos] = go
                out_c[apos] = gc
                apos += 1
            for i in range(zc):
                out_letters[lpos] = prefix[i]
                lpos += 1
            return True, apos
        # cut: smallest per-letter maximum of the window equation
        # i + |prefix([i, zc]) ∩ [x-1]| = f(x) over letters outside the center
        c = -1
        for idx in range(cm):
            if member[idx] == 1:
                continue
            x = cur_dom[idx]
            fx = cur_f[idx]
            top = -1
            for i in range(1, zc + 1):
                below = 0
                for t in range(i - 1, zc):
                    if prefix[t] < x:
                        below += 1
                if i + below == fx:
                    top = i
            if fx == zc + 1:
                top = zc + 1
            if top >= 0 and (c < 0 or top < c):
                c = top
        if c < 2:
            return False, apos
        # prefix arcs opening before the cut belong to the answer;
        # later ones are truncation shadows of arcs crossing the boundary
        for t in range(nmx):
            if mx_o[t] >= c:
                continue
            go = mx_o[t] + delta
            gc = mx_c[t] + delta
            if apos > 0 and (go <= out_o[apos - 1] or gc <= out_c[apos - 1]):
                return False, apos
            out_o[apos] = go
            out_c[apos] = gc
            apos += 1
        for i in range(c - 1):
            out_letters[lpos] = prefix[i]
            lpos += 1
        delta += c - 1
        # renumber the survivors
        ncm = 0
        for i in range(cm):
            x = cur_dom[i]
            dropped = False
            for t in range(c - 1):
                if prefix[t] == x:
                    dropped = True
                    break
            if dropped:
                continue
            if member[i] == 1:
                below = 0
                for t in range(c - 1):
                    if prefix[t] < x:
                        below += 1
                nxt_f[ncm] = cur_f[i] - below
            else:
                nxt_f[ncm] = cur_f[i] - c + 1
            nxt_dom[ncm] = x
            ncm += 1
        # the uncommitted part of the center must re-enter the next center
        npend = 0
        for i in range(zc):
            x = zdom[i]
            dropped = False
            for t in range(c - 1):
                if prefix[t] == x:
                    dropped = True
                    break
            if not dropped:
                pend[npend] = x
                npend += 1
        for i in range(ncm):
            cur_dom[i] = nxt_dom[i]
            cur_f[i] = nxt_f[i]
        cm = ncm


@_jit
def _check_pair(w, wi, n, base_dom, arc_o, arc_c, depth, fval, powers, seen,
                coll_buf, n_coll, fail_idx, fail_code, n_fail, inv_scratch):
    """Label one pair, mark its code, and verify the inversion round trip."""
    code = _label_code(w, n, arc_o, arc_c, depth, fval, powers)
    if seen[code] != 0:
        if n_coll < coll_buf.shape[0]:
            coll_buf[n_coll] = code
        n_coll += 1
    else:
        seen[code] = 1
    ok, narc = _invert_arrays(base_dom, fval, n, inv_scratch)
    out_letters = inv_scratch[13]
    out_o = inv_scratch[14]
    out_c = inv_scratch[15]
    if ok and narc == depth:
        for i in range(n):
            if out_letters[i] != w[i]:
                ok = False
                break
        if ok:
            for t in range(depth):
                if out_o[t] != arc_o[t] or out_c[t] != arc_c[t]:
                    ok = False
                    break
    else:
        ok = False
    if not ok:
        if n_fail < fail_idx.shape[0]:
            fail_idx[n_fail] = wi
            fail_code[n_fail] = code
        n_fail += 1
    return n_coll, n_fail


@_jit
def verify_chunk(words, seen, coll_buf, fail_idx, fail_code):
    """Enumerate and check every valid pair for a chunk of words.

    ``words`` is (k, n) with letters 1..n per row; ``seen`` is the shared
    byte table of size n**n.  Returns (pair_count, collision_count,
    roundtrip_failure_count); the buffers hold the first entries of each
    failure kind, with chunk-local word indices.
    """
    nw = words.shape[0]
    n = words.shape[1]
    max_pairs = n * (n - 1) // 2

    po = np.empty(max_pairs, np.int64)
    pc = np.empty(max_pairs, np.int64)
    so = np.empty(n, np.int64)
    sc = np.empty(n, np.int64)
    sidx = np.empty(n, np.int64)
    fval = np.empty(n, np.int64)
    base_dom = np.empty(n, np.int64)
    powers = np.empty(n, np.int64)
    p = 1
    for i in range(n):
        base_dom[i] = i + 1
        powers[i] = p
        p *= n
    inv_scratch = (
        np.empty(n, np.int64),
        np.empty(n, np.int64),
        np.empty(n, np.int64),
        np.empty(n, np.int64),
        np.empty(n, np.int64),
        np.empty(n, np.int64),
        np.empty(n, np.int64),
        np.empty(n, np.int64),
        np.empty(max_pairs, np.int64),
        np.empty(max_pairs, np.int64),
        np.empty(n, np.int64),
        np.empty(n, np.int64),
        np.empty(n + 1, np.int64),
        np.empty(n, np.int64),
        np.empty(n, np.int64),
        np.empty(n, np.int64),
    )

    pair_count = 0
    n_coll = 0
    n_fail = 0
    for wi in range(nw):
        w = words[wi]
        npairs = 0
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                if w[i - 1] > w[j - 1]:
                    po[npairs] = i
                    pc[npairs] = j
                    npairs += 1
        # depth-first over arc systems; each node is one valid pair
        pair_count += 1
        n_coll, n_fail = _check_pair(
            w, wi, n, base_dom, so, sc, 0, fval, powers, seen,
            coll_buf, n_coll, fail_idx, fail_code, n_fail, inv_scratch,
        )
        depth = 0
        start = 0
        while True:
            found = -1
            for t in range(start, npairs):
                if depth == 0 or (po[t] > so[depth - 1] and pc[t] > sc[depth - 1]):
                    found = t
                    break
            if found >= 0:
                sidx[depth] = found
                so[depth] = po[found]
                sc[depth] = pc[found]
                depth += 1
                start = found + 1
                pair_count += 1
                n_coll, n_fail = _check_pair(
                    w, wi, n, base_dom, so, sc, depth, fval, powers, seen,
                    coll_buf, n_coll, fail_idx, fail_code, n_fail, inv_scratch,
                )
            else:
                if depth == 0:
                    break
                depth -= 1
                start = sidx[depth] + 1
    return pair_count, n_coll, n_fail


@_jit
def parking_scan(seen, n, counts, miss_buf):
    """Count parking functions on {1..n} and find any missing from ``seen``.

    Walks every code in 0..n**n-1, keeps those whose value multiset parks,
    and records codes whose byte is still zero.  Returns (parking_count,
    missed_count).
    """
    total = 0
    n_miss = 0
    cap = miss_buf.shape[0]
    size = seen.shape[0]
    for code in range(size):
        for j in range(n + 1):
            counts[j] = 0
        t = code
        for i in range(n):
            counts[t % n + 1] += 1
            t //= n
        cum = 0
        ok = True
        for j in range(1, n + 1):
            cum += counts[j]
            if cum < j:
                ok = False
                break
        if ok:
            total += 1
            if seen[code] == 0:
                if n_miss < cap:
                    miss_buf[n_miss] = code
                n_miss += 1
    return total, n_miss


def decode_values(code: int, n: int) -> tuple[int, ...]:
    """Invert the mixed-radix encoding back to a value tuple."""
    out = []
    for _ in range(n):
        out.append(code % n + 1)
        code //= n
    return tuple(out)
