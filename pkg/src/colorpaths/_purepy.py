"""Reference implementations of the hot kernels.

``_speedups.pyx`` mirrors every function here with the same signature and the
same visiting order, so both backends return identical results.
"""

import time

_CHECK_EVERY = 1024


class _Budget:
    __slots__ = ("nodes", "max_nodes", "deadline", "exhausted")

    def __init__(self, max_nodes, deadline):
        self.nodes = 0
        self.max_nodes = max_nodes
        self.deadline = deadline
        self.exhausted = False

    def tick(self):
        self.nodes += 1
        if self.nodes > self.max_nodes:
            self.exhausted = True
        elif self.deadline > 0 and self.nodes % _CHECK_EVERY == 0 and time.monotonic() > self.deadline:
            self.exhausted = True
        return self.exhausted


def color_dp(colors, N, r, mono):
    """Per-vertex path lengths for every color.

    With ``mono`` false, entry ``k*r + c`` is the vertex-length of the longest
    path ending at vertex k that avoids color c+1; with ``mono`` true, the
    longest path ending at k using only color c+1.  ``preds`` holds the
    predecessor vertex on such a path (smallest index on ties) or -1.
    """
    vals = [1] * (N * r)
    preds = [-1] * (N * r)
    row_off = [0] * N
    for i in range(1, N):
        row_off[i] = row_off[i - 1] + (N - i)
    for k in range(1, N):
        base = k * r
        for c in range(r):
            best = 0
            arg = -1
            for j in range(k):
                col = colors[row_off[j] + k - j - 1] - 1
                if (col == c) == mono:
                    v = vals[j * r + c]
                    if v > best:
                        best = v
                        arg = j
            vals[base + c] = best + 1
            preds[base + c] = arg
    return vals, preds


def f_search(N, target, prefix, max_nodes, deadline):
    """Look for a 3-coloring of the transitive N-tournament whose longest
    1-color-avoiding path has at most ``target`` vertices.

    Edges are assigned column by column (all ``(j, k)`` for ``j < k`` before
    moving to ``k+1``) and colors are introduced in order of first use.  The
    first ``len(prefix)`` edges are forced to ``prefix``.

    Returns ``(flat_colors or None, nodes, exhausted)`` where ``flat_colors``
    is in row-major upper-triangle order.
    """
    if target < 1:
        return None, 0, False
    if N == 1:
        return [], 0, False
    order = [(j, k) for k in range(1, N) for j in range(k)]
    E = len(order)
    npre = len(prefix)
    T0 = [0] * N
    T1 = [0] * N
    T2 = [0] * N
    T0[0] = T1[0] = T2[0] = 1
    assign = [0] * E
    bud = _Budget(max_nodes, deadline)

    def rec(e, c0, c1, c2, used):
        if e == E:
            return True
        j, k = order[e]
        if e < npre:
            choices = (prefix[e],)
        else:
            choices = range(1, min(used + 1, 3) + 1)
        last = j == k - 1
        for col in choices:
            if bud.tick():
                return False
            n0 = c0 if col == 1 or T0[j] <= c0 else T0[j]
            n1 = c1 if col == 2 or T1[j] <= c1 else T1[j]
            n2 = c2 if col == 3 or T2[j] <= c2 else T2[j]
            if n0 >= target or n1 >= target or n2 >= target:
                continue
            assign[e] = col
            nu = col if col > used else used
            if last:
                T0[k] = n0 + 1
                T1[k] = n1 + 1
                T2[k] = n2 + 1
                ok = rec(e + 1, 0, 0, 0, nu)
            else:
                ok = rec(e + 1, n0, n1, n2, nu)
            if ok:
                return True
            if bud.exhausted:
                return False
        return False

    found = rec(0, 0, 0, 0, 0)
    if not found:
        return None, bud.nodes, bud.exhausted
    flat = [0] * E
    row_off = [0] * N
    for i in range(1, N):
        row_off[i] = row_off[i - 1] + (N - i)
    for e, (j, k) in enumerate(order):
        flat[row_off[j] + k - j - 1] = assign[e]
    return flat, bud.nodes, False


def max_chain(succ, families, prefix, cand, best_size, max_nodes, deadline):
    """Longest extension of ``prefix`` to a chain v1, v2, ... with every
    ``v_a -> v_b`` for ``a < b``.

    ``succ[v]`` is the bitmask of out-neighbours of v and ``cand`` the mask of
    vertices that follow every prefix element.  Each entry of ``families`` is
    a list of disjoint group masks such that a chain meets each group at most
    once; the number of groups touched bounds the remaining length.

    Only chains strictly longer than ``best_size`` are recorded.  Returns
    ``(best_chain or None, nodes, exhausted)``.
    """
    bud = _Budget(max_nodes, deadline)
    chain = list(prefix)
    best = [best_size, None]

    def bound(c):
        b = c.bit_count()
        for groups in families:
            t = 0
            for g in groups:
                if g & c:
                    t += 1
                    if t >= b:
                        break
            if t < b:
                b = t
        return b

    def rec(c):
        if bud.tick():
            return
        if len(chain) > best[0]:
            best[0] = len(chain)
            best[1] = list(chain)
        if not c or len(chain) + bound(c) <= best[0]:
            return
        rest = c
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            rest ^= low
            chain.append(v)
            rec(c & succ[v])
            chain.pop()
            if bud.exhausted:
                return

    rec(cand)
    return best[1], bud.nodes, bud.exhausted
