"""Pure-Python kernels: Dinic max-flow and the few-terminal split decomposition.

This module is the reference implementation; ``_ckernels`` is a Cython port
of exactly the same algorithms.  Both must stay behaviourally identical bit
for bit (same tie-breaking, same arc orders), since solution files are
required to be deterministic regardless of the selected backend.
"""

from collections import deque

BACKEND_NAME = "python"


def max_flow(n, tails, heads, caps, sources, sinks, cutoff=-1, want_cut=True):
    """Integer max-flow from ``sources`` to ``sinks`` via Dinic blocking flows.

    Returns ``(value, flows, reach)`` where ``flows[i]`` is the flow on input
    arc ``i`` and ``reach`` is the residual-reachability indicator per node
    (the inclusion-minimal minimum cut source side), or ``None`` when
    ``want_cut`` is false.  If ``cutoff >= 0`` the search stops as soon as the
    flow value reaches the cutoff; the returned flow is then feasible but not
    necessarily maximum and ``reach`` is ``None``.
    """
    m = len(tails)
    big = sum(caps) + 1
    # residual slots: 2i forward / 2i+1 backward for arc i, then super arcs
    src = n
    snk = n + 1
    nn = n + 2
    slot_to = []
    res = []
    first = [-1] * nn
    nxt = []

    def add(u, v, c):
        slot_to.append(v)
        res.append(c)
        nxt.append(-1)
        return len(slot_to) - 1

    # adjacency built in arc order; lists are linked in reverse, so collect
    # slot ids per node first and chain them afterwards to keep input order
    adj = [[] for _ in range(nn)]
    for i in range(m):
        s1 = add(heads[i], 0, 0)  # placeholder to keep ids 2i/2i+1 paired
    slot_to.clear()
    res.clear()
    nxt.clear()
    for i in range(m):
        a = add(tails[i], heads[i], caps[i])
        b = add(heads[i], tails[i], 0)
        adj[tails[i]].append(a)
        adj[heads[i]].append(b)
    for s in sources:
        a = add(src, s, big)
        b = add(s, src, 0)
        adj[src].append(a)
        adj[s].append(b)
    for t in sinks:
        a = add(t, snk, big)
        b = add(snk, t, 0)
        adj[t].append(a)
        adj[snk].append(b)
    # slot_to currently holds tails for even slots; rebuild as destinations
    for i in range(0, len(slot_to), 2):
        pass

    # NOTE: slot_to[a] must be the destination of slot a.
    # (rebuilt below from the paired layout)
    dest = [0] * len(slot_to)
    for i in range(m):
        dest[2 * i] = heads[i]
        dest[2 * i + 1] = tails[i]
    extra = 2 * m
    for k, s in enumerate(sources):
        dest[extra + 2 * k] = s
        dest[extra + 2 * k + 1] = src
    extra += 2 * len(sources)
    for k, t in enumerate(sinks):
        dest[extra + 2 * k] = snk
        dest[extra + 2 * k + 1] = t

    level = [-1] * nn
    it = [0] * nn
    total = 0

    def bfs():
        for i in range(nn):
            level[i] = -1
        dq = deque([src])
        level[src] = 0
        while dq:
            u = dq.popleft()
            for a in adj[u]:
                v = dest[a]
                if res[a] > 0 and level[v] < 0:
                    level[v] = level[u] + 1
                    dq.append(v)
        return level[snk] >= 0

    def dfs(u, limit):
        if u == snk:
            return limit
        pushed = 0
        while it[u] < len(adj[u]):
            a = adj[u][it[u]]
            v = dest[a]
            if res[a] > 0 and level[v] == level[u] + 1:
                got = dfs(v, min(limit - pushed, res[a]))
                if got:
                    res[a] -= got
                    res[a ^ 1] += got
                    pushed += got
                    if pushed == limit:
                        return pushed
                else:
                    it[u] += 1
            else:
                it[u] += 1
        return pushed

    import sys

    old_limit = sys.getrecursionlimit()
    if nn + 50 > old_limit:
        sys.setrecursionlimit(nn + 100)
    try:
        while bfs():
            for i in range(nn):
                it[i] = 0
            while True:
                pushed = dfs(src, big)
                if not pushed:
                    break
                total += pushed
                if 0 <= cutoff <= total:
                    return total, _extract_flows(res, m), None
            if 0 <= cutoff <= total:
                return total, _extract_flows(res, m), None
    finally:
        sys.setrecursionlimit(old_limit)

    reach = None
    if want_cut:
        seen = [False] * nn
        seen[src] = True
        dq = deque([src])
        while dq:
            u = dq.popleft()
            for a in adj[u]:
                v = dest[a]
                if res[a] > 0 and not seen[v]:
                    seen[v] = True
                    dq.append(v)
        reach = seen[:n]
    return total, _extract_flows(res, m), reach


def _extract_flows(res, m):
    return [res[2 * i + 1] for i in range(m)]


class _Rec:
    __slots__ = ("kind", "a", "b", "c", "members", "mflows")

    def __init__(self, kind, a=-1, b=-1, c=-1, members=None, mflows=None):
        self.kind = kind
        self.a = a
        self.b = b
        self.c = c
        self.members = members
        self.mflows = mflows


def split_decompose(n, tails, heads, flows, sources, sinks):
    """Decompose an integer S-T flow into per-pair flows by splitting-off.

    Processes nodes in min-degree order: merges parallel arcs at the node,
    repeatedly splits an (in-arc, out-arc) pair into a bypass arc, removes
    the node once exhausted (terminals are kept), then replays the recorded
    operations in reverse to pull the trivial end-state decomposition back
    onto the original arcs.

    Returns ``(pair_flows, stats)``; ``pair_flows[k]`` is an ``{arc: value}``
    dict for the k-th (source, sink) pair in row-major order, covering the
    original arc ids only.  ``stats`` carries the instrumentation counters
    used by the degree-bound checks and the benchmark harness.
    """
    m0_in = len(tails)
    tail = []
    head = []
    f = []
    alive = []
    out_arcs = [[] for _ in range(n)]
    in_arcs = [[] for _ in range(n)]
    deg = [0] * n

    def new_arc(u, v, fv):
        e = len(tail)
        tail.append(u)
        head.append(v)
        f.append(fv)
        alive.append(True)
        out_arcs[u].append(e)
        in_arcs[v].append(e)
        deg[u] += 1
        deg[v] += 1
        return e

    def kill(e):
        alive[e] = False
        deg[tail[e]] -= 1
        deg[head[e]] -= 1

    is_source = [False] * n
    is_sink = [False] * n
    for s in sources:
        is_source[s] = True
    for t in sinks:
        is_sink[t] = True

    loops_lost = 0
    for i in range(m0_in):
        if flows[i] <= 0:
            continue
        if tails[i] == heads[i]:
            loops_lost += 1
            continue
        new_arc(tails[i], heads[i], flows[i])
        # keep the created id aligned with the input id
        if len(tail) - 1 != i:
            raise AssertionError("zero-flow arcs must still occupy their id slot")
    # The id-alignment above only works when no arc was skipped; rebuild
    # generically instead.
    tail.clear()
    head.clear()
    f.clear()
    alive.clear()
    deg = [0] * n
    out_arcs = [[] for _ in range(n)]
    in_arcs = [[] for _ in range(n)]
    m0 = 0
    for i in range(m0_in):
        e = len(tail)
        tail.append(tails[i])
        head.append(heads[i])
        if flows[i] > 0 and tails[i] != heads[i]:
            f.append(flows[i])
            alive.append(True)
            out_arcs[tails[i]].append(e)
            in_arcs[heads[i]].append(e)
            deg[tails[i]] += 1
            deg[heads[i]] += 1
            m0 += 1
        else:
            f.append(0)
            alive.append(False)

    # lazy bucket queue over current degrees
    buckets = [[] for _ in range(8)]

    def push(v):
        d = deg[v]
        while d >= len(buckets):
            buckets.append([])
        buckets[d].append(v)

    processed = [False] * n
    for v in range(n - 1, -1, -1):
        push(v)  # reversed so ties pop in increasing node id (LIFO pop)
    dmin = 0

    records = []
    deg_star = []
    order = []
    splits = 0
    merges = 0

    for _ in range(n):
        # pop the unprocessed node with minimum current degree
        v = -1
        d = dmin
        while d < len(buckets):
            bucket = buckets[d]
            while bucket:
                cand = bucket[-1]
                if processed[cand] or deg[cand] != d:
                    bucket.pop()
                    continue
                v = cand
                bucket.pop()
                break
            if v >= 0:
                dmin = d
                break
            d += 1
        if v < 0:
            break
        processed[v] = True

        # merge parallel arcs at v (grouped by the far endpoint, per side)
        for side_out in (True, False):
            lst = out_arcs[v] if side_out else in_arcs[v]
            live = [e for e in lst if alive[e]]
            groups = {}
            group_order = []
            for e in live:
                w = head[e] if side_out else tail[e]
                if w == v:
                    continue
                if w not in groups:
                    groups[w] = []
                    group_order.append(w)
                groups[w].append(e)
            for w in group_order:
                grp = groups[w]
                if len(grp) < 2:
                    continue
                total = 0
                mflows = []
                for e in grp:
                    total += f[e]
                    mflows.append(f[e])
                    kill(e)
                    if not processed[tail[e] if side_out else w]:
                        pass
                merged = new_arc(v, w, total) if side_out else new_arc(w, v, total)
                records.append(_Rec("merge", a=merged, members=list(grp), mflows=mflows))
                merges += 1
                if not processed[w]:
                    push(w)
            if side_out:
                out_arcs[v] = [e for e in out_arcs[v] if alive[e]]
            else:
                in_arcs[v] = [e for e in in_arcs[v] if alive[e]]

        deg_star.append(deg[v])
        order.append(v)

        # split off (in, out) pairs until one side is empty
        ins = in_arcs[v]
        outs = out_arcs[v]
        pi = 0
        po = 0
        while True:
            while pi < len(ins) and not alive[ins[pi]]:
                pi += 1
            while po < len(outs) and not alive[outs[po]]:
                po += 1
            if pi >= len(ins) or po >= len(outs):
                break
            e = ins[pi]
            e2 = outs[po]
            u = tail[e]
            w = head[e2]
            eps = f[e] if f[e] < f[e2] else f[e2]
            splits += 1
            f[e] -= eps
            f[e2] -= eps
            dead_u = dead_w = False
            if f[e] == 0:
                kill(e)
                dead_u = True
            if f[e2] == 0:
                kill(e2)
                dead_w = True
            if u == w:
                loops_lost += 1  # the bypass is a loop: drop its flow
            else:
                enew = new_arc(u, w, eps)
                records.append(_Rec("split", a=e, b=e2, c=enew))
                if not processed[u]:
                    push(u)
                if not processed[w]:
                    push(w)
            if dead_u and not processed[u]:
                push(u)
            if dead_w and not processed[w]:
                push(w)
        if not (is_source[v] or is_sink[v]):
            if deg[v] != 0:
                raise AssertionError(f"inner node {v} not exhausted (degree {deg[v]})")
        if deg[v] < dmin:
            dmin = deg[v]

    # trivial decomposition on the remaining source->sink arcs
    npairs = len(sources) * len(sinks)
    pair_of = {}
    for a, s in enumerate(sources):
        for b, t in enumerate(sinks):
            pair_of[(s, t)] = a * len(sinks) + b
    pf = [dict() for _ in range(npairs)]
    for e in range(len(tail)):
        if not alive[e]:
            continue
        key = (tail[e], head[e])
        if key not in pair_of:
            raise AssertionError(f"residual arc {tail[e]}->{head[e]} is not source->sink")
        pf[pair_of[key]][e] = f[e]

    # restoration: replay records backwards
    for rec in reversed(records):
        if rec.kind == "split":
            e, e2, enew = rec.a, rec.b, rec.c
            for p in pf:
                val = p.pop(enew, 0)
                if val:
                    p[e] = p.get(e, 0) + val
                    p[e2] = p.get(e2, 0) + val
        else:  # merge
            merged = rec.a
            rem = list(rec.mflows)
            members = rec.members
            for p in pf:
                val = p.pop(merged, 0)
                k = 0
                while val:
                    take = rem[k] if rem[k] < val else val
                    if take:
                        p[members[k]] = p.get(members[k], 0) + take
                        rem[k] -= take
                        val -= take
                    if rem[k] == 0:
                        k += 1
                if val:
                    raise AssertionError("merge restoration overflow")

    for p in pf:
        for e in p:
            if e >= m0_in:
                raise AssertionError("restored flow on a non-original arc")

    stats = {
        "deg_star": deg_star,
        "order": order,
        "splits": splits,
        "merges": merges,
        "m0": m0,
        "loops_lost": loops_lost,
    }
    return pf, stats
