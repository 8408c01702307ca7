"""Independent oracle for frozen expected values used by the C++ test suite.

Uses networkx/numpy only (dense eigensolver, graph atlas, VF2 monomorphism),
never the library under test. Run: python3 tests/oracle/compute_frozen.py
"""
import itertools

import networkx as nx
import numpy as np
from networkx.algorithms import isomorphism


def lam(g):
    if g.number_of_nodes() == 0:
        return 0.0
    return float(max(np.linalg.eigvalsh(nx.to_numpy_array(g, nodelist=sorted(g)))))


def wheel(k):
    return nx.wheel_graph(2 * k + 1)


def contains(g, h):
    return isomorphism.GraphMatcher(g, h).subgraph_is_monomorphic()


def core(k):
    g = nx.Graph()
    g.add_nodes_from(range(k + 1))
    mbar = list(range(1, k - 1))
    k2 = [k - 1, k]
    for a in mbar:
        g.add_edge(0, a)
        for c in k2:
            g.add_edge(a, c)
    for i, a in enumerate(mbar):
        for b in mbar[i + 1:]:
            # perfect matching pairs (1,2), (3,4), ... are removed
            if not (a % 2 == 1 and b == a + 1):
                g.add_edge(a, b)
    g.add_edge(k - 1, k)
    return g


def union(*parts):
    return nx.disjoint_union_all(list(parts)) if parts else nx.empty_graph(0)


def candidate(n, left, r_edge=True):
    nl = left.number_of_nodes()
    g = nx.Graph()
    g.add_nodes_from(range(n))
    g.add_edges_from(left.edges())
    g.add_edges_from((u, v) for u in range(nl) for v in range(nl, n))
    if r_edge:
        g.add_edge(nl, nl + 1)
    return g


def brute_spex(n, k):
    w = wheel(k)
    best, arg = -1.0, []
    for g in nx.graph_atlas_g():
        if g.number_of_nodes() != n:
            continue
        if contains(g, w):
            continue
        r = lam(g)
        if r > best + 1e-9:
            best, arg = r, [g]
        elif abs(r - best) <= 1e-9:
            arg.append(g)
    return best, [(a.number_of_edges(), sorted(d for _, d in a.degree())) for a in arg]


print("atlas class counts 1..7:",
      [sum(1 for g in nx.graph_atlas_g() if g.number_of_nodes() == m) for m in range(1, 8)])
for n, k in [(4, 2), (5, 2), (6, 2), (7, 2), (7, 3)]:
    print("brute_spex", n, k, brute_spex(n, k))

near7 = [g for g in nx.graph_atlas_g() if g.number_of_nodes() == 7 and nx.is_connected(g)
         and sorted(d for _, d in g.degree()) == [2, 3, 3, 3, 3, 3, 3]]
print("connected near-cubic on 7:", len(near7))

# Fact 1 candidates.
c3 = union(*([nx.cycle_graph(3)] * 2 + [nx.cycle_graph(4)] * 11))  # 6 + 44 = 50 vertices
assert c3.number_of_nodes() == 50
g = candidate(100, c3)
bound = (2 + np.sqrt(4 + 100 ** 2 - 1)) / 2 + 1 / 200
print("fact1 k=3 n=100: lambda=%.15f bound=%.15f" % (lam(g), bound))
left = union(core(4), *[nx.complete_graph(4)] * 10, nx.complete_bipartite_graph(3, 3))
assert left.number_of_nodes() == 51
g = candidate(102, left)
print("fact1 k=4 n=102: lambda=%.15f bound=%.15f" % (lam(g), (3 + np.sqrt(9 + 102 ** 2 - 1)) / 2 + 1 / 204))

# One-set embedding: clique S of 34, independent T of 6 joined to S.
def one_set(h, base=40, t=6):
    s = base - t
    g = nx.complete_graph(s)
    g.add_nodes_from(range(s, base))
    g.add_edges_from((a, b) for a in range(s) for b in range(s, base))
    g.add_edges_from((s + a, s + b) for a, b in h.edges())
    return lam(g)

pad = lambda h, t=6: union(h, nx.empty_graph(t - h.number_of_nodes())) if h.number_of_nodes() < t else h
print("one-set C6 %.15f 2C3 %.15f" % (one_set(nx.cycle_graph(6)), one_set(union(nx.cycle_graph(3), nx.cycle_graph(3)))))
print("one-set K3+K1 %.15f P4 %.15f" % (one_set(pad(union(nx.complete_graph(3), nx.empty_graph(1)))),
                                      one_set(pad(nx.path_graph(4)))))

# V-embedded versus U-embedded candidates (k=4) at n=22.
k33, prism = nx.complete_bipartite_graph(3, 3), nx.circular_ladder_graph(3)
print("n=22 V s=0 (core+K33): %.15f" % lam(candidate(22, union(core(4), k33))))
print("n=22 V s=0 (core+prism): %.15f" % lam(candidate(22, union(core(4), prism))))
for name, l in [("3K4", union(*[nx.complete_graph(4)] * 3)), ("K33+K33", union(k33, k33)),
                ("K33+prism", union(k33, prism)), ("prism+prism", union(prism, prism))]:
    print("n=22 U s=+1 %s: %.15f" % (name, lam(candidate(22, l))))
for name, l in [("K4+K33", union(nx.complete_graph(4), k33)), ("K4+prism", union(nx.complete_graph(4), prism))]:
    print("n=22 U s=-1 %s: %.15f" % (name, lam(candidate(22, l))))
# k=3, n=20
for s, l in [(-1, union(*[nx.cycle_graph(3)] * 3)), (0, union(nx.cycle_graph(3), nx.cycle_graph(3), nx.cycle_graph(4))),
             (1, union(nx.cycle_graph(3), nx.cycle_graph(4), nx.cycle_graph(4)))]:
    print("n=20 k=3 s=%d: %.15f" % (s, lam(candidate(20, l))))

# Claim-1 radii from graphs: V-embedded s=0 vs U-embedded s=+1.
def first_cubic(m):
    # K4 copies, then one K33 if m = 2 mod 4
    parts = [nx.complete_graph(4)] * (m // 4) if m % 4 == 0 else [k33] + [nx.complete_graph(4)] * ((m - 6) // 4)
    return union(*parts)
for n in (22, 102):
    h = n // 2
    rest = h - 5
    left_v = union(core(4), first_cubic(rest))
    print("claim1 k=4 n=%d radius1=%.15f radius2=%.15f" % (n, lam(candidate(n, left_v)), lam(candidate(n, first_cubic(h + 1)))))


def near_cubic_9():
    n9=9; deg=[2]+[3]*8
    def gen():
        # vertex 0 is the degree-2 vertex, adjacent to 1 and 2 (WLOG)
        adj=[set() for _ in range(n9)]
        for v in (1,2): adj[0].add(v); adj[v].add(0)
        def rec(v):
            if v==n9:
                yield [set(a) for a in adj]; return
            need=deg[v]-len(adj[v])
            if need<0: return
            cands=[u for u in range(v+1,n9) if u not in adj[v] and len(adj[u])<deg[u]]
            for c in itertools.combinations(cands,need):
                for u in c: adj[v].add(u); adj[u].add(v)
                yield from rec(v+1)
                for u in c: adj[v].discard(u); adj[u].discard(v)
        yield from rec(1)
    reps={}
    for a in gen():
        g=nx.Graph(); g.add_nodes_from(range(n9)); g.add_edges_from((i,j) for i in range(n9) for j in a[i] if i<j)
        if not nx.is_connected(g): continue
        h=nx.weisfeiler_lehman_graph_hash(g,iterations=4)
        b=reps.setdefault(h,[])
        if not any(nx.is_isomorphic(g,x) for x in b): b.append(g)
    print("connected near-cubic on 9:", sum(len(b) for b in reps.values()))


near_cubic_9()

# Claim-1 radii at k=6, n=50: every V (resp. regular U) embedding ties, so any member will do.
k6 = nx.complete_graph(6)
left_v6 = union(core(6), k6, k6, k6)
left_u6 = union(k6, k6, k6, nx.complement(nx.cycle_graph(8)))
print("claim1 k=6 n=50 radius1=%.15f radius2=%.15f" % (lam(candidate(50, left_v6)), lam(candidate(50, left_u6))))
