import itertools
import random

import numpy as np
import pytest

from metdim import build_graph
from metdim.families import complete_bipartite, cycle, flower_snark, path, wheel


def random_connected_graph(n, p, seed):
    """Random spanning tree plus independent extra edges with probability p."""
    rng = random.Random(seed)
    order = list(range(n))
    rng.shuffle(order)
    edges = set()
    for i in range(1, n):
        u, v = order[i], order[rng.randrange(i)]
        edges.add((min(u, v), max(u, v)))
    for u, v in itertools.combinations(range(n), 2):
        if (u, v) not in edges and rng.random() < p:
            edges.add((u, v))
    return build_graph(n, sorted(edges), name=f"rand_{n}_{seed}")


def random_corpus(count=50, lo=5, hi=14, seed=2024):
    rng = random.Random(seed)
    out = []
    for i in range(count):
        n = rng.randint(lo, hi)
        p = rng.choice([0.1, 0.2, 0.35, 0.5, 0.7])
        out.append(random_connected_graph(n, p, seed * 1000 + i))
    return out


def family_corpus(max_flower=11):
    graphs = [flower_snark(n)[0] for n in range(5, max_flower + 1, 2)]
    graphs += [wheel(n)[0] for n in range(3, 11)]
    graphs += [path(n) for n in range(2, 9)]
    graphs += [cycle(n) for n in range(3, 9)]
    graphs += [complete_bipartite(p, q) for p in range(1, 4) for q in range(p, 4) if p + q >= 2]
    return graphs


def floyd_warshall(g):
    """Independent distance oracle."""
    n = g.n
    inf = 10**6
    d = np.full((n, n), inf, dtype=np.int64)
    np.fill_diagonal(d, 0)
    for u, v in g.edges:
        d[u, v] = d[v, u] = 1
    for k in range(n):
        d = np.minimum(d, d[:, [k]] + d[[k], :])
    return d


def brute_coords(g, dist, landmarks, kind="mixed"):
    """Coordinate tuples of every item, computed with plain Python."""
    rows = []
    if kind in ("vertex", "mixed"):
        rows += [tuple(int(dist[v][w]) for w in landmarks) for v in range(g.n)]
    if kind in ("edge", "mixed"):
        rows += [tuple(int(min(dist[u][w], dist[v][w])) for w in landmarks) for u, v in g.edges]
    return rows


def brute_resolves(g, dist, landmarks, kind="mixed"):
    rows = brute_coords(g, dist, landmarks, kind)
    for i in range(len(rows)):
        for j in range(i + 1, len(rows)):
            if rows[i] == rows[j]:
                return False
    return True


def brute_dimension(g, kind="mixed"):
    dist = floyd_warshall(g)
    for r in range(1, g.n + 1):
        found = [s for s in itertools.combinations(range(g.n), r)
                 if brute_resolves(g, dist, s, kind)]
        if found:
            return r, found
    return None, []


# acceptance reporting -------------------------------------------------------

_ACCEPTANCE = []


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(id, text): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    if rep.when == "call" or (rep.when == "setup" and rep.outcome != "passed"):
        _ACCEPTANCE.append((marker.args[0], marker.args[1], rep.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for cid, text, outcome in sorted(_ACCEPTANCE, key=lambda x: int(x[0])):
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"AC{cid:>2} {status}  {text}")
