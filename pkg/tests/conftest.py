import itertools

import numpy as np
import pytest

from srgqec import generators as gen


def srg_corpus():
    """Every constructible srg with mu >= 1 used across the suite, as (label, graph)."""
    out = [("cycle:4", gen.cycle(4)), ("cycle:5", gen.cycle(5))]
    out += [(f"cocktail_party:{p}", gen.cocktail_party(p)) for p in range(2, 7)]
    out += [
        (f"complete_multipartite:{','.join([str(q)] * p)}", gen.complete_multipartite(*[q] * p))
        for q in range(2, 6)
        for p in range(2, 6)
    ]
    out.append(("petersen", gen.petersen()))
    out += [(f"triangular:{n}", gen.triangular(n)) for n in range(4, 9)]
    out += [(f"rook:{n}", gen.rook(n)) for n in range(2, 7)]
    out += [(f"paley:{q}", gen.paley(q)) for q in (5, 13, 17, 29)]
    out += [("clebsch", gen.clebsch()), ("shrikhande", gen.shrikhande())]
    return out


SRG_CORPUS = srg_corpus()


@pytest.fixture(scope="session")
def corpus():
    return SRG_CORPUS


def find_isomorphism(a, b):
    """Brute-force vertex bijection mapping graph a onto graph b, or None. Tiny graphs only."""
    if a.n != b.n:
        return None
    A, B = a.adjacency, b.adjacency
    for perm in itertools.permutations(range(a.n)):
        p = np.array(perm)
        if np.array_equal(A, B[np.ix_(p, p)]):
            return perm
    return None


def floyd_warshall(adj):
    n = adj.shape[0]
    d = np.where(adj, 1.0, np.inf)
    np.fill_diagonal(d, 0.0)
    for k in range(n):
        d = np.minimum(d, d[:, k:k + 1] + d[k:k + 1, :])
    return d


def random_connected_graph(rng, n, p):
    """Erdős–Rényi G(n, p) resampled until connected."""
    from srgqec.graph import Graph

    while True:
        upper = np.triu(rng.random((n, n)) < p, 1)
        g = Graph(upper | upper.T)
        if g.is_connected():
            return g


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
