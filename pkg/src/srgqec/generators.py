"""Named graph families.

Every family is reachable through :func:`generate` by name, which is also
what the CLI's ``--gen family:p1,p2`` option resolves to.
"""

from __future__ import annotations

from itertools import combinations, product

import numpy as np

from .errors import InputError
from .graph import Graph, complement, from_edge_list


def _need(cond: bool, msg: str):
    if not cond:
        raise InputError(msg)


def is_prime(q: int) -> bool:
    if q < 2:
        return False
    if q % 2 == 0:
        return q == 2
    d = 3
    while d * d <= q:
        if q % d == 0:
            return False
        d += 2
    return True


def cycle(n: int) -> Graph:
    _need(n >= 3, f"cycle needs n >= 3, got {n}")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    _need(n >= 1, f"path needs n >= 1, got {n}")
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Graph:
    _need(n >= 1, f"complete graph needs n >= 1, got {n}")
    return Graph(~np.eye(n, dtype=bool))


def empty(n: int) -> Graph:
    _need(n >= 1, f"empty graph needs n >= 1, got {n}")
    return Graph(np.zeros((n, n), dtype=bool))


def disjoint_complete(p: int, q: int) -> Graph:
    """``p`` disjoint copies of ``K_q``."""
    _need(p >= 1 and q >= 1, f"disjoint_complete needs p, q >= 1, got {p}, {q}")
    block = np.arange(p * q) // q
    adj = block[:, None] == block[None, :]
    np.fill_diagonal(adj, False)
    return Graph(adj)


def complete_multipartite(*parts: int) -> Graph:
    _need(len(parts) >= 1 and all(m >= 1 for m in parts), f"complete_multipartite needs positive part sizes, got {parts}")
    block = np.repeat(np.arange(len(parts)), parts)
    return Graph(block[:, None] != block[None, :])


def cocktail_party(p: int) -> Graph:
    _need(p >= 2, f"cocktail_party needs p >= 2, got {p}")
    return complement(disjoint_complete(p, 2))


def _set_graph(points, adjacent) -> Graph:
    n = len(points)
    return from_edge_list(n, [(i, j) for i, j in combinations(range(n), 2) if adjacent(points[i], points[j])])


def petersen() -> Graph:
    # Kneser graph K(5,2): 2-subsets in lexicographic order, adjacent iff disjoint.
    pts = [set(c) for c in combinations(range(1, 6), 2)]
    return _set_graph(pts, lambda a, b: not (a & b))


def triangular(n: int) -> Graph:
    """Line graph of ``K_n``: 2-subsets of ``{1..n}``, adjacent iff they meet."""
    _need(n >= 2, f"triangular needs n >= 2, got {n}")
    pts = [set(c) for c in combinations(range(1, n + 1), 2)]
    return _set_graph(pts, lambda a, b: bool(a & b))


def rook(n: int) -> Graph:
    """Line graph of ``K_{n,n}``: cells of an n x n board sharing a row or column."""
    _need(n >= 2, f"rook needs n >= 2, got {n}")
    pts = list(product(range(n), repeat=2))
    return _set_graph(pts, lambda a, b: a[0] == b[0] or a[1] == b[1])


def paley(q: int) -> Graph:
    """Paley graph on ``Z_q`` for a prime ``q = 1 (mod 4)``."""
    _need(is_prime(q), f"paley needs a prime q, got {q}")
    _need(q % 4 == 1, f"paley needs q = 1 (mod 4), got {q}")
    residues = {(x * x) % q for x in range(1, q)}
    diff = (np.arange(q)[:, None] - np.arange(q)[None, :]) % q
    return Graph(np.isin(diff, list(residues)))


def clebsch() -> Graph:
    """Folded 5-cube: F_2^4, adjacent iff the difference has weight 1 or 4."""
    pts = list(product(range(2), repeat=4))
    return _set_graph(pts, lambda a, b: sum(x != y for x, y in zip(a, b)) in (1, 4))


def shrikhande() -> Graph:
    """Cayley graph on Z_4 x Z_4 with connection set {±(1,0), ±(0,1), ±(1,1)}."""
    conn = {(1, 0), (3, 0), (0, 1), (0, 3), (1, 1), (3, 3)}
    pts = list(product(range(4), repeat=2))
    return _set_graph(pts, lambda a, b: ((a[0] - b[0]) % 4, (a[1] - b[1]) % 4) in conn)


FAMILIES = {
    "cycle": cycle,
    "path": path,
    "complete": complete,
    "empty": empty,
    "disjoint_complete": disjoint_complete,
    "complete_multipartite": complete_multipartite,
    "cocktail_party": cocktail_party,
    "petersen": petersen,
    "triangular": triangular,
    "rook": rook,
    "paley": paley,
    "clebsch": clebsch,
    "shrikhande": shrikhande,
}


def generate(family: str, *params: int) -> Graph:
    try:
        fn = FAMILIES[family]
    except KeyError:
        raise InputError(f"unknown family {family!r}; choose from {', '.join(sorted(FAMILIES))}") from None
    try:
        return fn(*params)
    except TypeError:
        raise InputError(f"wrong number of parameters for {family}: {params}") from None


def parse_generator_spec(spec: str) -> tuple[str, tuple[int, ...]]:
    """Split ``family[:p1[,p2...]]`` into a name and integer parameters."""
    family, _, rest = spec.strip().partition(":")
    try:
        params = tuple(int(p) for p in rest.split(",")) if rest else ()
    except ValueError:
        raise InputError(f"bad generator parameters in {spec!r}") from None
    return family, params


def from_spec(spec: str) -> Graph:
    family, params = parse_generator_spec(spec)
    return generate(family, *params)
