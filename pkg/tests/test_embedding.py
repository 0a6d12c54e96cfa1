import json
import math

import numpy as np
import pytest

from srgqec import generators as gen
from srgqec.embedding import Embedding, construct_embedding, gram_matrix, verify_embedding
from srgqec.errors import InputError, NotQEClass
from srgqec.graph import detect_srg, distance_matrix
from srgqec.qec import qec_numeric

from conftest import SRG_CORPUS, random_connected_graph


def test_gram_k2():
    np.testing.assert_allclose(gram_matrix(distance_matrix(gen.complete(2))), [[0.25, -0.25], [-0.25, 0.25]])


@pytest.mark.parametrize("label,g", SRG_CORPUS[:10])
def test_gram_is_centered_and_symmetric(label, g):
    m = gram_matrix(distance_matrix(g))
    np.testing.assert_allclose(m @ np.ones(g.n), 0, atol=1e-12)
    assert np.array_equal(m, m.T)


def test_gram_c5_psd():
    m = gram_matrix(distance_matrix(gen.cycle(5)))
    assert np.linalg.eigvalsh(m).min() >= -1e-10


def test_embed_c4():
    e = construct_embedding(distance_matrix(gen.cycle(4)))
    assert e.dim <= 3 and e.max_deviation <= 1e-10


def test_embed_clebsch_fails():
    with pytest.raises(NotQEClass) as info:
        construct_embedding(distance_matrix(gen.clebsch()))
    # Gram eigenvalue on 1-perp is -QEC/2
    assert info.value.min_eigenvalue == pytest.approx(-0.5, abs=1e-9)


def test_embed_petersen_boundary():
    e = construct_embedding(distance_matrix(gen.petersen()))
    assert e.max_deviation <= 1e-8
    # D eigenvalue -3 (x5) maps to Gram eigenvalue 3/2; the zero eigenvalues drop out
    assert e.dim == 5


def test_verify_c5_roundtrip():
    d = distance_matrix(gen.cycle(5))
    e = construct_embedding(d)
    assert verify_embedding(e, d) <= 1e-10


def test_verify_origin_points_k2():
    e = Embedding(n=2, dim=1, points=np.zeros((2, 1)), max_deviation=0.0)
    assert verify_embedding(e, distance_matrix(gen.complete(2))) == 1.0


@pytest.mark.parametrize("n", [2, 3, 5, 8])
def test_verify_regular_simplex(n):
    # e_i / sqrt(2) are pairwise at squared distance 1
    e = Embedding(n=n, dim=n, points=np.eye(n) / math.sqrt(2), max_deviation=0.0)
    assert verify_embedding(e, distance_matrix(gen.complete(n))) <= 1e-10


def test_verify_size_mismatch():
    e = construct_embedding(distance_matrix(gen.cycle(4)))
    with pytest.raises(InputError):
        verify_embedding(e, distance_matrix(gen.cycle(5)))


def test_json_export_roundtrip(tmp_path):
    e = construct_embedding(distance_matrix(gen.cycle(6)))
    path = tmp_path / "e.json"
    e.save(path)
    data = json.loads(path.read_text())
    assert set(data) == {"n", "dim", "points", "max_deviation"}
    back = Embedding.from_dict(data)
    assert back.n == e.n and back.dim == e.dim and np.array_equal(back.points, e.points)


@pytest.mark.parametrize("label,g", SRG_CORPUS)
def test_schoenberg_on_srgs(label, g):
    n, k, lam, mu = detect_srg(g).as_tuple()
    d = distance_matrix(g)
    if k - 2 * lam + mu <= 4:
        e = construct_embedding(d)
        assert e.max_deviation <= 1e-8 and e.dim <= g.n - 1
        assert np.linalg.norm(e.points.mean(axis=0)) <= 1e-9
    else:
        with pytest.raises(NotQEClass):
            construct_embedding(d)


def test_schoenberg_on_random_graphs():
    rng = np.random.default_rng(7)
    seen = set()
    for _ in range(60):
        g = random_connected_graph(rng, int(rng.integers(2, 16)), float(rng.uniform(0.15, 0.9)))
        q = qec_numeric(g).qec
        d = distance_matrix(g)
        try:
            e = construct_embedding(d)
            ok = True
            assert e.max_deviation <= 1e-8
        except NotQEClass:
            ok = False
        assert ok == (q <= 1e-9)
        seen.add(ok)
    assert seen == {True, False}
