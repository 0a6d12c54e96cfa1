import json

import pytest

from srgqec.errors import InputError
from srgqec.graph import SrgParams
from srgqec.scan import (
    NAMED_GRAPHS,
    TSV_COLUMNS,
    candidates,
    enumerate_feasible,
    named_table,
    to_json_lines,
    to_tsv,
)
from srgqec.srg import complement_params, validate_params


def brute_force(n_max):
    """Every integer tuple in the bound box that validate_params accepts."""
    out = []
    for n in range(4, n_max + 1):
        for k in range(0, n):
            for lam in range(0, n):
                for mu in range(0, n):
                    if validate_params((n, k, lam, mu)).feasible:
                        out.append((n, k, lam, mu))
    return out


@pytest.fixture(scope="module")
def scan400():
    return enumerate_feasible(400)


def test_matches_brute_force():
    assert [r.params.as_tuple() for r in enumerate_feasible(40)] == brute_force(40)


def test_candidates_cover_relation():
    for n in range(4, 40):
        expected = {
            (k, lam, (k - lam - 1) * k // (n - k - 1))
            for k in range(2, n - 1)
            for lam in range(0, k - 1)
            if (k - lam - 1) * k % (n - k - 1) == 0 and (k - lam - 1) * k // (n - k - 1) <= k
        }
        assert set(candidates(n)) == expected


def test_n5():
    assert [r.params.as_tuple() for r in enumerate_feasible(5)] == [(4, 2, 0, 2), (5, 2, 0, 1)]


def test_n10_contains_petersen_and_paley9():
    got = {r.params.as_tuple() for r in enumerate_feasible(10)}
    assert {(10, 3, 0, 1), (9, 4, 1, 2)} <= got


def test_only_c5_is_negative(scan400):
    neg = [r.params.as_tuple() for r in scan400 if r.qec.qec < 0]
    assert neg == [(5, 2, 0, 1)]
    assert [r.params.as_tuple() for r in scan400 if r.params.k - 2 * r.params.lam + r.params.mu < 4] == [(5, 2, 0, 1)]


def test_sorted_and_guarded(scan400):
    keys = [r.params.as_tuple() for r in scan400]
    assert keys == sorted(keys)
    assert all(1 <= r.params.mu <= r.params.k for r in scan400)
    assert all(r.feasibility.existence == "unknown" for r in scan400)


@pytest.mark.parametrize("bad", [3, 0, -1, 100_001])
def test_range_guard(bad):
    with pytest.raises(InputError):
        enumerate_feasible(bad)


def test_complement_closure(scan400):
    present = {r.params.as_tuple() for r in scan400}
    for r in scan400:
        n, k, lam, mu = r.params.as_tuple()
        kb = n - k - 1
        comp = complement_params(r.params)
        if kb >= 2 and comp.mu >= 1:
            assert (n - comp.k - 1) * comp.mu == (comp.k - comp.lam - 1) * comp.k
            # the bounds are not complement-closed: (21,16,12,12) maps to lambda = -1
            if validate_params(comp).reason != "bounds":
                assert validate_params(comp).feasible
                assert comp.as_tuple() in present


def test_conference_rows_are_the_progression(scan400):
    conf = [r.params.as_tuple() for r in scan400 if r.feasibility.is_conference]
    expected = [(n, (n - 1) // 2, (n - 5) // 4, (n - 1) // 4) for n in range(5, 401, 4)]
    assert conf == expected


def test_deterministic_and_parallel_identical():
    a = list(to_tsv(enumerate_feasible(260, workers=1)))
    b = list(to_tsv(enumerate_feasible(260, workers=1)))
    c = list(to_tsv(enumerate_feasible(260, workers=2)))
    assert a == b == c


def test_tsv_format():
    lines = list(to_tsv(enumerate_feasible(5)))
    assert lines[0].split("\t") == list(TSV_COLUMNS)
    assert lines[1] == "4\t2\t0\t2\t-2\t0\t2\t1\t0\tboundary\tno\tunknown"
    assert lines[2].startswith("5\t2\t0\t1\t-1.618033989\t0.6180339887\t2\t2\t-0.3819660113\tyes\tyes\t")
    assert len(list(to_tsv(enumerate_feasible(5), header=False))) == 2


def test_json_lines_format():
    recs = [json.loads(line) for line in to_json_lines(enumerate_feasible(10))]
    assert all(list(rec) == list(TSV_COLUMNS) for rec in recs)
    pet = next(rec for rec in recs if (rec["n"], rec["k"]) == (10, 3))
    assert pet["qec"] == 0 and pet["class"] == "boundary" and pet["f"] == 5 and pet["g"] == 4


def test_named_table():
    rows = named_table()
    assert len(rows) == 9
    assert [r.name for r in rows][0] == "Petersen" and rows[-1].name == "Higman-Sims"
    assert all(r.passed for r in rows)
    assert {r.name: r.computed for r in rows}["Hoffman-Singleton"] == 1
    assert {r.name: r.computed for r in rows}["Brouwer-Haemers"] == 5
    assert {r.name: r.params for r in rows}["Changs"] == SrgParams(28, 12, 6, 4)


def test_named_table_mismatch_detected(monkeypatch):
    import srgqec.scan as scan_mod

    bad = tuple((name, n, k, lam, mu, q + 1 if name == "Clebsch" else q) for name, n, k, lam, mu, q in NAMED_GRAPHS)
    monkeypatch.setattr(scan_mod, "NAMED_GRAPHS", bad)
    failing = [r.name for r in scan_mod.named_table() if not r.passed]
    assert failing == ["Clebsch"]
