import random

import pytest

from hypermc.campaign import (
    SCAN_COLUMNS,
    endgame_can_fire,
    parse_range,
    rows_to_csv,
    run_scan,
    sample_min_degree,
    targeted_endgame_coloring,
    verify_theorem,
)
from hypermc.hypercore import complete_hypergraph, min_degree
from hypermc.witness import ENDGAME, certified_bound, revalidate


def test_parse_range():
    assert parse_range("8..12") == [8, 9, 10, 11, 12]
    assert parse_range("8,10") == [8, 10]
    assert parse_range(5) == [5]
    assert parse_range(["3..4", 7]) == [3, 4, 7]
    assert parse_range([]) == []


@pytest.mark.parametrize("n,r,expected", [(12, 3, False), (13, 3, True), (11, 3, True),
                                          (8, 3, False), (9, 4, True), (10, 4, False)])
def test_endgame_can_fire(n, r, expected):
    assert endgame_can_fire(n, r) == expected


def test_sample_min_degree_respects_target():
    for seed in range(5):
        G = sample_min_degree(8, 3, 2, 4, random.Random(seed))
        assert min_degree(G, 2)[0] >= 4
        assert G.m < 56


def test_sample_min_degree_budget():
    G = sample_min_degree(8, 3, 1, 10, random.Random(0), edge_budget=50)
    assert G.m == 50


def test_sample_min_degree_target_too_high():
    with pytest.raises(ValueError):
        sample_min_degree(6, 3, 2, 5, random.Random(0))


def test_verify_theorem_report():
    rep = verify_theorem([8, 9], 3, 20, seed=1)
    assert rep["certificates"] == 40 and rep["failures"] == 0
    assert [row["bound"] for row in rep["per_n"]] == [6, 7]
    assert sum(rep["branches"].values()) == 40


def test_verify_theorem_seeded():
    assert verify_theorem([9], 3, 10, seed=4, x_policy="random") == \
        verify_theorem([9], 3, 10, seed=4, x_policy="random")


def test_targeted_endgame_k13():
    K = complete_hypergraph(13, 3)
    chi, cert = targeted_endgame_coloring(K, 0, seed=300, iterations=20000, restarts=20)
    assert cert is not None and cert.branch == ENDGAME
    assert cert.size >= certified_bound(13, 3) and revalidate(K, chi, cert)


def test_scan_rows():
    rows = run_scan({"family": "complete", "n": [8], "r": 3, "iterations": 100})
    assert len(rows) == 1
    row = rows[0]
    assert (row.n, row.r, row.k, row.l, row.delta) == (8, 4, 3, 2, 6)
    assert row.mc_lower == row.mc_upper == 6
    text = rows_to_csv(rows, timing=False)
    assert text.splitlines()[0] == ",".join(SCAN_COLUMNS)
    assert text.splitlines()[1].endswith(",0")


def test_scan_extremal_counting_closes_gap():
    row = run_scan({"family": "extremal-example", "n": [10], "r": 3})[0]
    assert row.mc_lower == row.mc_upper == 7
