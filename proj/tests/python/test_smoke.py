import json
import math

import coarsekit


def test_star_is_the_union_of_meeting_members():
    assert coarsekit.star([1, 2], [[2, 3], [4, 5]], 6) == [2, 3]
    assert coarsekit.star([], [[0, 1]], 6) == []


def test_family_helpers():
    assert coarsekit.star_family([[0, 1]], [[1, 2], [3]], 4) == [[1, 2]]
    assert coarsekit.trivial_extension([[1, 2]], 3) == [[1, 2], [0], [1], [2]]
    assert coarsekit.refines([[0], [1, 2]], [[0, 1, 2]], 4)
    assert not coarsekit.refines([[0, 3]], [[0, 1], [2, 3]], 4)


def test_entourage_round_trip():
    pairs = coarsekit.delta_of_family([[0, 1], [1, 2]], 3)
    assert len(pairs) == 7
    assert coarsekit.maximal_family_of_entourage(pairs, 3) == [[0, 1], [1, 2]]
    assert coarsekit.compose([(0, 1)], [(1, 2)], 3) == [(0, 2)]


def test_metrize():
    d = coarsekit.metrize([[0, 1], [2, 3]], 4)
    assert d[0][1] == 1
    assert math.isinf(d[0][2])
    assert coarsekit.metrize([[0, 1], [1, 2]], 3, depth=4)[0][2] == 2


def test_asdim_on_a_path():
    d = coarsekit.path_metric(8)
    coloring = coarsekit.find_decomposition(d, 1, 1, 1)
    assert coloring is not None and len(coloring) == 8
    assert coarsekit.multiplicity(coarsekit.ball_family(d, 1), 8) == 3
    assert len(set(coarsekit.brick_coloring([32, 32], 1))) == 3


def test_groups():
    assert coarsekit.group_multiply("bs12", 0, "0|1", "1|0") == "2|1"
    assert coarsekit.group_multiply("Zn", 2, "1,2", "3,-2") == "4,0"
    assert coarsekit.group_multiply("free", 2, "ab", "BA") == "1"
    assert coarsekit.bs12_divergence(1) == "-64|-2"


def test_higson_defect():
    f = [float(x) for x in range(10)]
    assert coarsekit.higson_defect(f, [[0, 1], [2, 3]], [0, 1]) == 1


def test_laws_and_cli():
    reports = coarsekit.run_laws(seed=1, trials=50, laws=["delta_star_composition"])
    assert reports[0]["failures"] == 0
    assert "star_of_star_identity" in coarsekit.law_ids()
    code, out, _ = coarsekit.run_cli(["verify", "--laws", "union_refines_star", "--trials", "20"])
    assert code == 0
    assert json.loads(out)["all_pass"] is True
    assert coarsekit.run_cli(["frobnicate"])[0] == 2
