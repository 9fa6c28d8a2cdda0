import json
import os
import subprocess
from fractions import Fraction

import pytest

import tnn_cells

NBAR = [[11, 7, 4, 1], [7, 5, 3, 1], [4, 3, 2, 1], [1, 1, 1, 1]]


def test_counts():
    assert [tnn_cells.count_diagrams(m, p) for m, p in [(1, 1), (2, 2), (2, 3), (3, 3)]] == [2, 14, 46, 230]
    assert len(tnn_cells.diagrams(2, 3)) == 46
    assert len(tnn_cells.restricted_perms(2, 3)) == 46


def test_families_agree():
    black = [(1, 1), (1, 3), (2, 1), (2, 2)]
    mc = tnn_cells.compute_mc(3, 3, black)
    assert mc[0] == "[1|3]"
    assert len(mc) == 7
    assert tnn_cells.compute_mw(3, 3, [1, 4, 3, 2, 6, 5]) == mc


def test_restore_and_delete_round_trip():
    n = [[1, 0, 1, 1], [0, 0, 1, 1], [1, 1, 1, 1], [1, 1, 1, 1]]
    assert tnn_cells.restore(n) == NBAR
    assert tnn_cells.delete_derivations(NBAR) == n
    steps = tnn_cells.restore(n, trace=True)
    assert steps[0] == ("(1,2)", n)
    assert steps[-1] == ("(4,5)", NBAR)


def test_fraction_entries():
    x = [["1/2", Fraction(1, 3)], [1, 1]]
    assert tnn_cells.restore(x)[0][0] == Fraction(1, 2) + Fraction(1, 3)


def test_is_tnn_and_classify():
    assert tnn_cells.is_tnn(NBAR)["is_tnn"]
    bad = tnn_cells.is_tnn([[1, 1], [1, 0]])
    assert bad == {"is_tnn": False, "witness": "[1,2|1,2]", "witness_value": Fraction(-1)}
    d = tnn_cells.classify(NBAR)
    assert d["diagram"]["black"] == [[1, 2], [2, 1], [2, 2]]
    assert d["perm"]["w"] == [1, 2, 4, 6, 3, 5, 7, 8]
    assert d["assertions_passed"]
    with pytest.raises(ValueError):
        tnn_cells.classify([[1, 1], [1, 0]])


def test_match_families():
    pairs = tnn_cells.match_families(2, 2, threads=2)
    assert len(pairs) == 14
    assert pairs[-1]["diagram"]["black"] == [[1, 1], [1, 2], [2, 1], [2, 2]]
    assert tnn_cells.bruhat_leq([1, 2, 3], [3, 2, 1])
    assert not tnn_cells.bruhat_leq([3, 2, 1], [1, 2, 3])


@pytest.mark.skipif("TNN_CELLS_CLI" not in os.environ, reason="CLI path not provided")
def test_cli_agrees_with_module():
    out = subprocess.run([os.environ["TNN_CELLS_CLI"], "match", "2", "2"], check=True, capture_output=True, text=True)
    assert json.loads(out.stdout) == tnn_cells.match_families(2, 2)
