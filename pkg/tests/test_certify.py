from rowembed import certify
from rowembed.certify import SuiteResult


def test_empty_suite_does_not_pass():
    assert not SuiteResult("nothing").passed


def test_result_line():
    res = SuiteResult("demo")
    res.check(True, "fine")
    res.check(False, "broken thing")
    text = str(res)
    assert text.startswith("FAIL demo: 1/2 checks")
    assert "first failure: broken thing" in text


def test_suites_are_seeded():
    a = certify.caterpillar_constructive(count=20, seed=3)
    b = certify.caterpillar_constructive(count=20, seed=3)
    assert a.passed and a.notes == b.notes


def test_host_menu_respects_cap():
    assert all(h.n_cells <= 20 for h in certify.host_menu(max_cells=20))


def test_all_layerings_counts_path():
    from rowembed.graph import path_graph
    assert all(abs(a - b) <= 1 for lay in certify.all_layerings(path_graph(3)) for a, b in zip(lay, lay[1:]))
