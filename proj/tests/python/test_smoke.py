import pytest

import linkless


def test_g_counts():
    g = linkless.build_g()
    assert (g.order, g.size) == (13, 31)
    assert sorted(g.neighbors("T")) == sorted(["B", "Q", "R", "S", "B'"])
    assert len(g.non_edges()) == 47


def test_text_round_trip():
    g = linkless.build_g()
    assert linkless.parse_graph(g.to_text()) == g


def test_parse_error_is_value_error():
    with pytest.raises(linkless.ParseError, match="line 2"):
        linkless.parse_graph("vertices: a b\nedge: a c\n")
    with pytest.raises(ValueError):
        linkless.Graph(["a", "a"])


def test_k6_search():
    g = linkless.build_g()
    assert linkless.has_k6_minor(g) is None
    model = linkless.has_k6_minor(g.add_edge("P", "T"))
    assert model is not None and len(model) == 6
    covered = [v for part in model for v in part]
    assert len(covered) == len(set(covered))


def test_find_minor_builtin_patterns():
    petersen = linkless.petersen_graph()
    assert linkless.find_minor(linkless.complete_graph(6), petersen) is None
    assert linkless.find_minor(linkless.complete_graph(5), petersen) is not None


def test_maximality_report():
    report = linkless.verify_maximal(linkless.build_g(), "k6", jobs=1)
    assert report["passed"] and report["base_free"]
    assert report["found"] == report["edges"] == 47
    assert report["missing"] == []
    with pytest.raises(ValueError):
        linkless.verify_maximal(linkless.build_g(), "k7")


def test_certificates():
    result = linkless.verify_certificates(linkless.build_g(), linkless.reference_certificates_text())
    assert result["verified"] == [True] * 8
    assert result["complete"]
    assert len(result["coverage"]) == 26
    assert result["coverage"]["AR"] == [3, 5, 6]


def test_petersen_family_and_counts():
    family = linkless.petersen_family()
    assert len(family) == 7
    assert all(f.size == 15 for f in family)
    for k in range(1, 4):
        c = linkless.count_report(linkless.build_family(k))
        assert (c["n"], c["m"]) == (3 + 10 * k, 3 + 28 * k)
    assert linkless.is_intrinsically_linked(linkless.apex_stacked(5)) is None
    assert linkless.is_intrinsically_linked(linkless.complete_graph(6))["family_index"] == 0


def test_embedding_report():
    g = linkless.build_g()
    coords = linkless.canonical_embedding_g()
    assert linkless.validate_embedding(g, coords)
    report = linkless.linkless_report(g, coords)
    assert report["pairs"] == 7700
    assert report["max_abs_lk"] == 0
    bad = list(coords)
    bad[1] = bad[0]
    assert not linkless.validate_embedding(g, bad)
