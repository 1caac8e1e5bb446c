import json

import pytest

from runnet.coeffring import T, poly
from runnet.engine import fixture_network
from runnet.runnetwork import (
    POSITIVE,
    Arc,
    LengthSet,
    ParseError,
    RunNetwork,
    SchemaError,
    WeightRule,
    length_set_members,
    loads_network,
    network_to_doc,
    parse_network,
    validate_network,
)

FIXTURES = ("two_cycle", "g1p1", "g2p2", "gp", "single")


def test_length_set_members():
    assert length_set_members(LengthSet.arithmetic(2, 2), 7) == [2, 4, 6]
    assert length_set_members(LengthSet.of(1), 5) == [1]
    assert length_set_members(LengthSet.arithmetic(3, 2), 9) == [3, 5, 7, 9]
    assert length_set_members(POSITIVE, 0) == []


def test_length_set_invariants():
    with pytest.raises(ValueError):
        LengthSet.of()
    with pytest.raises(ValueError):
        LengthSet.arithmetic(1, 0)
    with pytest.raises(ValueError):
        LengthSet.of(0, 1)
    s = LengthSet.arithmetic(3, 2)
    assert 5 in s and 4 not in s and 1 not in s
    for n in range(15):
        assert set(s.members(n)) <= set(s.members(n + 1))


def test_weight_rule():
    w = WeightRule(c=T, alpha=1, beta=-2)
    assert w.weight(3) == T * T
    with pytest.raises(ValueError):
        w.check(LengthSet.of(1))
    w.check(LengthSet.arithmetic(2, 1))
    assert WeightRule().weight(7) == poly(1)


def test_gp_valid_all_bounds():
    net = fixture_network("gp")
    for n in range(0, 21):
        assert validate_network(net, n) is None


def test_two_path_violation():
    net = fixture_network("invalid_two_path")
    bad = validate_network(net, 3)
    assert bad.composition == (1, 2)
    assert {bad.walk_a, bad.walk_b} == {(1, 2, 4), (1, 3, 4)}
    assert str(bad) in (
        "composition (1,2) is spelled by walks 1->2->4 and 1->3->4",
        "composition (1,2) is spelled by walks 1->3->4 and 1->2->4",
    )
    assert validate_network(net, 2) is None
    for n in range(3, 12):
        assert validate_network(net, n) is not None


@pytest.mark.parametrize("name", FIXTURES)
def test_fixtures_valid_at_20(name):
    assert validate_network(fixture_network(name), 20) is None


def test_g1p1_fixture():
    net = fixture_network("g1p1")
    assert net.m == 5 and len(net.arcs) == 6
    assert net.start == {1} and net.end == {5}
    assert net.arcs[(1, 2)].lengths == LengthSet.arithmetic(2, 2)


def test_negative_exponent_rejected():
    doc = {
        "vertices": 1, "start": [1], "end": [1],
        "arcs": [{"from": 1, "to": 1, "lengths": {"finite": [1]}, "weight": {"c": "1", "alpha": 1, "beta": -2}}],
    }
    with pytest.raises(SchemaError) as exc:
        parse_network(doc)
    assert exc.value.field == "arcs[0].weight"


def test_empty_arcs():
    net = parse_network({"vertices": 2, "start": [1], "end": [1, 2], "arcs": []})
    assert net.arcs == {} and validate_network(net, 10) is None


@pytest.mark.parametrize("doc, field", [
    ({"start": [1], "end": [1]}, "vertices"),
    ({"vertices": 2, "start": [3], "end": [1]}, "start[0]"),
    ({"vertices": 2, "start": [1], "end": [1], "arcs": [{"from": 1, "to": 5, "lengths": {"finite": [1]}}]}, "arcs[0].to"),
    ({"vertices": 1, "start": [1], "end": [1], "arcs": [{"from": 1, "to": 1}]}, "arcs[0].lengths"),
    ({"vertices": 1, "start": [1], "end": [1], "arcs": [{"from": 1, "to": 1, "lengths": {"first": 0, "step": 1}}]}, "arcs[0].lengths"),
])
def test_schema_errors_name_field(doc, field):
    with pytest.raises(SchemaError) as exc:
        parse_network(doc)
    assert exc.value.field.startswith(field)


def test_duplicate_arc():
    arc = {"from": 1, "to": 1, "lengths": {"finite": [1]}}
    with pytest.raises(SchemaError):
        parse_network({"vertices": 1, "start": [1], "end": [1], "arcs": [arc, arc]})


def test_parse_error_location():
    with pytest.raises(ParseError) as exc:
        loads_network('{"vertices": 1,\n "start": [1],, }')
    assert "line 2" in str(exc.value)


@pytest.mark.parametrize("name", FIXTURES)
def test_doc_round_trip(name):
    net = fixture_network(name)
    again = loads_network(json.dumps(network_to_doc(net)))
    assert again == net


def test_weight_override_parses():
    doc = {
        "vertices": 1, "start": [1], "end": [1],
        "arcs": [{"from": 1, "to": 1, "lengths": {"first": 1, "step": 1}, "weight": {"c": "t", "at": {"1": "1"}}}],
    }
    net = parse_network(doc)
    w = net.arcs[(1, 1)].weight
    assert w.weight(1) == poly(1) and w.weight(4) == T


def test_vertex_range_checked_in_code():
    with pytest.raises(ValueError):
        RunNetwork(1, {(1, 2): Arc(POSITIVE, WeightRule())}, frozenset({1}), frozenset({1}))
