import json
import pytest

from runnet.coeffring import InexactDivision, Poly, T, parse_poly
from runnet.engine import Hom, compute, fixture_network
from runnet.oracle import predicate_count
from runnet.powerseries import NonUnitConstantTerm, Series, exps
from runnet.recipes import (
    RECIPE_NAMES,
    Builtin,
    Entry,
    HomExp,
    Monomial,
    NetworkUse,
    Recip,
    Recipe,
    Scale,
    Sum,
    UnknownLabel,
    UnknownRecipe,
    evaluate_recipe,
    get_recipe,
    load_recipe,
    parse_recipe,
    run_recipe,
)
from runnet.runnetwork import SchemaError

B_ROW = [1, 1, 2, 6, 8, 40, 84, 588, 1632, 14688, 51040, 561440, 2340480]


def seq(s):
    return [int(c(1)) for c in s.egf_numerators()]


def test_b_from_components():
    r = Recipe(
        "b",
        Sum((
            Scale(Poly.const(2), Entry("G1")),
            Scale(Poly.const(2), Entry("G2")),
            Scale(Poly.const(2), Builtin("EXPS", Poly.const(1))),
            Monomial(1, Poly.const(-1)),
            Monomial(0, Poly.const(-1)),
        )),
        {"G1": NetworkUse(fixture_network("g1p1")), "G2": NetworkUse(fixture_network("g2p2"))},
    )
    assert seq(evaluate_recipe(r, 12)) == B_ROW


def test_pk_entry_plus_exp():
    pk = get_recipe("pk")
    r = Recipe("pk13", Sum((Entry("G", 1, 3), Builtin("EXPS", Poly.const(1)))), pk.networks)
    assert evaluate_recipe(r, 6).egf_numerators()[3] == 4 + 2 * T


def test_recip_cancels():
    r = Recipe("r", Recip(Sum((Monomial(0), Monomial(1)))))
    alt = Series.from_function(lambda n: (-1) ** n, 8)
    assert evaluate_recipe(r, 8, Hom.WORD) - alt == Series.zero(8)


def test_recip_non_unit():
    r = Recipe("r", Recip(Monomial(0, 1 - T)))
    with pytest.raises(NonUnitConstantTerm):
        evaluate_recipe(r, 4)


def test_unknown_label():
    with pytest.raises(UnknownLabel):
        evaluate_recipe(Recipe("r", Entry("missing")), 4)


def test_unknown_recipe():
    with pytest.raises(UnknownRecipe):
        get_recipe("nope")


def test_catalog_names():
    for name in RECIPE_NAMES:
        get_recipe(name.replace("(m)", "(3)"))
    assert get_recipe("davidBarton:4").name == "davidBarton(4)"


def test_pk_row_6():
    assert run_recipe("pk", 9).egf_numerators()[6] == 32 + 416 * T + 272 * T * T


def test_br_row_4():
    assert run_recipe("br", 9).egf_numerators()[4] == parse_poly("2*t + 12*t^2 + 10*t^3")


def test_udr_row_1():
    assert run_recipe("udr", 9).egf_numerators()[1] == T


def test_lrdasc_row_1():
    assert run_recipe("lrdasc", 9).egf_numerators()[1] == T


@pytest.mark.parametrize("m", [2, 3, 4, 5])
def test_david_barton(m):
    assert seq(run_recipe(f"davidBarton({m})", 8)) == [predicate_count("incRunsBelow", n, m) for n in range(9)]


def test_fixed_hom_and_alt_rules():
    assert run_recipe("gz2014", 6) == run_recipe("gz2014", 6, "alt")
    with pytest.raises(ValueError):
        run_recipe("gz2014", 6, "perm")
    with pytest.raises(ValueError):
        run_recipe("allEvenPV", 6, "alt")


def test_formula_text():
    assert "hexp(1)" in get_recipe("pk").formula
    assert "x" in get_recipe("allEvenPV").formula


def test_bounds_truncate():
    assert run_recipe("allOddPV", 12).truncate(6) == run_recipe("allOddPV", 6)


def test_recipe_document(tmp_path):
    net = tmp_path / "loop.json"
    net.write_text(json.dumps({
        "vertices": 1, "start": [1], "end": [1],
        "arcs": [{"from": 1, "to": 1, "lengths": {"first": 1, "step": 1}, "weight": {"c": "t"}}],
    }))
    doc = {
        "name": "shifted-eulerian",
        "networks": {"S": {"path": "loop.json"}},
        "expr": {"sum": [{"entry": "S"}, {"monomial": 1, "coeff": "1 - t"}, {"builtin": "EXPS", "p": "0", "s": "1/2"}]},
    }
    path = tmp_path / "r.json"
    path.write_text(json.dumps(doc))
    r = load_recipe(path)
    got = evaluate_recipe(r, 6)
    want = run_recipe("eulerian", 6) + Series.monomial(1, 6, 1 - T) + Series.one(6)
    assert got == want


def test_recipe_document_builtin_network_and_deps():
    doc = {
        "networks": {"G": {"builtin": "two_cycle", "hom": "alt"}},
        "deps": {"P": "pk"},
        "expr": {"sum": [{"entry": "G", "i": 1, "j": 1}, {"scale": "-1", "of": {"named": "P"}}, {"named": "P"}]},
    }
    r = parse_recipe(doc)
    assert evaluate_recipe(r, 8) == compute(fixture_network("two_cycle"), 8, Hom.ALT).entry(1, 1)


def test_divexact_node():
    doc = {"expr": {"divexact": "t", "of": {"sum": [{"hexp": "t"}, {"monomial": 0, "coeff": "-1"}]}}}
    got = evaluate_recipe(parse_recipe(doc), 5)
    assert got.egf_numerators()[3] == T * T
    bad = {"expr": {"divexact": "t", "of": {"hexp": "t"}}}
    with pytest.raises(InexactDivision):
        evaluate_recipe(parse_recipe(bad), 5)


@pytest.mark.parametrize("doc, field", [
    ({}, "expr"),
    ({"expr": {"frobnicate": 1}}, "expr"),
    ({"expr": {"builtin": "COS"}}, "expr.builtin"),
    ({"expr": {"monomial": -1}}, "expr.monomial"),
    ({"expr": {"sum": []}}, "expr.sum"),
    ({"expr": {"entry": "G", "i": 1}}, "expr"),
    ({"expr": {"monomial": 0}, "hom": "nope"}, "hom"),
    ({"expr": {"monomial": 0}, "slack": -1}, "slack"),
    ({"expr": {"monomial": 0}, "networks": {"G": {}}}, "networks.G"),
])
def test_document_errors(doc, field):
    with pytest.raises(SchemaError) as exc:
        parse_recipe(doc)
    assert exc.value.field == field


def test_hexp_follows_hom():
    r = Recipe("h", HomExp(T))
    assert evaluate_recipe(r, 4, Hom.PERM) == exps(T, 1, 4)
    assert evaluate_recipe(r, 4, Hom.WORD) == Series.from_function(lambda n: T ** n, 4)
    assert evaluate_recipe(r, 4, Hom.ALT).egf_numerators()[3] == 2 * T ** 3
