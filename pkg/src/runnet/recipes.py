"""Recipes: expression trees combining network entries with correction terms.

A network entry alone rarely is the generating function of interest.  The
increasing permutations (a single run) never appear as walks through the
three-vertex network, whole families are summed with multiplicities, and
some statistics are affine images of others.  A :class:`Recipe` records that
glue explicitly, so every built-in generating function is a network
computation followed by a small, printable formula.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any, Mapping, Sequence

from .coeffring import Poly, T, as_rational, format_rational, parse_poly
from .engine import Hom, check_integrality, compute, entry_sum, fixture_network
from .powerseries import BoundMismatch, Series, builtin_series, euls, exps
from .runnetwork import (
    POSITIVE,
    Arc,
    LengthSet,
    ParseError,
    RunNetwork,
    SchemaError,
    WeightRule,
    load_network,
    parse_network,
)


class UnknownLabel(KeyError):
    pass


class UnknownRecipe(KeyError):
    pass


# -- nodes ----------------------------------------------------------------------


class Node:
    def children(self) -> Sequence["Node"]:
        return ()


@dataclass(frozen=True)
class Entry(Node):
    """Entry sum of a computed network; ``(i, j)`` overrides its start/end sets."""

    network: str
    i: int | None = None
    j: int | None = None

    def __str__(self) -> str:
        if self.i is None:
            return f"entry[{self.network}]"
        return f"entry[{self.network}]({self.i},{self.j})"


@dataclass(frozen=True)
class Named(Node):
    label: str

    def __str__(self) -> str:
        return self.label


@dataclass(frozen=True)
class Builtin(Node):
    kind: str
    p: Poly
    s: Fraction = Fraction(1)

    def __str__(self) -> str:
        return f"{self.kind}({self.p}, {format_rational(self.s)})"


@dataclass(frozen=True)
class HomExp(Node):
    """Image of ``sum_n p^n h_n`` under the recipe's homomorphism.

    That is ``exp(p x)`` for permutations, ``sec(p x) + tan(p x)`` for the
    alternating analogue, ``1/(1 - p x)`` for words.  Every correction term for
    increasing permutations has this shape.
    """

    p: Poly = Poly.const(1)

    def __str__(self) -> str:
        return f"hexp({self.p})"


@dataclass(frozen=True)
class Monomial(Node):
    power: int
    coeff: Poly = Poly.const(1)

    def __str__(self) -> str:
        xs = "1" if self.power == 0 else ("x" if self.power == 1 else f"x^{self.power}")
        if self.coeff == 1:
            return xs
        return f"({self.coeff})" + ("" if self.power == 0 else f"*{xs}")


@dataclass(frozen=True)
class Sum(Node):
    terms: tuple[Node, ...]

    def children(self):
        return self.terms

    def __str__(self) -> str:
        return "(" + " + ".join(map(str, self.terms)) + ")"


@dataclass(frozen=True)
class Product(Node):
    factors: tuple[Node, ...]

    def children(self):
        return self.factors

    def __str__(self) -> str:
        return "*".join(map(str, self.factors))


@dataclass(frozen=True)
class Scale(Node):
    c: Poly
    of: Node

    def children(self):
        return (self.of,)

    def __str__(self) -> str:
        return f"({self.c})*{self.of}"


@dataclass(frozen=True)
class Recip(Node):
    of: Node

    def children(self):
        return (self.of,)

    def __str__(self) -> str:
        return f"1/{self.of}"


@dataclass(frozen=True)
class DivExact(Node):
    p: Poly
    of: Node

    def children(self):
        return (self.of,)

    def __str__(self) -> str:
        return f"{self.of}/({self.p})"


@dataclass(frozen=True)
class EvenPart(Node):
    of: Node

    def children(self):
        return (self.of,)

    def __str__(self) -> str:
        return f"even({self.of})"


@dataclass(frozen=True)
class OddPart(Node):
    of: Node

    def children(self):
        return (self.of,)

    def __str__(self) -> str:
        return f"odd({self.of})"


@dataclass(frozen=True)
class DivX(Node):
    of: Node

    def children(self):
        return (self.of,)

    def __str__(self) -> str:
        return f"{self.of}/x"


# -- recipes ----------------------------------------------------------------------


@dataclass(frozen=True)
class NetworkUse:
    network: RunNetwork
    hom: Hom | None = None  # None: the recipe's homomorphism


@dataclass(frozen=True)
class Recipe:
    name: str
    expr: Node
    networks: Mapping[str, NetworkUse] = field(default_factory=dict)
    deps: Mapping[str, str] = field(default_factory=dict)
    slack: int = 0
    fixed_hom: Hom | None = None
    alt_ok: bool = True
    note: str = ""

    @property
    def formula(self) -> str:
        return str(self.expr)


def _align(parts: list[Series]) -> list[Series]:
    b = min(s.bound for s in parts)
    return [s if s.bound == b else s.truncate(b) for s in parts]


def evaluate(node: Node, bound: int, hom: Hom, entries: Mapping[str, Series], env: Mapping[str, Series]) -> Series:
    """Evaluate ``node``; mixed bounds are aligned down to the smallest."""
    ev = lambda n: evaluate(n, bound, hom, entries, env)
    if isinstance(node, Entry):
        if node.network not in entries:
            raise UnknownLabel(f"no computed network named {node.network!r}")
        return entries[node.network] if node.i is None else entries[node.network][(node.i, node.j)]
    if isinstance(node, Named):
        if node.label not in env:
            raise UnknownLabel(f"unknown series label {node.label!r}")
        return env[node.label]
    if isinstance(node, Builtin):
        return builtin_series(node.kind, node.p, node.s, bound)
    if isinstance(node, HomExp):
        if hom is Hom.PERM:
            return exps(node.p, 1, bound)
        if hom is Hom.ALT:
            return euls(node.p, 1, bound)
        return Series.from_function(lambda n: node.p**n, bound)
    if isinstance(node, Monomial):
        return Series.monomial(node.power, bound, node.coeff)
    if isinstance(node, Sum):
        parts = _align([ev(t) for t in node.terms])
        total = parts[0]
        for p in parts[1:]:
            total = total + p
        return total
    if isinstance(node, Product):
        parts = _align([ev(t) for t in node.factors])
        total = parts[0]
        for p in parts[1:]:
            total = total * p
        return total
    if isinstance(node, Scale):
        return ev(node.of) * node.c
    if isinstance(node, Recip):
        return ev(node.of).recip()
    if isinstance(node, DivExact):
        return ev(node.of).div_exact_poly(node.p)
    if isinstance(node, EvenPart):
        return ev(node.of).even_part()
    if isinstance(node, OddPart):
        return ev(node.of).odd_part()
    if isinstance(node, DivX):
        return ev(node.of).div_x()
    raise TypeError(f"unknown recipe node {node!r}")


def evaluate_recipe(recipe: Recipe, bound: int, hom: Hom | str | None = None, env: Mapping[str, Series] | None = None) -> Series:
    hom = resolve_hom(recipe, hom)
    work = bound + recipe.slack
    values: dict[str, Series] = dict(env or {})
    for label, dep in recipe.deps.items():
        if label not in values:
            values[label] = run_recipe(dep, work, hom)
    entries: dict[str, Any] = {}
    for label, use in recipe.networks.items():
        mat = compute(use.network, work, use.hom or hom)
        entries[label] = _Entries(mat, use.network)
    result = evaluate(recipe.expr, work, hom, entries, values)
    if result.bound < bound:
        raise BoundMismatch(f"recipe {recipe.name} only determines coefficients up to x^{result.bound}")
    result = result.truncate(bound)
    if hom is not Hom.WORD:
        check_integrality(result, f"recipe {recipe.name}")
    return result


class _Entries(Series):
    """A network's entry sum that also answers ``[(i, j)]`` lookups."""

    __slots__ = ("matrix",)

    def __init__(self, mat, net: RunNetwork):
        s = entry_sum(mat, net.start, net.end)
        super().__init__(s.coeffs, s.bound)
        self.matrix = mat

    def __getitem__(self, key):
        if isinstance(key, tuple):
            return self.matrix.entry(*key)
        return super().__getitem__(key)


def resolve_hom(recipe: Recipe, hom: Hom | str | None) -> Hom:
    if hom is not None:
        hom = Hom.parse(hom)
    if recipe.fixed_hom is not None:
        if hom is not None and hom is not recipe.fixed_hom:
            raise ValueError(f"recipe {recipe.name} is defined for the {recipe.fixed_hom.value} homomorphism only")
        return recipe.fixed_hom
    hom = hom or Hom.PERM
    if hom is Hom.ALT and not recipe.alt_ok:
        raise ValueError(f"recipe {recipe.name} has no alternating-run analogue")
    return hom


# -- built-in catalog ---------------------------------------------------------------


def long_runs(w: Poly | int) -> WeightRule:
    """Weight ``w`` on long runs (``k >= 2``), 1 on short runs."""
    return WeightRule(c=Poly.coerce(w), at=((1, Poly.const(1)),))


def t_power(beta: int, short: Poly | int | None = None) -> WeightRule:
    """Weight ``t^(k + beta)``, optionally overriding the short-run weight."""
    at = ((1, Poly.coerce(short)),) if short is not None else ()
    return WeightRule(alpha=1, beta=beta, at=at)


def _gp(weights: Mapping[tuple[int, int], WeightRule], name: str) -> RunNetwork:
    return fixture_network("gp").with_weights(weights, name)


def _single(weight: WeightRule, lengths: LengthSet = POSITIVE, name: str = "single") -> RunNetwork:
    net = fixture_network("single")
    return RunNetwork(1, {(1, 1): Arc(lengths, weight)}, net.start, net.end, name)


ONE = Poly.const(1)
T2 = T * T
ONE_RULE = WeightRule()


def _catalog() -> dict[str, Recipe]:
    r: dict[str, Recipe] = {}

    def add(recipe: Recipe) -> None:
        r[recipe.name] = recipe

    add(Recipe(
        "pk",
        Sum((Entry("G"), HomExp())),
        {"G": NetworkUse(_gp({(1, 2): long_runs(T), (2, 2): long_runs(T)}, "gp-pk"))},
        note="non-final long runs weighted t; add the increasing permutations",
    ))
    add(Recipe(
        "rpk",
        Entry("S"),
        {"S": NetworkUse(_single(long_runs(T), name="single-rpk"))},
        note="every long run weighted t",
    ))
    add(Recipe(
        "lrpk",
        Sum((Scale(T, Named("pk")), Monomial(0, ONE - T))),
        deps={"pk": "pk"},
        note="lrpk = val + 1 and val ~ pk",
    ))
    add(Recipe(
        "dasc",
        Entry("S"),
        {"S": NetworkUse(_single(t_power(-2, short=1), name="single-dasc"))},
        note="long run of length k weighted t^(k-2)",
    ))
    add(Recipe(
        "rdasc",
        Sum((Entry("G"), DivExact(T, Sum((HomExp(T), Monomial(0, Poly.const(-1))))), Monomial(0))),
        {"G": NetworkUse(_gp({(1, 2): t_power(-2, short=1), (2, 2): t_power(-2, short=1), (2, 3): t_power(-1)}, "gp-rdasc"))},
        note="final run of length k weighted t^(k-1); increasing n-permutation has n-1",
    ))
    add(Recipe(
        "lrdasc",
        Sum((Entry("G"), HomExp(T))),
        {"G": NetworkUse(_gp({(1, 2): t_power(-1), (2, 2): t_power(-2, short=1), (2, 3): t_power(-1)}, "gp-lrdasc"))},
        note="initial and final runs weighted t^(k-1); increasing n-permutation has n",
    ))
    add(Recipe(
        "br",
        Sum((Scale(T, Sum((Entry("G"), HomExp()))), Monomial(0, ONE - T), Monomial(1, ONE - T))),
        {"G": NetworkUse(_gp({(1, 2): long_runs(T), (2, 2): long_runs(T2), (2, 3): long_runs(T)}, "gp-br"))},
        note="br = pk + val + 1 for n >= 2",
    ))
    add(Recipe(
        "udr",
        Sum((Scale(T, Sum((Entry("G"), HomExp()))), Monomial(0, ONE - T))),
        {"G": NetworkUse(_gp({(1, 2): WeightRule(c=T), (2, 2): long_runs(T2), (2, 3): long_runs(T)}, "gp-udr"))},
        note="as br, plus an initial short run",
    ))
    add(Recipe(
        "eulerian",
        Entry("S"),
        {"S": NetworkUse(_single(WeightRule(c=T), name="single-eulerian"))},
        note="every run weighted t: 1 + sum A_n(t) x^n/n!",
    ))
    add(Recipe(
        "altEulerian",
        Entry("S"),
        {"S": NetworkUse(_single(WeightRule(c=T), name="single-eulerian"))},
        fixed_hom=Hom.ALT,
        note="every alternating run weighted t",
    ))
    add(Recipe(
        "gz2014",
        Entry("S"),
        {"S": NetworkUse(_single(ONE_RULE, LengthSet.of(1, 2), name="single-runs<3"))},
        fixed_hom=Hom.ALT,
        note="alternating runs shorter than 3 (all peaks odd, all valleys even)",
    ))
    add(Recipe(
        "allEvenPV",
        Sum((
            Scale(Poly.const(2), Entry("G1")),
            Scale(Poly.const(2), Entry("G2")),
            Scale(Poly.const(2), HomExp()),
            Monomial(1, Poly.const(-1)),
            Monomial(0, Poly.const(-1)),
        )),
        {"G1": NetworkUse(fixture_network("g1p1")), "G2": NetworkUse(fixture_network("g2p2"))},
        alt_ok=False,
        note="2B1 + 2B2 + 2e^x - x - 1 (complement symmetry)",
    ))
    add(Recipe(
        "allOddPV",
        Sum((EvenPart(Named("B")), DivX(Sum((EvenPart(Named("B")), Monomial(0, Poly.const(-1))))))),
        deps={"B": "allEvenPV"},
        slack=1,
        alt_ok=False,
        note="C_even = B_even and C_odd = (B_even - 1)/x",
    ))
    return r


_CATALOG: dict[str, Recipe] | None = None

_DB = re.compile(r"^davidBarton(?:\((\d+)\)|:(\d+)|(\d+))$")


def catalog() -> dict[str, Recipe]:
    global _CATALOG
    if _CATALOG is None:
        _CATALOG = _catalog()
    return _CATALOG


def david_barton(m: int) -> Recipe:
    """Permutations whose increasing runs are all shorter than ``m``."""
    if m < 2:
        raise ValueError("davidBarton needs m >= 2")
    return Recipe(
        f"davidBarton({m})",
        Entry("S"),
        {"S": NetworkUse(_single(ONE_RULE, LengthSet.of(*range(1, m)), name=f"single-runs<{m}"))},
        note=f"runs shorter than {m}",
    )


RECIPE_NAMES = ("pk", "rpk", "lrpk", "dasc", "rdasc", "lrdasc", "br", "udr", "eulerian", "altEulerian",
                "davidBarton(m)", "gz2014", "allEvenPV", "allOddPV")


def get_recipe(name: str) -> Recipe:
    m = _DB.match(name)
    if m:
        return david_barton(int(next(g for g in m.groups() if g)))
    try:
        return catalog()[name]
    except KeyError:
        raise UnknownRecipe(f"unknown recipe {name!r}; known: {', '.join(RECIPE_NAMES)}") from None


_CACHE: dict[tuple[str, int, Hom], Series] = {}


def run_recipe(name: str, bound: int, hom: Hom | str | None = None) -> Series:
    """Evaluate a built-in recipe (cached per name, bound, and homomorphism)."""
    recipe = get_recipe(name)
    h = resolve_hom(recipe, hom)
    key = (recipe.name, bound, h)
    if key not in _CACHE:
        _CACHE[key] = evaluate_recipe(recipe, bound, h)
    return _CACHE[key]


run_stat_recipe = run_recipe


def clear_caches() -> None:
    """Drop memoized recipe results (used when timing from a cold start)."""
    global _CATALOG
    from .euler import _entringer_rows

    _CACHE.clear()
    _CATALOG = None
    fixture_network.cache_clear()
    _entringer_rows.cache_clear()


# -- recipe documents ---------------------------------------------------------------


def _poly(v: Any, where: str) -> Poly:
    try:
        return parse_poly(v)
    except ValueError as exc:
        raise SchemaError(where, str(exc)) from None


def parse_node(doc: Any, where: str = "expr") -> Node:
    """Decode one node of a recipe document.

    Forms: ``{"entry": name, "i": 1, "j": 3}``, ``{"named": label}``,
    ``{"builtin": "EXPS", "p": "1 - t", "s": "1/2"}``, ``{"hexp": "t"}``,
    ``{"monomial": k, "coeff": "poly"}``, ``{"sum": [...]}``,
    ``{"product": [...]}``, ``{"scale": "poly", "of": node}``,
    ``{"recip": node}``, ``{"divexact": "poly", "of": node}``,
    ``{"even": node}``, ``{"odd": node}``, ``{"divx": node}``.
    """
    if not isinstance(doc, Mapping) or not doc:
        raise SchemaError(where, "expected a node object")
    if "entry" in doc:
        i, j = doc.get("i"), doc.get("j")
        if (i is None) != (j is None):
            raise SchemaError(where, "give both i and j or neither")
        return Entry(str(doc["entry"]), i, j)
    if "named" in doc:
        return Named(str(doc["named"]))
    if "builtin" in doc:
        kind = str(doc["builtin"]).upper()
        if kind not in ("EXPS", "EVEN", "ODD", "EULS"):
            raise SchemaError(f"{where}.builtin", f"unknown kind {kind!r}")
        try:
            s = as_rational(str(doc.get("s", "1")))
        except ValueError:
            raise SchemaError(f"{where}.s", f"not a rational: {doc.get('s')!r}") from None
        return Builtin(kind, _poly(doc.get("p", "1"), f"{where}.p"), s)
    if "hexp" in doc:
        return HomExp(_poly(doc["hexp"], f"{where}.hexp"))
    if "monomial" in doc:
        k = doc["monomial"]
        if isinstance(k, bool) or not isinstance(k, int) or k < 0:
            raise SchemaError(f"{where}.monomial", "expected a non-negative integer")
        return Monomial(k, _poly(doc.get("coeff", "1"), f"{where}.coeff"))
    for key, cls in (("sum", Sum), ("product", Product)):
        if key in doc:
            items = doc[key]
            if not isinstance(items, list) or not items:
                raise SchemaError(f"{where}.{key}", "expected a nonempty list")
            return cls(tuple(parse_node(x, f"{where}.{key}[{n}]") for n, x in enumerate(items)))
    if "scale" in doc:
        return Scale(_poly(doc["scale"], f"{where}.scale"), parse_node(doc.get("of"), f"{where}.of"))
    if "divexact" in doc:
        return DivExact(_poly(doc["divexact"], f"{where}.divexact"), parse_node(doc.get("of"), f"{where}.of"))
    for key, cls in (("recip", Recip), ("even", EvenPart), ("odd", OddPart), ("divx", DivX)):
        if key in doc:
            return cls(parse_node(doc[key], f"{where}.{key}"))
    raise SchemaError(where, f"unknown node with keys {sorted(doc)}")


def parse_recipe(doc: Mapping[str, Any], base: Path | None = None) -> Recipe:
    """Decode a recipe document.

    ``networks`` maps labels to ``{"path": file}`` (relative to ``base``),
    ``{"builtin": fixture-name}``, or an inline network object, each with an
    optional ``"hom"``.  ``deps`` maps labels to built-in recipe names.
    """
    if not isinstance(doc, Mapping):
        raise SchemaError("<root>", "expected an object")
    if "expr" not in doc:
        raise SchemaError("expr", "missing required field")
    nets: dict[str, NetworkUse] = {}
    for label, spec in dict(doc.get("networks", {})).items():
        where = f"networks.{label}"
        if not isinstance(spec, Mapping):
            raise SchemaError(where, "expected an object")
        if "path" in spec:
            p = Path(spec["path"])
            net = load_network(p if p.is_absolute() or base is None else base / p)
        elif "builtin" in spec:
            net = fixture_network(str(spec["builtin"]))
        elif "network" in spec:
            net = parse_network(spec["network"], label)
        else:
            raise SchemaError(where, "needs path, builtin, or network")
        h = spec.get("hom")
        try:
            nets[label] = NetworkUse(net, Hom(h) if h is not None else None)
        except ValueError:
            raise SchemaError(f"{where}.hom", f"unknown homomorphism {h!r}") from None
    deps = {str(k): str(v) for k, v in dict(doc.get("deps", {})).items()}
    slack = doc.get("slack", 0)
    if isinstance(slack, bool) or not isinstance(slack, int) or slack < 0:
        raise SchemaError("slack", "expected a non-negative integer")
    fixed = doc.get("hom")
    try:
        fixed_hom = Hom(fixed) if fixed is not None else None
    except ValueError:
        raise SchemaError("hom", f"unknown homomorphism {fixed!r}") from None
    return Recipe(str(doc.get("name", "document")), parse_node(doc["expr"]), nets, deps, slack, fixed_hom)


def load_recipe(path: str | Path) -> Recipe:
    path = Path(path)
    try:
        doc = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    return parse_recipe(doc, path.parent)
