"""Run networks: digraphs on ``1..m`` whose arcs carry admissible run lengths.

Walks spell compositions: traversing arc ``(i, j)`` with length ``k`` appends
part ``k``.  A network is a run network when no composition is spelled by two
different walks with the same endpoints.  That property is checked here only
up to a total length ``N``, which is all a computation truncated at ``x^N``
relies on.
"""
from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Any, Mapping

from .coeffring import Poly, parse_poly


class ParseError(ValueError):
    """Malformed document text; carries a line/column location when known."""


class SchemaError(ValueError):
    """Well-formed document that violates the network schema."""

    def __init__(self, field_path: str, message: str):
        super().__init__(f"{field_path}: {message}")
        self.field = field_path


@dataclass(frozen=True)
class LengthSet:
    """Either a finite set of positive integers or ``{first, first+step, ...}``."""

    finite: tuple[int, ...] | None = None
    first: int | None = None
    step: int | None = None

    def __post_init__(self):
        if self.finite is not None:
            if self.first is not None or self.step is not None:
                raise ValueError("a length set is finite or arithmetic, not both")
            vals = tuple(sorted(set(self.finite)))
            if not vals:
                raise ValueError("finite length set must be nonempty")
            if vals[0] < 1:
                raise ValueError("lengths must be positive")
            object.__setattr__(self, "finite", vals)
        else:
            if self.first is None or self.step is None:
                raise ValueError("arithmetic length set needs first and step")
            if self.first < 1 or self.step < 1:
                raise ValueError("arithmetic length set needs first >= 1 and step >= 1")

    @classmethod
    def of(cls, *values: int) -> "LengthSet":
        return cls(finite=tuple(values))

    @classmethod
    def arithmetic(cls, first: int, step: int = 1) -> "LengthSet":
        return cls(first=first, step=step)

    @property
    def is_finite(self) -> bool:
        return self.finite is not None

    @property
    def minimum(self) -> int:
        return self.finite[0] if self.finite is not None else self.first

    def members(self, bound: int) -> list[int]:
        if self.finite is not None:
            return [k for k in self.finite if k <= bound]
        return list(range(self.first, bound + 1, self.step))

    def __contains__(self, k: int) -> bool:
        if self.finite is not None:
            return k in self.finite
        return k >= self.first and (k - self.first) % self.step == 0

    def __str__(self) -> str:
        if self.finite is not None:
            return "{" + ",".join(map(str, self.finite)) + "}"
        a, d = self.first, self.step
        return "{" + f"{a},{a + d},{a + 2 * d},..." + "}"


POSITIVE = LengthSet.arithmetic(1, 1)


def length_set_members(s: LengthSet, bound: int) -> list[int]:
    if bound < 0:
        raise ValueError("bound must be non-negative")
    return s.members(bound)


@dataclass(frozen=True)
class WeightRule:
    """Weight ``c * t**(alpha*k + beta)`` of a part of length ``k``.

    ``at`` overrides the weight for finitely many lengths, typically to give
    short runs (``k = 1``) a different weight from long ones.
    """

    c: Poly = field(default_factory=lambda: Poly.const(1))
    alpha: int = 0
    beta: int = 0
    at: tuple[tuple[int, Poly], ...] = ()

    def __post_init__(self):
        if self.alpha not in (0, 1):
            raise ValueError("alpha must be 0 or 1")
        object.__setattr__(self, "at", tuple(sorted((int(k), Poly.coerce(w)) for k, w in dict(self.at).items())))

    @classmethod
    def const(cls, c: Poly | int = 1, **kw) -> "WeightRule":
        return cls(c=Poly.coerce(c), **kw)

    def weight(self, k: int) -> Poly:
        for key, w in self.at:
            if key == k:
                return w
        e = self.alpha * k + self.beta
        if e < 0:
            raise ValueError(f"negative exponent of t for length {k}")
        return self.c * Poly.monomial(e)

    def check(self, lengths: LengthSet) -> None:
        """Raise unless the exponent is non-negative across ``lengths``."""
        overrides = {k for k, _ in self.at}
        if lengths.is_finite:
            ks = [k for k in lengths.finite if k not in overrides]
        else:
            k = lengths.first
            while k in overrides:
                k += lengths.step
            ks = [k]
        for k in ks:
            if self.alpha * k + self.beta < 0:
                raise ValueError(f"exponent alpha*k+beta = {self.alpha * k + self.beta} < 0 at k = {k}")

    def __str__(self) -> str:
        e = {(0, 0): "", (1, 0): "t^k"}.get((self.alpha, self.beta))
        if e is None:
            e = f"t^{self.beta}" if self.alpha == 0 else f"t^(k{self.beta:+d})"
        base = str(self.c) if self.c != 1 or not e else ""
        main = "*".join(x for x in (f"({base})" if base and e else base, e) if x) or "1"
        if self.at:
            main += " [" + ", ".join(f"k={k}: {w}" for k, w in self.at) + "]"
        return main


ONE_WEIGHT = WeightRule()


@dataclass(frozen=True)
class Arc:
    lengths: LengthSet
    weight: WeightRule = ONE_WEIGHT


@dataclass(frozen=True)
class RunNetwork:
    m: int
    arcs: Mapping[tuple[int, int], Arc]
    start: frozenset[int]
    end: frozenset[int]
    name: str = ""

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("a network needs at least one vertex")
        arcs = dict(self.arcs)
        for (i, j), arc in arcs.items():
            if not (1 <= i <= self.m and 1 <= j <= self.m):
                raise ValueError(f"arc ({i},{j}) leaves the vertex range 1..{self.m}")
            arc.weight.check(arc.lengths)
        for v in (*self.start, *self.end):
            if not 1 <= v <= self.m:
                raise ValueError(f"vertex {v} outside 1..{self.m}")
        object.__setattr__(self, "arcs", dict(sorted(arcs.items())))
        object.__setattr__(self, "start", frozenset(self.start))
        object.__setattr__(self, "end", frozenset(self.end))

    def __hash__(self) -> int:
        return hash((self.m, tuple(self.arcs.items()), self.start, self.end))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RunNetwork):
            return NotImplemented
        return (self.m, self.arcs, self.start, self.end) == (other.m, other.arcs, other.start, other.end)

    def with_weights(self, weights: Mapping[tuple[int, int], WeightRule], name: str | None = None) -> "RunNetwork":
        arcs = dict(self.arcs)
        for key, w in weights.items():
            if key not in arcs:
                raise KeyError(f"network has no arc {key}")
            arcs[key] = replace(arcs[key], weight=w)
        return RunNetwork(self.m, arcs, self.start, self.end, name if name is not None else self.name)

    def with_endpoints(self, start=None, end=None) -> "RunNetwork":
        return RunNetwork(
            self.m,
            self.arcs,
            frozenset(start) if start is not None else self.start,
            frozenset(end) if end is not None else self.end,
            self.name,
        )


# -- validation -----------------------------------------------------------------


@dataclass(frozen=True)
class Violation:
    """Two distinct walks spelling the same composition between the same endpoints."""

    composition: tuple[int, ...]
    walk_a: tuple[int, ...]
    walk_b: tuple[int, ...]

    def __str__(self) -> str:
        fmt = lambda w: "->".join(map(str, w))
        comp = "(" + ",".join(map(str, self.composition)) + ")"
        return f"composition {comp} is spelled by walks {fmt(self.walk_a)} and {fmt(self.walk_b)}"


def validate_network(net: RunNetwork, bound: int) -> Violation | None:
    """Return ``None`` if unique-walk holds for compositions of size <= bound.

    Runs two walks in lock step over the product graph; a state is
    ``(u, v, total, diverged)``.  Both walks start at the same vertex and read
    the same part at each step.  Reaching ``(w, w, _, True)`` means two
    different walks from a common start to ``w`` spell one composition.
    States are explored breadth first in a fixed order, so the reported pair
    is deterministic.
    """
    out: dict[int, list[tuple[int, LengthSet]]] = {v: [] for v in range(1, net.m + 1)}
    for (i, j), arc in net.arcs.items():
        out[i].append((j, arc.lengths))

    parent: dict[tuple, tuple | None] = {}
    queue: deque = deque()
    for s in range(1, net.m + 1):
        st = (s, s, 0, False)
        parent[st] = None
        queue.append(st)

    while queue:
        st = queue.popleft()
        u, v, total, diverged = st
        for j1, ls1 in out[u]:
            for j2, ls2 in out[v]:
                if not diverged and j2 < j1:
                    continue  # symmetric pairs add nothing
                for k in ls1.members(bound - total):
                    if k not in ls2:
                        continue
                    nxt = (j1, j2, total + k, diverged or j1 != j2)
                    if nxt in parent:
                        continue
                    parent[nxt] = (st, k)
                    if nxt[3] and j1 == j2:
                        return _rebuild(parent, nxt)
                    queue.append(nxt)
    return None


def _rebuild(parent: dict, st: tuple) -> Violation:
    parts, wa, wb = [], [st[0]], [st[1]]
    cur = st
    while parent[cur] is not None:
        prev, k = parent[cur]
        parts.append(k)
        wa.append(prev[0])
        wb.append(prev[1])
        cur = prev
    return Violation(tuple(reversed(parts)), tuple(reversed(wa)), tuple(reversed(wb)))


# -- documents --------------------------------------------------------------------


def _require(doc: Mapping, key: str, where: str) -> Any:
    if key not in doc:
        raise SchemaError(f"{where}.{key}" if where else key, "missing required field")
    return doc[key]


def _as_int(value: Any, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise SchemaError(where, f"expected an integer, got {value!r}")
    return value


def _parse_poly_field(value: Any, where: str) -> Poly:
    try:
        return parse_poly(value)
    except ValueError as exc:
        raise SchemaError(where, str(exc)) from None


def _parse_lengths(doc: Any, where: str) -> LengthSet:
    if not isinstance(doc, Mapping):
        raise SchemaError(where, "expected an object")
    if "finite" in doc:
        vals = doc["finite"]
        if not isinstance(vals, list) or not vals:
            raise SchemaError(f"{where}.finite", "expected a nonempty list of positive integers")
        ks = [_as_int(v, f"{where}.finite[{n}]") for n, v in enumerate(vals)]
        if min(ks) < 1:
            raise SchemaError(f"{where}.finite", "lengths must be positive")
        return LengthSet(finite=tuple(ks))
    first = _as_int(_require(doc, "first", where), f"{where}.first")
    step = _as_int(doc.get("step", 1), f"{where}.step")
    if first < 1:
        raise SchemaError(f"{where}.first", "must be >= 1")
    if step < 1:
        raise SchemaError(f"{where}.step", "must be >= 1")
    return LengthSet(first=first, step=step)


def _parse_weight(doc: Any, where: str) -> WeightRule:
    if doc is None:
        return ONE_WEIGHT
    if not isinstance(doc, Mapping):
        raise SchemaError(where, "expected an object")
    c = _parse_poly_field(doc.get("c", "1"), f"{where}.c")
    alpha = _as_int(doc.get("alpha", 0), f"{where}.alpha")
    if alpha not in (0, 1):
        raise SchemaError(f"{where}.alpha", "must be 0 or 1")
    beta = _as_int(doc.get("beta", 0), f"{where}.beta")
    at_doc = doc.get("at", {})
    if not isinstance(at_doc, Mapping):
        raise SchemaError(f"{where}.at", "expected an object mapping lengths to polynomials")
    at = []
    for key, val in at_doc.items():
        try:
            k = int(key)
        except ValueError:
            raise SchemaError(f"{where}.at", f"length key {key!r} is not an integer") from None
        if k < 1:
            raise SchemaError(f"{where}.at", f"length key {k} must be positive")
        at.append((k, _parse_poly_field(val, f"{where}.at.{key}")))
    return WeightRule(c=c, alpha=alpha, beta=beta, at=tuple(at))


def parse_network(doc: Mapping[str, Any], name: str = "") -> RunNetwork:
    """Build a :class:`RunNetwork` from a decoded JSON document."""
    if not isinstance(doc, Mapping):
        raise SchemaError("<root>", "expected an object")
    m = _as_int(_require(doc, "vertices", ""), "vertices")
    if m < 1:
        raise SchemaError("vertices", "must be >= 1")

    def vertex_list(key: str) -> frozenset[int]:
        vals = _require(doc, key, "")
        if not isinstance(vals, list):
            raise SchemaError(key, "expected a list of vertices")
        vs = [_as_int(v, f"{key}[{n}]") for n, v in enumerate(vals)]
        for n, v in enumerate(vs):
            if not 1 <= v <= m:
                raise SchemaError(f"{key}[{n}]", f"vertex {v} outside 1..{m}")
        return frozenset(vs)

    start, end = vertex_list("start"), vertex_list("end")
    arcs_doc = doc.get("arcs", [])
    if not isinstance(arcs_doc, list):
        raise SchemaError("arcs", "expected a list")
    arcs: dict[tuple[int, int], Arc] = {}
    for n, a in enumerate(arcs_doc):
        where = f"arcs[{n}]"
        if not isinstance(a, Mapping):
            raise SchemaError(where, "expected an object")
        i = _as_int(_require(a, "from", where), f"{where}.from")
        j = _as_int(_require(a, "to", where), f"{where}.to")
        for key, v in (("from", i), ("to", j)):
            if not 1 <= v <= m:
                raise SchemaError(f"{where}.{key}", f"vertex {v} outside 1..{m}")
        if (i, j) in arcs:
            raise SchemaError(where, f"duplicate arc ({i},{j}); split a vertex instead")
        lengths = _parse_lengths(_require(a, "lengths", where), f"{where}.lengths")
        weight = _parse_weight(a.get("weight"), f"{where}.weight")
        try:
            weight.check(lengths)
        except ValueError as exc:
            raise SchemaError(f"{where}.weight", str(exc)) from None
        arcs[(i, j)] = Arc(lengths, weight)
    return RunNetwork(m, arcs, start, end, name or str(doc.get("name", "")))


def loads_network(text: str, name: str = "") -> RunNetwork:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    return parse_network(doc, name)


def load_network(path: str | Path) -> RunNetwork:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ParseError(f"{path}: {exc.strerror}") from None
    try:
        return loads_network(text, path.stem)
    except ParseError as exc:
        raise ParseError(f"{path}: {exc}") from None


def network_to_doc(net: RunNetwork) -> dict[str, Any]:
    arcs = []
    for (i, j), arc in net.arcs.items():
        ls = arc.lengths
        lengths = {"finite": list(ls.finite)} if ls.is_finite else {"first": ls.first, "step": ls.step}
        entry: dict[str, Any] = {"from": i, "to": j, "lengths": lengths}
        w = arc.weight
        if w != ONE_WEIGHT:
            wd: dict[str, Any] = {"c": str(w.c), "alpha": w.alpha, "beta": w.beta}
            if w.at:
                wd["at"] = {str(k): str(p) for k, p in w.at}
            entry["weight"] = wd
        arcs.append(entry)
    doc: dict[str, Any] = {}
    if net.name:
        doc["name"] = net.name
    doc.update(vertices=net.m, start=sorted(net.start), end=sorted(net.end), arcs=arcs)
    return doc
