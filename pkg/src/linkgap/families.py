"""Registry of parameterised link families with predicted gap formulas.

Every family the gap tables and closed-form results cover is transcribed
as data in data/families.json: a word template with affine integer
entries, a parameter domain, and piecewise formulas for u_BJ, u_M and the
gap.  Formulas live in a tiny expression language (integers, parameters,
+ - * //, min/max, comparisons chained and combined with and/or) so the
registry can be audited line by line; nothing is Python code.

Entries whose source rows carry visible transcription defects are marked
status "suspect"; the verification harness reports their mismatches
without treating them as failures.  A handful of piecewise formulas are
genuinely partial (their source states no value between ranges); points
where a formula is undefined are reported as skips, never guessed.
"""

from __future__ import annotations

import itertools
import json
import re
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources

from .bj import BJEngine, default_engine
from .conway import PretzelWord, RationalWord
from .errors import Indeterminate, OutOfDomain, WeightCeilingExceeded
from .pretzel import pretzel_diagram_unlink, u_bj_odd_pretzel
from .diagram import build_pretzel_diagram, components as diagram_components
from .rational import canonical_key, cf_eval, crossing_number
from .search import u_min_diagram

DEFAULT_CROSSING_BUDGET = 48

# ---------------------------------------------------------------------------
# expression mini-language

_TOKEN = re.compile(
    r"\s*(?:(?P<int>\d+)|(?P<name>[a-z_]+)|(?P<op><=|>=|==|!=|//|[-+*<>=(),]))"
)


def _tokenize(src: str) -> list[str]:
    out, pos = [], 0
    while pos < len(src):
        m = _TOKEN.match(src, pos)
        if not m or m.end() == pos:
            raise ValueError(f"bad token in formula {src!r} at {pos}")
        out.append(m.group(m.lastgroup))
        pos = m.end()
    return out


class _Parser:
    """Recursive descent over the token list; returns nested tuples."""

    def __init__(self, src: str):
        self.src = src
        self.toks = _tokenize(src)
        self.pos = 0

    def peek(self):
        return self.toks[self.pos] if self.pos < len(self.toks) else None

    def take(self, tok=None):
        got = self.peek()
        if got is None or (tok is not None and got != tok):
            raise ValueError(f"expected {tok!r} in {self.src!r}, got {got!r}")
        self.pos += 1
        return got

    # conditions ----------------------------------------------------------
    def cond(self):
        node = self.cond_and()
        while self.peek() == "or":
            self.take()
            node = ("or", node, self.cond_and())
        return node

    def cond_and(self):
        node = self.cond_cmp()
        while self.peek() == "and":
            self.take()
            node = ("and", node, self.cond_cmp())
        return node

    def cond_cmp(self):
        if self.peek() == "true":
            self.take()
            return ("true",)
        if self.peek() == "(" and self._paren_is_cond():
            self.take("(")
            node = self.cond()
            self.take(")")
            return node
        left = self.expr()
        parts = [left]
        rels = []
        while self.peek() in ("<", "<=", ">", ">=", "=", "==", "!="):
            rels.append(self.take())
            parts.append(self.expr())
        if not rels:
            raise ValueError(f"comparison expected in {self.src!r}")
        return ("cmp", rels, parts)

    def _paren_is_cond(self):
        # lookahead: a parenthesised group is a condition iff it contains a
        # comparison or and/or before its matching close paren
        depth = 0
        for tok in self.toks[self.pos:]:
            if tok == "(":
                depth += 1
            elif tok == ")":
                depth -= 1
                if depth == 0:
                    return False
            elif depth == 1 and tok in ("<", "<=", ">", ">=", "=", "==", "!=", "and", "or"):
                return True
        return False

    # expressions ----------------------------------------------------------
    def expr(self):
        node = self.term()
        while self.peek() in ("+", "-"):
            op = self.take()
            node = (op, node, self.term())
        return node

    def term(self):
        node = self.atom()
        while self.peek() in ("*", "//"):
            op = self.take()
            node = (op, node, self.atom())
        return node

    def atom(self):
        tok = self.peek()
        if tok == "-":
            self.take()
            return ("-u", self.atom())
        if tok == "(":
            self.take()
            node = self.expr()
            self.take(")")
            return node
        if tok is None:
            raise ValueError(f"unexpected end of {self.src!r}")
        if tok.isdigit():
            self.take()
            return ("int", int(tok))
        self.take()
        if self.peek() == "(":
            if tok not in ("min", "max"):
                raise ValueError(f"unknown function {tok!r} in {self.src!r}")
            self.take("(")
            args = [self.expr()]
            while self.peek() == ",":
                self.take()
                args.append(self.expr())
            self.take(")")
            return (tok, args)
        return ("var", tok)


def _compile_expr(src: str):
    p = _Parser(src)
    node = p.expr()
    if p.peek() is not None:
        raise ValueError(f"trailing tokens in {src!r}")
    return node


def _compile_cond(src: str):
    p = _Parser(src)
    node = p.cond()
    if p.peek() is not None:
        raise ValueError(f"trailing tokens in {src!r}")
    return node


_REL = {
    "<": int.__lt__, "<=": int.__le__, ">": int.__gt__, ">=": int.__ge__,
    "=": int.__eq__, "==": int.__eq__, "!=": int.__ne__,
}


def _eval(node, env) -> int | bool:
    kind = node[0]
    if kind == "int":
        return node[1]
    if kind == "var":
        return env[node[1]]
    if kind == "-u":
        return -_eval(node[1], env)
    if kind in ("+", "-", "*", "//"):
        a, b = _eval(node[1], env), _eval(node[2], env)
        if kind == "+":
            return a + b
        if kind == "-":
            return a - b
        if kind == "*":
            return a * b
        return a // b
    if kind in ("min", "max"):
        vals = [_eval(a, env) for a in node[1]]
        return min(vals) if kind == "min" else max(vals)
    if kind == "true":
        return True
    if kind == "and":
        return _eval(node[1], env) and _eval(node[2], env)
    if kind == "or":
        return _eval(node[1], env) or _eval(node[2], env)
    if kind == "cmp":
        rels, parts = node[1], node[2]
        vals = [_eval(p, env) for p in parts]
        return all(_REL[r](vals[i], vals[i + 1]) for i, r in enumerate(rels))
    raise ValueError(f"bad node {node!r}")


@dataclass(frozen=True)
class Piecewise:
    clauses: tuple[tuple[object, object], ...]  # (cond ast, expr ast)

    def eval(self, env) -> int | None:
        """First matching clause, or None where the formula says nothing."""
        for cond, expr in self.clauses:
            if _eval(cond, env):
                return _eval(expr, env)
        return None


def _compile_piecewise(raw) -> Piecewise | None:
    if raw is None:
        return None
    return Piecewise(
        tuple((_compile_cond(c["when"]), _compile_expr(c["value"])) for c in raw)
    )


# ---------------------------------------------------------------------------
# registry

_REP = re.compile(r"rep\((?P<entry>[^;]*),(?P<count>[^;]*)\)\Z")


@dataclass(frozen=True)
class FamilyEntry:
    id: str
    kind: str                      # "rational" | "pretzel"
    template: tuple[str, ...]
    params: tuple[str, ...]
    domain_src: str
    components: int | None
    status: str
    note: str
    grid: dict[str, tuple[int, int]]
    _domain: object = field(repr=False)
    _template: tuple = field(repr=False)    # (entry ast, count ast | None)
    _u_bj: Piecewise | None = field(repr=False)
    _u_m: Piecewise | None = field(repr=False)
    _delta: Piecewise | None = field(repr=False)

    def in_domain(self, params: dict[str, int]) -> bool:
        return bool(_eval(self._domain, params))

    def instantiate(self, params: dict[str, int]) -> RationalWord | PretzelWord:
        """Affine evaluation of the template at a parameter point."""
        if not self.in_domain(params):
            raise OutOfDomain(f"{params} outside domain of {self.id}")
        word: list[int] = []
        for entry, count in self._template:
            n = _eval(count, params) if count is not None else 1
            word.extend([_eval(entry, params)] * n)
        return tuple(word)

    def predict(self, params: dict[str, int]) -> dict[str, int | None]:
        return {
            "u_bj": self._u_bj.eval(params) if self._u_bj else None,
            "u_m": self._u_m.eval(params) if self._u_m else None,
            "delta": self._delta.eval(params) if self._delta else None,
            "components": self.components,
        }


def _compile_entry(raw: dict) -> FamilyEntry:
    compiled_template = []
    for entry in raw["template"]:
        m = _REP.match(entry.replace(" ", ""))
        if m:
            compiled_template.append(
                (_compile_expr(m.group("entry")), _compile_expr(m.group("count")))
            )
        else:
            compiled_template.append((_compile_expr(entry), None))
    return FamilyEntry(
        id=raw["id"],
        kind=raw["kind"],
        template=tuple(raw["template"]),
        params=tuple(raw["params"]),
        domain_src=raw["domain"],
        components=raw["components"],
        status=raw["status"],
        note=raw.get("note", ""),
        grid={k: (v[0], v[1]) for k, v in raw["grid"].items()},
        _domain=_compile_cond(raw["domain"]),
        _template=tuple(compiled_template),
        _u_bj=_compile_piecewise(raw["u_bj"]),
        _u_m=_compile_piecewise(raw["u_m"]),
        _delta=_compile_piecewise(raw["delta"]),
    )


EXPECTED_ENTRY_COUNT = 91

# Entries whose source rows are defective or oddly printed; adjudicated by the
# engines and annotated in each entry's note.  f44/f52/f57/f60 were flagged for
# how they are printed but verify exactly; the others carry real misprints.
SUSPECT_IDS = frozenset(
    {
        "f13", "f21", "f29", "f37", "f44", "f47", "f52", "f57", "f60", "f62",
        "p3-ooo", "w3-ooe", "gap-w3-eoe",
    }
)


@lru_cache(maxsize=1)
def registry() -> tuple[FamilyEntry, ...]:
    """Load and validate the family registry shipped with the package."""
    raw = json.loads(
        resources.files("linkgap").joinpath("data/families.json").read_text()
    )
    entries = tuple(_compile_entry(e) for e in raw["entries"])
    ids = [e.id for e in entries]
    if len(entries) != EXPECTED_ENTRY_COUNT:
        raise AssertionError(f"registry has {len(entries)} entries")
    if len(set(ids)) != len(ids):
        raise AssertionError("duplicate registry ids")
    if {e.id for e in entries if e.status == "suspect"} != SUSPECT_IDS:
        raise AssertionError("unexpected suspect set")
    return entries


def registry_entry(entry_id: str) -> FamilyEntry:
    for e in registry():
        if e.id == entry_id:
            return e
    raise KeyError(entry_id)


# ---------------------------------------------------------------------------
# verification harness


@dataclass(frozen=True)
class PointResult:
    params: dict[str, int]
    status: str                     # "match" | "mismatch" | "skip"
    reason: str
    predicted: dict[str, int | None]
    computed: dict[str, int | None]
    mismatched_fields: tuple[str, ...]


@dataclass(frozen=True)
class VerificationReport:
    entry_id: str
    status: str
    points: tuple[PointResult, ...]

    @property
    def counts(self) -> dict[str, int]:
        out = {"match": 0, "mismatch": 0, "skip": 0}
        for p in self.points:
            out[p.status] += 1
        return out

    @property
    def ok(self) -> bool:
        return self.counts["mismatch"] == 0


def _grid_points(entry: FamilyEntry, overrides: dict[str, tuple[int, int]] | None):
    ranges = []
    for name in entry.params:
        lo, hi = entry.grid[name]
        if overrides and name in overrides:
            lo, hi = overrides[name]
        ranges.append(range(lo, hi + 1))
    for combo in itertools.product(*ranges):
        yield dict(zip(entry.params, combo))


def _compute_rational(word, engine: BJEngine):
    key = canonical_key(cf_eval(word))
    if key.p_abs <= 1:
        return {"u_bj": 0, "u_m": 0, "delta": 0, "components": key.component_count}
    u_bj = engine.u_bj(key)
    u_m = u_min_diagram(key, engine.weight_ceiling)
    return {
        "u_bj": u_bj,
        "u_m": u_m,
        "delta": u_m - u_bj,
        "components": key.component_count,
    }


def _compute_pretzel(cols, engine: BJEngine):
    u_m, _ = pretzel_diagram_unlink(cols, engine.weight_ceiling)
    all_odd = all(c > 0 and c % 2 == 1 for c in cols)
    u_bj = u_bj_odd_pretzel(cols, engine) if all_odd else None
    return {
        "u_bj": u_bj,
        "u_m": u_m,
        "delta": u_m - u_bj if u_bj is not None else None,
        "components": diagram_components(build_pretzel_diagram(cols)),
    }


def verify(
    entry: FamilyEntry,
    grid: dict[str, tuple[int, int]] | None = None,
    engine: BJEngine | None = None,
    crossing_budget: int = DEFAULT_CROSSING_BUDGET,
) -> VerificationReport:
    """Compare an entry's predictions against the engines over a grid.

    Every grid point is classified: out-of-domain and over-budget points are
    skips, points where no prediction applies are skips, everything else is
    a match or a mismatch per field.  Nothing is silently dropped.
    """
    engine = engine or default_engine()
    points = []
    for params in _grid_points(entry, grid):
        if not entry.in_domain(params):
            points.append(PointResult(params, "skip", "outside domain", {}, {}, ()))
            continue
        word = entry.instantiate(params)
        if sum(abs(a) for a in word) > crossing_budget:
            points.append(PointResult(params, "skip", "crossing budget", {}, {}, ()))
            continue
        try:
            if entry.kind == "rational":
                computed = _compute_rational(word, engine)
            else:
                computed = _compute_pretzel(word, engine)
        except (Indeterminate, WeightCeilingExceeded) as exc:
            points.append(PointResult(params, "skip", str(exc), {}, {}, ()))
            continue
        predicted = entry.predict(params)
        bad = tuple(
            f
            for f in ("u_bj", "u_m", "delta", "components")
            if predicted[f] is not None
            and computed[f] is not None
            and predicted[f] != computed[f]
        )
        if all(predicted[f] is None for f in ("u_bj", "u_m", "delta")):
            points.append(
                PointResult(params, "skip", "no prediction at this point", predicted, computed, ())
            )
        elif bad:
            points.append(PointResult(params, "mismatch", "", predicted, computed, bad))
        else:
            points.append(PointResult(params, "match", "", predicted, computed, ()))
    return VerificationReport(entry.id, entry.status, tuple(points))


def verify_all(
    grid: dict[str, tuple[int, int]] | None = None,
    engine: BJEngine | None = None,
    crossing_budget: int = DEFAULT_CROSSING_BUDGET,
    ids: list[str] | None = None,
) -> list[VerificationReport]:
    engine = engine or default_engine()
    selected = registry() if ids is None else [registry_entry(i) for i in ids]
    return [verify(e, grid, engine, crossing_budget) for e in selected]
