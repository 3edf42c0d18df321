"""Input model for two-component L-space links and normalization checks."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Mapping

from .errors import HalfIntegralExponent, NonUnitAugmentation, ParityError, SchemaError
from .laurent import (
    HalfInt,
    Laurent1,
    Laurent2,
    TorsionSeries,
    substitute_unit,
    symmetry_defect,
    torsion_series,
)


@dataclass(frozen=True)
class LinkData:
    name: str
    lk: int
    delta_link: Laurent2
    delta_1: Laurent1
    delta_2: Laurent1
    series_1: TorsionSeries = field(repr=False)
    series_2: TorsionSeries = field(repr=False)

    @classmethod
    def build(
        cls, name: str, lk: int, delta_link: Laurent2, delta_1: Laurent1, delta_2: Laurent1
    ) -> "LinkData":
        """Check exponent lattices and derive both torsion series."""
        lk = int(lk)
        want = (lk - 1) % 2
        for (i, j) in delta_link.terms:
            if i % 2 != want or j % 2 != want:
                raise ParityError(
                    f"Alexander exponent ({HalfInt(i)}, {HalfInt(j)}) is off the lattice for lk={lk}"
                )
        for d in (delta_1, delta_2):
            if any(e % 2 for e in d.terms):
                raise ParityError("component Alexander polynomials need integer exponents")
        try:
            s1 = torsion_series(delta_1)
            s2 = torsion_series(delta_2)
        except (HalfIntegralExponent, NonUnitAugmentation) as exc:
            raise SchemaError(str(exc)) from exc
        return cls(name, lk, delta_link, delta_1, delta_2, s1, s2)

    @property
    def is_split(self) -> bool:
        return self.delta_link.is_zero()

    def a_link(self, d1: int, d2: int) -> int:
        """Coefficient of Delta_L at doubled exponents."""
        return self.delta_link.coefficient_doubled(d1, d2)

    def series(self, component: int) -> TorsionSeries:
        return self.series_1 if component == 1 else self.series_2

    def delta(self, component: int) -> Laurent1:
        return self.delta_1 if component == 1 else self.delta_2


@dataclass(frozen=True)
class Issue:
    code: str
    message: str

    def as_dict(self) -> dict[str, str]:
        return {"code": self.code, "message": self.message}


@dataclass
class ValidationReport:
    errors: list[Issue] = field(default_factory=list)
    warnings: list[Issue] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.errors

    def as_dict(self) -> dict[str, Any]:
        return {
            "ok": self.ok,
            "errors": [e.as_dict() for e in self.errors],
            "warnings": [w.as_dict() for w in self.warnings],
        }


# serialization

def _exponent(value: Any, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise SchemaError(f"{where}: exponent must be an integer or a 'p/2' string")
    try:
        return HalfInt.of(value).doubled
    except ValueError as exc:
        raise SchemaError(f"{where}: {exc}") from exc


def _coefficient(value: Any, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise SchemaError(f"{where}: coefficient must be an integer")
    return value


def _terms(doc: Mapping, key: str) -> list:
    value = doc.get(key)
    if not isinstance(value, list):
        raise SchemaError(f"'{key}' must be a list")
    for k, item in enumerate(value):
        if not isinstance(item, dict):
            raise SchemaError(f"{key}[{k}] must be an object")
    return value


def parse_link(document: str | bytes | Mapping) -> LinkData:
    """Parse a link document given as JSON text or an already-decoded mapping."""
    if isinstance(document, (str, bytes)):
        try:
            document = json.loads(document)
        except json.JSONDecodeError as exc:
            raise SchemaError(f"invalid JSON: {exc}") from exc
    if not isinstance(document, Mapping):
        raise SchemaError("link document must be a JSON object")
    name = document.get("name", "")
    if not isinstance(name, str):
        raise SchemaError("'name' must be a string")
    lk = document.get("linking_number")
    if isinstance(lk, bool) or not isinstance(lk, int):
        raise SchemaError("'linking_number' must be an integer")

    link_terms: dict[tuple[int, int], int] = {}
    for k, item in enumerate(_terms(document, "alexander_link")):
        where = f"alexander_link[{k}]"
        if set(item) - {"e1", "e2", "c"} or not {"e1", "e2", "c"} <= set(item):
            raise SchemaError(f"{where}: expected keys e1, e2, c")
        key = (_exponent(item["e1"], where), _exponent(item["e2"], where))
        link_terms[key] = link_terms.get(key, 0) + _coefficient(item["c"], where)

    comps = []
    for idx in (1, 2):
        key = f"alexander_component_{idx}"
        acc: dict[int, int] = {}
        for k, item in enumerate(_terms(document, key)):
            where = f"{key}[{k}]"
            if set(item) != {"e", "c"}:
                raise SchemaError(f"{where}: expected keys e, c")
            e = _exponent(item["e"], where)
            acc[e] = acc.get(e, 0) + _coefficient(item["c"], where)
        comps.append(acc)

    delta_link = Laurent2(link_terms)
    delta_1, delta_2 = Laurent1(comps[0]), Laurent1(comps[1])
    return LinkData.build(name, lk, delta_link, delta_1, delta_2)


def render(link: LinkData) -> dict[str, Any]:
    """Canonical document for ``link``; exponents as ints or 'p/2' strings."""

    def exp(d: int):
        return d // 2 if d % 2 == 0 else f"{d}/2"

    return {
        "name": link.name,
        "linking_number": link.lk,
        "alexander_link": [
            {"e1": exp(i), "e2": exp(j), "c": c} for (i, j), c in sorted(link.delta_link.terms.items())
        ],
        "alexander_component_1": [{"e": exp(e), "c": c} for e, c in link.delta_1.items()],
        "alexander_component_2": [{"e": exp(e), "c": c} for e, c in link.delta_2.items()],
    }


def render_json(link: LinkData) -> str:
    return json.dumps(render(link), indent=2, sort_keys=True) + "\n"


# validation

def leading_term(delta_link: Laurent2) -> tuple[int, int]:
    """Doubled (i0, j0): largest j, then the largest i in that row."""
    j0 = max(j for _, j in delta_link.terms)
    i0 = max(i for i, j in delta_link.terms if j == j0)
    return i0, j0


def geometric_sum(lk: int) -> Laurent1:
    """1 + t + ... + t^(|lk|-1); equal up to a unit to (1 - t^lk)/(1 - t)."""
    return Laurent1({2 * k: 1 for k in range(abs(lk))})


def _reduction_issue(link: LinkData, component: int) -> str | None:
    reduced = substitute_unit(link.delta_link, variable=2 if component == 1 else 1)
    expected = geometric_sum(link.lk) * link.delta(component)
    if reduced.is_zero() and expected.is_zero():
        return None
    if reduced.unit_ratio(expected) is None:
        return (
            f"Delta_L with t{3 - component} = 1 is not a unit multiple of "
            f"(1 - t^lk)/(1 - t) * Delta_{component}"
        )
    return None


def validate(link: LinkData, check_h: bool = True) -> ValidationReport:
    """Check the normalization conditions; never raises for bad data.

    With ``check_h`` the h-function is also built, so an accepted report
    means the downstream pipeline will run.
    """
    report = ValidationReport()
    symmetric_input = True
    for idx in (1, 2):
        lead = link.delta(idx).leading_coefficient()
        if lead != 1:
            report.errors.append(
                Issue("leading_coefficient", f"Delta_{idx} has leading coefficient {lead}, expected 1")
            )

    if link.is_split:
        if link.lk != 0:
            report.errors.append(
                Issue("split_linking", f"Delta_L vanishes but the linking number is {link.lk}")
            )
    else:
        i0, j0 = leading_term(link.delta_link)
        # a^{L2} index j0 - lk/2 + 1/2, in doubled form (j0 - lk + 1) / 2
        a2 = link.series_2[(j0 - link.lk + 1) // 2]
        want = 1 if a2 == 1 else -1
        got = link.delta_link.coefficient_doubled(i0, j0)
        if got != want:
            report.errors.append(
                Issue(
                    "normalization",
                    f"coefficient at ({HalfInt(i0)}, {HalfInt(j0)}) is {got}, expected {want}",
                )
            )
        issue = _reduction_issue(link, 1)
        if issue:
            report.errors.append(Issue("alexander_reduction", issue))
        issue = _reduction_issue(link, 2)
        if issue:
            report.warnings.append(Issue("alexander_reduction_2", issue))
        symmetric, unit = symmetry_defect(link.delta_link)
        symmetric_input = symmetric
        if not symmetric:
            report.warnings.append(Issue("asymmetric", "Delta_L is not symmetric under t -> 1/t"))
        elif unit[1].doubled or unit[2].doubled:
            report.warnings.append(
                Issue("unsymmetrized", f"Delta_L is symmetric only after shifting by ({unit[1]}, {unit[2]})")
            )

    if check_h and report.ok:
        from .hfunc import link_h, symmetry_failures
        from .errors import HflError

        try:
            h = link_h(link)
        except HflError as exc:
            report.errors.append(Issue("h_function", str(exc)))
            return report
        bad = symmetry_failures(h)
        if bad:
            d1, d2 = bad[0]
            issue = Issue(
                "h_symmetry",
                f"h(-s) = h(s) + s1 + s2 fails at {len(bad)} points, first at ({HalfInt(d1)}, {HalfInt(d2)})",
            )
            # an asymmetric Delta_L already predicts this, so only warn then
            if symmetric_input:
                report.errors.append(issue)
            else:
                report.warnings.append(issue)
    return report


def normalize_sign(link: LinkData) -> LinkData:
    """Flip the sign of Delta_L when that is what the normalization asks for."""
    if link.is_split:
        return link
    i0, j0 = leading_term(link.delta_link)
    a2 = link.series_2[(j0 - link.lk + 1) // 2]
    want = 1 if a2 == 1 else -1
    if link.delta_link.coefficient_doubled(i0, j0) == -want:
        return LinkData.build(link.name, link.lk, -link.delta_link, link.delta_1, link.delta_2)
    return link
