from __future__ import annotations

import json
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hflcalc import catalog
from hflcalc.errors import ParityError, SchemaError
from hflcalc.laurent import Laurent2
from hflcalc.linkdata import (
    LinkData,
    leading_term,
    normalize_sign,
    parse_link,
    render,
    render_json,
    validate,
)
from strategies import accepted_links, torus_link


def test_parse_l7n1(l7n1):
    assert l7n1.lk == 2
    assert len(l7n1.delta_link) == 2
    assert l7n1.delta_link.coefficient("1/2", "3/2") == 1
    assert [l7n1.series_2[k] for k in (-1, 0, 1, 2)] == [1, 0, 1, 0]


def test_parse_accepts_json_text():
    text = json.dumps(catalog.document("L7n1"))
    assert parse_link(text) == catalog.link("L7n1")


@pytest.mark.parametrize(
    "mutate",
    [
        lambda d: d.pop("linking_number"),
        lambda d: d.__setitem__("linking_number", "2"),
        lambda d: d.__setitem__("alexander_link", {}),
        lambda d: d["alexander_link"][0].pop("c"),
        lambda d: d["alexander_link"][0].__setitem__("e1", 0.5),
        lambda d: d["alexander_link"][0].__setitem__("e1", "1/3"),
        lambda d: d["alexander_component_1"].append({"e": 1, "c": True}),
        lambda d: d.__setitem__("alexander_component_2", [{"e": 0, "c": 2}]),
    ],
)
def test_schema_errors(mutate):
    doc = catalog.document("L7n1")
    mutate(doc)
    with pytest.raises(SchemaError):
        parse_link(doc)


def test_invalid_json():
    with pytest.raises(SchemaError):
        parse_link("{not json")


def test_parity_error():
    doc = catalog.document("L7n1")
    doc["linking_number"] = 1
    with pytest.raises(ParityError):
        parse_link(doc)


@pytest.mark.parametrize("name", sorted(catalog.LINKS))
def test_catalog_validates(name):
    report = validate(catalog.link(name))
    assert report.ok, report.as_dict()
    assert bool(report.warnings) == (name in catalog.WARNING_EXPECTED)


def test_b238_warning_codes():
    codes = {w.code for w in validate(catalog.link("b(-2,3,8)")).warnings}
    assert {"asymmetric", "alexander_reduction_2", "h_symmetry"} <= codes


def test_normalization_sign(l7n1):
    flipped = LinkData.build("x", 2, -l7n1.delta_link, l7n1.delta_1, l7n1.delta_2)
    report = validate(flipped)
    assert [e.code for e in report.errors] == ["normalization"]
    assert normalize_sign(flipped).delta_link == l7n1.delta_link


def test_leading_term(b20):
    assert leading_term(b20.delta_link) == (3, 3)


def test_split_with_linking_number(trefoils):
    bad = LinkData.build("x", 2, Laurent2(), trefoils.delta_1, trefoils.delta_2)
    assert [e.code for e in validate(bad).errors] == ["split_linking"]


def test_reduction_error(l7n1):
    wrong = LinkData.build("x", 2, l7n1.delta_link, l7n1.delta_2, l7n1.delta_1)
    codes = [e.code for e in validate(wrong).errors]
    assert "alexander_reduction" in codes


def test_h_function_error(l7n1):
    p = Laurent2.from_terms([("1/2", "3/2", 1), ("-1/2", "-3/2", 1), ("5/2", "5/2", 1), ("-5/2", "-5/2", 1)])
    bad = LinkData.build("x", 2, p, l7n1.delta_1, l7n1.delta_2)
    assert not validate(bad).ok


def test_torus_links_valid():
    for n in range(1, 7):
        assert validate(torus_link(n)).ok


@pytest.mark.parametrize("name", sorted(catalog.LINKS))
def test_render_round_trip_catalog(name):
    link = catalog.link(name)
    assert parse_link(render(link)) == link
    assert parse_link(render_json(link)) == link


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10_000))
def test_render_round_trip_random(seed):
    link = accepted_links(3, seed=seed)[seed % 3]
    again = parse_link(render_json(link))
    assert again == link
    assert render_json(again) == render_json(link)


def test_render_is_deterministic():
    rng = random.Random(5)
    doc = catalog.document("b(20,-3)")
    rng.shuffle(doc["alexander_link"])
    assert render_json(parse_link(doc)) == render_json(catalog.link("b(20,-3)"))
