import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hmknf import ParseError, parse_kb, serialize_kb
from hmknf.generators import random_kb


def test_rule():
    kb = parse_kb("a ; b :- c, not d.").kb
    (r,) = kb.rules
    assert kb.names(r.head) == ["a", "b"]
    assert kb.names(r.body_pos) == ["c"]
    assert kb.names(r.body_neg) == ["d"]


def test_clause_and_fact():
    doc = parse_kb("% facts\nx.\n#clause a | -b.\n")
    kb = doc.kb
    (c,) = kb.ontology.clauses
    assert {(kb.name_of(l.atom), l.positive) for l in c.literals} == {("a", True), ("b", False)}
    assert doc.rule_locations == ((2, 1),)
    assert doc.clause_locations == ((3, 1),)
    assert kb.ka == kb.ids(["x"])


def test_not_as_an_atom_name_is_rejected():
    with pytest.raises(ParseError):
        parse_kb("a :- not.")


@pytest.mark.parametrize(
    "text, line, col",
    [
        (":- a.", 1, 1),
        ("a :- B.", 1, 6),
        ("a.\n#clause a | -a.", 2, 14),
        ("a :- b\nc.", 1, 7),
        ("a", 1, 2),
        ("a :- b, .", 1, 9),
        ("a ? b.", 1, 3),
        ("#rule a.", 1, 1),
    ],
)
def test_errors_carry_positions(text, line, col):
    with pytest.raises(ParseError) as info:
        parse_kb(text)
    assert (info.value.line, info.value.column) == (line, col)


def test_fixture_roundtrip(ex):
    for name in ("example1", "example2", "example3", "example4", "example5", "example6", "example6_split"):
        kb = ex(name)
        assert parse_kb(serialize_kb(kb)).kb.canonical() == kb.canonical()


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 2**32))
def test_roundtrip_random(seed):
    kb = random_kb(random.Random(seed))
    once = parse_kb(serialize_kb(kb)).kb
    assert once.canonical() == kb.canonical()
    assert serialize_kb(once) == serialize_kb(parse_kb(serialize_kb(once)).kb)
