"""Rule-language frontend: tokenizing, parsing, grounding, lowering."""
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jfy.errors import (
    EmptyDomainError,
    NotGroundError,
    OpenAsHeadError,
    ParseError,
)
from jfy.facts import FALSE, TRUE, negate
from jfy.program import (
    BodyLit,
    PredAtom,
    Program,
    ProgramRule,
    constants_of,
    ground,
    parse,
    parse_ground_atom,
    pretty,
    to_frame,
)


def test_parse_fact_rule_and_open():
    program = parse("#open edge/2.\np(a).\nq(X) :- p(X), not edge(X, a).\n")
    assert program.opens == frozenset({("edge", 2)})
    fact, rule = program.rules
    assert fact.head == PredAtom("p", ("a",))
    assert fact.body == (BodyLit(True),)  # bare fact sugars to <- true
    assert rule.body == (
        BodyLit(PredAtom("p", ("X",))),
        BodyLit(PredAtom("edge", ("X", "a")), negated=True),
    )


def test_parse_truth_keywords_and_comments():
    program = parse("p :- true. % trailing comment\nq :- not false, p.\n")
    assert program.rules[0].body == (BodyLit(True),)
    assert program.rules[1].body == (BodyLit(False, negated=True), BodyLit(PredAtom("p")))


def test_parse_error_positions_are_one_based():
    with pytest.raises(ParseError) as exc:
        parse("p :- q")  # missing final dot
    (line, col, msg) = exc.value.errors[0]
    assert line == 1 and col == 7
    assert "'.'" in msg


def test_parser_recovers_and_reports_every_error():
    src = "p :- .\nq :- r.\n s :- ? .\n"
    with pytest.raises(ParseError) as exc:
        parse(src)
    lines = sorted(line for line, _, _ in exc.value.errors)
    assert lines[0] == 1 and lines[-1] == 3
    assert len(exc.value.errors) >= 2  # both bad rules, good one skipped over


def test_variables_start_upper_or_underscore():
    program = parse("p(X) :- q(_y, Abc, lower).\n")
    (rule,) = program.rules
    body_atom = rule.body[0].item
    assert body_atom.args == ("_y", "Abc", "lower")
    grounded = ground(Program(program.rules, frozenset()), domain=["c1"])
    # X, _y, Abc bind; `lower` is a constant
    assert all("lower" in r.body[0].item.args for r in grounded.rules)


def test_parse_ground_atom():
    atom = parse_ground_atom("edge(a,b)")
    assert atom == PredAtom("edge", ("a", "b"))
    with pytest.raises(ParseError):
        parse_ground_atom("edge(X,b)")  # not ground
    with pytest.raises(ParseError):
        parse_ground_atom("edge(a,b) extra")


def test_pretty_round_trip_fixed():
    src = "#open edge/2.\np.\nq :- not p, edge(a,b).\n"
    program = parse(src)
    assert parse(pretty(program)) == program
    assert pretty(program).startswith("#open edge/2.")


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=0, max_value=2**31 - 1))
def test_pretty_round_trips_random_programs(seed):
    import random

    from jfy.fuzz import random_program

    program = random_program(random.Random(seed))
    assert parse(pretty(program)) == program


def test_constants_of():
    program = parse("p(a, X) :- q(b), r(X).\n")
    assert constants_of(program) == ("a", "b")


def test_ground_counts():
    # 2-var rule over 3 constants -> 9 instances; 3-var rule -> 27
    program = parse(
        "path(X,Y) :- edge(X,Y).\npath(X,Y) :- path(X,Z), path(Z,Y).\n"
    )
    grounded = ground(program, domain=["a", "b", "c"])
    by_shape = {}
    for rule in grounded.rules:
        by_shape.setdefault(len(rule.body), []).append(rule)
    assert len(by_shape[1]) == 9
    assert len(by_shape[2]) == 27


def test_ground_dedups_and_defaults_domain():
    program = parse("p(X) :- q(X).\nq(a).\nq(b).\n")
    grounded = ground(program)  # domain from constants {a, b}
    texts = pretty(grounded).splitlines()
    assert "p(a) :- q(a)." in texts and "p(b) :- q(b)." in texts
    assert len(texts) == len(set(texts))


def test_ground_requires_constants_for_variables():
    with pytest.raises(EmptyDomainError):
        ground(parse("p(X) :- q(X).\n"))


def test_ground_no_variables_no_domain_needed():
    program = parse("p :- q.\n")
    assert ground(program) == program


def test_to_frame_rejects_variables_and_open_heads():
    with pytest.raises(NotGroundError):
        to_frame(parse("p(X) :- q(X).\n"))
    with pytest.raises(OpenAsHeadError):
        to_frame(parse("#open p/0.\np :- q.\n"))


def test_to_frame_lowering_fact_and_ruleless_atom():
    frame = to_frame(parse("q.\np :- r.\n"))
    q = frame.symbols.literal("q")
    r = frame.symbols.literal("r")
    (q_rule,) = frame.rules_for(q)
    assert q_rule.body == frozenset({TRUE})
    # r heads no rule and is not declared open: it becomes false
    (r_rule,) = frame.rules_for(r)
    assert r_rule.body == frozenset({FALSE})
    # complementation gave the negations rules too
    assert frame.rules_for(negate(q)) and frame.rules_for(negate(r))
    assert not frame.opens


def test_to_frame_keeps_declared_opens_open():
    frame = to_frame(parse("#open a/0.\nq :- a, not b.\n"))
    a = frame.symbols.literal("a")
    b = frame.symbols.literal("b")
    assert a in frame.opens and negate(a) in frame.opens
    assert b in frame.defined  # undeclared -> defaulted false, then dualized
    assert frame.symbols.literal("q") in frame.defined


def test_to_frame_negation_lowers_to_negative_literal():
    frame = to_frame(parse("#open a/0.\nq :- not a.\n"))
    q = frame.symbols.literal("q")
    (rule,) = frame.rules_for(q)
    assert rule.body == frozenset({frame.symbols.literal("a", negative=True)})
