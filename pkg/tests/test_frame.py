"""Frame assembly, the defined/open split, and complementation."""
import pytest
from hypothesis import given
from hypothesis import strategies as st

from jfy.errors import (
    ComplementTooLargeError,
    EmptyBodyError,
    LogicalHeadError,
    NotDefinedError,
    NotOpenError,
    UnknownFactError,
)
from jfy.facts import FALSE, TRUE, Literal, SymbolTable, negate
from jfy.frame import (
    Rule,
    build_frame,
    complement,
    resolve_fact,
    resolve_open_assignment,
    rule_text,
)


def simple_frame(rule_specs):
    """rule_specs: list of (head_name, [body names]); '~x' for negations."""
    table = SymbolTable()

    def lit(name):
        if name in ("t", "f"):
            return TRUE if name == "t" else FALSE
        if name.startswith("~"):
            return table.literal(name[1:], negative=True)
        return table.literal(name)

    rules = [
        Rule(lit(head), frozenset(lit(b) for b in body))
        for head, body in rule_specs
    ]
    return build_frame(rules, table)


def test_empty_body_rejected():
    table = SymbolTable()
    with pytest.raises(EmptyBodyError):
        build_frame([Rule(table.literal("a"), frozenset())], table)


def test_logical_head_rejected():
    table = SymbolTable()
    with pytest.raises(LogicalHeadError):
        build_frame([Rule(TRUE, frozenset({table.literal("a")}))], table)


def test_duplicate_rules_collapse():
    frame = simple_frame([("a", ["b"]), ("a", ["b"])])
    assert len(frame.rules) == 1


def test_defined_versus_open_split():
    frame = simple_frame([("a", ["b", "~c"])])
    a, b, c = (frame.symbols.literal(n) for n in "abc")
    assert frame.defined == frozenset({a})
    # everything else in the vocabulary, both polarities, is open
    assert frame.opens == frozenset({negate(a), b, negate(b), c, negate(c)})


def test_rules_for_keeps_declaration_order():
    frame = simple_frame([("a", ["b"]), ("a", ["c"]), ("d", ["a"])])
    a = frame.symbols.literal("a")
    bodies = [r.sorted_body() for r in frame.rules_for(a)]
    assert bodies == [
        (frame.symbols.literal("b"),),
        (frame.symbols.literal("c"),),
    ]


def test_complement_worked_example():
    # a <- {b,c} and a <- {d} dualize to ~a <- {~b,~d} and ~a <- {~c,~d}
    frame = complement(simple_frame([("a", ["b", "c"]), ("a", ["d"])]))
    na = frame.symbols.literal("a", negative=True)
    duals = {r.body for r in frame.rules_for(na)}
    lit = frame.symbols.literal
    assert duals == {
        frozenset({lit("b", True), lit("d", True)}),
        frozenset({lit("c", True), lit("d", True)}),
    }


def test_complement_dual_bodies_hit_every_original_body():
    frame = simple_frame(
        [("a", ["b", "c"]), ("a", ["d", "~e"]), ("a", ["c", "d", "~b"])]
    )
    completed = complement(frame)
    a = frame.symbols.literal("a")
    originals = [r.body for r in frame.rules_for(a)]
    for dual in completed.rules_for(negate(a)):
        for body in originals:
            negated = {negate(m) for m in body}
            assert dual.body & negated, "dual body misses an original rule"


def test_complement_is_idempotent():
    once = complement(simple_frame([("a", ["b", "c"]), ("a", ["d"])]))
    twice = complement(once)
    assert set(twice.rules) == set(once.rules)
    assert twice.defined == once.defined


def test_complement_cap_raises_before_materializing():
    frame = simple_frame([("a", ["b", "c"]), ("a", ["d", "e"]), ("a", ["f", "g"])])
    with pytest.raises(ComplementTooLargeError) as exc:
        complement(frame, max_bodies=4)
    assert exc.value.required > 4


def test_complement_undefined_head():
    frame = simple_frame([("a", ["b"])])
    with pytest.raises(NotDefinedError):
        complement(frame, heads=[frame.symbols.literal("b")])


@given(
    st.lists(
        st.tuples(
            st.sampled_from("abc"),
            st.lists(st.sampled_from(["b", "c", "d", "~d", "e"]), min_size=1,
                     max_size=3, unique=True),
        ),
        min_size=1,
        max_size=4,
    )
)
def test_complement_bodies_are_exactly_the_hitting_selections(specs):
    frame = simple_frame(specs)
    completed = complement(frame)
    for head in frame.defined:
        if head.negative:
            continue
        originals = [r.sorted_body() for r in frame.rules_for(head)]
        expected = set()
        from itertools import product

        for picks in product(*originals):
            expected.add(frozenset(negate(p) for p in picks))
        got = {r.body for r in completed.rules_for(negate(head))}
        # rules the frame already had for ~head stay; none exist here
        assert got == expected


def test_resolve_fact_polarity_and_unknown():
    frame = simple_frame([("a", ["b"])])
    assert resolve_fact(frame, "a") == frame.symbols.literal("a")
    assert resolve_fact(frame, "~b") == frame.symbols.literal("b", negative=True)
    with pytest.raises(UnknownFactError):
        resolve_fact(frame, "zzz")


def test_resolve_open_assignment_checks_openness():
    frame = complement(simple_frame([("a", ["b"])]))
    good = resolve_open_assignment(frame, {"b": True})
    assert good == {frame.symbols.literal("b"): True}
    with pytest.raises(NotOpenError):
        resolve_open_assignment(frame, {"a": True})  # defined, not open
    with pytest.raises(UnknownFactError):
        resolve_open_assignment(frame, {"nope": False})


def test_rule_text_renders_sorted_body():
    frame = simple_frame([("a", ["c", "b"])])
    (rule,) = frame.rules
    assert rule_text(rule, frame.symbols) == "a <- {b, c}"


def test_describe_lists_rules_and_opens(path_frame):
    text = path_frame.describe()
    assert "path(a,c) <- {path(a,b), path(b,c)}" in text
    assert text.splitlines()[-1].startswith("opens: ")
