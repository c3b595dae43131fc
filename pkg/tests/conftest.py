import pytest

from jfy.program import ground, parse, to_frame

# Transitive closure over an open edge relation; grounded over {a,b,c}
# this is the running reachability example.
PATH_SRC = """\
#open edge/2.
path(X,Y) :- edge(X,Y).
path(X,Y) :- path(X,Z), path(Z,Y).
"""

FULL_EDGES = {
    f"edge({x},{y})": (x, y) in {("a", "b"), ("b", "c")}
    for x in "abc"
    for y in "abc"
}


def make_path_frame():
    return to_frame(ground(parse(PATH_SRC), domain=["a", "b", "c"]))


@pytest.fixture()
def path_frame():
    return make_path_frame()


def frame_of(src: str, domain=None):
    return to_frame(ground(parse(src), domain=domain))


def rule_with_body(frame, head, body_names):
    """The frame rule for `head` whose body is exactly `body_names`."""
    from jfy.frame import resolve_fact

    want = frozenset(resolve_fact(frame, n) for n in body_names)
    for rule in frame.rules_for(resolve_fact(frame, head)):
        if rule.body == want:
            return rule
    raise LookupError(f"no rule {head} <- {sorted(body_names)}")


def example_3_justification(frame):
    """path(a,c) <- path(a,b), path(b,c); each hop <- its edge."""
    from jfy.frame import resolve_fact
    from jfy.justification import Justification

    return Justification(
        {
            resolve_fact(frame, "path(a,c)"): rule_with_body(
                frame, "path(a,c)", ["path(a,b)", "path(b,c)"]
            ),
            resolve_fact(frame, "path(a,b)"): rule_with_body(
                frame, "path(a,b)", ["edge(a,b)"]
            ),
            resolve_fact(frame, "path(b,c)"): rule_with_body(
                frame, "path(b,c)", ["edge(b,c)"]
            ),
        }
    )
