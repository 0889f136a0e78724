import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lensrack.diagram import (
    ArcOutOfRange,
    ComponentOutOfRange,
    Crossing,
    DiagramSyntaxError,
    DiagramValidationError,
    LensDiagram,
    Strand,
    add_positive_kink,
    apply_omega2,
    diagram_from_events,
    framing_representatives,
    mirror_diagram,
    parse_diagram,
    serialize_diagram,
    writhe_vector,
)
from lensrack.fixtures import diagram_names, load_diagram

UNKNOT3 = "p 3\narcs 1\ncomponent 1: 1\n"
FIBER2 = "p 2\narcs 1\ncomponent 1: 1\nstrand in=1 out=1 eps=+1\n"
TREFOIL = """p 1
arcs 3
component 1: 1 3 2
crossing + over=2 in=1 out=3
crossing + over=3 in=2 out=1
crossing + over=1 in=3 out=2
"""


def test_affine_unknot():
    D = parse_diagram(UNKNOT3)
    assert (D.p, D.d, D.m, D.n) == (3, 0, 1, 1)
    assert D.is_affine
    assert writhe_vector(D) == (0,)


def test_fiber_unknot():
    D = parse_diagram(FIBER2)
    assert (D.d, D.m) == (1, 0)
    assert D.strands == (Strand(1, 1, 1),)


def test_two_arc_fiber_unknot_is_rejected():
    # arc 2 would have no terminator
    with pytest.raises(DiagramValidationError):
        parse_diagram("p 2\narcs 2\ncomponent 1: 1 2\nstrand in=1 out=2 eps=+1\n")


def test_trefoil():
    D = parse_diagram(TREFOIL)
    assert writhe_vector(D) == (3,)
    assert writhe_vector(mirror_diagram(D)) == (-3,)
    assert D.crossings[0] == Crossing(1, 2, 1, 3)


@pytest.mark.parametrize(
    "text, exc",
    [
        ("p 2\narcs 1\ncomponent 1 1\n", DiagramSyntaxError),
        ("p two\narcs 1\ncomponent 1: 1\n", DiagramSyntaxError),
        ("p 2\narcs 1\ncomponent 1: 1\ncrossing * over=1 in=1 out=1\n", DiagramSyntaxError),
        ("p 2\narcs 1\ncomponent 1: 1\nstrand in=1 out=1\n", DiagramSyntaxError),
        ("p 2\narcs 1\ncomponent 1: 1\nwibble\n", DiagramSyntaxError),
        ("p 2\narcs 2\ncomponent 1: 1\n", DiagramValidationError),
        ("p 0\narcs 1\ncomponent 1: 1\n", DiagramValidationError),
        ("p 1\narcs 2\ncomponent 1: 1 2\ncrossing + over=1 in=1 out=2\n", DiagramValidationError),
        ("p 1\narcs 2\ncomponent 1: 1\ncomponent 2: 2\ncrossing + over=1 in=1 out=2\ncrossing + over=1 in=2 out=1\n",
         DiagramValidationError),
    ],
)
def test_invalid_diagrams(text, exc):
    with pytest.raises(exc):
        parse_diagram(text)


def test_syntax_error_reports_line():
    with pytest.raises(DiagramSyntaxError) as e:
        parse_diagram("p 2\n# fine\nnonsense here\n")
    assert e.value.line == 3


def test_serialize_round_trip_fixtures():
    for name in diagram_names():
        D = load_diagram(name)
        text = serialize_diagram(D)
        assert parse_diagram(text) == D
        assert serialize_diagram(parse_diagram(text)) == text


def test_serialized_unknot_has_headers():
    text = serialize_diagram(parse_diagram(UNKNOT3))
    assert text.startswith("p 3\narcs 1\n")


def test_kink_on_unknot():
    D = parse_diagram(UNKNOT3)
    E = add_positive_kink(D, 0)
    # the closed loop is cut and reclosed through the new crossing
    assert E.arc_count == 1 and E.crossings == (Crossing(1, 1, 1, 1),)
    assert writhe_vector(E) == (1,)
    F = add_positive_kink(E, 0)
    assert writhe_vector(F) == (2,) and F.arc_count == 2


def test_kink_on_trefoil():
    D = parse_diagram(TREFOIL)
    E = add_positive_kink(D, 0)
    assert E.arc_count == 4 and writhe_vector(E) == (4,)
    assert Crossing(1, 1, 1, 4) in E.crossings
    with pytest.raises(ComponentOutOfRange):
        add_positive_kink(D, 1)


def test_omega2():
    D = parse_diagram(UNKNOT3)
    E = apply_omega2(D, 1, 1)
    assert len(E.crossings) == 2 and writhe_vector(E) == (0,)
    assert parse_diagram(serialize_diagram(E)) == E
    with pytest.raises(ArcOutOfRange):
        apply_omega2(D, 1, 5)


def test_framing_representatives():
    D = parse_diagram(TREFOIL)
    assert framing_representatives(D, 1) == [((0,), D)]
    reps = framing_representatives(D, 2)
    assert [w for w, _ in reps] == [(0,), (1,)]
    assert reps[1][1] == D
    assert writhe_vector(reps[0][1]) == (4,)
    hopf = load_diagram("hopf_p2")
    assert writhe_vector(hopf) == (0, 0)
    reps = framing_representatives(hopf, 2)
    assert [w for w, _ in reps] == [(0, 0), (0, 1), (1, 0), (1, 1)]
    assert all(tuple(x % 2 for x in writhe_vector(E)) == w for w, E in reps)


def test_events_builder():
    D = diagram_from_events(2, [["O1", "D1", "U2", "O3", "U1", "O2", "U3"]], {1: 1, 2: 1, 3: 1})
    assert (D.d, D.m, D.arc_count) == (1, 3, 4)
    assert writhe_vector(D) == (3,)


def _diagrams():
    return st.sampled_from(diagram_names()).map(load_diagram)


@st.composite
def rewritten(draw):
    D = draw(_diagrams())
    for _ in range(draw(st.integers(0, 3))):
        if draw(st.booleans()):
            D = add_positive_kink(D, draw(st.integers(0, D.n - 1)))
        else:
            D = apply_omega2(D, draw(st.sampled_from(list(D.arcs))), draw(st.sampled_from(list(D.arcs))))
    return D


@given(rewritten())
@settings(max_examples=80, deadline=None)
def test_rewrites_stay_valid_and_round_trip(D):
    D.validate()
    assert parse_diagram(serialize_diagram(D)) == D


@given(rewritten(), st.data())
@settings(max_examples=80, deadline=None)
def test_writhe_under_rewrites(D, data):
    c = data.draw(st.integers(0, D.n - 1))
    w = list(writhe_vector(D))
    w[c] += 1
    assert writhe_vector(add_positive_kink(D, c)) == tuple(w)
    a = data.draw(st.sampled_from(list(D.arcs)))
    b = data.draw(st.sampled_from(list(D.arcs)))
    assert writhe_vector(apply_omega2(D, a, b)) == writhe_vector(D)


@given(_diagrams(), st.integers(1, 3))
@settings(max_examples=40, deadline=None)
def test_framing_representative_count(D, N):
    reps = framing_representatives(D, N)
    assert len(reps) == N ** D.n
    assert len({w for w, _ in reps}) == len(reps)


def test_lens_diagram_is_immutable():
    D = parse_diagram(UNKNOT3)
    assert isinstance(D, LensDiagram)
    with pytest.raises(AttributeError):
        D.p = 4
