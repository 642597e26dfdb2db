import json
from fractions import Fraction as Q

import pytest
from hypothesis import given

from ehrhart import formats
from ehrhart.corpus import by_name
from ehrhart.engine import ehrhart
from ehrhart.formats import ParseError
from ehrhart.quasipoly import QuasiPolynomial

from .strategies import quasi_polynomials


def test_rationals():
    assert formats.parse_rational("-3/6") == Q(-1, 2)
    assert formats.parse_rational("7") == 7
    for bad in ("1/0", "0.5", "1e3", "", "1//2"):
        with pytest.raises(ParseError):
            formats.parse_rational(bad)
    assert formats.format_rational(Q(4, 2)) == "2"


def test_render_poly():
    assert formats.render_poly([1, Q(3, 2), Q(1, 2)]) == "1/2 t^2 + 3/2 t + 1"
    assert formats.render_poly([0, -1]) == "-t"
    assert formats.render_poly([Q(-1, 8), 0, Q(9, 32)]) == "9/32 t^2 - 1/8"
    assert formats.render_poly([0]) == "0"


def test_parse_poly():
    assert formats.parse_poly("1/2 t^2 + 3/2 t + 1") == [1, Q(3, 2), Q(1, 2)]
    assert formats.parse_poly("t+1") == [1, 1]
    assert formats.parse_poly("-t^3") == [0, 0, 0, -1]
    assert formats.parse_poly("2*t - 3/4") == [Q(-3, 4), 2]
    with pytest.raises(ParseError, match="column 3"):
        formats.parse_poly("t + x")
    with pytest.raises(ParseError, match="zero denominator"):
        formats.parse_poly("1/0 t")


@given(quasi_polynomials())
def test_qp_text_round_trip(f):
    assert formats.parse_qp(formats.render_qp(f)) == f


@given(quasi_polynomials())
def test_qp_dict_round_trip(f):
    assert formats.qp_from_dict(json.loads(json.dumps(formats.qp_to_dict(f)))) == f


def test_parse_qp_variants():
    assert formats.parse_qp("t + 1") == QuasiPolynomial.polynomial([1, 1])
    text = "t = 0 (mod 2): 1/2 t\nt = 1 (mod 2): 0\n"
    assert formats.parse_qp(text) == QuasiPolynomial([[0, Q(1, 2)], [0]])
    with pytest.raises(ParseError, match="one row for each residue"):
        formats.parse_qp("period 3\nt ≡ 0 (mod 3): 1\n")
    with pytest.raises(ParseError, match="line 2"):
        formats.parse_qp("period 2\nt ≡ 0 (mod 2): 1 +\nt ≡ 1 (mod 2): 0")


def test_polytope_text():
    P = formats.parse_polytope_text("# a triangle\ndim 2\n0 0\n1/2, 0  # comment\n0 1/3\n")
    assert P.vertices == ((0, 0), (0, Q(1, 3)), (Q(1, 2), 0))
    assert formats.parse_polytope_text(formats.polytope_to_text(P)) == P
    J = formats.parse_polytope_text('{"ambient_dim": 2, "vertices": [["0", "0"], ["1/2", 0], [0, "1/3"]]}')
    assert J == P


@pytest.mark.parametrize("text,message", [
    ("dim 2\n0 0\n1/0 1\n", "line 3: zero denominator in '1/0'"),
    ("dim 2\n0 0 0\n", "line 2: expected 2 coordinates"),
    ("two\n0 0\n", "line 1: expected 'dim N'"),
    ("dim 2\n", "no vertices"),
    ("dim 1\n0.5\n", "line 2: invalid rational '0.5'"),
    ('{"ambient_dim": 1, "vertices": [["1/0"]]}', "vertex 1: zero denominator"),
    ('{"ambient_dim": 1, ', "line 1: invalid JSON"),
])
def test_polytope_errors(text, message):
    with pytest.raises(ParseError) as exc:
        formats.parse_polytope_text(text)
    assert message in str(exc.value)


def test_result_round_trip():
    res = ehrhart(by_name("triangle-quarter"))
    data = json.loads(formats.dumps_result(res))
    assert data["format_version"] == 1
    assert set(data) == {"format_version", "dim", "ambient_dim", "i_indices", "volume", "ehrhart", "interior"}
    assert formats.result_from_dict(data) == res
