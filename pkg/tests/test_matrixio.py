import json
import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ghsimplex import (
    ALPHA_INF,
    Characteristics,
    FiniteMetricSpace,
    ParseError,
    characteristics_to_json,
    load_input,
    load_space,
    parse_characteristics_json,
    parse_matrix_csv,
    parse_matrix_json,
    save_space,
    space_to_csv,
    space_to_json,
)


class TestCsv:
    def test_with_header(self):
        labels, rows = parse_matrix_csv("a,b\n0,1\n1,0\n")
        assert labels == ["a", "b"]
        assert rows == [[0.0, 1.0], [1.0, 0.0]]

    def test_without_header(self):
        labels, rows = parse_matrix_csv("0,1\n1,0\n")
        assert labels is None
        assert rows == [[0.0, 1.0], [1.0, 0.0]]

    def test_rejects_non_finite(self):
        with pytest.raises(ParseError):
            parse_matrix_csv("0,inf\ninf,0\n")
        with pytest.raises(ParseError):
            parse_matrix_csv("0,nan\nnan,0\n")

    def test_rejects_garbage_and_empty(self):
        with pytest.raises(ParseError):
            parse_matrix_csv("")
        with pytest.raises(ParseError):
            parse_matrix_csv("a,b\n")
        with pytest.raises(ParseError):
            parse_matrix_csv("0,x\nx,0\n")

    def test_rejects_ragged(self):
        with pytest.raises(ParseError):
            parse_matrix_csv("0,1\n1\n")


class TestJson:
    def test_round_trip(self, e1):
        text = space_to_json(e1)
        labels, rows = parse_matrix_json(text)
        assert labels == ["a", "b", "c"]
        assert rows == [[0, 1, 2], [1, 0, 2], [2, 2, 0]]

    def test_rejects_non_finite_tokens(self):
        with pytest.raises(ParseError):
            parse_matrix_json('{"dist": [[0, Infinity], [Infinity, 0]]}')
        with pytest.raises(ParseError):
            parse_matrix_json('{"dist": [[0, NaN], [NaN, 0]]}')

    def test_rejects_missing_dist(self):
        with pytest.raises(ParseError):
            parse_matrix_json('{"labels": ["a"]}')

    def test_rejects_bool_entries(self):
        with pytest.raises(ParseError):
            parse_matrix_json('{"dist": [[0, true], [true, 0]]}')

    def test_rejects_invalid_json(self):
        with pytest.raises(ParseError):
            parse_matrix_json("{nope")


class TestFiles:
    def test_csv_round_trip_exact(self, e1, tmp_path):
        path = tmp_path / "space.csv"
        save_space(e1, path)
        back = load_space(path)
        assert back.labels == e1.labels
        assert (back.dist == e1.dist).all()

    def test_json_round_trip_exact(self, e1, tmp_path):
        path = tmp_path / "space.json"
        save_space(e1, path)
        back = load_space(path)
        assert back.labels == e1.labels
        assert (back.dist == e1.dist).all()

    def test_load_space_fixture(self, fixtures_dir):
        space = load_space(fixtures_dir / "e1.csv")
        assert space.labels == ("a", "b", "c")
        assert space.diam == 2.0

    def test_unknown_extension_falls_back_to_csv(self, e1, tmp_path):
        path = tmp_path / "space.txt"
        save_space(e1, path)
        assert path.read_text() == space_to_csv(e1)
        assert (load_space(path).dist == e1.dist).all()


class TestCharacteristicsIo:
    def test_round_trip(self):
        chars = Characteristics(2, 2.0, 1.0, 2.0, 1.0, 2.0, eps=1.0)
        back = parse_characteristics_json(characteristics_to_json(chars))
        assert back == chars

    def test_infinite_alpha_round_trip(self):
        chars = Characteristics(1, 2.0, ALPHA_INF, ALPHA_INF, 2.0, 2.0)
        text = characteristics_to_json(chars)
        assert '"inf"' in text
        back = parse_characteristics_json(text)
        assert back.alpha_minus == ALPHA_INF
        assert back.alpha_plus == ALPHA_INF
        assert back.eps is None

    def test_missing_key(self):
        with pytest.raises(ParseError):
            parse_characteristics_json('{"m": 2, "diam": 2.0}')

    def test_bad_m(self):
        base = {
            "diam": 2.0,
            "alpha_minus": 1.0,
            "alpha_plus": 2.0,
            "d_minus": 1.0,
            "d_plus": 2.0,
        }
        with pytest.raises(ParseError):
            parse_characteristics_json(json.dumps({**base, "m": 0}))
        with pytest.raises(ParseError):
            parse_characteristics_json(json.dumps({**base, "m": 2.5}))


class TestLoadInput:
    def test_dispatch_space_csv(self, fixtures_dir):
        assert isinstance(load_input(fixtures_dir / "e1.csv"), FiniteMetricSpace)

    def test_dispatch_space_json(self, e1, tmp_path):
        path = tmp_path / "space.json"
        save_space(e1, path)
        assert isinstance(load_input(path), FiniteMetricSpace)

    def test_dispatch_characteristics(self, tmp_path):
        path = tmp_path / "chars.json"
        chars = Characteristics(2, 2.0, 0.0, 0.0, 2.0, 2.0, eps=0.0)
        path.write_text(characteristics_to_json(chars))
        assert load_input(path) == chars

    def test_triangle_flag_is_forwarded(self, tmp_path):
        path = tmp_path / "semi.csv"
        path.write_text("0,1,9\n1,0,1\n9,1,0\n")
        from ghsimplex import TriangleViolationError

        with pytest.raises(TriangleViolationError):
            load_input(path)
        space = load_input(path, strict_triangle=False)
        assert space.diam == 9.0


@given(
    st.lists(
        st.floats(1e-3, 1e6, allow_nan=False, allow_infinity=False),
        min_size=3,
        max_size=3,
    ).filter(
        lambda s: s[0] <= s[1] + s[2] and s[1] <= s[0] + s[2] and s[2] <= s[0] + s[1]
    )
)
def test_serialization_preserves_every_bit(sides):
    a, b, c = sides
    space = FiniteMetricSpace([[0, a, b], [a, 0, c], [b, c, 0]])
    for text, parse in (
        (space_to_csv(space), parse_matrix_csv),
        (space_to_json(space), parse_matrix_json),
    ):
        _, rows = parse(text)
        back = FiniteMetricSpace(rows)
        assert (back.dist == space.dist).all()
