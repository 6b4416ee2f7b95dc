"""ASCII and SVG diagram rendering."""

import pytest

from shipark.model import GroundSet, ParkingFn, parking_from_text, validate_pair, word_from_text
from shipark.render import (
    render,
    render_pair_ascii,
    render_pair_svg,
    render_parking_ascii,
    render_parking_svg,
)


def test_pair_ascii_small_figure():
    p = validate_pair(word_from_text("321"), [(1, 2), (2, 3)])
    assert render_pair_ascii(p) == "/-\\\n  /-\\\n3 2 1\n"


def test_pair_ascii_worked_example():
    p = validate_pair(word_from_text("843967125"), [(1, 6), (3, 8), (6, 9)])
    assert render_pair_ascii(p) == (
        "/---------\\\n"
        "    /---------\\\n"
        "          /-----\\\n"
        "8 4 3 9 6 7 1 2 5\n"
    )


def test_pair_ascii_no_arcs():
    p = validate_pair(word_from_text("123"), [])
    assert render_pair_ascii(p) == "1 2 3\n"


def test_pair_ascii_multidigit_letters():
    p = validate_pair(word_from_text("12 11 9", domain=(9, 11, 12)), [(1, 3)])
    assert render_pair_ascii(p) == "/------\\\n12 11 9\n"


def test_parking_ascii_stacked_columns():
    f = parking_from_text("113414", domain=(3, 4, 6, 7, 8, 9))
    assert render_parking_ascii(f) == "8\n4     9\n3   6 7\n"


def test_parking_ascii_singleton():
    f = ParkingFn(GroundSet.full(1), (1,))
    assert render_parking_ascii(f) == "1\n"


def test_svg_outputs_are_deterministic_and_wellformed():
    p = validate_pair(word_from_text("843967125"), [(1, 6), (3, 8), (6, 9)])
    f = parking_from_text("113414", domain=(3, 4, 6, 7, 8, 9))
    for doc in (render_pair_svg(p), render_parking_svg(f)):
        assert doc.startswith("<svg ")
        assert doc.rstrip().endswith("</svg>")
    assert render_pair_svg(p) == render_pair_svg(p)
    assert render_pair_svg(p).count("<path") == 3
    assert render_parking_svg(f).count("<text") == 6


def test_render_dispatch():
    p = validate_pair(word_from_text("321"), [(1, 3)])
    f = parking_from_text("111")
    assert render(p, "ascii") == render_pair_ascii(p)
    assert render(f, "svg") == render_parking_svg(f)
    with pytest.raises(ValueError):
        render(p, "png")
    with pytest.raises(TypeError):
        render("321", "ascii")
