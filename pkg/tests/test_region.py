import json

import pytest
from hypothesis import given

from domtile.errors import BadAxisParity, BadCharacter, Disconnected, EmptyRegion
from domtile.families import aztec, rectangle
from domtile.region import (
    Axis,
    Cell,
    Region,
    candidate_axes,
    find_symmetry_axes,
    is_hole_free,
    load_region,
    parse_region,
    reflect,
    region_from_json,
    region_to_json,
    remove_cells,
    render_region,
)

from conftest import regions


def test_parse_square():
    r = parse_region("##\n##")
    assert len(r) == 4
    assert r == rectangle(2, 2)


def test_parse_rectangle_matches_generator():
    assert parse_region("###\n###") == rectangle(2, 3)


def test_parse_errors():
    with pytest.raises(Disconnected):
        parse_region("#.#")
    with pytest.raises(EmptyRegion):
        parse_region("...\n..")
    with pytest.raises(BadCharacter):
        parse_region("#x")


def test_first_line_is_top_row():
    r = parse_region("#.\n##")
    assert r.cells == {Cell(0, 0), Cell(1, 0), Cell(0, 1)}


def test_normalization():
    assert Region(frozenset({(5, 7), (6, 7)})).cells == {Cell(0, 0), Cell(1, 0)}


def test_single_cell_is_a_region():
    assert len(parse_region("#")) == 1


def test_json_round_trip():
    r = aztec(3)
    text = region_to_json(r)
    assert json.loads(text)["cells"][0] == [0, 2]
    assert region_from_json(text) == r
    assert load_region(text) == r
    assert load_region(render_region(r)) == r


@given(regions(max_cells=64))
def test_render_parse_round_trip(r):
    assert parse_region(render_region(r)) == r


def test_reflect_examples():
    rect = rectangle(2, 3)
    assert reflect(rect, Axis("vertical", 3)) == rect
    l_tromino = parse_region("#.\n##")
    assert reflect(l_tromino, Axis("diag-up", 0)) == l_tromino
    domino = rectangle(1, 2)
    assert reflect(domino, Axis("vertical", 0)) == domino


def test_diagonal_axis_parity():
    with pytest.raises(BadAxisParity):
        Axis("diag-up", 1)
    Axis("vertical", 1)


@given(regions(max_cells=30))
def test_reflection_is_an_involution(r):
    for a in candidate_axes(r):
        assert reflect(reflect(r, a), a) == r


@given(regions(max_cells=30))
def test_symmetry_axes_exact(r):
    found = set(find_symmetry_axes(r))
    span = 2 * (r.width + r.height) + 2
    for kind in ("vertical", "horizontal", "diag-up", "diag-down"):
        for offset in range(-span, span + 1):
            if kind.startswith("diag") and offset % 2:
                continue
            a = Axis(kind, offset)
            mirrored = {a.reflect_cell(c) for c in r.cells} == r.cells
            assert mirrored == (a in found)


def test_symmetry_axes_examples():
    assert len(find_symmetry_axes(rectangle(2, 2))) == 4
    assert {a.kind for a in find_symmetry_axes(rectangle(2, 3))} == {"vertical", "horizontal"}
    assert len(find_symmetry_axes(aztec(2))) == 4


def test_side_of_axis():
    a = Axis("vertical", 4)
    assert a.side((1, 0)) == -1
    assert a.side((2, 0)) == 1
    assert Axis("vertical", 5).side((2, 0)) == 0
    d = Axis("diag-up", 0)
    # the diagonal through a cell's corners only touches it
    assert d.side((1, 0)) == 1
    assert d.side((0, 1)) == -1
    assert d.side((0, 0)) == 0


def test_remove_cells():
    sq = rectangle(2, 2)
    assert remove_cells(sq, [(0, 0), (0, 1)]) == [rectangle(2, 1)]
    parts = remove_cells(rectangle(3, 3), [(0, 1), (1, 1), (2, 1)])
    assert parts == [rectangle(1, 3), rectangle(1, 3)]
    assert remove_cells(rectangle(2, 3), []) == [rectangle(2, 3)]
    assert remove_cells(sq, list(sq)) == []


def test_hole_free():
    ring = parse_region("###\n#.#\n###")
    assert not is_hole_free(ring.cells)
    assert is_hole_free(rectangle(3, 4).cells)
