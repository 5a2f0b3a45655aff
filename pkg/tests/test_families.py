import pytest

from domtile.counting import count_tilings, count_tilings_bruteforce
from domtile.errors import RegionError
from domtile.families import FamilySpec, aztec, d_rows, make_D, make_T, rectangle, t_rows
from domtile.region import Region, find_symmetry_axes


def row_lengths(r):
    return [sum(1 for c in r.cells if c.y == y) for y in range(r.height - 1, -1, -1)]


def test_rectangle():
    assert len(rectangle(2, 3)) == 6
    assert rectangle(2, 3) == make_T(2, 3, 1)
    assert len(rectangle(1, 1)) == 1
    assert (rectangle(2, 5).width, rectangle(2, 5).height) == (5, 2)


def test_T_example():
    r = make_T(2, 5, 4)
    assert row_lengths(r) == [5, 7, 9, 11, 11]
    assert len(r) == 43


def test_D_example():
    r = make_D(2, 5, 4)
    assert row_lengths(r) == [5, 7, 9, 11, 11, 9, 7, 5]
    assert len(r) == 64
    assert make_D(2, 2, 1) == rectangle(2, 2)


@pytest.mark.parametrize("i, j, p", [(1, 3, 2), (2, 5, 4), (3, 2, 3), (4, 1, 2)])
def test_row_sums(i, j, p):
    assert len(make_T(i, j, p)) == sum(t_rows(i, j, p))
    assert len(make_D(i, j, p)) == sum(d_rows(i, j, p))


@pytest.mark.parametrize("i, j, p", [(2, 5, 4), (4, 3, 2), (6, 2, 3), (2, 1, 1)])
def test_D_is_two_glued_T(i, j, p):
    top = make_T(i // 2, j, p)
    h = top.height
    bottom = {(c.x, h - 1 - c.y) for c in top.cells}
    glued = {(c.x, c.y + h) for c in top.cells} | bottom
    assert make_D(i, j, p) == Region(frozenset(glued))


@pytest.mark.parametrize("i, j, p", [(2, 5, 4), (3, 4, 2), (1, 1, 3)])
def test_vertical_symmetry(i, j, p):
    for r in (make_T(i, j, p), make_D(i, j, p)):
        assert any(a.kind == "vertical" for a in find_symmetry_axes(r))


def test_aztec():
    assert aztec(1) == rectangle(2, 2)
    assert len(aztec(2)) == 12 and count_tilings(aztec(2)) == 8
    assert len(aztec(4)) == 40 and count_tilings(aztec(4)) == 1024
    for p in range(1, 9):
        assert count_tilings(aztec(p)) == 2 ** (p * (p + 1) // 2)
    assert len(find_symmetry_axes(aztec(3))) == 4


def test_base_cases_by_bruteforce():
    assert count_tilings_bruteforce(make_D(2, 2, 1)) == 2
    assert count_tilings_bruteforce(make_T(2, 3, 1)) == 3
    for p in range(1, 6):
        assert count_tilings_bruteforce(make_T(1, 2, p), limit=80) == 1
        assert count_tilings_bruteforce(make_T(1, 4, p), limit=80) == 1
        assert count_tilings_bruteforce(make_T(1, 1, p), limit=80) == 0
        assert count_tilings_bruteforce(make_D(1, 2, p), limit=80) == 1


def test_family_spec():
    for text in ("T:2,5,4", "D:2,2,3", "rect:4,8", "aztec:5"):
        assert str(FamilySpec.parse(text)) == text
    assert FamilySpec.parse("aztec:5").build() == aztec(5)
    assert FamilySpec.parse("rect:4,8").build() == rectangle(4, 8)
    for bad in ("Q:1,2", "T:1,2", "rect:a,b", "rect:0,3"):
        with pytest.raises(RegionError):
            FamilySpec.parse(bad)
