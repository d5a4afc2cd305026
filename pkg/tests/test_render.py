import pytest

from hivebr.errors import UnknownKind
from hivebr.gthive import GTPattern, Hive
from hivebr.render import object_from_json, render
from hivebr.tableaux import make_skew_tableau, straight


def test_tableau_ascii(lrex):
    assert render(lrex) == ". . . 1 1\n. 1 2\n3"
    assert render(straight([[1, 10], [2]])) == " 1 10\n 2"


def test_tableau_latex(lrex):
    assert render(lrex, "latex") == "\\Skew(0:0,0,0,1,1|0:0,1,2|0:3)"
    assert render(make_skew_tableau([], [], []), "latex") == ""


def test_triangles(final_hive_rows):
    h = Hive(6, tuple(map(tuple, final_hive_rows)))
    lines = render(h).splitlines()
    assert len(lines) == 7
    assert lines[0].strip() == "0"
    assert lines[-1].split() == ["4", "8", "12", "14", "15", "15", "15"]
    # apex is centred above the bottom row
    assert abs(lines[0].index("0") - (len(lines[-1]) - 1) / 2) <= 2
    P = GTPattern(((1,), (3, 1)))
    assert render(P).splitlines()[1].split() == ["3", "1"]
    tex = render(P, "latex")
    assert tex.count("\\node") == 3


def test_json_roundtrip_all_kinds(lrex, final_hive_rows):
    h = Hive(6, tuple(map(tuple, final_hive_rows)))
    P = GTPattern(((1,), (3, 1), (4, 3, 0)))
    for obj in (lrex, h, P):
        assert object_from_json(obj.to_json()) == obj


def test_errors():
    with pytest.raises(UnknownKind):
        object_from_json({"a": 1})
    with pytest.raises(UnknownKind):
        object_from_json([1, 2])
    with pytest.raises(UnknownKind):
        render(42)
    with pytest.raises(ValueError):
        render(straight([[1]]), "svg")
