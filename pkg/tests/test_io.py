import os

import numpy as np
import pytest

from petalgrow.mesh import (
    DanglingIndexError,
    Mesh,
    MeshInputError,
    ObjParseError,
    format_obj,
    load_obj,
    parse_obj,
    save_obj,
)

QUAD = """\
# a unit square as one polygon
v 0 0 0
v 1 0 0
v 1 1 0
v 0 1 0
f 1 2 3 4
"""


def test_polygons_are_fan_triangulated() -> None:
    positions, triangles = parse_obj(QUAD.splitlines())
    assert positions.shape == (4, 3)
    assert triangles == [(0, 1, 2), (0, 2, 3)]


def test_references_with_texture_and_normal() -> None:
    lines = ['v 0 0 0', 'v 1 0 0', 'v 0 1 0', 'vn 0 0 1', 'f 1/1/1 2/2/1 3//1']
    _, triangles = parse_obj(lines)
    assert triangles == [(0, 1, 2)]


def test_negative_indices() -> None:
    lines = ['v 0 0 0', 'v 1 0 0', 'v 0 1 0', 'f -3 -2 -1']
    _, triangles = parse_obj(lines)
    assert triangles == [(0, 1, 2)]


@pytest.mark.parametrize(
    'bad, lineno',
    [
        ('v 0 0', 2),
        ('v 0 zero 0', 2),
        ('f 1 2', 2),
        ('f 0 1 2', 2),
        ('curv 1 2', 2),
    ],
)
def test_malformed_line(bad: str, lineno: int) -> None:
    with pytest.raises(ObjParseError) as excinfo:
        parse_obj(['v 0 0 0', bad])
    assert excinfo.value.lineno == lineno
    assert str(excinfo.value).startswith(f'line {lineno}:')


def test_parse_error_is_input_error() -> None:
    assert issubclass(ObjParseError, MeshInputError)


def test_dangling_reference(tmp_path) -> None:  # type: ignore
    path = tmp_path / 'dangling.obj'
    path.write_text('v 0 0 0\nv 1 0 0\nv 0 1 0\nf 1 2 4\n')
    with pytest.raises(DanglingIndexError):
        load_obj(str(path))


def test_format(unit_square: Mesh) -> None:
    text = format_obj(unit_square)
    lines = text.splitlines()
    assert lines[0] == '# 4 vertices, 2 faces'
    assert lines[1] == 'v 0 0 0'
    assert lines[-2:] == ['f 1 2 3', 'f 1 3 4']
    assert text.endswith('\n')


def test_round_trip(tmp_path, wavy_disk: Mesh) -> None:  # type: ignore
    path = os.path.join(str(tmp_path), 'frames', 'disk.obj')
    save_obj(wavy_disk, path)
    loaded = load_obj(path)
    assert loaded.vertex_count == wavy_disk.vertex_count
    assert np.array_equal(loaded.face_array(), wavy_disk.face_array())
    assert np.allclose(loaded.positions, wavy_disk.positions, rtol=1e-8, atol=1e-9)
    assert format_obj(loaded) == format_obj(wavy_disk)


def test_compacts_dead_handles(tmp_path, hexagon_fan: Mesh) -> None:  # type: ignore
    e = hexagon_fan.find_edge(0, 1)
    hexagon_fan.collapse_edge(e)
    path = str(tmp_path / 'fan.obj')
    save_obj(hexagon_fan, path)
    loaded = load_obj(path)
    assert loaded.vertex_count == 6
    assert loaded.face_count == 4
    assert sorted(loaded.vertices()) == list(range(6))


def test_empty_mesh() -> None:
    positions, triangles = parse_obj(['# nothing here', ''])
    assert positions.shape == (0, 3)
    assert triangles == []
    assert format_obj(Mesh.from_arrays(positions, triangles)) == '# 0 vertices, 0 faces\n'
