from __future__ import annotations

import os
from typing import Iterable, List, Tuple

import numpy as np
from loguru import logger

from .exceptions import ObjParseError
from .halfedge import Mesh, build_mesh

__all__ = 'parse_obj', 'load_obj', 'format_obj', 'save_obj'


# statements that carry no connectivity or position
_IGNORED = frozenset(('vn', 'vt', 'vp', 'o', 'g', 's', 'l', 'usemtl', 'mtllib'))


def parse_obj(lines: Iterable[str]) -> Tuple[np.ndarray, List[Tuple[int, int, int]]]:
    """
    Parse OBJ text into positions and triangles (0-indexed).

    Polygons are fan-triangulated from their first corner.  Texture and normal
    references (`f 1/2/3 ...`) are dropped, negative indices are resolved
    relative to the vertices read so far.
    """
    positions: List[Tuple[float, float, float]] = []
    triangles: List[Tuple[int, int, int]] = []

    for lineno, raw in enumerate(lines, 1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        keyword, *args = line.split()

        if keyword == 'v':
            if len(args) < 3:
                raise ObjParseError(lineno, 'vertex needs three coordinates')
            try:
                x, y, z = (float(a) for a in args[:3])
            except ValueError:
                raise ObjParseError(lineno, f'bad coordinate in {line!r}')
            positions.append((x, y, z))
        elif keyword == 'f':
            if len(args) < 3:
                raise ObjParseError(lineno, 'face needs at least three corners')
            corners = [_parse_index(lineno, a, len(positions)) for a in args]
            for i in range(1, len(corners) - 1):
                triangles.append((corners[0], corners[i], corners[i + 1]))
        elif keyword in _IGNORED:
            continue
        else:
            raise ObjParseError(lineno, f'unknown statement {keyword!r}')

    return np.asarray(positions, dtype=np.float64).reshape(-1, 3), triangles


def _parse_index(lineno: int, token: str, count: int) -> int:
    try:
        index = int(token.split('/', 1)[0])
    except ValueError:
        raise ObjParseError(lineno, f'bad vertex reference {token!r}')
    if index > 0:
        return index - 1
    if index < 0:
        return count + index
    raise ObjParseError(lineno, 'vertex references are 1-based')


def load_obj(path: str) -> Mesh:
    with open(path, 'rt', encoding='utf8') as file:
        positions, triangles = parse_obj(file)
    logger.debug(
        f'Loaded {path}: {len(positions)} vertices, {len(triangles)} faces'
    )
    return build_mesh(positions, triangles)


def format_obj(mesh: Mesh) -> str:
    positions, triangles = mesh.to_arrays()
    lines = [f'# {len(positions)} vertices, {len(triangles)} faces']
    lines.extend(
        'v {:.9g} {:.9g} {:.9g}'.format(*p) for p in positions.tolist()
    )
    lines.extend(
        'f {} {} {}'.format(*(i + 1 for i in tri)) for tri in triangles.tolist()
    )
    return '\n'.join(lines) + '\n'


def save_obj(mesh: Mesh, path: str) -> None:
    directory = os.path.dirname(os.path.abspath(path))
    os.makedirs(directory, exist_ok=True)
    with open(path, 'wt', encoding='utf8', newline='\n') as file:
        file.write(format_obj(mesh))
