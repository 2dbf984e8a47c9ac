from __future__ import annotations

from typing import List

from loguru import logger

from ..mesh import EditRefusedError, Mesh
from .models import PassResult

__all__ = 'ear_tips', 'ear_removal_pass'


def ear_tips(mesh: Mesh) -> List[int]:
    return [
        v
        for v in mesh.vertex_handles().tolist()
        if mesh.is_boundary_vertex(v) and mesh.valence(v) == 2
    ]


def ear_removal_pass(mesh: Mesh) -> PassResult:
    removals = 0
    refused = set()
    while True:
        changed = False
        for v in ear_tips(mesh):
            if mesh.face_count <= 1:
                break
            if v in refused or not mesh.is_vertex_alive(v):
                continue
            try:
                mesh.remove_vertex(v)
            except EditRefusedError as exc:
                refused.add(v)
                logger.trace(f'Ear removal refused: {exc}')
            else:
                removals += 1
                changed = True
        if not changed:
            break
    if removals:
        logger.debug(f'Removed {removals} ears')
    return PassResult(applied=removals, refused=len(refused))
