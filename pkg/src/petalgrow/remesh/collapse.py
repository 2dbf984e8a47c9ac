from __future__ import annotations

from loguru import logger

from ..mesh import EditRefusedError, Mesh
from .models import PassResult

__all__ = ('collapse_pass',)


def collapse_pass(mesh: Mesh, threshold: float) -> PassResult:
    """
    Collapse edges shorter than `threshold` in handle order.

    Sweeps repeat while a sweep collapses something, so that only refused
    edges may stay short.  Every collapse removes a vertex, which bounds the
    number of sweeps.
    """
    collapses = 0
    refused = set()
    while True:
        changed = False
        for e in mesh.edge_handles().tolist():
            if not mesh.is_edge_alive(e) or e in refused:
                continue
            if mesh.edge_length(e) >= threshold:
                continue
            try:
                mesh.collapse_edge(e)
            except EditRefusedError as exc:
                refused.add(e)
                logger.debug(f'Collapse refused: {exc}')
            else:
                collapses += 1
                changed = True
                # a collapse may make earlier refusals safe
                refused.clear()
        if not changed:
            break
    if collapses:
        logger.debug(f'Collapsed {collapses} edges, {len(refused)} refused')
    return PassResult(applied=collapses, refused=len(refused))
