import hashlib

import numpy as np

from ..mesh import Mesh

__all__ = 'sha1sum', 'vertex_digest'


def sha1sum(data: bytes) -> str:
    return hashlib.sha1(data).hexdigest()


def vertex_digest(mesh: Mesh) -> str:
    """SHA-1 of the live positions in handle order, as little-endian float64."""
    positions = mesh.positions[mesh.vertex_handles()]
    return sha1sum(np.ascontiguousarray(positions, dtype='<f8').tobytes())
