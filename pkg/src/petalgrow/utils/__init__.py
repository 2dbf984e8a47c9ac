from .hash import sha1sum, vertex_digest

__all__ = 'sha1sum', 'vertex_digest'
